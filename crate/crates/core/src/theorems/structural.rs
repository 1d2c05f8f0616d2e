//! Claims about specific constructions and derived rings.

use std::sync::Arc;

use super::{Caps, Trace, Verdict};
use crate::constructors::{make_corner, make_matrix_family_capped, matrix_unit};
use crate::error::Result;
use crate::kernel::{Construction, FiniteRing, Side};
use crate::properties::{is_reversible_element, is_weakly_reversible};

fn reversible(r: &FiniteRing) -> bool {
    r.elements().all(|a| is_reversible_element(r, a))
}

pub(super) fn c1_example(ring: &Arc<FiniteRing>) -> Result<Verdict> {
    let (Construction::Example22 { p }, Some(alg)) = (ring.construction(), ring.algebra()) else {
        return Ok(Verdict::NotApplicable("not the monomial example".into()));
    };
    let basis = |label: &str| alg.basis_element(alg.basis_index(label).expect("example basis"));
    let (x, y) = (basis("x"), basis("y"));
    let mut problems = Vec::new();
    if ring.mul(x, y) != 0 {
        problems.push("xy ≠ 0".to_string());
    }
    if ring.mul(y, x) == 0 {
        problems.push("yx = 0".to_string());
    }
    if reversible(ring) {
        problems.push("the ring is reversible".to_string());
    }
    if let Err(a) = is_weakly_reversible(ring) {
        problems.push(format!("{} has no reversible nonzero power", ring.label(a)));
    }
    // Nil(R) is the span of the non-identity monomials; units are exactly the
    // elements with nonzero constant term.
    let constant = |e| alg.decode(e)[0];
    let nil_ok = ring.elements().all(|e| ring.nil_set().contains(e) == (constant(e) == 0));
    let units_ok = ring.elements().all(|e| ring.is_unit(e) == (constant(e) != 0));
    if !nil_ok {
        problems.push("Nil(R) differs from the span of x, x^2, y, y^2, yx".into());
    }
    if !units_ok {
        problems.push("units are not exactly the elements with nonzero constant term".into());
    }
    Ok(if problems.is_empty() {
        Verdict::Pass(format!(
            "xy = 0, yx ≠ 0, not reversible, weakly reversible; |Nil| = {}, |U| = {} (p = {p})",
            ring.nil_set().len(),
            ring.units().len()
        ))
    } else {
        let detail = problems.join("; ");
        Verdict::Fail(detail.clone(), Trace::Verdicts { detail })
    })
}

pub(super) fn c2_s2_criterion(ring: &Arc<FiniteRing>, caps: &Caps) -> Result<Verdict> {
    let (base, s2) = match ring.construction() {
        Construction::SkewTriangular { k: 2, base } => (Arc::clone(base), Arc::clone(ring)),
        _ => (Arc::clone(ring), make_matrix_family_capped('S', ring, 2, caps.ring_size_cap)?),
    };
    let rev = reversible(&base);
    let wr = is_weakly_reversible(&s2).is_ok();
    let detail = format!("{} reversible: {rev}; {} weakly reversible: {wr}", base.name(), s2.name());
    Ok(if rev == wr { Verdict::Pass(detail) } else { Verdict::Fail(detail.clone(), Trace::Verdicts { detail }) })
}

pub(super) fn c3_sn_not_wr(ring: &Arc<FiniteRing>, caps: &Caps) -> Result<Verdict> {
    let sn = match ring.construction() {
        Construction::SkewTriangular { k, .. } if *k >= 3 => Arc::clone(ring),
        _ => make_matrix_family_capped('S', ring, 3, caps.ring_size_cap)?,
    };
    let (a, b) = (matrix_unit(&sn, 1, 2), matrix_unit(&sn, 2, 3));
    if let (Some(a), Some(b)) = (a, b) {
        let m = |x, y| sn.mul(x, y);
        // a ≠ 0 is its own only nonzero power, and ba = 0 ≠ ab shows it is not reversible.
        if a != 0 && m(a, a) == 0 && m(b, b) == 0 && m(b, a) == 0 && m(a, b) != 0 {
            return Ok(Verdict::Pass(format!("{} is not weakly reversible: witness (e12, e23)", sn.name())));
        }
    }
    Ok(match is_weakly_reversible(&sn) {
        Err(w) => Verdict::Pass(format!("{} is not weakly reversible: {} has no reversible power", sn.name(), sn.label(w))),
        Ok(_) => {
            let detail = format!("{} is weakly reversible", sn.name());
            Verdict::Fail(detail.clone(), Trace::Verdicts { detail })
        }
    })
}

pub(super) fn c6_corners(ring: &Arc<FiniteRing>) -> Result<Verdict> {
    let idempotents: Vec<_> = ring.elements().filter(|&e| e != 0 && ring.is_idempotent(e)).collect();
    for &e in &idempotents {
        let corner = make_corner(ring, e)?;
        if let Err(a) = is_weakly_reversible(&corner) {
            let Construction::Corner { embed, .. } = corner.construction() else { unreachable!() };
            return Ok(Verdict::Fail(
                format!("corner at {} is not weakly reversible", ring.label(e)),
                Trace::CornerNotWeaklyReversible { e, a: embed[a] },
            ));
        }
    }
    Ok(Verdict::Pass(format!("all {} corners eRe (e ≠ 0 idempotent) are weakly reversible", idempotents.len())))
}

pub(super) fn c7_nonsingular_reduced(r: &FiniteRing) -> Verdict {
    let square_zero = r.nonzero_elements().find(|&a| r.mul(a, a) == 0);
    for side in [Side::Right, Side::Left] {
        let singular = r.singular_set(side).first_nonzero();
        match (singular, square_zero) {
            (None, Some(a)) => {
                return Verdict::Fail(format!("{side} nonsingular but not reduced"), Trace::NonsingularNotReduced { side, a })
            }
            (Some(a), None) => {
                return Verdict::Fail(format!("reduced but {side} singular"), Trace::ReducedButSingular { side, a })
            }
            _ => {}
        }
    }
    Verdict::Pass(format!("reduced: {}; nonsingular on both sides: {}", square_zero.is_none(), square_zero.is_none()))
}
