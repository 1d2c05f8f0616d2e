//! Independent re-verification of witnesses using only the ring's tables.

use super::{mccoy::replay_violation, IdealKind, PropertyId, PropertyReport, Witness};
use crate::kernel::{Elem, FiniteRing, Side};

type Check = std::result::Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn right_ann(r: &FiniteRing, a: Elem) -> Vec<bool> {
    r.elements().map(|b| r.mul(a, b) == 0).collect()
}

fn left_ann(r: &FiniteRing, a: Elem) -> Vec<bool> {
    r.elements().map(|b| r.mul(b, a) == 0).collect()
}

fn reversible(r: &FiniteRing, a: Elem) -> bool {
    right_ann(r, a) == left_ann(r, a)
}

fn powers(r: &FiniteRing, a: Elem) -> Vec<Elem> {
    let mut out = vec![a];
    loop {
        let next = r.mul(*out.last().unwrap(), a);
        if out.contains(&next) {
            return out;
        }
        out.push(next);
    }
}

fn nilpotent(r: &FiniteRing, a: Elem) -> bool {
    powers(r, a).contains(&0)
}

fn is_unit(r: &FiniteRing, a: Elem) -> bool {
    r.elements().any(|b| r.mul(a, b) == r.one() && r.mul(b, a) == r.one())
}

/// `aR` for `Side::Right`, `Ra` for `Side::Left`.
fn cyclic(r: &FiniteRing, side: Side, a: Elem) -> Vec<bool> {
    let mut v = vec![false; r.size()];
    for x in r.elements() {
        v[r.side_mul(side, a, x)] = true;
    }
    v
}

fn subset(a: &[bool], b: &[bool]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| !x || y)
}

fn has_nonzero(s: &[bool]) -> bool {
    s.iter().skip(1).any(|&x| x)
}

/// Checks that the report's witness actually certifies its verdict.
pub fn verify_witness(ring: &FiniteRing, report: &PropertyReport) -> Check {
    let r = ring;
    match &report.witness {
        Witness::None => ensure(report.verdict, || "negative verdict without a witness".into()),
        Witness::Exponents { exponents } => {
            ensure(report.verdict && report.property == PropertyId::WeaklyReversible, || "unexpected exponents".into())?;
            ensure(exponents.len() == r.size() - 1, || "exponents do not cover every nonzero element".into())?;
            for &(a, m) in exponents {
                let p = r.pow(a, m);
                ensure(a != 0 && p != 0 && reversible(r, p), || format!("{a}^{m} is not a nonzero reversible element"))?;
            }
            Ok(())
        }
        Witness::NoReversiblePower { a } => {
            ensure(*a != 0, || "zero element".into())?;
            ensure(powers(r, *a).iter().all(|&p| p == 0 || !reversible(r, p)), || format!("a power of {a} is reversible"))
        }
        Witness::ZeroProduct { a, b } => {
            if report.property == PropertyId::NilReversible {
                ensure(nilpotent(r, *a), || format!("{a} is not nilpotent"))?;
            }
            ensure(r.mul(*a, *b) == 0 && r.mul(*b, *a) != 0, || "not a one-way zero product".into())
        }
        Witness::Semicommutative { a, b, r: x } => {
            ensure(r.mul(*a, *b) == 0 && r.mul(r.mul(*a, *x), *b) != 0, || "arb vanishes".into())
        }
        Witness::NonCentral { a, r: x } => {
            let kind_ok = match report.property {
                PropertyId::Abelian => r.mul(*a, *a) == *a,
                PropertyId::Cn => nilpotent(r, *a),
                PropertyId::PiCn => *a != 0 && r.mul(*a, *a) == 0,
                _ => false,
            };
            ensure(kind_ok && r.mul(*a, *x) != r.mul(*x, *a), || "element is central or of the wrong kind".into())
        }
        Witness::NilNotRadical { a, r: x } => ensure(
            nilpotent(r, *a) && !is_unit(r, r.sub(r.one(), r.mul(*x, *a))),
            || "element lies in the radical".into(),
        ),
        Witness::SquareZero { a } => ensure(*a != 0 && r.mul(*a, *a) == 0, || "not square-zero".into()),
        Witness::Singular { side, a } => {
            let ann = match side {
                Side::Right => right_ann(r, *a),
                Side::Left => left_ann(r, *a),
            };
            let essential = r.nonzero_elements().all(|b| {
                let c = cyclic(r, *side, b);
                c.iter().enumerate().skip(1).any(|(e, &inside)| inside && ann[e])
            });
            ensure(*a != 0 && essential, || "annihilator is not essential".into())
        }
        Witness::NotTwoSided { side, a, r: x } => {
            let c = cyclic(r, *side, *a);
            ensure(!c[r.side_mul(side.flip(), *a, *x)], || "product lies in the cyclic ideal".into())
        }
        Witness::NoDuoPower { side, a } => {
            let fails = powers(r, *a)
                .into_iter()
                .filter(|&p| p != 0)
                .all(|p| !subset(&cyclic(r, side.flip(), p), &cyclic(r, *side, p)));
            ensure(*a != 0 && fails, || "some power satisfies the inclusion".into())
        }
        Witness::Unbounded { side, ideal, generators } => {
            let set: Vec<bool> = match ideal {
                IdealKind::Cyclic => cyclic(r, *side, generators[0]),
                IdealKind::Annihilator => r
                    .elements()
                    .map(|c| generators.iter().all(|&g| r.side_mul(*side, g, c) == 0))
                    .collect(),
            };
            ensure(has_nonzero(&set), || "ideal is zero".into())?;
            // Any nonzero two-sided ideal inside would contain R·z·R for some nonzero z.
            let bounded = r.nonzero_elements().filter(|&z| set[z]).any(|z| {
                r.elements().all(|x| r.elements().all(|y| set[r.mul(r.mul(x, z), y)]))
            });
            ensure(!bounded, || "ideal contains a nonzero two-sided ideal".into())?;
            if matches!(report.property, PropertyId::AbRight | PropertyId::AbLeft) {
                let essential = r.nonzero_elements().all(|b| {
                    let c = cyclic(r, *side, b);
                    c.iter().enumerate().skip(1).any(|(e, &inside)| inside && set[e])
                });
                ensure(essential, || "annihilator is not essential".into())?;
            }
            Ok(())
        }
        Witness::McCoy(v) => ensure(replay_violation(r, v), || "polynomials do not form a violation".into()),
    }
    .and_then(|()| ensure(report.verdict == matches!(report.witness, Witness::None | Witness::Exponents { .. }), || "verdict disagrees with witness".into()))
}
