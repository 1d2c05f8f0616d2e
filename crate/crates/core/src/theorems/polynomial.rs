//! Claims about zero products in `R[t]`.

use std::collections::HashMap;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use super::chains::ProductChain;
use super::{Caps, Trace, Verdict};
use crate::error::{Result, RingError};
use crate::kernel::{Construction, Elem, ElementSet, FiniteRing, Side};
use crate::linalg::{for_each_in_span, ModMatrix};
use crate::orbit::for_each_orbit_rep;
use crate::poly::{convolve, find_right_annihilator, linear_basis, Budget, PolyRing};
use crate::properties::{is_local, mccoy_falsify, mccoy_search};

/// Degree bound for the zero-product claims.
const PAIR_DEGREE: usize = 2;

fn coords(r: &FiniteRing, g: &[Elem]) -> Vec<u8> {
    let alg = r.algebra().expect("algebra");
    g.iter().flat_map(|&b| alg.decode(b)).collect()
}

fn from_coords(r: &FiniteRing, v: &[u8]) -> Vec<Elem> {
    let alg = r.algebra().expect("algebra");
    v.chunks(alg.dim()).map(|c| alg.encode(c)).collect()
}

/// Which zero-product statement to check.
#[derive(Clone, Copy)]
enum ZeroProductClaim {
    /// Some `k` has `(a₀R)^k·g = 0`.
    BoundedByConstantTerm,
    /// Every `a_i·b_j` is nilpotent.
    ProductsNilpotent,
}

/// Runs the claim over all `f·g = 0` with `deg f, deg g ≤ 2`.
///
/// Over `R₁ × R₂` products, powers of `a₀R` and nilpotency are componentwise,
/// so a product ring is checked factor by factor and a failure lifts with zero
/// in the other component. Otherwise `f` runs over unit orbits with `f(0) ≠ 0`:
/// `(u·f·v, v⁻¹·g·u⁻¹)` is again a zero product, `a_i·b_j` becomes a conjugate
/// of itself and `(a₀R)^k·g` becomes `u·(a₀R)^k·g·u⁻¹`, while `f = t·f'` either
/// makes the first claim trivial (`a₀ = 0`) or leaves the products unchanged.
fn zero_product_trace(r: &Arc<FiniteRing>, claim: ZeroProductClaim, caps: &Caps, budget: &mut Budget) -> Result<Option<Trace>> {
    if let Construction::Product { left, right } = r.construction() {
        let n2 = right.size();
        let lift = |t: Trace, scale: usize| match t {
            Trace::PolynomialPair { f, g } => Trace::PolynomialPair {
                f: f.iter().map(|&h| h * scale).collect(),
                g: g.iter().map(|&h| h * scale).collect(),
            },
            other => other,
        };
        if let Some(t) = zero_product_trace(left, claim, caps, budget)? {
            return Ok(Some(lift(t, n2)));
        }
        return Ok(zero_product_trace(right, claim, caps, budget)?.map(|t| lift(t, 1)));
    }
    let nil = r.nil_set();
    let nil_additive = nil.iter().all(|a| nil.iter().all(|b| nil.contains(r.add(a, b))));
    let mut killers: HashMap<Elem, ElementSet> = HashMap::new();
    let mut holds = |f: &[Elem], g: &[Elem]| match claim {
        ZeroProductClaim::BoundedByConstantTerm => {
            // (a₀R)^k decreases in k, so the stable level is the most permissive exponent.
            let k = killers.entry(f[0]).or_insert_with(|| {
                let chain = ProductChain::new(r, Side::Right, f[0]);
                r.annihilator(Side::Right, chain.level(chain.stable_from()))
            });
            g.iter().all(|&b| k.contains(b))
        }
        ZeroProductClaim::ProductsNilpotent => f.iter().all(|&a| g.iter().all(|&b| nil.contains(r.mul(a, b)))),
    };
    // A basis of {g : f·g = 0} suffices when the conclusion is closed under sums.
    let basis_suffices = match claim {
        ZeroProductClaim::BoundedByConstantTerm => true,
        ZeroProductClaim::ProductsNilpotent => nil_additive,
    };
    let nonzero = r.set_of(r.nonzero_elements());
    let all = r.full_set();
    let slots: Vec<&ElementSet> = vec![&nonzero, &all, &all];
    let poly = PolyRing::new(r, 2 * PAIR_DEGREE);
    let mut found = None;
    for_each_orbit_rep(r, &slots, &mut |f| {
        budget.tick("enumerating zero products f·g")?;
        let mut bad = None;
        if let Some(basis) = linear_basis(r, f, PAIR_DEGREE) {
            if basis_suffices {
                bad = basis.into_iter().find(|g| !holds(f, g));
            } else {
                let vectors: Vec<Vec<u8>> = basis.iter().map(|g| coords(r, g)).collect();
                let len = vectors.first().map_or(0, Vec::len);
                let p = r.algebra().expect("algebra").p();
                for_each_in_span(p, &vectors, len, |v| {
                    if bad.is_none() {
                        let g = from_coords(r, v);
                        if !holds(f, &g) {
                            bad = Some(g);
                        }
                    }
                });
            }
        } else {
            let mut visited = 0u64;
            poly.for_each_right_annihilator(&poly.poly(f.to_vec())?, PAIR_DEGREE, caps.search_budget, |g| {
                visited += 1;
                if !holds(f, g) {
                    bad = Some(g.to_vec());
                    return false;
                }
                true
            })?;
            for _ in 0..visited / 64 {
                budget.tick("enumerating zero products f·g")?;
            }
        }
        if let Some(g) = bad {
            found = Some(Trace::PolynomialPair { f: f.to_vec(), g });
            return Ok(false);
        }
        Ok(true)
    })?;
    Ok(found)
}

pub(super) fn c14(r: &Arc<FiniteRing>, caps: &Caps) -> Result<Verdict> {
    let found = zero_product_trace(r, ZeroProductClaim::BoundedByConstantTerm, caps, &mut Budget::new(caps.search_budget))?;
    Ok(Verdict::from_trace(
        found,
        "every zero product f·g (degrees ≤ 2) has k with (a0R)^k g = 0",
        "(a0R)^k g ≠ 0 for every k",
    ))
}

pub(super) fn c15(r: &Arc<FiniteRing>, caps: &Caps) -> Result<Verdict> {
    let found = zero_product_trace(r, ZeroProductClaim::ProductsNilpotent, caps, &mut Budget::new(caps.search_budget))?;
    Ok(Verdict::from_trace(
        found,
        "every zero product f·g (degrees ≤ 2) has all a_i b_j nilpotent",
        "some a_i b_j is not nilpotent",
    ))
}

/// `Z(X) = ⋂ r(aR)` over all coefficients `a` of `X`: the constants `c` with `X·R·c = 0`.
struct BoundTargets {
    per_element: Vec<ElementSet>,
}

impl BoundTargets {
    fn new(r: &FiniteRing) -> Self {
        Self { per_element: r.elements().map(|a| r.annihilator(Side::Right, r.cyclic_ideal(Side::Right, a))).collect() }
    }

    fn of(&self, r: &FiniteRing, coeffs: impl IntoIterator<Item = Elem>) -> ElementSet {
        let mut z = r.full_set();
        for a in coeffs {
            z.intersect_with(&self.per_element[a]);
        }
        z
    }
}

/// Common nonzero right annihilator of `f1` and `f2` with degree ≤ `d`.
fn common_annihilator(r: &FiniteRing, f1: &[Elem], f2: &[Elem], d: usize, budget: &mut Budget) -> Result<Option<Vec<Elem>>> {
    if let Construction::Product { left, right } = r.construction() {
        let n2 = right.size();
        let high = |f: &[Elem]| f.iter().map(|&h| h / n2).collect::<Vec<_>>();
        let low = |f: &[Elem]| f.iter().map(|&h| h % n2).collect::<Vec<_>>();
        if let Some(g) = common_annihilator(left, &high(f1), &high(f2), d, budget)? {
            return Ok(Some(g.iter().map(|&b| b * n2).collect()));
        }
        return common_annihilator(right, &low(f1), &low(f2), d, budget);
    }
    if let Some(alg) = r.algebra() {
        let basis = linear_basis(r, f1, d).expect("algebra");
        if basis.is_empty() {
            return Ok(None);
        }
        let images: Vec<Vec<u8>> = basis.iter().map(|g| coords(r, &convolve(r, f2, g))).collect();
        let mut sys = ModMatrix::zeros(alg.p(), images[0].len(), basis.len());
        for (j, img) in images.iter().enumerate() {
            for (i, &v) in img.iter().enumerate() {
                sys.set(i, j, v);
            }
        }
        let Some(lambda) = sys.nullspace().into_iter().next() else { return Ok(None) };
        let mut g = vec![0; d + 1];
        for (coef, b) in lambda.iter().zip(&basis) {
            for (gi, &bi) in g.iter_mut().zip(b) {
                *gi = r.add(*gi, r.scale(*coef as usize, bi));
            }
        }
        return Ok(Some(g));
    }
    let poly = PolyRing::new(r, f1.len() + d);
    let mut found = None;
    let mut ticks = 0u64;
    poly.for_each_right_annihilator(&poly.poly(f1.to_vec())?, d, u64::MAX, |g| {
        ticks += 1;
        if g.iter().any(|&b| b != 0) && convolve(r, f2, g).iter().all(|&c| c == 0) {
            found = Some(g.to_vec());
            return false;
        }
        true
    })?;
    for _ in 0..ticks {
        budget.tick("searching common annihilators")?;
    }
    Ok(found)
}

/// Bounded surrogate for the strongly-AB statement on `R[t]`: for every `X`
/// in the family with a nonzero right annihilator of degree ≤ `max_degree`,
/// some nonzero constant `c` has `X·R·c = 0`. The family is every `{f}` with
/// `deg f ≤ 2` and every `{f₁, f₂}` with degrees ≤ 1. Both the hypothesis and
/// the conclusion are unchanged by `f ↦ t·f` and by `f ↦ u·f·v` for units, so
/// singletons are taken one per unit orbit with `f(0) ≠ 0`.
struct FamilyCounts {
    singletons: u64,
    members: usize,
    classes: usize,
}

pub(super) fn c16(r: &Arc<FiniteRing>, caps: &Caps) -> Result<Verdict> {
    Ok(match bounded_family(r, caps, &mut Budget::new(caps.search_budget))? {
        Ok(c) => Verdict::Pass(format!(
            "{} singleton orbits and all pairs over {} annihilated linear polynomials ({} classes) are bounded",
            c.singletons, c.members, c.classes
        )),
        Err((what, t)) => Verdict::Fail(what.into(), t),
    })
}

/// Over `R₁ × R₂` both `Ann(X)` and `Z(X)` split into components, so a
/// product is checked factor by factor; a failing `X₁` lifts as `(f₁, 1)`,
/// whose second component has neither annihilators nor bounds.
fn bounded_family(
    r: &Arc<FiniteRing>,
    caps: &Caps,
    budget: &mut Budget,
) -> Result<std::result::Result<FamilyCounts, (&'static str, Trace)>> {
    if let Construction::Product { left, right } = r.construction() {
        let n2 = right.size();
        let one2 = right.one();
        let left_counts = match bounded_family(left, caps, budget)? {
            Ok(c) => c,
            Err((what, Trace::UnboundedAnnihilator { x, g })) => {
                let x = x.iter().map(|f| f.iter().map(|&h| h * n2 + one2).collect()).collect();
                return Ok(Err((what, Trace::UnboundedAnnihilator { x, g: g.iter().map(|&b| b * n2).collect() })));
            }
            Err(other) => return Ok(Err(other)),
        };
        let one1 = left.one();
        return Ok(match bounded_family(right, caps, budget)? {
            Ok(c) => Ok(FamilyCounts {
                singletons: left_counts.singletons + c.singletons,
                members: left_counts.members + c.members,
                classes: left_counts.classes + c.classes,
            }),
            Err((what, Trace::UnboundedAnnihilator { x, g })) => {
                let x = x.iter().map(|f| f.iter().map(|&h| one1 * n2 + h).collect()).collect();
                Err((what, Trace::UnboundedAnnihilator { x, g }))
            }
            Err(other) => Err(other),
        });
    }
    let d = caps.max_degree;
    let targets = BoundTargets::new(r);
    let nonzero = r.set_of(r.nonzero_elements());
    let all = r.full_set();

    let mut singletons = 0u64;
    let mut failure: Option<Trace> = None;
    for_each_orbit_rep(r, &[&nonzero, &all, &all], &mut |f| {
        budget.tick("surrogate family")?;
        singletons += 1;
        if targets.of(r, f.iter().copied()).has_nonzero() {
            return Ok(true);
        }
        if let Some(g) = find_right_annihilator(r, f, d, budget)? {
            failure = Some(Trace::UnboundedAnnihilator { x: vec![f.to_vec()], g });
            return Ok(false);
        }
        Ok(true)
    })?;
    if let Some(t) = failure {
        return Ok(Err(("a singleton annihilator is unbounded", t)));
    }

    // Pairs: only members with a nonzero annihilator matter; group them by Z(f).
    let mut classes: HashMap<FixedBitSet, Vec<[Elem; 2]>> = HashMap::new();
    let mut members = 0usize;
    for a0 in r.nonzero_elements() {
        for a1 in r.elements() {
            budget.tick("surrogate family")?;
            let f = [a0, a1];
            if find_right_annihilator(r, &f, d, budget)?.is_some() {
                members += 1;
                classes.entry(targets.of(r, f).bits().clone()).or_default().push(f);
            }
        }
    }
    let mut keys: Vec<&FixedBitSet> = classes.keys().collect();
    keys.sort_by_key(|k| k.ones().collect::<Vec<_>>());
    for (i, k1) in keys.iter().enumerate() {
        for k2 in &keys[i..] {
            if k1.intersection(k2).any(|e| e != 0) {
                continue;
            }
            for f1 in &classes[*k1] {
                for f2 in &classes[*k2] {
                    if let Some(g) = common_annihilator(r, f1, f2, d, budget)? {
                        return Ok(Err((
                            "a pair annihilator is unbounded",
                            Trace::UnboundedAnnihilator { x: vec![f1.to_vec(), f2.to_vec()], g },
                        )));
                    }
                }
            }
        }
    }
    Ok(Ok(FamilyCounts { singletons, members, classes: classes.len() }))
}

pub(super) fn c17(r: &Arc<FiniteRing>, caps: &Caps) -> Result<Verdict> {
    let mut notes = Vec::new();
    // Local rings carry a proof of the property, so exhaustive search only
    // gets a short trial there before the certificate is used.
    let exhaustive_budget = if is_local(r) { caps.search_budget.min(1 << 18) } else { caps.search_budget };
    for side in [Side::Right, Side::Left] {
        let found = match mccoy_search(r, side, caps.max_degree, exhaustive_budget) {
            Ok(v) => {
                notes.push(format!("{side}: exhaustive"));
                v
            }
            Err(RingError::SearchBudget { .. }) => {
                notes.push(format!("{side}: local-ring certificate"));
                mccoy_falsify(r, side, caps.max_degree, caps.search_budget)?
            }
            Err(e) => return Err(e),
        };
        if let Some(v) = found {
            return Ok(Verdict::Fail(format!("{side} McCoy violation"), Trace::McCoy(v)));
        }
    }
    Ok(Verdict::Pass(format!("no violation with degrees ≤ {} ({})", caps.max_degree, notes.join(", "))))
}
