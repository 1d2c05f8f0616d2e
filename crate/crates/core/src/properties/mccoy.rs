//! Bounded-degree search for McCoy violations.
//!
//! A right violation is a pair of nonzero polynomials with `f·g = 0` such that
//! no nonzero constant `c` has `f·c = 0`. The search is exhaustive up to the
//! degree bound and uses three exact reductions:
//!
//! * `t` is central and regular, so `f` and `g` may be taken with nonzero
//!   constant terms; `a_0·b_0 = 0` and `a_m·b_n = 0` then force the constant
//!   and leading coefficients of `f` to be left zero-divisors;
//! * `(u·f·v, v⁻¹·g)` is a violation iff `(f, g)` is, for units `u, v`, so one
//!   `f` per orbit of the two-sided unit action suffices;
//! * over `R₁ × R₂` a violation exists iff one exists in a factor (lift with
//!   the identity in the other component of `f` and zero in `g`).
//!
//! Left violations are right violations of the opposite ring.
//!
//! Finite local rings (the non-units form the ideal `J`) never have a
//! violation, at any degree. If every coefficient of `f` lies in `J`, then
//! `J^{k-1}` kills `f` on the right, where `k` is the nilpotency index of `J`.
//! Otherwise `f̄·ḡ = 0` in the domain `(R/J)[t]` forces `g ∈ J^s[t]`, and
//! then `f·g ≡ f̄·ḡ ≢ 0 (mod J^{s+1})`. [`mccoy_falsify`] uses this shortcut;
//! [`mccoy_search`] always enumerates.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::kernel::{Construction, Elem, ElementSet, FiniteRing, Side};
use crate::orbit::for_each_orbit_rep;
use crate::poly::{find_right_annihilator, Budget};

/// Left violations report `g·f = 0`; right violations `f·g = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct McCoyViolation {
    pub side: Side,
    pub f: Vec<Elem>,
    pub g: Vec<Elem>,
}

/// Searches for a violation with `deg f, deg g ≤ max_degree`; `None` means
/// none exists within that bound (for local rings: none at all).
pub fn mccoy_falsify(ring: &Arc<FiniteRing>, side: Side, max_degree: usize, budget: u64) -> Result<Option<McCoyViolation>> {
    search(ring, side, max_degree, budget, true)
}

/// Like [`mccoy_falsify`] but never takes the local-ring shortcut.
pub fn mccoy_search(ring: &Arc<FiniteRing>, side: Side, max_degree: usize, budget: u64) -> Result<Option<McCoyViolation>> {
    search(ring, side, max_degree, budget, false)
}

/// The non-units are closed under addition.
pub fn is_local(ring: &FiniteRing) -> bool {
    let units = ring.units();
    let non_units: Vec<Elem> = ring.elements().filter(|&a| !units.contains(a)).collect();
    non_units.iter().all(|&a| non_units.iter().all(|&b| !units.contains(ring.add(a, b))))
}

fn search(ring: &Arc<FiniteRing>, side: Side, dmax: usize, budget: u64, shortcut: bool) -> Result<Option<McCoyViolation>> {
    let mut budget = Budget::new(budget);
    let found = match side {
        Side::Right => right_violation(ring, dmax, &mut budget, shortcut)?,
        Side::Left => right_violation(&ring.opposite(), dmax, &mut budget, shortcut)?,
    };
    Ok(found.map(|(f, g)| McCoyViolation { side, f, g }))
}

fn right_violation(
    ring: &Arc<FiniteRing>,
    dmax: usize,
    budget: &mut Budget,
    shortcut: bool,
) -> Result<Option<(Vec<Elem>, Vec<Elem>)>> {
    if shortcut && is_local(ring) {
        return Ok(None);
    }
    if let Construction::Product { left, right } = ring.construction() {
        let n2 = right.size();
        if let Some((f1, g1)) = right_violation(left, dmax, budget, shortcut)? {
            let f = f1.iter().enumerate().map(|(i, &a)| a * n2 + if i == 0 { right.one() } else { 0 }).collect();
            let g = g1.iter().map(|&b| b * n2).collect();
            return Ok(Some((f, g)));
        }
        if let Some((f2, g2)) = right_violation(right, dmax, budget, shortcut)? {
            let one1 = left.one();
            let f = f2.iter().enumerate().map(|(i, &a)| if i == 0 { one1 * n2 + a } else { a }).collect();
            return Ok(Some((f, g2)));
        }
        return Ok(None);
    }
    let zero_divisors =
        ring.set_of(ring.nonzero_elements().filter(|&a| ring.annihilator_of(Side::Right, a).has_nonzero()));
    if zero_divisors.is_empty() {
        return Ok(None);
    }
    let all = ring.full_set();
    for m in 1..=dmax {
        let mut slots: Vec<&ElementSet> = vec![&all; m + 1];
        slots[0] = &zero_divisors;
        slots[m] = &zero_divisors;
        let mut found = None;
        for_each_orbit_rep(ring, &slots, &mut |f| {
            budget.tick("searching for McCoy violations")?;
            let mut common = ring.full_set();
            for &a in f {
                common.intersect_with(ring.annihilator_of(Side::Right, a));
            }
            if common.has_nonzero() {
                return Ok(true);
            }
            if let Some(g) = find_right_annihilator(ring, f, dmax, budget)? {
                found = Some((f.to_vec(), g));
                return Ok(false);
            }
            Ok(true)
        })?;
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// Re-checks a violation with nothing but the ring's tables.
pub fn replay_violation(ring: &FiniteRing, v: &McCoyViolation) -> bool {
    let (first, second) = match v.side {
        Side::Right => (&v.f, &v.g),
        Side::Left => (&v.g, &v.f),
    };
    let nonzero = |p: &[Elem]| p.iter().any(|&c| c != 0);
    if !nonzero(&v.f) || !nonzero(&v.g) {
        return false;
    }
    let len = first.len() + second.len() - 1;
    let product_vanishes = (0..len).all(|k| {
        let mut acc = 0;
        for (i, &a) in first.iter().enumerate() {
            if k >= i && k - i < second.len() {
                acc = ring.add(acc, ring.mul(a, second[k - i]));
            }
        }
        acc == 0
    });
    let killed_by_constant = ring.nonzero_elements().any(|c| {
        v.f.iter().all(|&a| match v.side {
            Side::Right => ring.mul(a, c) == 0,
            Side::Left => ring.mul(c, a) == 0,
        })
    });
    product_vanishes && !killed_by_constant
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{make_ex22, make_matrix, make_product, make_zn};

    #[test]
    fn matrix_ring_violates_right_mccoy_in_degree_one() {
        let m2 = make_matrix(&make_zn(2).unwrap(), 2).unwrap();
        let v = mccoy_falsify(&m2, Side::Right, 1, u64::MAX).unwrap().expect("violation");
        assert!(replay_violation(&m2, &v));
        let v = mccoy_falsify(&m2, Side::Left, 1, u64::MAX).unwrap().expect("violation");
        assert!(replay_violation(&m2, &v));
    }

    #[test]
    fn commutative_and_ex22_have_no_violation() {
        let z4 = make_zn(4).unwrap();
        assert_eq!(mccoy_falsify(&z4, Side::Right, 3, u64::MAX).unwrap(), None);
        let r = make_ex22(2).unwrap();
        assert_eq!(mccoy_falsify(&r, Side::Right, 2, u64::MAX).unwrap(), None);
        assert_eq!(mccoy_falsify(&r, Side::Left, 2, u64::MAX).unwrap(), None);
    }

    #[test]
    fn local_shortcut_agrees_with_exhaustive_search() {
        let r = make_ex22(2).unwrap();
        assert!(is_local(&r));
        assert!(!is_local(&make_matrix(&make_zn(2).unwrap(), 2).unwrap()));
        assert!(!is_local(&make_zn(6).unwrap()));
        for side in [Side::Right, Side::Left] {
            assert_eq!(mccoy_search(&r, side, 3, u64::MAX).unwrap(), None);
        }
    }

    #[test]
    fn product_lifts_factor_violation() {
        let m2 = make_matrix(&make_zn(2).unwrap(), 2).unwrap();
        let p = make_product(&make_zn(3).unwrap(), &m2).unwrap();
        let v = mccoy_falsify(&p, Side::Right, 1, u64::MAX).unwrap().expect("violation");
        assert!(replay_violation(&p, &v));
    }
}
