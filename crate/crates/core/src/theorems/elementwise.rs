//! Claims quantified over elements and pairs of elements.

use super::chains::ProductChain;
use super::{Trace, Verdict};
use crate::kernel::{Elem, ElementSet, FiniteRing, Side};

pub(super) fn c4_square_zero(r: &FiniteRing) -> Verdict {
    let found = r.nonzero_elements().filter(|&a| r.mul(a, a) == 0).find_map(|a| {
        r.elements()
            .find(|&b| (r.mul(a, b) == 0) != (r.mul(b, a) == 0))
            .map(|b| Trace::SquareZeroNotReversible { a, b })
    });
    Verdict::from_trace(found, "every square-zero element has l(a) = r(a)", "a square-zero element is not reversible")
}

pub(super) fn c5_abelian(r: &FiniteRing) -> Verdict {
    let found = r.elements().filter(|&e| r.is_idempotent(e)).find_map(|e| {
        r.elements().find(|&x| r.mul(e, x) != r.mul(x, e)).map(|x| Trace::NonCentralIdempotent { e, r: x })
    });
    let count = r.elements().filter(|&e| r.is_idempotent(e)).count();
    Verdict::from_trace(found, format!("all {count} idempotents are central"), "an idempotent is not central")
}

/// `{b : x·R·b = 0}`.
fn kills_from_right(r: &FiniteRing, x: Elem) -> ElementSet {
    r.annihilator(Side::Right, r.cyclic_ideal(Side::Right, x))
}

/// `{b : b·R·x = 0}`.
fn kills_from_left(r: &FiniteRing, x: Elem) -> ElementSet {
    r.annihilator(Side::Left, r.cyclic_ideal(Side::Left, x))
}

/// Nonzero powers `z^k` with their exponents, over the whole power orbit.
fn nonzero_powers(r: &FiniteRing, z: Elem) -> Vec<(usize, Elem)> {
    r.power_orbit(z).into_iter().enumerate().filter(|&(_, p)| p != 0).map(|(i, p)| (i + 1, p)).collect()
}

/// Checks every pair `a, b ≠ 0` with `ab = 0` against the set of partners
/// allowed for the fixed element: `good(a)` holds the admissible `b`
/// (`fixed_left`) or `good(b)` the admissible `a`.
fn pairs_against(r: &FiniteRing, fixed_left: bool, good: impl Fn(Elem) -> ElementSet) -> Option<Trace> {
    for z in r.nonzero_elements() {
        let partners: Vec<Elem> = if fixed_left {
            r.annihilator_of(Side::Right, z).iter().filter(|&b| b != 0).collect()
        } else {
            r.annihilator_of(Side::Left, z).iter().filter(|&a| a != 0).collect()
        };
        if partners.is_empty() {
            continue;
        }
        let allowed = good(z);
        if let Some(&w) = partners.iter().find(|&&w| !allowed.contains(w)) {
            let (a, b) = if fixed_left { (z, w) } else { (w, z) };
            return Some(Trace::NoExponent { a, b });
        }
    }
    None
}

pub(super) fn c8(r: &FiniteRing) -> Verdict {
    let found = pairs_against(r, true, |a| {
        let mut ok = r.empty_set();
        for (_, p) in nonzero_powers(r, a) {
            ok.union_with(&kills_from_right(r, p).intersection(&kills_from_left(r, p)));
        }
        ok
    });
    Verdict::from_trace(found, "every ab = 0 pair has an admissible t", "no t with a^t ≠ 0 and a^tRb = bRa^t = 0")
}

pub(super) fn c9(r: &FiniteRing) -> Verdict {
    let found = pairs_against(r, false, |b| {
        let mut ok = r.empty_set();
        for (_, p) in nonzero_powers(r, b) {
            ok.union_with(&kills_from_left(r, p).intersection(&kills_from_right(r, p)));
        }
        ok
    });
    Verdict::from_trace(found, "every ab = 0 pair has an admissible k", "no k with b^k ≠ 0 and aRb^k = b^kRa = 0")
}

pub(super) fn c10(r: &FiniteRing) -> Verdict {
    for a in r.nil_set().iter().filter(|&a| a != 0) {
        let m = r.nilpotency_index(a).expect("nilpotent");
        let chain = ProductChain::new(r, Side::Right, a);
        if let Some(s) = chain.level(m).first_nonzero() {
            let rs = chain.factorization(r, m, s).expect("element of the chain");
            return Verdict::Fail(format!("(aR)^{m} ≠ 0 although a^{m} = 0"), Trace::NilPowerProduct { a, m, rs });
        }
    }
    Verdict::Pass(format!("(aR)^m = 0 for all {} nonzero nilpotents", r.nil_set().len() - 1))
}

/// Exponents worth examining for `z`: past the end of both chains and the power orbit.
fn exponent_range(r: &FiniteRing, z: Elem, right: &ProductChain, left: &ProductChain) -> Vec<usize> {
    let top = right.stable_from().max(left.stable_from()).max(r.power_orbit(z).len());
    (1..=top).filter(|&k| r.pow(z, k) != 0).collect()
}

pub(super) fn c11(r: &FiniteRing) -> Verdict {
    let found = pairs_against(r, true, |a| {
        let right = ProductChain::new(r, Side::Right, a);
        let left = ProductChain::new(r, Side::Left, a);
        let mut ok = r.empty_set();
        for k in exponent_range(r, a, &right, &left) {
            // (aR)^k·b = 0 and b·(Ra)^k = 0.
            ok.union_with(&r.annihilator(Side::Right, right.level(k)).intersection(&r.annihilator(Side::Left, left.level(k))));
        }
        ok
    });
    Verdict::from_trace(found, "every ab = 0 pair has an admissible k", "no k with a^k ≠ 0, (aR)^k b = 0 and b(Ra)^k = 0")
}

pub(super) fn c12(r: &FiniteRing) -> Verdict {
    let found = pairs_against(r, false, |b| {
        let right = ProductChain::new(r, Side::Right, b);
        let left = ProductChain::new(r, Side::Left, b);
        let mut ok = r.empty_set();
        for k in exponent_range(r, b, &right, &left) {
            // a·(Rb)^k = 0 and (bR)^k·a = 0.
            ok.union_with(&r.annihilator(Side::Left, left.level(k)).intersection(&r.annihilator(Side::Right, right.level(k))));
        }
        ok
    });
    Verdict::from_trace(found, "every ab = 0 pair has an admissible k", "no k with b^k ≠ 0, a(Rb)^k = 0 and (bR)^k a = 0")
}

pub(super) fn c13(r: &FiniteRing) -> Verdict {
    let nil = r.nil_set();
    for a in nil.iter() {
        if let Some(b) = nil.iter().find(|&b| !nil.contains(r.add(a, b))) {
            return Verdict::Fail("Nil(R) is not closed under addition".into(), Trace::NilSumNotNil { a, b });
        }
        for x in r.elements() {
            if !nil.contains(r.mul(x, a)) {
                return Verdict::Fail("R·Nil(R) ⊄ Nil(R)".into(), Trace::NilProductNotNil { a, r: x, left: true });
            }
            if !nil.contains(r.mul(a, x)) {
                return Verdict::Fail("Nil(R)·R ⊄ Nil(R)".into(), Trace::NilProductNotNil { a, r: x, left: false });
            }
        }
    }
    Verdict::Pass(format!("the {}-element nil set is additively closed and R-stable", nil.len()))
}
