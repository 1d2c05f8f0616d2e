//! Annihilators, ideals, radicals and essentiality.

use std::collections::VecDeque;

use super::{Elem, ElementSet, FiniteRing, Side};
use crate::error::{Result, RingError};
use crate::linalg::{for_each_in_span, ModMatrix};

impl FiniteRing {
    fn check_owned(&self, set: &ElementSet) {
        assert_eq!(set.ring_id(), self.id(), "element set does not belong to ring `{}`", self.name());
    }

    /// `r(X) = {c : x·c = 0 ∀x∈X}` for `Side::Right`, `l(X)` for `Side::Left`,
    /// computed by scanning the multiplication table.
    pub fn annihilator(&self, side: Side, x: &ElementSet) -> ElementSet {
        self.check_owned(x);
        let mut out = self.full_set();
        for a in x.iter() {
            out.intersect_with(self.annihilator_of(side, a));
            if out.is_zero_only() {
                break;
            }
        }
        out
    }

    /// Cached one-element annihilator `r(a)` or `l(a)`.
    pub fn annihilator_of(&self, side: Side, a: Elem) -> &ElementSet {
        let cell = match side {
            Side::Right => &self.cache.right_ann,
            Side::Left => &self.cache.left_ann,
        };
        &cell.get_or_init(|| {
            self.elements()
                .map(|a| self.set_of(self.elements().filter(|&c| self.side_mul(side, a, c) == 0)))
                .collect()
        })[a]
    }

    /// The same annihilator computed as the kernel of the stacked multiplication
    /// operators over ℤ_p. `None` for rings without structure constants.
    pub fn kernel_annihilator(&self, side: Side, x: &ElementSet) -> Option<ElementSet> {
        self.check_owned(x);
        let alg = self.algebra()?;
        let d = alg.dim();
        let mut stacked = ModMatrix::zeros(alg.p(), 0, d);
        for a in x.iter() {
            let op = alg.multiplication_operator(side, &alg.decode(a));
            for r in 0..d {
                let row: Vec<u8> = (0..d).map(|c| op.get(r, c)).collect();
                stacked.push_row(&row);
            }
            if stacked.rows() > 2 * d {
                stacked.rref();
            }
        }
        let mut out = self.empty_set();
        for_each_in_span(alg.p(), &stacked.nullspace(), d, |v| {
            out.insert(alg.encode(v));
        });
        Some(out)
    }

    /// The cyclic one-sided ideal `aR` (`Side::Right`) or `Ra` (`Side::Left`).
    pub fn cyclic_ideal(&self, side: Side, a: Elem) -> &ElementSet {
        let cell = match side {
            Side::Right => &self.cache.right_cyclic,
            Side::Left => &self.cache.left_cyclic,
        };
        &cell.get_or_init(|| {
            self.elements()
                .map(|a| self.set_of(self.elements().map(|r| self.side_mul(side, a, r))))
                .collect()
        })[a]
    }

    /// Two-sided inverse of `a`, if any. In a finite ring a one-sided inverse is
    /// automatically two-sided, so `a·b = 1` is the test.
    pub fn inverse(&self, a: Elem) -> Option<Elem> {
        self.cache.inverses.get_or_init(|| {
            self.elements()
                .map(|a| self.elements().find(|&b| self.mul(a, b) == self.one()))
                .collect()
        })[a]
    }

    pub fn units(&self) -> &ElementSet {
        self.cache
            .units
            .get_or_init(|| self.set_of(self.elements().filter(|&a| self.inverse(a).is_some())))
    }

    pub fn is_unit(&self, a: Elem) -> bool {
        self.units().contains(a)
    }

    /// All nilpotent elements.
    pub fn nil_set(&self) -> &ElementSet {
        self.cache
            .nil
            .get_or_init(|| self.set_of(self.elements().filter(|&a| self.is_nilpotent(a))))
    }

    /// `J(R) = {x : 1 − r·x is a unit for every r}`.
    pub fn jacobson_radical(&self) -> ElementSet {
        let one = self.one();
        self.set_of(
            self.elements()
                .filter(|&x| self.elements().all(|r| self.is_unit(self.sub(one, self.mul(r, x))))),
        )
    }

    /// Smallest additive subgroup containing `x` and closed under the given
    /// multiplications: `left` adds `r·z`, `right` adds `z·r`.
    fn closure(&self, x: &ElementSet, left: bool, right: bool) -> ElementSet {
        self.check_owned(x);
        let mut members = self.zero_set();
        let mut list = vec![0];
        let mut candidates: VecDeque<Elem> = x.iter().collect();
        let mut to_expand: Vec<Elem> = Vec::new();
        loop {
            while let Some(z) = candidates.pop_front() {
                if members.contains(z) {
                    continue;
                }
                // Join z into the subgroup: add z, 2z, ... to every existing member.
                let base = list.clone();
                let mut multiple = z;
                while !members.contains(multiple) {
                    for &s in &base {
                        let t = self.add(s, multiple);
                        if members.insert(t) {
                            list.push(t);
                            to_expand.push(t);
                        }
                    }
                    multiple = self.add(multiple, z);
                }
            }
            let Some(z) = to_expand.pop() else { break };
            for r in self.elements() {
                if left {
                    candidates.push_back(self.mul(r, z));
                }
                if right {
                    candidates.push_back(self.mul(z, r));
                }
            }
        }
        members
    }

    /// Two-sided ideal generated by `x`.
    pub fn ideal_closure(&self, x: &ElementSet) -> ElementSet {
        self.closure(x, true, true)
    }

    /// One-sided ideal generated by `x`: right ideal for `Side::Right`.
    pub fn one_sided_closure(&self, side: Side, x: &ElementSet) -> ElementSet {
        match side {
            Side::Right => self.closure(x, false, true),
            Side::Left => self.closure(x, true, false),
        }
    }

    pub fn additive_closure(&self, x: &ElementSet) -> ElementSet {
        self.closure(x, false, false)
    }

    pub fn is_additive_subgroup(&self, s: &ElementSet) -> bool {
        self.check_owned(s);
        s.contains(0) && s.iter().all(|a| s.iter().all(|b| s.contains(self.sub(a, b))))
    }

    /// Right ideal for `Side::Right` (closed under `z·r`), left ideal for `Side::Left`.
    pub fn is_one_sided_ideal(&self, side: Side, s: &ElementSet) -> bool {
        self.is_additive_subgroup(s)
            && s.iter().all(|z| self.elements().all(|r| s.contains(self.side_mul(side, z, r))))
    }

    pub fn is_two_sided_ideal(&self, s: &ElementSet) -> bool {
        self.is_one_sided_ideal(Side::Right, s)
            && s.iter().all(|z| self.elements().all(|r| s.contains(self.mul(r, z))))
    }

    /// Largest two-sided ideal inside the one-sided ideal `ideal`:
    /// `{x ∈ I : R·x ⊆ I}` for a right ideal, `{x ∈ I : x·R ⊆ I}` for a left one.
    /// Returns `{0}` when `I` bounds no nonzero ideal.
    pub fn bound_of_ideal(&self, side: Side, ideal: &ElementSet) -> Result<ElementSet> {
        if !self.is_one_sided_ideal(side, ideal) {
            return Err(RingError::Contract(format!("set is not a {side} ideal of `{}`", self.name())));
        }
        Ok(self.set_of(ideal.iter().filter(|&x| self.cyclic_ideal(side.flip(), x).is_subset(ideal))))
    }

    pub fn bound_of_right_ideal(&self, ideal: &ElementSet) -> Result<ElementSet> {
        self.bound_of_ideal(Side::Right, ideal)
    }

    /// `I` is essential as a right (left) ideal iff it meets every nonzero
    /// cyclic right (left) ideal nontrivially; every nonzero one-sided ideal
    /// contains a nonzero cyclic one.
    pub fn is_essential(&self, side: Side, ideal: &ElementSet) -> bool {
        self.check_owned(ideal);
        self.nonzero_elements().all(|a| self.cyclic_ideal(side, a).meets_nontrivially(ideal))
    }

    /// The right (left) singular ideal: elements whose right (left)
    /// annihilator is essential.
    pub fn singular_set(&self, side: Side) -> ElementSet {
        self.set_of(self.elements().filter(|&a| self.is_essential(side, self.annihilator_of(side, a))))
    }
}
