use crate::kernel::{Elem, ElementSet, FiniteRing, Side};

/// The product sets `(zR)^k` (`Side::Right`) or `(Rz)^k` (`Side::Left`) for
/// `k = 1, 2, …`, up to the point where the sequence becomes constant.
///
/// `(zR)^k` is the set of products `z·r₁·z·r₂⋯z·r_k`, not the ideal they
/// generate. The sets decrease with `k`, and
/// `(zR)^{k+1} = ⋃_{s ∈ (zR)^k} (s·z)R`, `(Rz)^{k+1} = ⋃_{t ∈ (Rz)^k} R(z·t)`.
#[derive(Clone, Debug)]
pub struct ProductChain {
    side: Side,
    z: Elem,
    levels: Vec<ElementSet>,
}

impl ProductChain {
    pub fn new(ring: &FiniteRing, side: Side, z: Elem) -> Self {
        let mut levels = vec![ring.cyclic_ideal(side, z).clone()];
        loop {
            let last = levels.last().expect("nonempty");
            let mut next = ring.empty_set();
            for s in last.iter() {
                next.union_with(ring.cyclic_ideal(side, ring.side_mul(side, s, z)));
            }
            if &next == last {
                return Self { side, z, levels };
            }
            levels.push(next);
        }
    }

    /// The set for exponent `k ≥ 1`.
    pub fn level(&self, k: usize) -> &ElementSet {
        assert!(k >= 1, "exponents start at 1");
        &self.levels[(k - 1).min(self.levels.len() - 1)]
    }

    /// Exponent from which the sets no longer change.
    pub fn stable_from(&self) -> usize {
        self.levels.len()
    }

    /// Factors `r₁..r_k` with `z·r₁⋯z·r_k = s` (right) or `r_k·z⋯r₁·z = s` (left).
    pub fn factorization(&self, ring: &FiniteRing, k: usize, s: Elem) -> Option<Vec<Elem>> {
        if !self.level(k).contains(s) {
            return None;
        }
        if k == 1 {
            return ring.elements().find(|&r| ring.side_mul(self.side, self.z, r) == s).map(|r| vec![r]);
        }
        for prev in self.level(k - 1).iter() {
            let head = ring.side_mul(self.side, prev, self.z);
            if let Some(r) = ring.elements().find(|&r| ring.side_mul(self.side, head, r) == s) {
                let mut rs = self.factorization(ring, k - 1, prev)?;
                rs.push(r);
                return Some(rs);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{make_ex22, make_zn};

    #[test]
    fn chain_of_nilpotent_reaches_zero() {
        let z8 = make_zn(8).unwrap();
        let c = ProductChain::new(&z8, Side::Right, 2);
        assert_eq!(c.level(1).len(), 4);
        assert!(c.level(3).is_zero_only());
        assert!(c.level(9).is_zero_only());
    }

    #[test]
    fn factorization_reproduces_element() {
        let r = make_ex22(2).unwrap();
        let x = 2; // coordinates (0,1,0,0,0,0) in base 2
        let c = ProductChain::new(&r, Side::Left, x);
        for s in c.level(1).iter() {
            let rs = c.factorization(&r, 1, s).unwrap();
            assert_eq!(r.mul(rs[0], x), s);
        }
        let c = ProductChain::new(&r, Side::Right, x);
        for s in c.level(2).iter() {
            let rs = c.factorization(&r, 2, s).unwrap();
            assert_eq!(r.mul_all(&[x, rs[0], x, rs[1]]), s);
        }
    }
}
