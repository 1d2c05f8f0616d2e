use super::ring::{AxiomFailure, Law};
use super::{Elem, Side};
use crate::linalg::ModMatrix;

/// Largest characteristic and dimension accepted for structure-constant algebras.
pub const MAX_PRIME: u8 = 7;
pub const MAX_DIM: usize = 16;

/// A finite-dimensional algebra over ℤ_p given by structure constants.
///
/// Elements are coordinate vectors in `(ℤ_p)^dim`; the handle of a vector is its
/// little-endian base-`p` value, so the zero vector is handle 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeAlgebra {
    p: u8,
    dim: usize,
    labels: Vec<String>,
    /// `constants[(i*dim + j)*dim + k]`: coefficient of basis `k` in `e_i·e_j`.
    constants: Vec<u8>,
    unit: Vec<u8>,
}

impl PrimeAlgebra {
    pub fn new(p: u8, labels: Vec<String>, constants: Vec<u8>, unit: Vec<u8>) -> Self {
        let dim = labels.len();
        assert!((2..=MAX_PRIME).contains(&p), "characteristic {p} outside 2..={MAX_PRIME}");
        assert!((1..=MAX_DIM).contains(&dim), "dimension {dim} outside 1..={MAX_DIM}");
        assert_eq!(constants.len(), dim * dim * dim);
        assert_eq!(unit.len(), dim);
        let constants = constants.into_iter().map(|c| c % p).collect();
        Self { p, dim, labels, constants, unit }
    }

    pub fn p(&self) -> u8 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[u8] {
        &self.unit
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> u8 {
        self.constants[(i * self.dim + j) * self.dim + k]
    }

    /// Number of elements, `p^dim`.
    pub fn order(&self) -> u128 {
        (self.p as u128).pow(self.dim as u32)
    }

    pub fn encode(&self, coords: &[u8]) -> Elem {
        coords.iter().rev().fold(0, |acc, &c| acc * self.p as usize + (c % self.p) as usize)
    }

    pub fn decode(&self, mut e: Elem) -> Vec<u8> {
        let mut coords = vec![0; self.dim];
        for c in coords.iter_mut() {
            *c = (e % self.p as usize) as u8;
            e /= self.p as usize;
        }
        coords
    }

    pub fn basis_element(&self, i: usize) -> Elem {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        self.encode(&v)
    }

    pub fn basis_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn add_coords(&self, a: &[u8], b: &[u8]) -> Vec<u8> {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.p).collect()
    }

    pub fn mul_coords(&self, a: &[u8], b: &[u8]) -> Vec<u8> {
        let d = self.dim;
        let mut out = vec![0u32; d];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let w = ai as u32 * bj as u32;
                let base = (i * d + j) * d;
                for (k, o) in out.iter_mut().enumerate() {
                    *o += w * self.constants[base + k] as u32;
                }
            }
        }
        out.into_iter().map(|v| (v % self.p as u32) as u8).collect()
    }

    /// Matrix of `c ↦ a·c` (`Side::Right`) or `c ↦ c·a` (`Side::Left`) in the basis.
    pub fn multiplication_operator(&self, side: Side, a: &[u8]) -> ModMatrix {
        let d = self.dim;
        let mut m = ModMatrix::zeros(self.p, d, d);
        for j in 0..d {
            let mut e = vec![0; d];
            e[j] = 1;
            let col = match side {
                Side::Right => self.mul_coords(a, &e),
                Side::Left => self.mul_coords(&e, a),
            };
            for (k, v) in col.into_iter().enumerate() {
                m.set(k, j, v);
            }
        }
        m
    }

    /// Associativity and two-sided unit on basis triples.
    pub fn check_basis(&self) -> Result<(), AxiomFailure> {
        let d = self.dim;
        let e = |i: usize| {
            let mut v = vec![0; d];
            v[i] = 1;
            v
        };
        for i in 0..d {
            if self.mul_coords(&self.unit, &e(i)) != e(i) {
                return Err(AxiomFailure { law: Law::LeftIdentity, elems: vec![self.basis_element(i)] });
            }
            if self.mul_coords(&e(i), &self.unit) != e(i) {
                return Err(AxiomFailure { law: Law::RightIdentity, elems: vec![self.basis_element(i)] });
            }
            for j in 0..d {
                let ij = self.mul_coords(&e(i), &e(j));
                for k in 0..d {
                    let jk = self.mul_coords(&e(j), &e(k));
                    if self.mul_coords(&ij, &e(k)) != self.mul_coords(&e(i), &jk) {
                        return Err(AxiomFailure {
                            law: Law::MultiplicativeAssociativity,
                            elems: vec![self.basis_element(i), self.basis_element(j), self.basis_element(k)],
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn opposite(&self) -> Self {
        let d = self.dim;
        let mut constants = vec![0; d * d * d];
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    constants[(i * d + j) * d + k] = self.constant(j, i, k);
                }
            }
        }
        Self { p: self.p, dim: d, labels: self.labels.clone(), constants, unit: self.unit.clone() }
    }

    /// Human-readable coordinates, e.g. `1+x+2yx`; the identity basis label `1`
    /// is printed bare.
    pub fn format(&self, e: Elem) -> String {
        let coords = self.decode(e);
        let terms: Vec<String> = coords
            .iter()
            .zip(&self.labels)
            .filter(|(c, _)| **c != 0)
            .map(|(&c, l)| match (c, l.as_str()) {
                (1, l) => l.to_string(),
                (c, "1") => c.to_string(),
                (c, l) => format!("{c}{l}"),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }

    /// Full add and mul tables over all `p^dim` handles.
    pub(crate) fn tables(&self) -> (Vec<Elem>, Vec<Elem>) {
        let n = self.order() as usize;
        let coords: Vec<Vec<u8>> = (0..n).map(|e| self.decode(e)).collect();
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] = self.encode(&self.add_coords(&coords[a], &coords[b]));
                mul[a * n + b] = self.encode(&self.mul_coords(&coords[a], &coords[b]));
            }
        }
        (add, mul)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dual_numbers(p: u8) -> PrimeAlgebra {
        // basis {1, e} with e² = 0
        let mut c = vec![0; 8];
        let mut set = |i: usize, j: usize, k: usize| c[(i * 2 + j) * 2 + k] = 1;
        set(0, 0, 0);
        set(0, 1, 1);
        set(1, 0, 1);
        PrimeAlgebra::new(p, vec!["1".into(), "e".into()], c, vec![1, 0])
    }

    #[test]
    fn encode_decode_roundtrip() {
        let a = dual_numbers(3);
        for h in 0..9 {
            assert_eq!(a.encode(&a.decode(h)), h);
        }
        assert_eq!(a.format(a.encode(&[2, 1])), "2+e");
        assert_eq!(a.format(0), "0");
    }

    #[test]
    fn basis_check_passes_and_operator_matches_product() {
        let a = dual_numbers(5);
        a.check_basis().unwrap();
        let x = [3, 2];
        let m = a.multiplication_operator(Side::Right, &x);
        for h in 0..25 {
            let c = a.decode(h);
            assert_eq!(m.mul_vec(&c), a.mul_coords(&x, &c));
        }
    }

    #[test]
    fn broken_unit_is_reported() {
        let mut c = vec![0; 8];
        c[0] = 1;
        let bad = PrimeAlgebra::new(2, vec!["1".into(), "e".into()], c, vec![1, 0]);
        assert!(bad.check_basis().is_err());
    }
}
