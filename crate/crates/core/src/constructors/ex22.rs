//! The monomial algebra `F⟨x, y⟩ / (xy, y²x, yx², x³, y³)` over a prime field.

use std::sync::Arc;

use super::rewrite;
use crate::error::{Result, RingError};
use crate::kernel::ring::check_cap;
use crate::kernel::{Construction, FiniteRing, PrimeAlgebra, DEFAULT_SIZE_CAP};

/// Basis order: `1, x, x², y, y², yx`.
pub const EX22_LABELS: [&str; 6] = ["1", "x", "x^2", "y", "y^2", "yx"];

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Hard-coded structure constants: the identity acts trivially and the only
/// other nonzero basis products are `x·x = x²`, `y·y = y²`, `y·x = yx`.
pub fn ex22_constants() -> Vec<u8> {
    let d = EX22_LABELS.len();
    let mut c = vec![0u8; d * d * d];
    let mut set = |i: usize, j: usize, k: usize| c[(i * d + j) * d + k] = 1;
    for i in 0..d {
        set(0, i, i);
        set(i, 0, i);
    }
    set(1, 1, 2);
    set(3, 3, 4);
    set(3, 1, 5);
    c
}

/// Structure constants derived independently by rewriting words.
pub(crate) fn oracle_constants() -> Vec<u8> {
    let words: Vec<String> = rewrite::normal_words(4);
    let index_of = |label: &str| EX22_LABELS.iter().position(|l| *l == label);
    // Reorder the rewriting basis into the label order.
    let basis: Vec<String> = EX22_LABELS
        .iter()
        .map(|l| words.iter().find(|w| rewrite::word_label(w) == *l).cloned().expect("label without normal word"))
        .collect();
    assert_eq!(words.len(), basis.len(), "rewriting basis differs from the label basis");
    let d = basis.len();
    let table = rewrite::product_table(&basis);
    let mut c = vec![0u8; d * d * d];
    for i in 0..d {
        for j in 0..d {
            if let Some(k) = table[i][j] {
                let k = index_of(&rewrite::word_label(&basis[k])).unwrap();
                c[(i * d + j) * d + k] = 1;
            }
        }
    }
    c
}

/// Builds the 6-dimensional ℤ_p-algebra with basis `1, x, x², y, y², yx`.
pub fn make_ex22(p: u64) -> Result<Arc<FiniteRing>> {
    make_ex22_capped(p, DEFAULT_SIZE_CAP)
}

pub(crate) fn make_ex22_capped(p: u64, cap: usize) -> Result<Arc<FiniteRing>> {
    if !is_prime(p) {
        return Err(RingError::NotPrime(p));
    }
    let name = format!("ex22({p})");
    let order = (p as u128).checked_pow(EX22_LABELS.len() as u32).unwrap_or(u128::MAX);
    check_cap(&name, order, cap)?;
    let constants = ex22_constants();
    if constants != oracle_constants() {
        return Err(RingError::Contract("ex22 structure constants disagree with the rewriting oracle".into()));
    }
    let mut unit = vec![0; EX22_LABELS.len()];
    unit[0] = 1;
    let labels = EX22_LABELS.iter().map(|s| s.to_string()).collect();
    let alg = PrimeAlgebra::new(p as u8, labels, constants, unit);
    let (add, mul) = alg.tables();
    let one = alg.basis_element(0);
    FiniteRing::build(name, add, mul, one, Some(alg), Construction::Example22 { p: p as u8 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::Side;

    #[test]
    fn hard_coded_constants_match_rewriting() {
        assert_eq!(ex22_constants(), oracle_constants());
        let d = 6;
        let c = ex22_constants();
        let nonzero_non_identity = (1..d)
            .flat_map(|i| (1..d).map(move |j| (i, j)))
            .filter(|&(i, j)| (0..d).any(|k| c[(i * d + j) * d + k] != 0))
            .count();
        assert_eq!(nonzero_non_identity, 3);
    }

    #[test]
    fn ex22_over_z2() {
        let r = make_ex22(2).unwrap();
        assert_eq!(r.size(), 64);
        let alg = r.algebra().unwrap();
        let x = alg.basis_element(1);
        let y = alg.basis_element(3);
        assert_eq!(r.mul(x, y), 0);
        assert_eq!(r.label(r.mul(y, x)), "yx");
        assert_eq!(r.power_orbit(x), vec![x, alg.basis_element(2), 0]);
        assert_eq!(r.annihilator_of(Side::Right, x).len(), 16);
        assert_eq!(r.annihilator_of(Side::Left, x).len(), 8);
        let x2 = alg.basis_element(2);
        assert_eq!(r.annihilator_of(Side::Right, x2), r.annihilator_of(Side::Left, x2));
        assert_eq!(r.annihilator_of(Side::Right, x2).len(), 32);
    }

    #[test]
    fn rejects_bad_characteristics() {
        assert!(matches!(make_ex22(4), Err(RingError::NotPrime(4))));
        assert!(matches!(make_ex22(5), Err(RingError::Capacity { .. })));
        assert_eq!(make_ex22(3).unwrap().size(), 729);
    }
}
