//! Every concrete ring used by the checks, built as validated [`FiniteRing`]s.

mod ex22;
mod plan;
pub mod rewrite;

use std::sync::Arc;

pub use ex22::{ex22_constants, make_ex22, EX22_LABELS};
pub use plan::RingExprPlan;

use crate::error::{Result, RingError};
use crate::kernel::ring::check_cap;
use crate::kernel::{Construction, Elem, ElementSet, FiniteRing, DEFAULT_SIZE_CAP};

pub fn make_zn(n: usize) -> Result<Arc<FiniteRing>> {
    make_zn_capped(n, DEFAULT_SIZE_CAP)
}

pub fn make_zn_capped(n: usize, cap: usize) -> Result<Arc<FiniteRing>> {
    let name = format!("Z{n}");
    if n < 2 {
        return Err(RingError::Contract(format!("Z{n}: modulus must be at least 2")));
    }
    check_cap(&name, n as u128, cap)?;
    let add = (0..n * n).map(|i| (i / n + i % n) % n).collect();
    let mul = (0..n * n).map(|i| (i / n) * (i % n) % n).collect();
    FiniteRing::build(name, add, mul, 1 % n, None, Construction::Integers { n })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Shape {
    Full,
    Upper,
    /// Upper triangular with one shared diagonal entry.
    Skew,
}

/// Slot `s` of a matrix-shaped ring lists the positions that share its value.
fn slots(shape: Shape, k: usize) -> Vec<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    if shape == Shape::Skew {
        out.push((0..k).map(|i| (i, i)).collect());
    }
    for i in 0..k {
        for j in 0..k {
            let keep = match shape {
                Shape::Full => true,
                Shape::Upper => i <= j,
                Shape::Skew => i < j,
            };
            if keep {
                out.push(vec![(i, j)]);
            }
        }
    }
    out
}

fn matrix_name(shape: Shape, k: usize, base: &FiniteRing) -> String {
    let letter = match shape {
        Shape::Full => 'M',
        Shape::Upper => 'T',
        Shape::Skew => 'S',
    };
    format!("{letter}{k}({})", base.name())
}

fn decode_matrix(shape: Shape, k: usize, n: usize, mut h: Elem) -> Vec<Elem> {
    let mut m = vec![0; k * k];
    for slot in slots(shape, k) {
        let digit = h % n;
        h /= n;
        for (i, j) in slot {
            m[i * k + j] = digit;
        }
    }
    m
}

fn make_matrix_shaped(base: &Arc<FiniteRing>, k: usize, shape: Shape, cap: usize) -> Result<Arc<FiniteRing>> {
    let name = matrix_name(shape, k, base);
    if k == 0 {
        return Err(RingError::Contract(format!("{name}: matrix size must be positive")));
    }
    let pattern = slots(shape, k);
    let n = base.size();
    let size = (n as u128).checked_pow(pattern.len() as u32).unwrap_or(u128::MAX);
    let size = check_cap(&name, size, cap)?;
    let encode = |m: &[Elem]| -> Elem {
        pattern.iter().rev().fold(0, |acc, slot| {
            let (i, j) = slot[0];
            acc * n + m[i * k + j]
        })
    };
    let mats: Vec<Vec<Elem>> = (0..size).map(|h| decode_matrix(shape, k, n, h)).collect();
    let mut add = vec![0; size * size];
    let mut mul = vec![0; size * size];
    let mut prod = vec![0; k * k];
    let mut sum = vec![0; k * k];
    for a in 0..size {
        let ma = &mats[a];
        for b in 0..size {
            let mb = &mats[b];
            for idx in 0..k * k {
                sum[idx] = base.add(ma[idx], mb[idx]);
            }
            for i in 0..k {
                for j in 0..k {
                    let mut acc = 0;
                    for t in 0..k {
                        acc = base.add(acc, base.mul(ma[i * k + t], mb[t * k + j]));
                    }
                    prod[i * k + j] = acc;
                }
            }
            add[a * size + b] = encode(&sum);
            mul[a * size + b] = encode(&prod);
        }
    }
    let mut id = vec![0; k * k];
    for i in 0..k {
        id[i * k + i] = base.one();
    }
    let base = Arc::clone(base);
    let construction = match shape {
        Shape::Full => Construction::Matrix { k, base },
        Shape::Upper => Construction::UpperTriangular { k, base },
        Shape::Skew => Construction::SkewTriangular { k, base },
    };
    FiniteRing::build(name, add, mul, encode(&id), None, construction)
}

/// Full matrix ring `M_k(base)`.
pub fn make_matrix(base: &Arc<FiniteRing>, k: usize) -> Result<Arc<FiniteRing>> {
    make_matrix_shaped(base, k, Shape::Full, DEFAULT_SIZE_CAP)
}

/// Upper triangular matrices `T_k(base)`.
pub fn make_upper_triangular(base: &Arc<FiniteRing>, k: usize) -> Result<Arc<FiniteRing>> {
    make_matrix_shaped(base, k, Shape::Upper, DEFAULT_SIZE_CAP)
}

/// `S_k(base)`: upper triangular matrices whose diagonal entries are all equal.
pub fn make_skew_triangular(base: &Arc<FiniteRing>, k: usize) -> Result<Arc<FiniteRing>> {
    make_matrix_shaped(base, k, Shape::Skew, DEFAULT_SIZE_CAP)
}

pub(crate) fn make_matrix_family_capped(
    letter: char,
    base: &Arc<FiniteRing>,
    k: usize,
    cap: usize,
) -> Result<Arc<FiniteRing>> {
    let shape = match letter {
        'M' => Shape::Full,
        'T' => Shape::Upper,
        _ => Shape::Skew,
    };
    make_matrix_shaped(base, k, shape, cap)
}

/// The matrix unit `e_ij` (1-based indices) of a matrix-shaped ring, if it is an element.
pub fn matrix_unit(ring: &FiniteRing, i: usize, j: usize) -> Option<Elem> {
    let (shape, k, base) = match ring.construction() {
        Construction::Matrix { k, base } => (Shape::Full, *k, base),
        Construction::UpperTriangular { k, base } => (Shape::Upper, *k, base),
        Construction::SkewTriangular { k, base } => (Shape::Skew, *k, base),
        _ => return None,
    };
    if i == 0 || j == 0 || i > k || j > k {
        return None;
    }
    let (i, j) = (i - 1, j - 1);
    let n = base.size();
    let pattern = slots(shape, k);
    let s = pattern.iter().position(|slot| slot.len() == 1 && slot[0] == (i, j))?;
    Some(base.one() * n.pow(s as u32))
}

/// Entries of a matrix-shaped ring element, row-major, as base-ring handles.
pub fn matrix_entries(ring: &FiniteRing, h: Elem) -> Option<(usize, Vec<Elem>)> {
    let (shape, k, base) = match ring.construction() {
        Construction::Matrix { k, base } => (Shape::Full, *k, base),
        Construction::UpperTriangular { k, base } => (Shape::Upper, *k, base),
        Construction::SkewTriangular { k, base } => (Shape::Skew, *k, base),
        _ => return None,
    };
    Some((k, decode_matrix(shape, k, base.size(), h)))
}

/// Element of a matrix-shaped ring with the given row-major entries, if the
/// entries fit the ring's shape.
pub fn matrix_element(ring: &FiniteRing, entries: &[Elem]) -> Option<Elem> {
    ring.elements().find(|&h| matrix_entries(ring, h).map(|(_, m)| m) == Some(entries.to_vec()))
}

/// Componentwise product `r1 × r2`; the handle of `(a, b)` is `a·|r2| + b`.
pub fn make_product(r1: &Arc<FiniteRing>, r2: &Arc<FiniteRing>) -> Result<Arc<FiniteRing>> {
    make_product_capped(r1, r2, DEFAULT_SIZE_CAP)
}

pub(crate) fn make_product_capped(r1: &Arc<FiniteRing>, r2: &Arc<FiniteRing>, cap: usize) -> Result<Arc<FiniteRing>> {
    let right_name = match r2.construction() {
        Construction::Product { .. } => format!("({})", r2.name()),
        _ => r2.name().to_string(),
    };
    let name = format!("{} x {}", r1.name(), right_name);
    let (n1, n2) = (r1.size(), r2.size());
    let size = check_cap(&name, n1 as u128 * n2 as u128, cap)?;
    let mut add = vec![0; size * size];
    let mut mul = vec![0; size * size];
    for a in 0..size {
        let (a1, a2) = (a / n2, a % n2);
        for b in 0..size {
            let (b1, b2) = (b / n2, b % n2);
            add[a * size + b] = r1.add(a1, b1) * n2 + r2.add(a2, b2);
            mul[a * size + b] = r1.mul(a1, b1) * n2 + r2.mul(a2, b2);
        }
    }
    let one = r1.one() * n2 + r2.one();
    let construction = Construction::Product { left: Arc::clone(r1), right: Arc::clone(r2) };
    FiniteRing::build(name, add, mul, one, None, construction)
}

/// Splits a product-ring handle into its components.
pub fn product_parts(ring: &FiniteRing, h: Elem) -> Option<(Elem, Elem)> {
    match ring.construction() {
        Construction::Product { right, .. } => Some((h / right.size(), h % right.size())),
        _ => None,
    }
}

/// The corner ring `eRe` with identity `e`. Handles are the sorted parent
/// handles of its elements.
pub fn make_corner(ring: &Arc<FiniteRing>, e: Elem) -> Result<Arc<FiniteRing>> {
    let name = format!("corner({}, {e})", ring.name());
    if e >= ring.size() || !ring.is_idempotent(e) {
        return Err(RingError::Contract(format!("{name}: element {e} is not idempotent")));
    }
    let mut embed: Vec<Elem> = ring.elements().map(|a| ring.mul(ring.mul(e, a), e)).collect();
    embed.sort_unstable();
    embed.dedup();
    let size = embed.len();
    let mut index = vec![usize::MAX; ring.size()];
    for (i, &h) in embed.iter().enumerate() {
        index[h] = i;
    }
    let mut add = vec![0; size * size];
    let mut mul = vec![0; size * size];
    for (i, &a) in embed.iter().enumerate() {
        for (j, &b) in embed.iter().enumerate() {
            add[i * size + j] = index[ring.add(a, b)];
            mul[i * size + j] = index[ring.mul(a, b)];
        }
    }
    let one = index[e];
    let construction = Construction::Corner { parent: Arc::clone(ring), idempotent: e, embed };
    FiniteRing::build(name, add, mul, one, None, construction)
}

/// `R / I` where `I` is the two-sided ideal generated by `gens`.
/// Coset `i` is represented by the smallest parent handle it contains.
pub fn make_quotient(ring: &Arc<FiniteRing>, gens: &ElementSet) -> Result<Arc<FiniteRing>> {
    let ideal = ring.ideal_closure(gens);
    let members: Vec<Elem> = ideal.iter().collect();
    let mut class = vec![usize::MAX; ring.size()];
    let mut reps = Vec::new();
    for a in ring.elements() {
        if class[a] != usize::MAX {
            continue;
        }
        for &i in &members {
            class[ring.add(a, i)] = reps.len();
        }
        reps.push(a);
    }
    let size = reps.len();
    let mut add = vec![0; size * size];
    let mut mul = vec![0; size * size];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            add[i * size + j] = class[ring.add(a, b)];
            mul[i * size + j] = class[ring.mul(a, b)];
        }
    }
    let one = class[ring.one()];
    let gen_list: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
    let name = format!("quotient({}, {})", ring.name(), gen_list.join(", "));
    let construction = Construction::Quotient { parent: Arc::clone(ring), ideal, reps };
    FiniteRing::build(name, add, mul, one, None, construction)
}

impl FiniteRing {
    /// Human-readable rendering of an element: coordinates for algebras,
    /// bracketed entries for matrix rings, tuples for products.
    pub fn label(&self, h: Elem) -> String {
        if let Some(alg) = self.algebra() {
            return alg.format(h);
        }
        match self.construction() {
            Construction::Integers { .. } | Construction::Tables => h.to_string(),
            Construction::Matrix { base, .. }
            | Construction::UpperTriangular { base, .. }
            | Construction::SkewTriangular { base, .. } => {
                let (k, m) = matrix_entries(self, h).expect("matrix-shaped");
                let rows: Vec<String> = m
                    .chunks(k)
                    .map(|row| row.iter().map(|&e| base.label(e)).collect::<Vec<_>>().join(" "))
                    .collect();
                format!("[{}]", rows.join("; "))
            }
            Construction::Example22 { .. } => h.to_string(),
            Construction::Product { left, right } => {
                let (a, b) = (h / right.size(), h % right.size());
                format!("({}, {})", left.label(a), right.label(b))
            }
            Construction::Corner { parent, embed, .. } => parent.label(embed[h]),
            Construction::Quotient { parent, reps, .. } => format!("{}+I", parent.label(reps[h])),
            Construction::Opposite { parent } => parent.label(h),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::Validation;

    fn z(n: usize) -> Arc<FiniteRing> {
        make_zn(n).unwrap()
    }

    #[test]
    fn zn_basics() {
        let z2 = z(2);
        assert_eq!(z2.size(), 2);
        assert_eq!(z2.units().len(), 1);
        let z8 = z(8);
        assert_eq!(z8.nil_set().iter().collect::<Vec<_>>(), vec![0, 2, 4, 6]);
        assert!(z(4).is_commutative());
        assert!(make_zn(1).is_err());
        assert!(matches!(make_zn(5000), Err(RingError::Capacity { .. })));
    }

    #[test]
    fn matrix_family_sizes() {
        let z2 = z(2);
        let m2 = make_matrix(&z2, 2).unwrap();
        assert_eq!(m2.size(), 16);
        assert!(!m2.is_commutative());
        assert_eq!(make_upper_triangular(&z2, 2).unwrap().size(), 8);
        assert_eq!(make_upper_triangular(&z2, 3).unwrap().size(), 64);
        assert_eq!(make_skew_triangular(&z2, 2).unwrap().size(), 4);
        assert_eq!(make_skew_triangular(&z2, 3).unwrap().size(), 16);
        assert_eq!(make_skew_triangular(&z(4), 2).unwrap().size(), 16);
        assert_eq!(make_skew_triangular(&m2, 2).unwrap().size(), 256);
        assert!(matches!(make_matrix(&m2, 2), Err(RingError::Capacity { .. })));
    }

    #[test]
    fn m1_is_a_copy() {
        let z6 = z(6);
        let m1 = make_matrix(&z6, 1).unwrap();
        for a in z6.elements() {
            for b in z6.elements() {
                assert_eq!(m1.mul(a, b), z6.mul(a, b));
                assert_eq!(m1.add(a, b), z6.add(a, b));
            }
        }
    }

    #[test]
    fn s3_matrix_units_multiply_one_way() {
        let s3 = make_skew_triangular(&z(2), 3).unwrap();
        let e12 = matrix_unit(&s3, 1, 2).unwrap();
        let e23 = matrix_unit(&s3, 2, 3).unwrap();
        assert_ne!(s3.mul(e12, e23), 0);
        assert_eq!(s3.mul(e23, e12), 0);
        assert_eq!(s3.mul(e12, e12), 0);
        assert_eq!(s3.label(e12), "[0 1 0; 0 0 0; 0 0 0]");
    }

    #[test]
    fn product_corner_quotient() {
        let p = make_product(&z(2), &z(3)).unwrap();
        assert_eq!(p.size(), 6);
        assert_eq!(p.label(p.one()), "(1, 1)");
        let m2 = make_matrix(&z(2), 2).unwrap();
        let e11 = matrix_unit(&m2, 1, 1).unwrap();
        let corner = make_corner(&m2, e11).unwrap();
        assert_eq!(corner.size(), 2);
        let whole = make_corner(&m2, m2.one()).unwrap();
        assert_eq!(whole.size(), 16);
        for a in m2.elements() {
            for b in m2.elements() {
                assert_eq!(whole.mul(a, b), m2.mul(a, b));
            }
        }
        assert!(make_corner(&m2, matrix_unit(&m2, 1, 2).unwrap()).is_err());

        let t3 = make_upper_triangular(&z(2), 3).unwrap();
        let q = make_quotient(&t3, t3.nil_set()).unwrap();
        assert_eq!(q.size(), 8);
        assert!(q.is_commutative());
        assert!(q.nonzero_elements().all(|a| q.mul(a, a) != 0));
    }

    #[test]
    fn quotient_size_divides() {
        let z8 = z(8);
        let q = make_quotient(&z8, &z8.set_of([4])).unwrap();
        assert_eq!(q.size(), 4);
        let q1 = make_quotient(&z8, &z8.set_of([0])).unwrap();
        assert_eq!(q1.size(), 8);
        let q0 = make_quotient(&z8, &z8.set_of([3])).unwrap();
        assert_eq!(q0.size(), 1);
    }

    #[test]
    fn large_rings_use_sampled_validation() {
        let r = make_skew_triangular(&z(8), 3).unwrap();
        assert_eq!(r.size(), 4096);
        assert_eq!(r.validation(), Validation::Sampled);
    }
}
