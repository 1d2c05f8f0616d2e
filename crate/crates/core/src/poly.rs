//! Bounded-degree polynomials over a finite ring and their annihilators.
//!
//! Polynomials are printed in the variable `t` so they never clash with basis
//! labels such as `x` and `y`.

use crate::constructors::product_parts;
use crate::error::{Result, RingError};
use crate::kernel::{Construction, Elem, ElementSet, FiniteRing, RingId, Side};
use crate::linalg::ModMatrix;

/// Default cap on the degree of any polynomial handled by a [`PolyRing`].
pub const DEFAULT_DEGREE_CAP: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: RingId,
    coeffs: Vec<Elem>,
}

impl Polynomial {
    /// Trailing zero coefficients are trimmed; the zero polynomial has no coefficients.
    pub fn new(ring: &FiniteRing, mut coeffs: Vec<Elem>) -> Self {
        assert!(coeffs.iter().all(|&c| c < ring.size()), "coefficient outside `{}`", ring.name());
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { ring: ring.id(), coeffs }
    }

    pub fn zero(ring: &FiniteRing) -> Self {
        Self { ring: ring.id(), coeffs: Vec::new() }
    }

    pub fn constant(ring: &FiniteRing, a: Elem) -> Self {
        Self::new(ring, vec![a])
    }

    pub fn ring_id(&self) -> RingId {
        self.ring
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// The set of coefficients together with 0; `{0}` for the zero polynomial.
    pub fn content(&self, ring: &FiniteRing) -> ElementSet {
        ring.set_of(std::iter::once(0).chain(self.coeffs.iter().copied()))
    }

    pub fn format(&self, ring: &FiniteRing) -> String {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                let c = ring.label(c);
                match i {
                    0 => c,
                    1 => format!("({c})t"),
                    _ => format!("({c})t^{i}"),
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// Convolution product `Σ_k (Σ_{i+j=k} a_i b_j) t^k`.
pub fn poly_mul(ring: &FiniteRing, f: &Polynomial, g: &Polynomial) -> Polynomial {
    Polynomial::new(ring, convolve(ring, f.coeffs(), g.coeffs()))
}

pub(crate) fn convolve(ring: &FiniteRing, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = ring.add(out[i + j], ring.mul(ai, bj));
        }
    }
    out
}

pub fn poly_add(ring: &FiniteRing, f: &Polynomial, g: &Polynomial) -> Polynomial {
    let n = f.coeffs.len().max(g.coeffs.len());
    Polynomial::new(ring, (0..n).map(|i| ring.add(f.coeff(i), g.coeff(i))).collect())
}

/// `∩ r(a)` (or `l(a)`) over every coefficient of every polynomial in `xs`:
/// the constants `c` with `f·c = 0` (`c·f = 0`) for all `f ∈ xs`.
pub fn constant_annihilator(ring: &FiniteRing, xs: &[Polynomial], side: Side) -> ElementSet {
    let mut out = ring.full_set();
    for f in xs {
        for &a in f.coeffs() {
            out.intersect_with(ring.annihilator_of(side, a));
        }
    }
    out
}

/// Outcome of a right-annihilator query: whether every `g` works (`f = 0`)
/// and one nonzero `g` with `f·g = 0`, if any exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyAnnihilator {
    pub everything: bool,
    pub witness: Option<Polynomial>,
}

impl PolyAnnihilator {
    pub fn is_nonzero(&self) -> bool {
        self.witness.is_some()
    }
}

/// Polynomial arithmetic over one ring with an explicit degree cap.
#[derive(Clone, Copy, Debug)]
pub struct PolyRing<'r> {
    ring: &'r FiniteRing,
    degree_cap: usize,
}

impl<'r> PolyRing<'r> {
    pub fn new(ring: &'r FiniteRing, degree_cap: usize) -> Self {
        Self { ring, degree_cap }
    }

    pub fn ring(&self) -> &'r FiniteRing {
        self.ring
    }

    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    fn check_degree(&self, degree: usize) -> Result<()> {
        if degree > self.degree_cap {
            return Err(RingError::DegreeOverflow { degree, cap: self.degree_cap });
        }
        Ok(())
    }

    pub fn poly(&self, coeffs: Vec<Elem>) -> Result<Polynomial> {
        let f = Polynomial::new(self.ring, coeffs);
        self.check_degree(f.degree().unwrap_or(0))?;
        Ok(f)
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
        if let (Some(df), Some(dg)) = (f.degree(), g.degree()) {
            self.check_degree(df + dg)?;
        }
        Ok(poly_mul(self.ring, f, g))
    }

    /// Nonzero `g` with `deg g ≤ d` and `f·g = 0`, by the fastest route
    /// available for the ring: ℤ_p kernel, componentwise for products, or
    /// pruned enumeration.
    pub fn right_annihilator(&self, f: &Polynomial, d: usize, budget: u64) -> Result<PolyAnnihilator> {
        self.check_degree(f.degree().unwrap_or(0) + d)?;
        if f.is_zero() {
            return Ok(PolyAnnihilator {
                everything: true,
                witness: Some(Polynomial::constant(self.ring, self.ring.one())),
            });
        }
        let witness = find_right_annihilator(self.ring, f.coeffs(), d, &mut Budget::new(budget))?
            .map(|g| Polynomial::new(self.ring, g));
        Ok(PolyAnnihilator { everything: false, witness })
    }

    /// The same question answered only by enumeration with pruning.
    pub fn right_annihilator_enumerated(&self, f: &Polynomial, d: usize, budget: u64) -> Result<PolyAnnihilator> {
        self.check_degree(f.degree().unwrap_or(0) + d)?;
        if f.is_zero() {
            return Ok(PolyAnnihilator {
                everything: true,
                witness: Some(Polynomial::constant(self.ring, self.ring.one())),
            });
        }
        let witness = enumerate_right_annihilator(self.ring, f.coeffs(), d, &mut Budget::new(budget))?
            .map(|g| Polynomial::new(self.ring, g));
        Ok(PolyAnnihilator { everything: false, witness })
    }

    /// ℤ_p-basis of `{g : deg g ≤ d, f·g = 0}`; `None` without structure constants.
    pub fn right_annihilator_basis(&self, f: &Polynomial, d: usize) -> Result<Option<Vec<Polynomial>>> {
        self.check_degree(f.degree().unwrap_or(0) + d)?;
        Ok(linear_basis(self.ring, f.coeffs(), d)
            .map(|basis| basis.into_iter().map(|g| Polynomial::new(self.ring, g)).collect()))
    }

    /// Calls `visit` with the coefficient vector (length `d+1`) of every `g`
    /// with `deg g ≤ d` and `f·g = 0`, including `g = 0`. Stops early when
    /// `visit` returns `false`.
    pub fn for_each_right_annihilator(
        &self,
        f: &Polynomial,
        d: usize,
        budget: u64,
        mut visit: impl FnMut(&[Elem]) -> bool,
    ) -> Result<()> {
        self.check_degree(f.degree().unwrap_or(0) + d)?;
        let mut budget = Budget::new(budget);
        let shifted = strip_low_zeros(f.coeffs());
        if shifted.is_empty() {
            let mut g = vec![0; d + 1];
            return all_vectors(self.ring, &mut g, 0, &mut budget, &mut visit).map(|_| ());
        }
        dfs(self.ring, shifted, d, false, &mut budget, &mut |g| visit(g)).map(|_| ())
    }
}

pub(crate) struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub(crate) fn new(limit: u64) -> Self {
        Self { limit, used: 0 }
    }

    pub(crate) fn tick(&mut self, what: &str) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            return Err(RingError::SearchBudget { what: what.into(), budget: self.limit });
        }
        Ok(())
    }
}

/// `f = t^s·f'` with `f'(0) ≠ 0`; `t` is central and regular, so `f·g = 0 ⟺ f'·g = 0`.
fn strip_low_zeros(a: &[Elem]) -> &[Elem] {
    let s = a.iter().take_while(|&&c| c == 0).count();
    &a[s..]
}

pub(crate) fn find_right_annihilator(
    ring: &FiniteRing,
    f: &[Elem],
    d: usize,
    budget: &mut Budget,
) -> Result<Option<Vec<Elem>>> {
    let f = strip_low_zeros(f);
    if f.is_empty() {
        let mut g = vec![0; d + 1];
        g[0] = ring.one();
        return Ok(Some(g));
    }
    if let Some(basis) = linear_basis(ring, f, d) {
        return Ok(basis.into_iter().next());
    }
    if let Construction::Product { left, right } = ring.construction() {
        let n2 = right.size();
        let f1: Vec<Elem> = f.iter().map(|&h| h / n2).collect();
        let f2: Vec<Elem> = f.iter().map(|&h| h % n2).collect();
        if let Some(g1) = find_right_annihilator(left, &f1, d, budget)? {
            return Ok(Some(g1.iter().map(|&b| b * n2).collect()));
        }
        if let Some(g2) = find_right_annihilator(right, &f2, d, budget)? {
            return Ok(Some(g2));
        }
        return Ok(None);
    }
    enumerate_right_annihilator(ring, f, d, budget)
}

fn enumerate_right_annihilator(
    ring: &FiniteRing,
    f: &[Elem],
    d: usize,
    budget: &mut Budget,
) -> Result<Option<Vec<Elem>>> {
    let f = strip_low_zeros(f);
    if f.is_empty() {
        let mut g = vec![0; d + 1];
        g[0] = ring.one();
        return Ok(Some(g));
    }
    // A nonzero annihilator can be shifted down until its constant term is
    // nonzero, so only those are searched.
    let mut found = None;
    dfs(ring, f, d, true, budget, &mut |g| {
        found = Some(g.to_vec());
        false
    })?;
    Ok(found)
}

/// Depth-first search over `b_0, …, b_d`: once `b_0..b_{j-1}` are fixed,
/// coefficient `j` of `f·g` forces `a_0·b_j = −Σ_{i≥1} a_i b_{j−i}`, so `b_j`
/// ranges over one fibre of left multiplication by `a_0`. Returns `false` if
/// the visitor stopped the search.
fn dfs(
    ring: &FiniteRing,
    f: &[Elem],
    d: usize,
    nonzero_constant: bool,
    budget: &mut Budget,
    visit: &mut dyn FnMut(&[Elem]) -> bool,
) -> Result<bool> {
    let a0 = f[0];
    let mut fibres: Vec<Vec<Elem>> = vec![Vec::new(); ring.size()];
    for b in ring.elements() {
        fibres[ring.mul(a0, b)].push(b);
    }
    let mut g = vec![0; d + 1];
    step(ring, f, d, 0, nonzero_constant, &fibres, &mut g, budget, visit)
}

#[allow(clippy::too_many_arguments)]
fn step(
    ring: &FiniteRing,
    f: &[Elem],
    d: usize,
    j: usize,
    nonzero_constant: bool,
    fibres: &[Vec<Elem>],
    g: &mut Vec<Elem>,
    budget: &mut Budget,
    visit: &mut dyn FnMut(&[Elem]) -> bool,
) -> Result<bool> {
    if j > d {
        let m = f.len() - 1;
        for k in d + 1..=m + d {
            let mut acc = 0;
            for i in k - d..=m.min(k) {
                acc = ring.add(acc, ring.mul(f[i], g[k - i]));
            }
            if acc != 0 {
                return Ok(true);
            }
        }
        return Ok(visit(g));
    }
    budget.tick("enumerating polynomial annihilators")?;
    let mut rest = 0;
    for i in 1..=j.min(f.len() - 1) {
        rest = ring.add(rest, ring.mul(f[i], g[j - i]));
    }
    for &b in &fibres[ring.neg(rest)] {
        if j == 0 && nonzero_constant && b == 0 {
            continue;
        }
        g[j] = b;
        if !step(ring, f, d, j + 1, nonzero_constant, fibres, g, budget, visit)? {
            return Ok(false);
        }
    }
    g[j] = 0;
    Ok(true)
}

fn all_vectors(
    ring: &FiniteRing,
    g: &mut Vec<Elem>,
    j: usize,
    budget: &mut Budget,
    visit: &mut dyn FnMut(&[Elem]) -> bool,
) -> Result<bool> {
    if j == g.len() {
        return Ok(visit(g));
    }
    budget.tick("enumerating polynomials")?;
    for b in ring.elements() {
        g[j] = b;
        if !all_vectors(ring, g, j + 1, budget, visit)? {
            return Ok(false);
        }
    }
    g[j] = 0;
    Ok(true)
}

/// Block-Toeplitz system over ℤ_p: block `(k, j)` is the left-multiplication
/// operator of `a_{k−j}`, unknowns are the coordinates of `b_0..b_d`.
pub(crate) fn linear_basis(ring: &FiniteRing, f: &[Elem], d: usize) -> Option<Vec<Vec<Elem>>> {
    let alg = ring.algebra()?;
    let da = alg.dim();
    if f.is_empty() {
        return None;
    }
    let m = f.len() - 1;
    let ops: Vec<ModMatrix> =
        f.iter().map(|&a| alg.multiplication_operator(Side::Right, &alg.decode(a))).collect();
    let cols = (d + 1) * da;
    let mut sys = ModMatrix::zeros(alg.p(), (m + d + 1) * da, cols);
    for k in 0..=m + d {
        for j in 0..=d {
            if k < j || k - j > m {
                continue;
            }
            let op = &ops[k - j];
            for r in 0..da {
                for c in 0..da {
                    let v = op.get(r, c);
                    if v != 0 {
                        sys.set(k * da + r, j * da + c, v);
                    }
                }
            }
        }
    }
    Some(
        sys.nullspace()
            .into_iter()
            .map(|v| v.chunks(da).map(|block| alg.encode(block)).collect())
            .collect(),
    )
}

/// Handles of `(a, b)` components of product-ring polynomial coefficients.
pub fn split_product(ring: &FiniteRing, f: &Polynomial) -> Option<(Vec<Elem>, Vec<Elem>)> {
    let parts: Option<Vec<(Elem, Elem)>> = f.coeffs().iter().map(|&h| product_parts(ring, h)).collect();
    let parts = parts?;
    Some(parts.into_iter().unzip())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{make_ex22, make_matrix, make_zn, matrix_unit};

    #[test]
    fn zero_times_anything() {
        let r = make_zn(6).unwrap();
        let f = Polynomial::new(&r, vec![1, 2, 3]);
        assert!(poly_mul(&r, &f, &Polynomial::zero(&r)).is_zero());
        let pr = PolyRing::new(&r, 4);
        let ann = pr.right_annihilator(&Polynomial::zero(&r), 2, 1000).unwrap();
        assert!(ann.everything && ann.is_nonzero());
    }

    #[test]
    fn trims_and_degrees() {
        let r = make_zn(4).unwrap();
        let f = Polynomial::new(&r, vec![1, 0, 2, 0, 0]);
        assert_eq!(f.degree(), Some(2));
        assert_eq!(f.format(&r), "1 + (2)t^2");
        assert_eq!(Polynomial::new(&r, vec![0, 0]).degree(), None);
        let pr = PolyRing::new(&r, 3);
        assert!(matches!(pr.mul(&f, &f), Err(RingError::DegreeOverflow { degree: 4, cap: 3 })));
    }

    #[test]
    fn matrix_example_product_vanishes() {
        let m2 = make_matrix(&make_zn(2).unwrap(), 2).unwrap();
        let e = |i, j| matrix_unit(&m2, i, j).unwrap();
        let f = Polynomial::new(&m2, vec![e(1, 1), e(1, 2)]);
        let g = Polynomial::new(&m2, vec![e(2, 1), e(1, 1)]);
        assert!(poly_mul(&m2, &f, &g).is_zero());
        let pr = PolyRing::new(&m2, 4);
        let ann = pr.right_annihilator(&f, 1, 1 << 20).unwrap();
        let w = ann.witness.unwrap();
        assert!(poly_mul(&m2, &f, &w).is_zero());
        assert!(constant_annihilator(&m2, &[f], Side::Right).is_zero_only());
    }

    #[test]
    fn linear_and_enumerated_agree_on_ex22() {
        let r = make_ex22(2).unwrap();
        let pr = PolyRing::new(&r, 4);
        for a0 in [1usize, 2, 5, 9, 33, 63] {
            for a1 in [0usize, 2, 8, 17, 40] {
                let f = Polynomial::new(&r, vec![a0, a1]);
                let lin = pr.right_annihilator(&f, 2, u64::MAX).unwrap();
                let en = pr.right_annihilator_enumerated(&f, 2, u64::MAX).unwrap();
                assert_eq!(lin.is_nonzero(), en.is_nonzero(), "f = {}", f.format(&r));
                if let Some(g) = lin.witness {
                    assert!(poly_mul(&r, &f, &g).is_zero());
                }
            }
        }
    }

    #[test]
    fn constant_annihilator_of_x_matches_kernel() {
        let r = make_ex22(2).unwrap();
        let alg = r.algebra().unwrap();
        let x = alg.basis_element(1);
        let f = Polynomial::constant(&r, x);
        let pr = PolyRing::new(&r, 4);
        let mut solutions = r.empty_set();
        pr.for_each_right_annihilator(&f, 0, u64::MAX, |g| {
            solutions.insert(g[0]);
            true
        })
        .unwrap();
        assert_eq!(&solutions, r.annihilator_of(Side::Right, x));
        assert_eq!(solutions.len(), 16);
    }
}
