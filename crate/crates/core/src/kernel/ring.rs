use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{Elem, ElementSet, PrimeAlgebra};
use crate::error::{Result, RingError};

pub const DEFAULT_SIZE_CAP: usize = 4096;

/// Rings up to this size get the full triple-loop axiom check; larger table
/// rings are checked on every pair plus a fixed pseudo-random sample of triples.
pub const EXHAUSTIVE_VALIDATION_LIMIT: usize = 256;

const SAMPLED_TRIPLES: usize = 1 << 20;

static NEXT_RING_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingId(u64);

impl RingId {
    pub(crate) fn fresh() -> Self {
        Self(NEXT_RING_ID.fetch_add(1, Ordering::Relaxed))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Self {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// How a ring was built. Claims that talk about a specific construction
/// (the skew triangular rings, the monomial example) dispatch on this.
#[derive(Clone, Debug)]
pub enum Construction {
    Integers { n: usize },
    Matrix { k: usize, base: Arc<FiniteRing> },
    UpperTriangular { k: usize, base: Arc<FiniteRing> },
    SkewTriangular { k: usize, base: Arc<FiniteRing> },
    Example22 { p: u8 },
    Product { left: Arc<FiniteRing>, right: Arc<FiniteRing> },
    /// `embed[i]` is the parent handle of corner element `i`.
    Corner { parent: Arc<FiniteRing>, idempotent: Elem, embed: Vec<Elem> },
    /// `reps[i]` is the smallest parent handle in coset `i`.
    Quotient { parent: Arc<FiniteRing>, ideal: ElementSet, reps: Vec<Elem> },
    Opposite { parent: Arc<FiniteRing> },
    Tables,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Law {
    ZeroHandle,
    AdditiveIdentity,
    AdditiveInverse,
    AdditiveCommutativity,
    AdditiveAssociativity,
    MultiplicativeAssociativity,
    LeftDistributivity,
    RightDistributivity,
    LeftIdentity,
    RightIdentity,
    TableRange,
}

/// The first axiom instance that failed, with the handles involved.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomFailure {
    pub law: Law,
    pub elems: Vec<Elem>,
}

impl fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} fails at {:?}", self.law, self.elems)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Validation {
    Exhaustive,
    /// Pairs exhaustive, triples sampled.
    Sampled,
    /// Structure constants checked on basis triples, tables exhaustively.
    BasisAndTables,
    /// Structure constants checked on basis triples only.
    Basis,
}

#[derive(Default)]
pub(crate) struct RingCache {
    pub(crate) right_ann: OnceLock<Vec<ElementSet>>,
    pub(crate) left_ann: OnceLock<Vec<ElementSet>>,
    pub(crate) right_cyclic: OnceLock<Vec<ElementSet>>,
    pub(crate) left_cyclic: OnceLock<Vec<ElementSet>>,
    pub(crate) inverses: OnceLock<Vec<Option<Elem>>>,
    pub(crate) units: OnceLock<ElementSet>,
    pub(crate) nil: OnceLock<ElementSet>,
}

/// A finite associative ring with identity, given by dense tables.
pub struct FiniteRing {
    id: RingId,
    name: String,
    size: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    one: Elem,
    algebra: Option<PrimeAlgebra>,
    construction: Construction,
    validation: Validation,
    pub(crate) cache: RingCache,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("name", &self.name)
            .field("size", &self.size)
            .finish_non_exhaustive()
    }
}

pub(crate) fn check_cap(name: &str, size: u128, cap: usize) -> Result<usize> {
    if size > cap as u128 || size > u16::MAX as u128 + 1 {
        return Err(RingError::Capacity { name: name.to_string(), size, cap });
    }
    Ok(size as usize)
}

impl FiniteRing {
    /// Builds a ring from raw tables (`add[a*n+b]`, `mul[a*n+b]`) and validates it.
    pub fn from_tables(
        name: impl Into<String>,
        add: Vec<Elem>,
        mul: Vec<Elem>,
        one: Elem,
    ) -> Result<Arc<Self>> {
        let ring = Self::assemble(name.into(), add, mul, one, None, Construction::Tables)?;
        let ring = ring.validated()?;
        Ok(Arc::new(ring))
    }

    /// Builds a ring from raw tables without running the axiom check.
    /// Only meant for mutation tests that need a deliberately broken table.
    #[doc(hidden)]
    pub fn from_tables_unchecked(
        name: impl Into<String>,
        add: Vec<Elem>,
        mul: Vec<Elem>,
        one: Elem,
    ) -> Result<Arc<Self>> {
        Ok(Arc::new(Self::assemble(name.into(), add, mul, one, None, Construction::Tables)?))
    }

    pub(crate) fn build(
        name: String,
        add: Vec<Elem>,
        mul: Vec<Elem>,
        one: Elem,
        algebra: Option<PrimeAlgebra>,
        construction: Construction,
    ) -> Result<Arc<Self>> {
        let ring = Self::assemble(name, add, mul, one, algebra, construction)?;
        Ok(Arc::new(ring.validated()?))
    }

    fn assemble(
        name: String,
        add: Vec<Elem>,
        mul: Vec<Elem>,
        one: Elem,
        algebra: Option<PrimeAlgebra>,
        construction: Construction,
    ) -> Result<Self> {
        let size = (add.len() as f64).sqrt().round() as usize;
        if size == 0 || size * size != add.len() || mul.len() != add.len() {
            return Err(RingError::Contract(format!(
                "tables for `{name}` are not square or differ in size"
            )));
        }
        check_cap(&name, size as u128, DEFAULT_SIZE_CAP)?;
        if one >= size {
            return Err(RingError::Axiom(AxiomFailure { law: Law::TableRange, elems: vec![one] }));
        }
        if let Some(bad) = add.iter().chain(&mul).position(|&e| e >= size) {
            let cell = bad % (size * size);
            return Err(RingError::Axiom(AxiomFailure {
                law: Law::TableRange,
                elems: vec![cell / size, cell % size],
            }));
        }
        let add: Vec<u16> = add.into_iter().map(|e| e as u16).collect();
        let mul: Vec<u16> = mul.into_iter().map(|e| e as u16).collect();
        let mut neg = vec![0u16; size];
        for a in 0..size {
            match (0..size).find(|&b| add[a * size + b] == 0) {
                Some(b) => neg[a] = b as u16,
                None => {
                    return Err(RingError::Axiom(AxiomFailure {
                        law: Law::AdditiveInverse,
                        elems: vec![a],
                    }))
                }
            }
        }
        let validation = if algebra.is_some() {
            if size <= EXHAUSTIVE_VALIDATION_LIMIT {
                Validation::BasisAndTables
            } else {
                Validation::Basis
            }
        } else if size <= EXHAUSTIVE_VALIDATION_LIMIT {
            Validation::Exhaustive
        } else {
            Validation::Sampled
        };
        Ok(Self {
            id: RingId::fresh(),
            name,
            size,
            add,
            mul,
            neg,
            one,
            algebra,
            construction,
            validation,
            cache: RingCache::default(),
        })
    }

    fn validated(self) -> Result<Self> {
        self.validate().map_err(RingError::Axiom)?;
        Ok(self)
    }

    pub fn id(&self) -> RingId {
        self.id
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size
    }

    pub fn nonzero_elements(&self) -> std::ops::Range<Elem> {
        1..self.size
    }

    pub fn algebra(&self) -> Option<&PrimeAlgebra> {
        self.algebra.as_ref()
    }

    pub fn construction(&self) -> &Construction {
        &self.construction
    }

    pub fn validation(&self) -> Validation {
        self.validation
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a * self.size + b] as Elem
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.size + b] as Elem
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a] as Elem
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// `a·b` for `Side::Right` and `b·a` for `Side::Left`: the product in which
    /// `a` acts on `b` from the given side's point of view.
    #[inline]
    pub fn side_mul(&self, side: Side, a: Elem, b: Elem) -> Elem {
        match side {
            Side::Right => self.mul(a, b),
            Side::Left => self.mul(b, a),
        }
    }

    pub fn mul_all(&self, factors: &[Elem]) -> Elem {
        factors.iter().fold(self.one, |acc, &f| self.mul(acc, f))
    }

    pub fn sum_all(&self, terms: impl IntoIterator<Item = Elem>) -> Elem {
        terms.into_iter().fold(0, |acc, t| self.add(acc, t))
    }

    pub fn pow(&self, a: Elem, k: usize) -> Elem {
        let mut acc = self.one;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// `k·a`, the additive multiple.
    pub fn scale(&self, k: usize, a: Elem) -> Elem {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.add(acc, a);
        }
        acc
    }

    /// The distinct positive powers `a, a², …` in order, stopping before the
    /// first repetition. `a^m` is `orbit[m-1]`; every later power repeats one of them.
    pub fn power_orbit(&self, a: Elem) -> Vec<Elem> {
        let mut seen = vec![false; self.size];
        let mut orbit = Vec::new();
        let mut cur = a;
        while !seen[cur] {
            seen[cur] = true;
            orbit.push(cur);
            cur = self.mul(cur, a);
        }
        orbit
    }

    pub fn is_nilpotent(&self, a: Elem) -> bool {
        self.power_orbit(a).last() == Some(&0)
    }

    /// Least `m` with `a^m = 0`, if `a` is nilpotent.
    pub fn nilpotency_index(&self, a: Elem) -> Option<usize> {
        let orbit = self.power_orbit(a);
        (orbit.last() == Some(&0)).then_some(orbit.len())
    }

    pub fn is_idempotent(&self, a: Elem) -> bool {
        self.mul(a, a) == a
    }

    pub fn is_central(&self, a: Elem) -> bool {
        self.elements().all(|r| self.mul(a, r) == self.mul(r, a))
    }

    pub fn is_commutative(&self) -> bool {
        self.elements().all(|a| self.is_central(a))
    }

    pub fn empty_set(&self) -> ElementSet {
        ElementSet::empty(self.id, self.size)
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.id, self.size)
    }

    pub fn zero_set(&self) -> ElementSet {
        ElementSet::from_elems(self.id, self.size, [0])
    }

    pub fn set_of(&self, elems: impl IntoIterator<Item = Elem>) -> ElementSet {
        ElementSet::from_elems(self.id, self.size, elems)
    }

    /// Raw multiplication table (row-major), e.g. for dumping.
    pub fn mul_table(&self) -> Vec<Elem> {
        self.mul.iter().map(|&e| e as Elem).collect()
    }

    pub fn add_table(&self) -> Vec<Elem> {
        self.add.iter().map(|&e| e as Elem).collect()
    }

    /// Runs the ring-axiom check appropriate for this ring and reports the
    /// first failing instance.
    pub fn validate(&self) -> std::result::Result<(), AxiomFailure> {
        let fail = |law, elems: &[Elem]| Err(AxiomFailure { law, elems: elems.to_vec() });
        let n = self.size;
        if let Some(alg) = &self.algebra {
            alg.check_basis()?;
            if self.validation == Validation::Basis {
                return Ok(());
            }
        }
        for a in 0..n {
            if self.add(0, a) != a || self.add(a, 0) != a {
                return fail(Law::AdditiveIdentity, &[a]);
            }
            if self.add(a, self.neg(a)) != 0 {
                return fail(Law::AdditiveInverse, &[a]);
            }
            if self.mul(self.one, a) != a {
                return fail(Law::LeftIdentity, &[a]);
            }
            if self.mul(a, self.one) != a {
                return fail(Law::RightIdentity, &[a]);
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return fail(Law::AdditiveCommutativity, &[a, b]);
                }
            }
        }
        let triple = |a: Elem, b: Elem, c: Elem| -> std::result::Result<(), AxiomFailure> {
            if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                return fail(Law::LeftDistributivity, &[a, b, c]);
            }
            if self.mul(self.add(a, b), c) != self.add(self.mul(a, c), self.mul(b, c)) {
                return fail(Law::RightDistributivity, &[a, b, c]);
            }
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return fail(Law::MultiplicativeAssociativity, &[a, b, c]);
            }
            if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                return fail(Law::AdditiveAssociativity, &[a, b, c]);
            }
            Ok(())
        };
        if n <= EXHAUSTIVE_VALIDATION_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        triple(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..SAMPLED_TRIPLES {
                triple(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
            }
        }
        Ok(())
    }

    /// The opposite ring: same elements, multiplication `a ∘ b = b·a`.
    pub fn opposite(self: &Arc<Self>) -> Arc<Self> {
        let n = self.size;
        let add = self.add_table();
        let mut mul = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = self.mul(b, a);
            }
        }
        let algebra = self.algebra.as_ref().map(PrimeAlgebra::opposite);
        // Handles are unchanged, so the opposite of a product is the product
        // of the opposites and keeps its component encoding.
        let construction = match &self.construction {
            Construction::Product { left, right } => {
                Construction::Product { left: left.opposite(), right: right.opposite() }
            }
            _ => Construction::Opposite { parent: Arc::clone(self) },
        };
        let mut ring = Self::assemble(format!("op({})", self.name), add, mul, self.one, algebra, construction)
        .expect("opposite of a valid ring has valid tables");
        ring.validation = self.validation;
        Arc::new(ring)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn_tables(n: usize) -> (Vec<Elem>, Vec<Elem>) {
        let add = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        let mul = (0..n * n).map(|i| (i / n) * (i % n) % n).collect();
        (add, mul)
    }

    #[test]
    fn z8_tables_validate() {
        let (add, mul) = zn_tables(8);
        let r = FiniteRing::from_tables("Z8", add, mul, 1).unwrap();
        assert_eq!(r.size(), 8);
        assert_eq!(r.validation(), Validation::Exhaustive);
        assert_eq!(r.power_orbit(2), vec![2, 4, 0]);
        assert_eq!(r.power_orbit(1), vec![1]);
        assert_eq!(r.nilpotency_index(2), Some(3));
        assert_eq!(r.nilpotency_index(3), None);
    }

    #[test]
    fn corrupted_cell_is_reported_with_a_replayable_triple() {
        let (add, mut mul) = zn_tables(8);
        mul[2 * 8 + 2] = 5;
        let r = FiniteRing::from_tables_unchecked("Z8*", add.clone(), mul.clone(), 1).unwrap();
        let failure = r.validate().unwrap_err();
        assert!(matches!(
            failure.law,
            Law::LeftDistributivity
                | Law::RightDistributivity
                | Law::MultiplicativeAssociativity
                | Law::LeftIdentity
                | Law::RightIdentity
        ));
        let (a, b, c) = (failure.elems[0], failure.elems[1], failure.elems[2]);
        let ok = r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c))
            && r.mul(r.add(a, b), c) == r.add(r.mul(a, c), r.mul(b, c))
            && r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c));
        assert!(!ok, "reported triple {:?} does not reproduce the failure", failure);
        assert!(FiniteRing::from_tables("Z8*", add, mul, 1).is_err());
    }

    #[test]
    fn missing_inverse_and_bad_range_are_rejected() {
        let add = vec![0, 1, 1, 1];
        let mul = vec![0, 0, 0, 1];
        assert!(matches!(
            FiniteRing::from_tables("bad", add, mul, 1),
            Err(RingError::Axiom(AxiomFailure { law: Law::AdditiveInverse, .. }))
        ));
        let (add, mut mul) = zn_tables(2);
        mul[3] = 7;
        assert!(matches!(
            FiniteRing::from_tables("bad", add, mul, 1),
            Err(RingError::Axiom(AxiomFailure { law: Law::TableRange, .. }))
        ));
    }

    #[test]
    fn opposite_swaps_products() {
        let (add, mul) = zn_tables(4);
        let r = FiniteRing::from_tables("Z4", add, mul, 1).unwrap();
        let op = r.opposite();
        for a in r.elements() {
            for b in r.elements() {
                assert_eq!(op.mul(a, b), r.mul(b, a));
            }
        }
    }
}
