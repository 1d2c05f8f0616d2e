//! Decision procedures for ring classes, each returning a replayable witness.
//!
//! Every checker is exhaustive over the finite ring except McCoy, which is
//! falsification-only: a positive McCoy verdict means no violation exists
//! with polynomial degrees up to the bound.

mod lattice;
mod mccoy;
mod replay;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Result, RingError};
use crate::kernel::{Elem, FiniteRing, Side};

pub use lattice::{annihilator_lattice, LatticeEntry};
pub use mccoy::{is_local, mccoy_falsify, mccoy_search, replay_violation, McCoyViolation};
pub use replay::verify_witness;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PropertyId {
    Reversible,
    WeaklyReversible,
    NilReversible,
    Semicommutative,
    Abelian,
    TwoPrimal,
    Cn,
    PiCn,
    DuoRight,
    DuoLeft,
    PiDuo,
    Reduced,
    NonsingularRight,
    NonsingularLeft,
    StronglyBounded,
    StronglyAbRight,
    StronglyAbLeft,
    AbRight,
    AbLeft,
    MccoyRight,
    MccoyLeft,
}

impl PropertyId {
    pub const ALL: [PropertyId; 21] = [
        Self::Reversible,
        Self::WeaklyReversible,
        Self::NilReversible,
        Self::Semicommutative,
        Self::Abelian,
        Self::TwoPrimal,
        Self::Cn,
        Self::PiCn,
        Self::DuoRight,
        Self::DuoLeft,
        Self::PiDuo,
        Self::Reduced,
        Self::NonsingularRight,
        Self::NonsingularLeft,
        Self::StronglyBounded,
        Self::StronglyAbRight,
        Self::StronglyAbLeft,
        Self::AbRight,
        Self::AbLeft,
        Self::MccoyRight,
        Self::MccoyLeft,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Reversible => "reversible",
            Self::WeaklyReversible => "weakly-reversible",
            Self::NilReversible => "nil-reversible",
            Self::Semicommutative => "semicommutative",
            Self::Abelian => "abelian",
            Self::TwoPrimal => "two-primal",
            Self::Cn => "cn",
            Self::PiCn => "pi-cn",
            Self::DuoRight => "duo-right",
            Self::DuoLeft => "duo-left",
            Self::PiDuo => "pi-duo",
            Self::Reduced => "reduced",
            Self::NonsingularRight => "nonsingular-right",
            Self::NonsingularLeft => "nonsingular-left",
            Self::StronglyBounded => "strongly-bounded",
            Self::StronglyAbRight => "strongly-ab-right",
            Self::StronglyAbLeft => "strongly-ab-left",
            Self::AbRight => "ab-right",
            Self::AbLeft => "ab-left",
            Self::MccoyRight => "mccoy-right",
            Self::MccoyLeft => "mccoy-left",
        }
    }

    /// True only for properties whose positive verdict is bounded by a search depth.
    pub fn is_bounded_search(self) -> bool {
        matches!(self, Self::MccoyRight | Self::MccoyLeft)
    }
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PropertyId {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        Self::ALL
            .into_iter()
            .find(|p| p.as_str() == key)
            .ok_or_else(|| RingError::UnknownProperty(s.to_string()))
    }
}

/// Which kind of one-sided ideal an unbounded-ideal witness refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdealKind {
    /// `aR` (right) or `Ra` (left) for the single generator `a`.
    Cyclic,
    /// `r(X)` (right) or `l(X)` (left) for the generator set `X`.
    Annihilator,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    None,
    /// Least `m` with `a^m ≠ 0` reversible, for every nonzero `a`.
    Exponents { exponents: Vec<(Elem, usize)> },
    /// No nonzero power of `a` is reversible.
    NoReversiblePower { a: Elem },
    /// `ab = 0` but `ba ≠ 0`.
    ZeroProduct { a: Elem, b: Elem },
    /// `ab = 0` but `arb ≠ 0`.
    Semicommutative { a: Elem, b: Elem, r: Elem },
    /// `ar ≠ ra`.
    NonCentral { a: Elem, r: Elem },
    /// Nilpotent but outside `J(R)`: `1 − ra` is not a unit.
    NilNotRadical { a: Elem, r: Elem },
    /// Nonzero with `a² = 0`.
    SquareZero { a: Elem },
    /// Nonzero element of the singular ideal on `side`.
    Singular { side: Side, a: Elem },
    /// `ra ∉ aR` (right) or `ar ∉ Ra` (left).
    NotTwoSided { side: Side, a: Elem, r: Elem },
    /// No power `a^k ≠ 0` satisfies the inclusion on `side`.
    NoDuoPower { side: Side, a: Elem },
    /// A nonzero ideal of the given kind contains no nonzero two-sided ideal.
    Unbounded { side: Side, ideal: IdealKind, generators: Vec<Elem> },
    #[serde(rename = "mccoy")]
    McCoy(McCoyViolation),
}

impl Witness {
    pub fn elements(&self) -> Vec<Elem> {
        match self {
            Witness::None => vec![],
            Witness::Exponents { exponents } => exponents.iter().map(|&(a, _)| a).collect(),
            Witness::NoReversiblePower { a }
            | Witness::SquareZero { a }
            | Witness::Singular { a, .. }
            | Witness::NoDuoPower { a, .. } => vec![*a],
            Witness::ZeroProduct { a, b } => vec![*a, *b],
            Witness::Semicommutative { a, b, r } => vec![*a, *b, *r],
            Witness::NonCentral { a, r } | Witness::NilNotRadical { a, r } | Witness::NotTwoSided { a, r, .. } => {
                vec![*a, *r]
            }
            Witness::Unbounded { generators, .. } => generators.clone(),
            Witness::McCoy(v) => v.f.iter().chain(&v.g).copied().collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct PropertyReport {
    pub ring: String,
    pub property: PropertyId,
    pub verdict: bool,
    pub witness: Witness,
    /// Readable labels for every element mentioned in the witness.
    pub labels: BTreeMap<Elem, String>,
    /// Polynomial degree bound for falsification-only properties.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_bound: Option<usize>,
    pub elapsed_ms: u64,
}

/// Settings for properties decided by bounded search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_degree: usize,
    pub budget: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self { max_degree: 3, budget: 50_000_000 }
    }
}

pub fn is_reversible_element(ring: &FiniteRing, a: Elem) -> bool {
    ring.annihilator_of(Side::Left, a) == ring.annihilator_of(Side::Right, a)
}

/// Least `m` with `a^m ≠ 0` reversible.
pub fn reversible_exponent(ring: &FiniteRing, a: Elem) -> Option<usize> {
    ring.power_orbit(a)
        .iter()
        .position(|&p| p != 0 && is_reversible_element(ring, p))
        .map(|i| i + 1)
}

/// `Ok(exponents)` when weakly reversible, `Err(a)` naming an element with no
/// reversible nonzero power.
pub fn is_weakly_reversible(ring: &FiniteRing) -> std::result::Result<Vec<(Elem, usize)>, Elem> {
    ring.nonzero_elements().map(|a| reversible_exponent(ring, a).map(|m| (a, m)).ok_or(a)).collect()
}

pub fn check_property(ring: &Arc<FiniteRing>, property: PropertyId, limits: SearchLimits) -> Result<PropertyReport> {
    let start = Instant::now();
    let witness = decide(ring, property, limits)?;
    let verdict = matches!(witness, Witness::None | Witness::Exponents { .. });
    let labels = witness.elements().into_iter().map(|e| (e, ring.label(e))).collect();
    Ok(PropertyReport {
        ring: ring.name().to_string(),
        property,
        verdict,
        witness,
        labels,
        degree_bound: property.is_bounded_search().then_some(limits.max_degree),
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Shorthand for the verdict alone.
pub fn holds(ring: &Arc<FiniteRing>, property: PropertyId, limits: SearchLimits) -> Result<bool> {
    Ok(check_property(ring, property, limits)?.verdict)
}

fn decide(ring: &Arc<FiniteRing>, property: PropertyId, limits: SearchLimits) -> Result<Witness> {
    use PropertyId as P;
    let r: &FiniteRing = ring;
    let w = match property {
        P::Reversible => zero_product(r, r.elements()),
        P::NilReversible => zero_product(r, r.nil_set().iter()),
        P::WeaklyReversible => match is_weakly_reversible(r) {
            Ok(exponents) => Witness::Exponents { exponents },
            Err(a) => Witness::NoReversiblePower { a },
        },
        P::Semicommutative => semicommutative(r),
        P::Abelian => non_central(r, |a| r.is_idempotent(a)),
        P::Cn => non_central(r, |a| r.is_nilpotent(a)),
        P::PiCn => non_central(r, |a| a != 0 && r.mul(a, a) == 0),
        P::TwoPrimal => two_primal(r),
        P::DuoRight => duo(r, Side::Right),
        P::DuoLeft => duo(r, Side::Left),
        P::PiDuo => pi_duo(r),
        P::Reduced => match r.nonzero_elements().find(|&a| r.mul(a, a) == 0) {
            Some(a) => Witness::SquareZero { a },
            None => Witness::None,
        },
        P::NonsingularRight => nonsingular(r, Side::Right),
        P::NonsingularLeft => nonsingular(r, Side::Left),
        P::StronglyBounded => strongly_bounded(r)?,
        P::StronglyAbRight => lattice::unbounded_annihilator(r, Side::Right, false)?,
        P::StronglyAbLeft => lattice::unbounded_annihilator(r, Side::Left, false)?,
        P::AbRight => lattice::unbounded_annihilator(r, Side::Right, true)?,
        P::AbLeft => lattice::unbounded_annihilator(r, Side::Left, true)?,
        P::MccoyRight | P::MccoyLeft => {
            let side = if property == P::MccoyRight { Side::Right } else { Side::Left };
            match mccoy_falsify(ring, side, limits.max_degree, limits.budget)? {
                Some(v) => Witness::McCoy(v),
                None => Witness::None,
            }
        }
    };
    Ok(w)
}

fn zero_product(r: &FiniteRing, candidates: impl Iterator<Item = Elem>) -> Witness {
    for a in candidates {
        if let Some(b) = r.annihilator_of(Side::Right, a).iter().find(|&b| r.mul(b, a) != 0) {
            return Witness::ZeroProduct { a, b };
        }
    }
    Witness::None
}

fn semicommutative(r: &FiniteRing) -> Witness {
    for a in r.nonzero_elements() {
        for b in r.annihilator_of(Side::Right, a).iter() {
            if let Some(x) = r.elements().find(|&x| r.mul(r.mul(a, x), b) != 0) {
                return Witness::Semicommutative { a, b, r: x };
            }
        }
    }
    Witness::None
}

fn non_central(r: &FiniteRing, pick: impl Fn(Elem) -> bool) -> Witness {
    for a in r.elements().filter(|&a| pick(a)) {
        if let Some(x) = r.elements().find(|&x| r.mul(a, x) != r.mul(x, a)) {
            return Witness::NonCentral { a, r: x };
        }
    }
    Witness::None
}

fn two_primal(r: &FiniteRing) -> Witness {
    // J(R) is always nil in a finite ring, so only the reverse inclusion can fail.
    let one = r.one();
    for a in r.nil_set().iter() {
        if let Some(x) = r.elements().find(|&x| !r.is_unit(r.sub(one, r.mul(x, a)))) {
            return Witness::NilNotRadical { a, r: x };
        }
    }
    Witness::None
}

fn duo(r: &FiniteRing, side: Side) -> Witness {
    for a in r.nonzero_elements() {
        let ideal = r.cyclic_ideal(side, a);
        if let Some(x) = r.elements().find(|&x| !ideal.contains(r.side_mul(side.flip(), a, x))) {
            return Witness::NotTwoSided { side, a, r: x };
        }
    }
    Witness::None
}

/// `Ra ⊆ aR` for `Side::Right`, `aR ⊆ Ra` for `Side::Left`.
pub fn cyclic_inclusion(r: &FiniteRing, side: Side, a: Elem) -> bool {
    r.cyclic_ideal(side.flip(), a).is_subset(r.cyclic_ideal(side, a))
}

fn pi_duo(r: &FiniteRing) -> Witness {
    for a in r.nonzero_elements() {
        let powers: Vec<Elem> = r.power_orbit(a).into_iter().filter(|&p| p != 0).collect();
        for side in [Side::Right, Side::Left] {
            if !powers.iter().any(|&p| cyclic_inclusion(r, side, p)) {
                return Witness::NoDuoPower { side, a };
            }
        }
    }
    Witness::None
}

fn nonsingular(r: &FiniteRing, side: Side) -> Witness {
    match r.nonzero_elements().find(|&a| r.is_essential(side, r.annihilator_of(side, a))) {
        Some(a) => Witness::Singular { side, a },
        None => Witness::None,
    }
}

fn strongly_bounded(r: &FiniteRing) -> Result<Witness> {
    for a in r.nonzero_elements() {
        for side in [Side::Right, Side::Left] {
            if !r.bound_of_ideal(side, r.cyclic_ideal(side, a))?.has_nonzero() {
                return Ok(Witness::Unbounded { side, ideal: IdealKind::Cyclic, generators: vec![a] });
            }
        }
    }
    Ok(Witness::None)
}
