//! Executable versions of the structural results about weakly reversible
//! rings, each checked exhaustively (or over a stated bounded family) on a
//! concrete finite ring.
//!
//! Every claim carries a hypothesis. A ring that does not satisfy it yields
//! [`ClaimStatus::HypothesisNotMet`], never a vacuous pass. Failures come with
//! a [`Trace`] that [`replay_trace`] re-checks from the multiplication table alone.

mod chains;
mod elementwise;
mod explore;
mod polynomial;
mod replay;
mod structural;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Result, RingError};
use crate::kernel::{Elem, FiniteRing, Side, DEFAULT_SIZE_CAP};
use crate::poly::DEFAULT_DEGREE_CAP;
use crate::properties::{is_weakly_reversible, McCoyViolation};

pub use chains::ProductChain;
pub use explore::{explore_problem, Exploration, ExplorationRow};
pub use replay::replay_trace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClaimId {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
    C9,
    C10,
    C11,
    C12,
    C13,
    C14,
    C15,
    C16,
    C17,
    C18,
}

impl ClaimId {
    pub const ALL: [ClaimId; 18] = [
        Self::C1,
        Self::C2,
        Self::C3,
        Self::C4,
        Self::C5,
        Self::C6,
        Self::C7,
        Self::C8,
        Self::C9,
        Self::C10,
        Self::C11,
        Self::C12,
        Self::C13,
        Self::C14,
        Self::C15,
        Self::C16,
        Self::C17,
        Self::C18,
    ];

    /// A short quotation identifying the statement.
    pub fn anchor(self) -> &'static str {
        match self {
            Self::C1 => "xy=0 and yx\\neq 0",
            Self::C2 => "S_2(R) is weakly reversible if, and only if",
            Self::C3 => "not weakly reversible for any $n\\geq 3$",
            Self::C4 => "reversible whenever $a^2=0$",
            Self::C5 => "Every weakly reversible ring is abelian",
            Self::C6 => "corner subring $eRe$ is too weakly reversible",
            Self::C7 => "non-singular if, and only if, it is reduced",
            Self::C8 => "$a^tRb =b Ra^t=\\{0\\}$",
            Self::C9 => "$aRb^k=b^kRa=\\{0\\}$",
            Self::C10 => "then $(aR)^m=0$",
            Self::C11 => "$(aR)^kb =\\{0\\}$",
            Self::C12 => "$a(Rb)^k =\\{0\\}$",
            Self::C13 => "Nil(R)$ is an ideal",
            Self::C14 => "(a_0R)^{k}g(x)=0",
            Self::C15 => "$a_ib_j\\in Nil(R)$",
            Self::C16 => "strongly right AB and strongly left AB",
            Self::C17 => "R is a McCoy ring",
            Self::C18 => "weakly reversible $\\pi$-duo rings are themselves reversible",
        }
    }

    pub fn summary(self) -> &'static str {
        match self {
            Self::C1 => "the monomial algebra has xy = 0, yx ≠ 0 and is weakly reversible",
            Self::C2 => "S2(R) is weakly reversible iff R is reversible",
            Self::C3 => "S_n(R) is not weakly reversible for n ≥ 3",
            Self::C4 => "square-zero elements are reversible",
            Self::C5 => "idempotents are central",
            Self::C6 => "corners eRe are weakly reversible",
            Self::C7 => "nonsingular iff reduced",
            Self::C8 => "ab = 0 gives a^t with a^tRb = bRa^t = 0",
            Self::C9 => "ab = 0 gives b^k with aRb^k = b^kRa = 0",
            Self::C10 => "a^m = 0 implies (aR)^m = 0",
            Self::C11 => "ab = 0 gives k with (aR)^k b = b(Ra)^k = 0",
            Self::C12 => "ab = 0 gives k with a(Rb)^k = (bR)^k a = 0",
            Self::C13 => "the nilpotent elements form an ideal",
            Self::C14 => "fg = 0 gives k with (a0R)^k g = 0",
            Self::C15 => "fg = 0 puts every a_i b_j in Nil(R)",
            Self::C16 => "annihilators in R[t] are bounded (surrogate family)",
            Self::C17 => "no McCoy violation",
            Self::C18 => "weakly reversible π-duo rings: reversible?",
        }
    }

    /// Claims whose hypothesis is that the ring is weakly reversible.
    pub fn needs_weak_reversibility(self) -> bool {
        !matches!(self, Self::C1 | Self::C2 | Self::C3 | Self::C18)
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for ClaimId {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| RingError::UnknownClaim(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimStatus {
    Pass,
    Fail,
    HypothesisNotMet,
    /// The claim concerns a construction this ring is not an instance of.
    NotApplicable,
    SkippedByCap,
    /// Report-only rows (the open question); never pass or fail.
    Reported,
}

impl fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Pass => "pass",
            Self::Fail => "fail",
            Self::HypothesisNotMet => "hypothesis-not-met",
            Self::NotApplicable => "not-applicable",
            Self::SkippedByCap => "skipped-by-cap",
            Self::Reported => "reported",
        })
    }
}

/// The quantifier assignment that falsifies a claim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Trace {
    /// `a ≠ 0`, `a² = 0`, and exactly one of `ab`, `ba` vanishes.
    SquareZeroNotReversible { a: Elem, b: Elem },
    /// `er ≠ re` for the idempotent `e`.
    NonCentralIdempotent { e: Elem, r: Elem },
    /// `a ∈ eRe` has no nonzero power that is reversible inside `eRe`.
    CornerNotWeaklyReversible { e: Elem, a: Elem },
    /// Nonsingular on `side`, yet `a ≠ 0` with `a² = 0`.
    NonsingularNotReduced { side: Side, a: Elem },
    /// Reduced, yet `a ≠ 0` is in the singular ideal on `side`.
    ReducedButSingular { side: Side, a: Elem },
    /// `ab = 0` with `a, b ≠ 0` and no admissible exponent.
    NoExponent { a: Elem, b: Elem },
    /// `a^m = 0` but `a·r₁·a·r₂⋯a·r_m ≠ 0`.
    NilPowerProduct { a: Elem, m: usize, rs: Vec<Elem> },
    /// Nilpotent `a, b` whose sum, or product with `r`, is not nilpotent.
    NilSumNotNil { a: Elem, b: Elem },
    NilProductNotNil { a: Elem, r: Elem, left: bool },
    /// `f·g = 0` and the polynomial conclusion fails.
    PolynomialPair { f: Vec<Elem>, g: Vec<Elem> },
    /// `X·g = 0` with `g ≠ 0`, yet `∩ r(aR)` over the coefficients of `X` is zero.
    UnboundedAnnihilator { x: Vec<Vec<Elem>>, g: Vec<Elem> },
    #[serde(rename = "mccoy")]
    McCoy(McCoyViolation),
    /// The construction-level statements: the checked verdict disagrees.
    Verdicts { detail: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct ClaimResult {
    pub claim: ClaimId,
    pub ring: String,
    pub status: ClaimStatus,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Trace>,
}

/// Limits shared by all claims.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct Caps {
    /// Degree bound for polynomial searches.
    pub max_degree: usize,
    /// Largest polynomial degree handed to the solver.
    pub degree_cap: usize,
    pub ring_size_cap: usize,
    /// Work units (candidates examined) a single claim may spend.
    pub search_budget: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            max_degree: 3,
            degree_cap: DEFAULT_DEGREE_CAP,
            ring_size_cap: DEFAULT_SIZE_CAP,
            search_budget: 1 << 24,
        }
    }
}

/// Outcome of a claim body on a ring that meets the hypothesis.
pub(crate) enum Verdict {
    Pass(String),
    Fail(String, Trace),
    HypothesisNotMet(String),
    NotApplicable(String),
    Reported(String),
}

impl Verdict {
    fn from_trace(found: Option<Trace>, ok: impl Into<String>, bad: impl Into<String>) -> Self {
        match found {
            None => Verdict::Pass(ok.into()),
            Some(t) => Verdict::Fail(bad.into(), t),
        }
    }
}

pub fn run_claim(claim: ClaimId, ring: &Arc<FiniteRing>, caps: &Caps) -> ClaimResult {
    let (status, detail, trace) = match evaluate(claim, ring, caps) {
        Ok(Verdict::Pass(d)) => (ClaimStatus::Pass, d, None),
        Ok(Verdict::Fail(d, t)) => (ClaimStatus::Fail, d, Some(t)),
        Ok(Verdict::HypothesisNotMet(d)) => (ClaimStatus::HypothesisNotMet, d, None),
        Ok(Verdict::NotApplicable(d)) => (ClaimStatus::NotApplicable, d, None),
        Ok(Verdict::Reported(d)) => (ClaimStatus::Reported, d, None),
        Err(e @ (RingError::Capacity { .. } | RingError::SearchBudget { .. } | RingError::DegreeOverflow { .. })) => {
            (ClaimStatus::SkippedByCap, e.to_string(), None)
        }
        Err(e) => (ClaimStatus::Fail, format!("internal error: {e}"), None),
    };
    ClaimResult { claim, ring: ring.name().to_string(), status, detail, trace }
}

fn evaluate(claim: ClaimId, ring: &Arc<FiniteRing>, caps: &Caps) -> Result<Verdict> {
    if claim.needs_weak_reversibility() {
        if let Err(a) = is_weakly_reversible(ring) {
            let label = ring.label(a);
            return Ok(Verdict::HypothesisNotMet(format!("not weakly reversible: no nonzero power of {label} is reversible")));
        }
    }
    use ClaimId as C;
    match claim {
        C::C1 => structural::c1_example(ring),
        C::C2 => structural::c2_s2_criterion(ring, caps),
        C::C3 => structural::c3_sn_not_wr(ring, caps),
        C::C4 => Ok(elementwise::c4_square_zero(ring)),
        C::C5 => Ok(elementwise::c5_abelian(ring)),
        C::C6 => structural::c6_corners(ring),
        C::C7 => Ok(structural::c7_nonsingular_reduced(ring)),
        C::C8 => Ok(elementwise::c8(ring)),
        C::C9 => Ok(elementwise::c9(ring)),
        C::C10 => Ok(elementwise::c10(ring)),
        C::C11 => Ok(elementwise::c11(ring)),
        C::C12 => Ok(elementwise::c12(ring)),
        C::C13 => Ok(elementwise::c13(ring)),
        C::C14 => polynomial::c14(ring, caps),
        C::C15 => polynomial::c15(ring, caps),
        C::C16 => polynomial::c16(ring, caps),
        C::C17 => polynomial::c17(ring, caps),
        C::C18 => Ok(explore::c18(ring)),
    }
}

/// Claims × rings, in claim-major order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct SuiteReport {
    pub rings: Vec<String>,
    pub claims: Vec<ClaimId>,
    pub cells: Vec<ClaimResult>,
    pub summary: SuiteSummary,
    pub caps: Caps,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct SuiteSummary {
    pub pass: usize,
    pub fail: usize,
    pub hypothesis_not_met: usize,
    pub not_applicable: usize,
    pub skipped_by_cap: usize,
    pub reported: usize,
}

impl SuiteReport {
    pub fn cell(&self, claim: ClaimId, ring: &str) -> Option<&ClaimResult> {
        self.cells.iter().find(|c| c.claim == claim && c.ring == ring)
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }
}

pub fn run_suite(corpus: &[Arc<FiniteRing>], caps: &Caps) -> SuiteReport {
    run_claims(&ClaimId::ALL, corpus, caps)
}

pub fn run_claims(claims: &[ClaimId], corpus: &[Arc<FiniteRing>], caps: &Caps) -> SuiteReport {
    let mut cells = Vec::with_capacity(claims.len() * corpus.len());
    let mut summary = SuiteSummary::default();
    for &claim in claims {
        for ring in corpus {
            let cell = run_claim(claim, ring, caps);
            *match cell.status {
                ClaimStatus::Pass => &mut summary.pass,
                ClaimStatus::Fail => &mut summary.fail,
                ClaimStatus::HypothesisNotMet => &mut summary.hypothesis_not_met,
                ClaimStatus::NotApplicable => &mut summary.not_applicable,
                ClaimStatus::SkippedByCap => &mut summary.skipped_by_cap,
                ClaimStatus::Reported => &mut summary.reported,
            } += 1;
            cells.push(cell);
        }
    }
    SuiteReport {
        rings: corpus.iter().map(|r| r.name().to_string()).collect(),
        claims: claims.to_vec(),
        cells,
        summary,
        caps: *caps,
    }
}

/// Ring expressions of the default corpus.
pub const DEFAULT_CORPUS: [&str; 15] = [
    "Z2", "Z3", "Z4", "Z6", "Z8", "M2(Z2)", "T2(Z2)", "T3(Z2)", "S2(Z2)", "S2(Z4)", "S2(M2(Z2))", "S3(Z2)",
    "ex22(2)", "ex22(3)", "ex22(2) x Z4",
];

pub fn default_corpus(caps: &Caps) -> Result<Vec<Arc<FiniteRing>>> {
    let mut cache = std::collections::HashMap::new();
    DEFAULT_CORPUS
        .iter()
        .map(|e| crate::expr::parse_ring_expr(e)?.build_cached(caps.ring_size_cap, &mut cache))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{make_ex22, make_matrix, make_skew_triangular, make_zn};

    #[test]
    fn claim_ids_round_trip() {
        for c in ClaimId::ALL {
            assert_eq!(c.to_string().parse::<ClaimId>().unwrap(), c);
            assert!(!c.anchor().is_empty());
        }
        assert!("C19".parse::<ClaimId>().is_err());
    }

    #[test]
    fn s2_criterion_on_z4() {
        let res = run_claim(ClaimId::C2, &make_zn(4).unwrap(), &Caps::default());
        assert_eq!(res.status, ClaimStatus::Pass, "{}", res.detail);
    }

    #[test]
    fn s3_witness() {
        let s3 = make_skew_triangular(&make_zn(2).unwrap(), 3).unwrap();
        let res = run_claim(ClaimId::C3, &s3, &Caps::default());
        assert_eq!(res.status, ClaimStatus::Pass);
        assert!(res.detail.contains("(e12, e23)"), "{}", res.detail);
    }

    #[test]
    fn nil_ideal_of_example() {
        let r = make_ex22(2).unwrap();
        let res = run_claim(ClaimId::C13, &r, &Caps::default());
        assert_eq!(res.status, ClaimStatus::Pass);
        assert_eq!(r.nil_set().len(), 32);
    }

    #[test]
    fn matrix_ring_gates_hypotheses() {
        let m2 = make_matrix(&make_zn(2).unwrap(), 2).unwrap();
        let report = run_suite(&[m2], &Caps::default());
        for c in [ClaimId::C4, ClaimId::C5, ClaimId::C17] {
            assert_eq!(report.cell(c, "M2(Z2)").unwrap().status, ClaimStatus::HypothesisNotMet);
        }
        assert_eq!(report.cell(ClaimId::C1, "M2(Z2)").unwrap().status, ClaimStatus::NotApplicable);
        assert!(report.all_passed());
    }

    #[test]
    fn corrupted_example_fails_with_replayable_trace() {
        let r = make_ex22(2).unwrap();
        let alg = r.algebra().unwrap();
        let (x, y, n) = (alg.basis_element(1), alg.basis_element(3), r.size());
        let mut mul = r.mul_table();
        mul[x * n + y] = r.one();
        let mutant = FiniteRing::from_tables_unchecked("ex22-mutant", r.add_table(), mul, r.one()).unwrap();
        let caps = Caps::default();
        let res = run_claim(ClaimId::C13, &mutant, &caps);
        assert_eq!(res.status, ClaimStatus::Fail);
        assert!(replay_trace(&mutant, &res));
        let res = run_claim(ClaimId::C10, &mutant, &caps);
        assert_eq!(res.status, ClaimStatus::Fail);
        assert!(replay_trace(&mutant, &res));
    }

    #[test]
    fn commutative_rings_are_not_candidates() {
        let corpus: Vec<_> = [2, 4, 6, 8].into_iter().map(|n| make_zn(n).unwrap()).collect();
        let ex = explore_problem(&corpus, 3);
        assert!(ex.candidates.is_empty() && !ex.resolved);
        assert!(ex.rows.iter().all(|r| r.weakly_reversible && r.pi_duo && r.reversible));
        let ex = explore_problem(&[make_ex22(2).unwrap()], 3);
        assert_eq!(ex.candidates, vec!["ex22(2)".to_string()]);
    }
}
