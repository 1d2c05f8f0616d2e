//! Sweeps a corpus for weakly reversible π-duo rings that are not reversible.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::Verdict;
use crate::kernel::FiniteRing;
use crate::properties::{check_property, PropertyId, SearchLimits};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct ExplorationRow {
    pub ring: String,
    pub weakly_reversible: bool,
    pub pi_duo: bool,
    pub reversible: bool,
    /// Weakly reversible and π-duo, yet not reversible.
    pub candidate: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct Exploration {
    pub rows: Vec<ExplorationRow>,
    pub candidates: Vec<String>,
    /// Always false: a finite sweep cannot settle the question either way.
    pub resolved: bool,
}

pub fn row(ring: &Arc<FiniteRing>) -> ExplorationRow {
    let limits = SearchLimits::default();
    let verdict = |p| check_property(ring, p, limits).map(|r| r.verdict).expect("exact property checks do not fail");
    let weakly_reversible = verdict(PropertyId::WeaklyReversible);
    let pi_duo = verdict(PropertyId::PiDuo);
    let reversible = verdict(PropertyId::Reversible);
    ExplorationRow {
        ring: ring.name().to_string(),
        weakly_reversible,
        pi_duo,
        reversible,
        candidate: weakly_reversible && pi_duo && !reversible,
    }
}

/// The polynomial degree bound is accepted for interface symmetry; the three
/// properties involved are decided exactly.
pub fn explore_problem(corpus: &[Arc<FiniteRing>], _max_degree: usize) -> Exploration {
    let rows: Vec<ExplorationRow> = corpus.iter().map(row).collect();
    let candidates = rows.iter().filter(|r| r.candidate).map(|r| r.ring.clone()).collect();
    Exploration { rows, candidates, resolved: false }
}

pub(super) fn c18(ring: &Arc<FiniteRing>) -> Verdict {
    let r = row(ring);
    let mut detail = format!(
        "weakly reversible: {}, π-duo: {}, reversible: {}",
        r.weakly_reversible, r.pi_duo, r.reversible
    );
    if r.candidate {
        detail.push_str(" — counterexample candidate");
    }
    Verdict::Reported(detail)
}
