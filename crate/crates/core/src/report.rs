//! Machine-readable reports and their plain-text renderings.
//!
//! Every document carries the tool version, the caps in force and the wall
//! time; suite and exploration documents also carry a timestamp. Those two
//! run fields are the only parts that differ between identical invocations,
//! see [`run_fields_removed`].

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use crate::kernel::{Elem, FiniteRing};
use crate::properties::{PropertyId, PropertyReport, Witness};
use crate::theorems::{Caps, ClaimId, ClaimResult, ClaimStatus, Exploration, SuiteReport, SuiteSummary};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct CapsReport {
    pub max_degree: usize,
    pub ring_size_cap: usize,
}

impl From<&Caps> for CapsReport {
    fn from(c: &Caps) -> Self {
        Self { max_degree: c.max_degree, ring_size_cap: c.ring_size_cap }
    }
}

/// Seconds since the Unix epoch.
pub fn timestamp() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs())
}

/// Drops the `elapsed-ms` and `timestamp` fields at any depth, leaving the
/// part of a document that must be identical across runs.
pub fn run_fields_removed(mut value: serde_json::Value) -> serde_json::Value {
    fn strip(v: &mut serde_json::Value) {
        match v {
            serde_json::Value::Object(map) => {
                map.remove("elapsed-ms");
                map.remove("timestamp");
                map.values_mut().for_each(strip);
            }
            serde_json::Value::Array(items) => items.iter_mut().for_each(strip),
            _ => {}
        }
    }
    strip(&mut value);
    value
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct CheckReport {
    pub tool_version: String,
    pub ring: String,
    pub property: PropertyId,
    pub verdict: bool,
    pub witness: Witness,
    /// Readable rendering of every handle in the witness.
    pub labels: BTreeMap<Elem, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_bound: Option<usize>,
    pub elapsed_ms: u64,
    pub caps: CapsReport,
}

impl CheckReport {
    pub fn new(report: PropertyReport, caps: CapsReport) -> Self {
        Self {
            tool_version: TOOL_VERSION.into(),
            ring: report.ring,
            property: report.property,
            verdict: report.verdict,
            witness: report.witness,
            labels: report.labels,
            degree_bound: report.degree_bound,
            elapsed_ms: report.elapsed_ms,
            caps,
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("{} {}: {}", self.ring, self.property, self.verdict);
        if let Some(d) = self.degree_bound {
            let _ = write!(out, " (degrees ≤ {d})");
        }
        out.push('\n');
        if let Witness::Exponents { exponents } = &self.witness {
            let max = exponents.iter().map(|&(_, m)| m).max().unwrap_or(0);
            let _ = writeln!(out, "every nonzero element has a reversible power; largest exponent needed: {max}");
        } else if self.witness != Witness::None {
            let json = serde_json::to_string(&self.witness).unwrap_or_default();
            let _ = writeln!(out, "witness: {json}");
            for (h, label) in &self.labels {
                let _ = writeln!(out, "  {h} = {label}");
            }
        }
        let _ = writeln!(out, "elapsed: {} ms", self.elapsed_ms);
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct ClaimEntry {
    pub id: ClaimId,
    pub anchor: String,
    pub summary: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct SuiteDocument {
    pub tool_version: String,
    pub rings: Vec<String>,
    pub claims: Vec<ClaimEntry>,
    /// One cell per (claim, ring), claim-major.
    pub matrix: Vec<ClaimResult>,
    pub summary: SuiteSummary,
    pub elapsed_ms: u64,
    pub timestamp: u64,
    pub caps: CapsReport,
}

impl SuiteDocument {
    pub fn new(report: SuiteReport, elapsed_ms: u64) -> Self {
        let claims = report
            .claims
            .iter()
            .map(|&id| ClaimEntry { id, anchor: id.anchor().into(), summary: id.summary().into() })
            .collect();
        Self {
            tool_version: TOOL_VERSION.into(),
            rings: report.rings,
            claims,
            matrix: report.cells,
            summary: report.summary,
            elapsed_ms,
            timestamp: timestamp(),
            caps: CapsReport::from(&report.caps),
        }
    }

    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }

    /// Rings as rows, claims as columns, then the details of every failure.
    pub fn render_text(&self) -> String {
        let code = |s: ClaimStatus| match s {
            ClaimStatus::Pass => "pass",
            ClaimStatus::Fail => "FAIL",
            ClaimStatus::HypothesisNotMet => "hyp",
            ClaimStatus::NotApplicable => "n/a",
            ClaimStatus::SkippedByCap => "cap",
            ClaimStatus::Reported => "rep",
        };
        let width = self.rings.iter().map(String::len).max().unwrap_or(0).max(4);
        let mut out = String::new();
        let _ = write!(out, "{:<width$}", "");
        for c in &self.claims {
            let _ = write!(out, " {:>4}", c.id.to_string());
        }
        out.push('\n');
        for (j, ring) in self.rings.iter().enumerate() {
            let _ = write!(out, "{ring:<width$}");
            for i in 0..self.claims.len() {
                let cell = &self.matrix[i * self.rings.len() + j];
                let _ = write!(out, " {:>4}", code(cell.status));
            }
            out.push('\n');
        }
        out.push_str("\nhyp = hypothesis not met, n/a = not applicable, cap = skipped by cap, rep = report only\n");
        for cell in self.matrix.iter().filter(|c| c.status == ClaimStatus::Fail) {
            let _ = writeln!(out, "{} on {}: {}", cell.claim, cell.ring, cell.detail);
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "\n{} pass, {} fail, {} hypothesis not met, {} not applicable, {} skipped by cap, {} reported ({} ms)",
            s.pass, s.fail, s.hypothesis_not_met, s.not_applicable, s.skipped_by_cap, s.reported, self.elapsed_ms
        );
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct ExploreDocument {
    pub tool_version: String,
    #[serde(flatten)]
    pub exploration: Exploration,
    pub elapsed_ms: u64,
    pub timestamp: u64,
    pub caps: CapsReport,
}

impl ExploreDocument {
    pub fn new(exploration: Exploration, caps: CapsReport, elapsed_ms: u64) -> Self {
        Self { tool_version: TOOL_VERSION.into(), exploration, elapsed_ms, timestamp: timestamp(), caps }
    }

    pub fn render_text(&self) -> String {
        let rows = &self.exploration.rows;
        let width = rows.iter().map(|r| r.ring.len()).max().unwrap_or(0).max(4);
        let mut out = format!("{:<width$}  {:>17}  {:>6}  {:>10}\n", "ring", "weakly-reversible", "pi-duo", "reversible");
        for r in rows {
            let mark = if r.candidate { "  <- candidate" } else { "" };
            let _ = writeln!(
                out,
                "{:<width$}  {:>17}  {:>6}  {:>10}{mark}",
                r.ring, r.weakly_reversible, r.pi_duo, r.reversible
            );
        }
        let _ = writeln!(
            out,
            "\n{} counterexample candidate(s); a finite sweep does not settle the question.",
            self.exploration.candidates.len()
        );
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct TableDocument {
    pub tool_version: String,
    pub ring: String,
    pub size: usize,
    pub one: Elem,
    pub labels: Vec<String>,
    /// Row-major: `mul[a][b] = a·b`.
    pub mul: Vec<Vec<Elem>>,
    pub add: Vec<Vec<Elem>>,
    pub elapsed_ms: u64,
    pub caps: CapsReport,
}

impl TableDocument {
    pub fn new(ring: &FiniteRing, caps: CapsReport, elapsed_ms: u64) -> Self {
        let n = ring.size();
        let rows = |t: Vec<Elem>| t.chunks(n).map(<[Elem]>::to_vec).collect();
        Self {
            tool_version: TOOL_VERSION.into(),
            ring: ring.name().into(),
            size: n,
            one: ring.one(),
            labels: ring.elements().map(|h| ring.label(h)).collect(),
            mul: rows(ring.mul_table()),
            add: rows(ring.add_table()),
            elapsed_ms,
            caps,
        }
    }

    /// Element legend followed by the multiplication table in handles.
    pub fn render_text(&self) -> String {
        let mut out = format!("{}: {} elements, one = {}\n", self.ring, self.size, self.one);
        for (h, l) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  {h:>4} = {l}");
        }
        let w = self.size.saturating_sub(1).to_string().len();
        let _ = write!(out, "\n{:>w$} |", "·");
        for b in 0..self.size {
            let _ = write!(out, " {b:>w$}");
        }
        out.push('\n');
        for (a, row) in self.mul.iter().enumerate() {
            let _ = write!(out, "{a:>w$} |");
            for v in row {
                let _ = write!(out, " {v:>w$}");
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::make_zn;
    use crate::properties::{check_property, SearchLimits};
    use crate::theorems::run_suite;

    #[test]
    fn check_report_round_trips() {
        let r = make_zn(8).unwrap();
        let rep = check_property(&r, PropertyId::Reduced, SearchLimits::default()).unwrap();
        let doc = CheckReport::new(rep, CapsReport::from(&Caps::default()));
        let json = serde_json::to_string(&doc).unwrap();
        assert_eq!(serde_json::from_str::<CheckReport>(&json).unwrap(), doc);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        for key in ["tool-version", "ring", "property", "verdict", "witness", "elapsed-ms", "caps"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["caps"]["max-degree"], 3);
    }

    #[test]
    fn suite_document_is_deterministic_apart_from_run_fields() {
        let corpus = vec![make_zn(4).unwrap(), make_zn(6).unwrap()];
        let caps = Caps::default();
        let a = SuiteDocument::new(run_suite(&corpus, &caps), 1);
        let mut b = SuiteDocument::new(run_suite(&corpus, &caps), 2);
        b.timestamp += 1;
        let (ja, jb) = (serde_json::to_value(&a).unwrap(), serde_json::to_value(&b).unwrap());
        assert_ne!(ja, jb);
        assert_eq!(run_fields_removed(ja), run_fields_removed(jb));
        let text = serde_json::to_string(&a).unwrap();
        assert_eq!(serde_json::from_str::<SuiteDocument>(&text).unwrap(), a);
        assert!(a.render_text().contains("Z6"));
    }
}
