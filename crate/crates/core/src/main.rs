use std::collections::HashMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;

use ringlab::expr::{parse_corpus, parse_ring_expr};
use ringlab::properties::{check_property, PropertyId, SearchLimits};
use ringlab::report::{CapsReport, CheckReport, ExploreDocument, SuiteDocument, TableDocument};
use ringlab::theorems::{default_corpus, explore_problem, run_suite, Caps};
use ringlab::FiniteRing;

/// Exhaustive checks of ring-theoretic properties on small finite rings.
///
/// Exit codes: 0 true/pass, 1 false/counterexample, 2 usage or internal error.
#[derive(Parser)]
#[command(name = "ringlab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Degree bound for polynomial searches.
    #[arg(long, global = true, default_value_t = 3)]
    max_degree: usize,
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Reserved; every current search is deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Decide one property of one ring.
    Check {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        property: PropertyId,
    },
    /// Run every claim over a corpus (default corpus when none is given).
    Suite {
        /// One ring expression per line, `#` starts a comment.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// Tabulate (weakly reversible, π-duo, reversible) over a corpus.
    Explore {
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// Dump a ring's element labels and multiplication table.
    Table {
        #[arg(long)]
        ring: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn emit<T: Serialize>(json: bool, doc: &T, text: impl FnOnce(&T) -> String) -> Result<(), String> {
    let body = if json {
        serde_json::to_string_pretty(doc).map_err(|e| e.to_string())? + "\n"
    } else {
        text(doc)
    };
    match std::io::stdout().lock().write_all(body.as_bytes()) {
        // A closed pipe (`| head`) is the reader's choice, not a failure.
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.to_string()),
        _ => Ok(()),
    }
}

fn load_corpus(path: Option<&PathBuf>, caps: &Caps) -> Result<Vec<Arc<FiniteRing>>, String> {
    let Some(path) = path else {
        return default_corpus(caps).map_err(|e| e.to_string());
    };
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let plans = parse_corpus(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    if plans.is_empty() {
        return Err(format!("{}: corpus is empty", path.display()));
    }
    let mut cache = HashMap::new();
    plans
        .iter()
        .map(|p| p.build_cached(caps.ring_size_cap, &mut cache).map_err(|e| format!("{p}: {e}")))
        .collect()
}

/// `Ok(true)` maps to exit 0, `Ok(false)` to exit 1.
fn run(cli: &Cli) -> Result<bool, String> {
    let caps = Caps { max_degree: cli.max_degree, ..Caps::default() };
    let caps_report = CapsReport::from(&caps);
    let start = Instant::now();
    match &cli.command {
        Command::Check { ring, property } => {
            let plan = parse_ring_expr(ring).map_err(|e| format!("`{ring}`: {e}"))?;
            let r = plan.build(caps.ring_size_cap).map_err(|e| e.to_string())?;
            let limits = SearchLimits { max_degree: cli.max_degree, ..SearchLimits::default() };
            let report = check_property(&r, *property, limits).map_err(|e| e.to_string())?;
            let doc = CheckReport::new(report, caps_report);
            emit(cli.json, &doc, CheckReport::render_text)?;
            Ok(doc.verdict)
        }
        Command::Suite { corpus } => {
            let rings = load_corpus(corpus.as_ref(), &caps)?;
            let report = run_suite(&rings, &caps);
            let doc = SuiteDocument::new(report, start.elapsed().as_millis() as u64);
            emit(cli.json, &doc, SuiteDocument::render_text)?;
            Ok(!doc.has_failures())
        }
        Command::Explore { corpus } => {
            let rings = load_corpus(corpus.as_ref(), &caps)?;
            let exploration = explore_problem(&rings, cli.max_degree);
            let doc = ExploreDocument::new(exploration, caps_report, start.elapsed().as_millis() as u64);
            emit(cli.json, &doc, ExploreDocument::render_text)?;
            Ok(true)
        }
        Command::Table { ring } => {
            let plan = parse_ring_expr(ring).map_err(|e| format!("`{ring}`: {e}"))?;
            let r = plan.build(caps.ring_size_cap).map_err(|e| e.to_string())?;
            let doc = TableDocument::new(&r, caps_report, start.elapsed().as_millis() as u64);
            emit(cli.json, &doc, TableDocument::render_text)?;
            Ok(true)
        }
    }
}
