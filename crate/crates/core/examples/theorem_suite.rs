//! Runs every claim over a small corpus and prints the matrix.

use std::time::Instant;

use ringlab::expr::build_ring;
use ringlab::report::SuiteDocument;
use ringlab::theorems::{replay_trace, run_suite, Caps, ClaimStatus};

fn main() -> ringlab::Result<()> {
    let caps = Caps::default();
    let corpus = ["Z4", "Z6", "M2(Z2)", "T2(Z2)", "S2(Z2)", "S3(Z2)", "ex22(2)"]
        .iter()
        .map(|e| build_ring(e, caps.ring_size_cap))
        .collect::<ringlab::Result<Vec<_>>>()?;
    let start = Instant::now();
    let report = run_suite(&corpus, &caps);
    let failures: Vec<_> = report.cells.iter().filter(|c| c.status == ClaimStatus::Fail).collect();
    for cell in &failures {
        let ring = corpus.iter().find(|r| r.name() == cell.ring).unwrap();
        println!("{} on {} replays: {}", cell.claim, cell.ring, replay_trace(ring, cell));
    }
    print!("{}", SuiteDocument::new(report, start.elapsed().as_millis() as u64).render_text());
    Ok(())
}
