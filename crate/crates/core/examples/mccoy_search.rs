//! Bounded search for McCoy violations across a few rings.

use std::time::Instant;

use ringlab::expr::build_ring;
use ringlab::properties::{is_local, mccoy_falsify, replay_violation};
use ringlab::Side;

fn main() -> ringlab::Result<()> {
    for text in ["Z8", "M2(Z2)", "T2(Z2)", "S2(Z4)", "ex22(2)", "ex22(2) x Z4", "ex22(3)"] {
        let r = build_ring(text, 4096)?;
        for side in [Side::Right, Side::Left] {
            let start = Instant::now();
            let found = mccoy_falsify(&r, side, 3, 1 << 26)?;
            let verdict = match &found {
                Some(v) => format!("violation f = {:?}, g = {:?} (replays: {})", v.f, v.g, replay_violation(&r, v)),
                None => "none up to degree 3".into(),
            };
            println!("{text:>13} {side:>5} local={:5} {verdict} [{} ms]", is_local(&r), start.elapsed().as_millis());
        }
    }
    Ok(())
}
