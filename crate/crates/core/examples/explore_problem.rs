//! Looks for weakly reversible π-duo rings that are not reversible.

use ringlab::report::{CapsReport, ExploreDocument};
use ringlab::theorems::{default_corpus, explore_problem, Caps};

fn main() -> ringlab::Result<()> {
    let caps = Caps::default();
    let corpus = default_corpus(&caps)?;
    let exploration = explore_problem(&corpus, caps.max_degree);
    print!("{}", ExploreDocument::new(exploration, CapsReport::from(&caps), 0).render_text());
    Ok(())
}
