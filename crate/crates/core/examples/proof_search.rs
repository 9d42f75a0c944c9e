// Backward proof search with a branch-local loop check.

use anyhow::Result;
use bint::format::derivation_to_tree;
use bint::kernel::parse_sequent;
use bint::search::{prove, SearchConfig, SearchOutcome};

pub fn run_example() -> Result<()> {
    let cfg = SearchConfig::default();
    for text in [
        "; |-+ (p -> q -> r) -> (p -> q) -> p -> r",
        "; |-+ p \\/ (p -> F)",
        "; |-- p -< p",
        "p -< q ; |-+ p",
    ] {
        let s = parse_sequent(text)?;
        match prove(&s, &cfg) {
            SearchOutcome::Proved(d) => print!("proved {s}\n{}", derivation_to_tree(&d)),
            SearchOutcome::Refuted => println!("refuted {s}"),
            SearchOutcome::BoundExhausted => println!("no answer within depth {} for {s}", cfg.max_depth),
        }
    }

    // exhaustive mode deepens iteratively, so the proof found is a shortest one
    let s = parse_sequent("p /\\ q ; |-+ q /\\ p")?;
    let shortest = prove(&s, &SearchConfig { exhaustive: true, ..cfg }).proof().map(|d| d.height());
    println!("shortest proof of {s} has height {shortest:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
