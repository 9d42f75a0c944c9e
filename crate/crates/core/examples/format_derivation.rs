// The three renderings of a derivation: the data file, an indented tree
// and LaTeX inference markup.

use anyhow::Result;
use bint::format::{derivation_from_data, derivation_to_data, derivation_to_latex, derivation_to_tree};
use bint::kernel::parse_sequent;
use bint::search::{prove, SearchConfig};

pub fn run_example() -> Result<()> {
    let s = parse_sequent("p \\/ q ; |-+ q \\/ p")?;
    let d = prove(&s, &SearchConfig::default()).proof().cloned().expect("commutativity of disjunction");
    let data = derivation_to_data(&d);
    assert_eq!(derivation_from_data(&data)?, d);
    print!("{data}{}", derivation_to_tree(&d));
    println!("{}", derivation_to_latex(&d));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
