// Swapping verification and falsification: the dual of a derivation is a
// derivation of the dual sequent.

use anyhow::Result;
use bint::format::derivation_to_tree;
use bint::kernel::{check_derivation, parse_sequent};
use bint::search::{prove, random_derivation, SearchConfig};

pub fn run_example() -> Result<()> {
    let d = random_derivation(3, 6);
    let dual = d.dual();
    assert!(check_derivation(&dual).valid && dual.height() == d.height());
    print!("{}\n{}", derivation_to_tree(&d), derivation_to_tree(&dual));

    let cfg = SearchConfig::default();
    let s = parse_sequent("p -> q, p ; |-+ q")?;
    assert_eq!(prove(&s, &cfg).is_proved(), prove(&s.dual(), &cfg).is_proved());
    println!("{s}  is derivable, and so is  {}", s.dual());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
