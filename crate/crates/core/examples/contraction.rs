// Height-preserving contraction of a duplicated formula.

use anyhow::Result;
use bint::format::derivation_to_tree;
use bint::kernel::{check_derivation, Polarity, Side};
use bint::syntax::parse_formula;
use bint::transform::{contract, derive_identity, weaken};

pub fn run_example() -> Result<()> {
    let c = parse_formula("p -< q")?;
    let d = derive_identity(&Default::default(), &Default::default(), &c, Polarity::Minus);
    let doubled = weaken(&d, &c, Side::Counterassumption)?;
    println!("before: {}", doubled.conclusion);
    let once = contract(&doubled, &c, Side::Counterassumption)?;
    assert!(check_derivation(&once).valid && once.height() <= doubled.height());
    println!("{}", derivation_to_tree(&once));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
