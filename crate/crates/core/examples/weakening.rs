// Height-preserving weakening, and removal of a superfluous T or F.

use anyhow::Result;
use bint::format::derivation_to_tree;
use bint::kernel::{check_derivation, Polarity, Side};
use bint::syntax::{parse_formula, Formula};
use bint::transform::{derive_identity, unweaken_special, weaken, UnweakenTarget};

pub fn run_example() -> Result<()> {
    let d = derive_identity(&Default::default(), &Default::default(), &parse_formula("p /\\ q")?, Polarity::Plus);
    let w = weaken(&d, &parse_formula("r -> s")?, Side::Counterassumption)?;
    assert!(check_derivation(&w).valid && w.height() == d.height());
    println!("{}", derivation_to_tree(&w));

    let with_top = weaken(&d, &Formula::Top, Side::Assumption)?;
    let back = unweaken_special(&with_top, UnweakenTarget::TopInGamma)?;
    assert_eq!(back, d);
    println!("T added and removed again: {}", back.conclusion);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
