// Formulas and sequents in the ASCII syntax: parse, print, weigh.

use anyhow::Result;
use bint::kernel::parse_sequent;
use bint::syntax::{format_formula_latex, parse_formula};

pub fn run_example() -> Result<()> {
    // `->` and `-<` associate to the right; `/\` binds tighter than `\/`.
    let f = parse_formula("p /\\ q \\/ r -> (F -< s)")?;
    println!("{f}  (weight {}, latex {})", f.weight(), format_formula_latex(&f));
    assert_eq!(parse_formula(&f.to_string())?, f);

    // the two arrows may not be mixed without parentheses
    let err = parse_formula("p -> q -< r").unwrap_err();
    println!("p -> q -< r: {err}");

    let s = parse_sequent("p, p, q -> r ; s |-- q -< r")?;
    println!("{s}: {} assumption(s), dual {}", s.gamma.len(), s.dual());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
