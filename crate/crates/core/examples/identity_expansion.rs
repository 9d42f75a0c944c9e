// Identity sequents for compound formulas, derived from atomic axioms.

use anyhow::Result;
use bint::format::derivation_to_tree;
use bint::kernel::{check_derivation, Context, Polarity};
use bint::syntax::parse_formula;
use bint::transform::derive_identity;

pub fn run_example() -> Result<()> {
    let gamma: Context = [parse_formula("r")?].into_iter().collect();
    for (text, pol) in [("p -> q", Polarity::Plus), ("p -< q", Polarity::Minus), ("T -> F", Polarity::Plus)] {
        let c = parse_formula(text)?;
        let d = derive_identity(&gamma, &Context::new(), &c, pol);
        assert!(check_derivation(&d).valid);
        println!("{}", derivation_to_tree(&d));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
