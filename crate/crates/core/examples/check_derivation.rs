// Building a derivation by hand and running the checker on it.

use anyhow::Result;
use bint::kernel::{check_derivation, parse_sequent, Derivation, RuleId};

pub fn run_example() -> Result<()> {
    // (p ; ∅) ⊢⁺ p ∨ q by ∨R⁺₁ over the axiom Rf⁺
    let axiom = Derivation::leaf(RuleId::RfPlus, parse_sequent("p ; |-+ p")?);
    let d = Derivation::new(RuleId::OrRPlus1, parse_sequent("p ; |-+ p \\/ q")?, vec![axiom.clone()]);
    let report = check_derivation(&d);
    println!("valid={} height={} cuts={}", report.valid, report.height, report.cut_count);
    assert!(report.valid && report.height == 1);

    // ∨R⁺₂ would need a derivation of q
    let wrong = Derivation::new(RuleId::OrRPlus2, parse_sequent("p ; |-+ p \\/ q")?, vec![axiom]);
    let report = check_derivation(&wrong);
    let violation = report.first_violation.expect("the wrong disjunct is rejected");
    println!("rejected {violation}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
