// Eliminating a cut and reading the rewrite log.

use anyhow::Result;
use bint::format::derivation_to_tree;
use bint::kernel::{check_derivation, RuleId};
use bint::search::Generator;
use bint::transform::{eliminate_cut, eliminate_cut_with, Options};

pub fn run_example() -> Result<()> {
    // random premises that agree on the cut formula
    let mut g = Generator::new(7);
    let (left, right, d) = g.cut_pair(RuleId::CutA, 8);
    let e = eliminate_cut_with(&left, &right, &d, RuleId::CutA, &Options::default())?;
    print!("{}", e.trace());
    let report = check_derivation(&e.derivation);
    assert!(report.valid && report.cut_count == 0);
    println!("{}", derivation_to_tree(&e.derivation));

    // without the log
    let (left, right, d) = g.cut_pair(RuleId::CutC, 8);
    let out = eliminate_cut(&left, &right, &d, RuleId::CutC)?;
    println!("CutC on {d}: cut-free derivation of {} with height {}", out.conclusion, out.height());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
