// Inverting left rules: from a derivation of the conclusion, derivations
// of the premises with no greater height.

use anyhow::Result;
use bint::kernel::{check_derivation, parse_sequent, Polarity, Side};
use bint::search::{prove, SearchConfig};
use bint::syntax::parse_formula;
use bint::transform::{derive_identity, invert, inverted_sequents};

pub fn run_example() -> Result<()> {
    let c = parse_formula("p \\/ q")?;
    let d = derive_identity(&Default::default(), &Default::default(), &c, Polarity::Minus);
    for out in invert(&d, Side::Counterassumption, &c)? {
        assert!(check_derivation(&out).valid && out.height() <= d.height());
        println!("{}  (height {})", out.conclusion, out.height());
    }

    // →Lᵃ is only invertible in its second premise: the first can fail
    let s = parse_sequent("F -> F ; |-+ F -> F")?;
    let premises = inverted_sequents(&s, Side::Assumption, &parse_formula("F -> F")?)?;
    let cfg = SearchConfig::default();
    println!("{s}: {}", if prove(&s, &cfg).is_proved() { "proved" } else { "refuted" });
    let first = parse_sequent("F -> F ; |-+ F")?;
    println!("{first}: {}", if prove(&first, &cfg).is_proved() { "proved" } else { "refuted" });
    println!("inverted sequents: {}", premises.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(", "));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
