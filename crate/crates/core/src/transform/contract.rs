use super::invert::invert_unchecked;
use super::{principal_of, rebuild, require_cut_free, Options, Result, TransformError};
use crate::kernel::{Context, Derivation, RuleId, Side};
use crate::syntax::Formula;

/// Removes one of at least two occurrences of `dup` on `side` without
/// increasing the height.
pub fn contract(d: &Derivation, dup: &Formula, side: Side) -> Result<Derivation> {
    require_cut_free(d)?;
    contract_unchecked(d, dup, side, &Options::default())
}

/// Contracts every formula of `gamma` and `delta` once per occurrence, e.g.
/// `(Γ,Γ;Δ,Δ) ⊢* C` becomes `(Γ;Δ) ⊢* C`.
pub fn contract_many(d: &Derivation, gamma: &Context, delta: &Context) -> Result<Derivation> {
    require_cut_free(d)?;
    contract_many_unchecked(d, gamma, delta, &Options::default())
}

pub(crate) fn contract_many_unchecked(d: &Derivation, gamma: &Context, delta: &Context, opts: &Options) -> Result<Derivation> {
    let mut out = d.clone();
    for (side, ctx) in [(Side::Assumption, gamma), (Side::Counterassumption, delta)] {
        for f in ctx.occurrences() {
            out = contract_unchecked(&out, f, side, opts)?;
        }
    }
    Ok(out)
}

pub(crate) fn contract_unchecked(d: &Derivation, dup: &Formula, side: Side, opts: &Options) -> Result<Derivation> {
    let found = d.conclusion.side(side).count(dup);
    if found < 2 {
        return Err(TransformError::TooFewOccurrences { side, formula: dup.clone(), found });
    }
    let s = d.conclusion.without(side, dup).expect("counted");
    if d.rule.is_zero_premise() {
        return rebuild(d, s, vec![], opts);
    }
    let principal_here = d.rule.is_left_rule()
        && d.rule.site() == crate::kernel::PrincipalSite::Context(side)
        && principal_of(d).as_ref() == Some(dup);
    if !principal_here {
        let premises = d
            .premises
            .iter()
            .map(|p| contract_unchecked(p, dup, side, opts))
            .collect::<Result<Vec<_>>>()?;
        return rebuild(d, s, premises, opts);
    }

    let (_, a, b) = dup.as_binary().expect("left rules decompose compounds");
    use Side::{Assumption as Sa, Counterassumption as Sc};
    let inv = |p: &Derivation| invert_unchecked(p, side, dup, opts);
    let c = |p: &Derivation, f: &Formula, sd: Side| contract_unchecked(p, f, sd, opts);
    let ps = &d.premises;
    let premises = match d.rule {
        RuleId::AndLa | RuleId::OrLc => {
            let both = inv(&ps[0])?.remove(0);
            vec![c(&c(&both, a, side)?, b, side)?]
        }
        RuleId::AndLc | RuleId::OrLa => {
            let left = inv(&ps[0])?.swap_remove(0);
            let right = inv(&ps[1])?.swap_remove(1);
            vec![c(&left, a, side)?, c(&right, b, side)?]
        }
        RuleId::ImpLc | RuleId::CoimpLa => {
            let both = inv(&ps[0])?.remove(0);
            vec![c(&c(&both, a, Sa)?, b, Sc)?]
        }
        RuleId::ImpLa => {
            let rest = inv(&ps[1])?.remove(0);
            vec![c(&ps[0], dup, side)?, c(&rest, b, Sa)?]
        }
        RuleId::CoimpLc => {
            let rest = inv(&ps[1])?.remove(0);
            vec![c(&ps[0], dup, side)?, c(&rest, a, Sc)?]
        }
        r => unreachable!("{r} has no context principal"),
    };
    rebuild(d, s, premises, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{check_derivation, parse_sequent, Polarity};
    use crate::syntax::parse_formula;
    use crate::transform::{derive_identity, weaken};

    #[test]
    fn axiom_case() {
        let d = Derivation::leaf(RuleId::RfPlus, parse_sequent("p, p ; |-+ p").unwrap());
        let out = contract(&d, &Formula::atom("p"), Side::Assumption).unwrap();
        assert_eq!(out.conclusion.to_string(), "p ; |-+ p");
        assert_eq!(out.rule, RuleId::RfPlus);
    }

    #[test]
    fn principal_cases_on_both_sides() {
        for text in ["p /\\ q", "p \\/ q", "p -> q", "p -< q"] {
            let f = parse_formula(text).unwrap();
            for (pol, side) in [(Polarity::Plus, Side::Assumption), (Polarity::Minus, Side::Counterassumption)] {
                let d = derive_identity(&Context::new(), &Context::new(), &f, pol);
                let w = weaken(&d, &f, side).unwrap();
                let out = contract(&w, &f, side).unwrap();
                let r = check_derivation(&out);
                assert!(r.valid, "{text} {side:?}: {:?}", r.first_violation);
                assert_eq!(out.conclusion, d.conclusion);
                assert!(out.height() <= w.height());
            }
        }
    }

    #[test]
    fn single_occurrence_is_rejected() {
        let d = Derivation::leaf(RuleId::RfPlus, parse_sequent("p ; |-+ p").unwrap());
        assert!(matches!(
            contract(&d, &Formula::atom("p"), Side::Assumption),
            Err(TransformError::TooFewOccurrences { found: 1, .. })
        ));
    }
}
