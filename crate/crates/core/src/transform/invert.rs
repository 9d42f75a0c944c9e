use super::{principal_of, rebuild, require_cut_free, Options, Result, TransformError};
use crate::kernel::{Derivation, RuleId, Sequent, Side};
use crate::syntax::{Connective, Formula};

/// The sequents that inverting compound `target` on `side` of `s` yields:
///
/// | side, connective | result |
/// |---|---|
/// | a, ∧ | Γ,A,B |
/// | c, ∧ | Δ,A and Δ,B |
/// | a, ∨ | Γ,A and Γ,B |
/// | c, ∨ | Δ,A,B |
/// | a, → | Γ,B |
/// | c, → | Γ,A ; Δ,B |
/// | a, ⤙ | Γ,A ; Δ,B |
/// | c, ⤙ | Δ,A |
///
/// The left premise of `→Lᵃ` and of `⤙Lᶜ` is deliberately absent: it is not
/// invertible.
pub fn inverted_sequents(s: &Sequent, side: Side, target: &Formula) -> Result<Vec<Sequent>> {
    let Some((conn, a, b)) = target.as_binary() else {
        return Err(TransformError::UnsupportedTarget(target.clone()));
    };
    let base = s
        .without(side, target)
        .ok_or(TransformError::OccurrenceNotFound { side, formula: target.clone() })?;
    let (a, b) = (a.clone(), b.clone());
    use Side::{Assumption as A, Counterassumption as C};
    Ok(match (side, conn) {
        (A, Connective::And) => vec![base.with(A, a).with(A, b)],
        (C, Connective::And) => vec![base.with(C, a), base.with(C, b)],
        (A, Connective::Or) => vec![base.with(A, a), base.with(A, b)],
        (C, Connective::Or) => vec![base.with(C, a).with(C, b)],
        (A, Connective::Imp) => vec![base.with(A, b)],
        (C, Connective::Imp) => vec![base.with(A, a).with(C, b)],
        (A, Connective::Coimp) => vec![base.with(A, a).with(C, b)],
        (C, Connective::Coimp) => vec![base.with(C, a)],
    })
}

/// Which premises of the principal left rule are the inversion results.
fn principal_premises(rule: RuleId) -> &'static [usize] {
    use RuleId::*;
    match rule {
        AndLa | OrLc | ImpLc | CoimpLa => &[0],
        AndLc | OrLa => &[0, 1],
        ImpLa | CoimpLc => &[1],
        _ => unreachable!("not a left rule"),
    }
}

/// Replaces compound `target` on `side` by its components whatever the last
/// rule of `d` is,
/// returning one or two derivations (see [`inverted_sequents`]), each no
/// higher than `d`.
pub fn invert(d: &Derivation, side: Side, target: &Formula) -> Result<Vec<Derivation>> {
    require_cut_free(d)?;
    invert_unchecked(d, side, target, &Options::default())
}

pub(crate) fn invert_unchecked(d: &Derivation, side: Side, target: &Formula, opts: &Options) -> Result<Vec<Derivation>> {
    let outs = inverted_sequents(&d.conclusion, side, target)?;
    if d.rule.is_zero_premise() {
        return outs.into_iter().map(|s| rebuild(d, s, vec![], opts)).collect();
    }
    let conn = target.connective().expect("compound");
    if d.rule == RuleId::left_rule(conn, side) && principal_of(d).as_ref() == Some(target) {
        return Ok(principal_premises(d.rule).iter().map(|&i| d.premises[i].clone()).collect());
    }
    let per_premise = d
        .premises
        .iter()
        .map(|p| invert_unchecked(p, side, target, opts))
        .collect::<Result<Vec<_>>>()?;
    outs.into_iter()
        .enumerate()
        .map(|(j, s)| {
            let premises = per_premise.iter().map(|ps| ps[j].clone()).collect();
            rebuild(d, s, premises, opts)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{check_derivation, Context, Polarity};
    use crate::syntax::parse_formula;
    use crate::transform::derive_identity;

    #[test]
    fn principal_conjunction_returns_premise() {
        let c = parse_formula("p /\\ q").unwrap();
        let d = derive_identity(&Context::new(), &Context::new(), &c, Polarity::Plus);
        // ∧R⁺ at the root; invert through it
        let out = invert(&d, Side::Assumption, &c).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].conclusion.to_string(), "p, q ; |-+ p /\\ q");
        assert!(check_derivation(&out[0]).valid);
        assert!(out[0].height() <= d.height());
    }

    #[test]
    fn disjunction_in_counterassumptions() {
        let c = parse_formula("p \\/ q").unwrap();
        let d = derive_identity(&Context::new(), &Context::new(), &c, Polarity::Minus);
        let out = invert(&d, Side::Counterassumption, &c).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].conclusion.to_string(), "; p, q |-- p \\/ q");
        assert!(check_derivation(&out[0]).valid);
        assert!(out[0].height() <= d.height());
    }

    #[test]
    fn atoms_are_rejected() {
        let d = derive_identity(&Context::new(), &Context::new(), &Formula::atom("p"), Polarity::Plus);
        assert!(matches!(
            invert(&d, Side::Assumption, &Formula::atom("p")),
            Err(TransformError::UnsupportedTarget(_))
        ));
    }
}
