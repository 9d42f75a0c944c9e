use crate::kernel::{instance, Context, Derivation, Polarity, RuleId, Sequent};
use crate::syntax::{Connective, Formula};

/// A derivation shape, read from the root up. Left rules always decompose
/// the formula being identified; right rules decompose the succedent.
enum Step {
    Ax(RuleId),
    R(RuleId, Vec<Step>),
    L(RuleId, Vec<Step>),
    /// Recurse: the premise is itself an identity sequent.
    Id,
}

use Step::{Ax, Id, L, R};

/// Cut-free derivation of `(Γ, C; Δ) ⊢⁺ C` (Plus) or `(Γ; Δ, C) ⊢⁻ C` (Minus).
///
/// Constants, atoms and binary formulas over `⊥`/`⊤` get a fixed small
/// derivation of height at most 1; every other formula is expanded by its
/// main connective.
pub fn derive_identity(gamma: &Context, delta: &Context, c: &Formula, polarity: Polarity) -> Derivation {
    let s = match polarity {
        Polarity::Plus => Sequent::new(gamma.with(c.clone()), delta.clone(), polarity, c.clone()),
        Polarity::Minus => Sequent::new(gamma.clone(), delta.with(c.clone()), polarity, c.clone()),
    };
    build(&s, c, &shape(c, polarity))
}

fn build(s: &Sequent, c: &Formula, step: &Step) -> Derivation {
    let (rule, principal, subs) = match step {
        Ax(rule) => return Derivation::leaf(*rule, s.clone()),
        Id => {
            let (g, d) = match s.polarity {
                Polarity::Plus => (s.gamma.without(&s.succedent), Some(s.delta.clone())),
                Polarity::Minus => (Some(s.gamma.clone()), s.delta.without(&s.succedent)),
            };
            let (g, d) = (g.expect("identity premise"), d.expect("identity premise"));
            return derive_identity(&g, &d, &s.succedent, s.polarity);
        }
        R(rule, subs) => (*rule, &s.succedent, subs),
        L(rule, subs) => (*rule, c, subs),
    };
    let premises = instance(rule, s, principal).expect("identity shapes instantiate their rules");
    let premises = premises.iter().zip(subs).map(|(p, st)| build(p, c, st)).collect();
    Derivation::new(rule, s.clone(), premises)
}

fn is_constant(f: &Formula) -> bool {
    matches!(f, Formula::Bottom | Formula::Top)
}

fn shape(c: &Formula, pol: Polarity) -> Step {
    use Formula::{Bottom as B, Top as T};
    use Polarity::{Minus, Plus};
    use RuleId::*;

    let plus = pol == Plus;
    match c {
        Formula::Atom(_) => return Ax(if plus { RfPlus } else { RfMinus }),
        B => return Ax(if plus { BotLa } else { BotRMinus }),
        T => return Ax(if plus { TopRPlus } else { TopLc }),
        _ => {}
    }
    let (conn, a, b) = c.as_binary().expect("compound");
    if is_constant(a) && is_constant(b) {
        return match (conn, a, b, pol) {
            (Connective::And, B, B, Plus) => L(AndLa, vec![Ax(BotLa)]),
            (Connective::And, B, B, Minus) => R(AndRMinus1, vec![Ax(BotRMinus)]),
            (Connective::Or, B, B, Plus) => L(OrLa, vec![Ax(BotLa), Ax(BotLa)]),
            (Connective::Or, B, B, Minus) => R(OrRMinus, vec![Ax(BotRMinus), Ax(BotRMinus)]),
            (Connective::Imp, B, B, Plus) => R(ImpRPlus, vec![Ax(BotLa)]),
            (Connective::Imp, B, B, Minus) => L(ImpLc, vec![Ax(BotLa)]),
            (Connective::Coimp, B, B, Plus) => L(CoimpLa, vec![Ax(BotLa)]),
            (Connective::Coimp, B, B, Minus) => R(CoimpRMinus, vec![Ax(BotRMinus)]),

            (Connective::And, B, T, Plus) => L(AndLa, vec![Ax(BotLa)]),
            (Connective::And, B, T, Minus) => R(AndRMinus1, vec![Ax(BotRMinus)]),
            (Connective::Or, B, T, Plus) => R(OrRPlus2, vec![Ax(TopRPlus)]),
            (Connective::Or, B, T, Minus) => L(OrLc, vec![Ax(TopLc)]),
            (Connective::Imp, B, T, Plus) => R(ImpRPlus, vec![Ax(TopRPlus)]),
            (Connective::Imp, B, T, Minus) => L(ImpLc, vec![Ax(TopLc)]),
            (Connective::Coimp, B, T, Plus) => L(CoimpLa, vec![Ax(BotLa)]),
            (Connective::Coimp, B, T, Minus) => R(CoimpRMinus, vec![Ax(TopLc)]),

            (Connective::And, T, B, Plus) => L(AndLa, vec![Ax(BotLa)]),
            (Connective::And, T, B, Minus) => R(AndRMinus2, vec![Ax(BotRMinus)]),
            (Connective::Or, T, B, Plus) => R(OrRPlus1, vec![Ax(TopRPlus)]),
            (Connective::Or, T, B, Minus) => L(OrLc, vec![Ax(TopLc)]),
            (Connective::Imp, T, B, Plus) => L(ImpLa, vec![Ax(TopRPlus), Ax(BotLa)]),
            (Connective::Imp, T, B, Minus) => R(ImpRMinus, vec![Ax(TopRPlus), Ax(BotRMinus)]),
            (Connective::Coimp, T, B, Plus) => R(CoimpRPlus, vec![Ax(TopRPlus), Ax(BotRMinus)]),
            (Connective::Coimp, T, B, Minus) => L(CoimpLc, vec![Ax(BotRMinus), Ax(TopLc)]),

            (Connective::And, T, T, Plus) => R(AndRPlus, vec![Ax(TopRPlus), Ax(TopRPlus)]),
            (Connective::And, T, T, Minus) => L(AndLc, vec![Ax(TopLc), Ax(TopLc)]),
            (Connective::Or, T, T, Plus) => R(OrRPlus1, vec![Ax(TopRPlus)]),
            (Connective::Or, T, T, Minus) => L(OrLc, vec![Ax(TopLc)]),
            (Connective::Imp, T, T, Plus) => R(ImpRPlus, vec![Ax(TopRPlus)]),
            (Connective::Imp, T, T, Minus) => L(ImpLc, vec![Ax(TopLc)]),
            (Connective::Coimp, T, T, Plus) => L(CoimpLa, vec![Ax(TopLc)]),
            (Connective::Coimp, T, T, Minus) => R(CoimpRMinus, vec![Ax(TopLc)]),
            _ => unreachable!(),
        };
    }
    match (conn, pol) {
        (Connective::And, Plus) => R(AndRPlus, vec![L(AndLa, vec![Id]), L(AndLa, vec![Id])]),
        (Connective::And, Minus) => L(AndLc, vec![R(AndRMinus1, vec![Id]), R(AndRMinus2, vec![Id])]),
        (Connective::Or, Plus) => L(OrLa, vec![R(OrRPlus1, vec![Id]), R(OrRPlus2, vec![Id])]),
        (Connective::Or, Minus) => R(OrRMinus, vec![L(OrLc, vec![Id]), L(OrLc, vec![Id])]),
        (Connective::Imp, Plus) => R(ImpRPlus, vec![L(ImpLa, vec![Id, Id])]),
        (Connective::Imp, Minus) => L(ImpLc, vec![R(ImpRMinus, vec![Id, Id])]),
        (Connective::Coimp, Plus) => L(CoimpLa, vec![R(CoimpRPlus, vec![Id, Id])]),
        (Connective::Coimp, Minus) => R(CoimpRMinus, vec![L(CoimpLc, vec![Id, Id])]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::check_derivation;
    use crate::syntax::parse_formula;

    fn id(text: &str, pol: Polarity) -> Derivation {
        derive_identity(&Context::new(), &Context::new(), &parse_formula(text).unwrap(), pol)
    }

    #[test]
    fn atom_is_a_single_axiom() {
        let d = id("p", Polarity::Plus);
        assert_eq!(d.rule, RuleId::RfPlus);
        assert_eq!(d.height(), 0);
        assert_eq!(d.conclusion.to_string(), "p ; |-+ p");
    }

    #[test]
    fn constant_pairs_have_height_at_most_one() {
        for a in ["F", "T"] {
            for b in ["F", "T"] {
                for op in ["/\\", "\\/", "->", "-<"] {
                    for pol in [Polarity::Plus, Polarity::Minus] {
                        let d = id(&format!("{a} {op} {b}"), pol);
                        let r = check_derivation(&d);
                        assert!(r.valid, "{a} {op} {b} {pol:?}: {:?}", r.first_violation);
                        assert!(r.height <= 1);
                    }
                }
            }
        }
    }

    #[test]
    fn atom_instances_of_inductive_cases_have_height_two() {
        for op in ["/\\", "\\/", "->", "-<"] {
            for pol in [Polarity::Plus, Polarity::Minus] {
                let d = id(&format!("p {op} q"), pol);
                let r = check_derivation(&d);
                assert!(r.valid, "{op} {pol:?}: {:?}", r.first_violation);
                assert_eq!(r.height, 2, "{op} {pol:?}");
            }
        }
    }

    #[test]
    fn context_is_carried() {
        let g = Context::from([Formula::atom("r")]);
        let dl = Context::from([Formula::Top]);
        let c = parse_formula("(p -> q) /\\ (q -< p)").unwrap();
        let d = derive_identity(&g, &dl, &c, Polarity::Minus);
        assert!(check_derivation(&d).valid);
        assert_eq!(d.conclusion.to_string(), "r ; T, (p -> q) /\\ (q -< p) |-- (p -> q) /\\ (q -< p)");
    }
}
