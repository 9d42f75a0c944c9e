//! The rule table. A single function, [`instance`], reads every rule figure
//! backwards: given a rule, a conclusion and a principal formula it returns
//! the premises the figure demands. Checking, backward expansion and
//! principal inference are all built on it.

use thiserror::Error;

use super::{Annotation, PrincipalSite, Polarity, RuleId, Sequent, Side};
use crate::syntax::{Connective, Formula};

/// The first schema constraint an inference fails.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("{rule} takes {expected} premise(s), found {found}  [schema: {}]", rule.schema())]
    Arity { rule: RuleId, expected: usize, found: usize },
    #[error("{rule} only concludes {expected} sequents, found {found}  [schema: {}]", rule.schema())]
    Polarity { rule: RuleId, expected: Polarity, found: Polarity },
    #[error("{rule} needs an atomic succedent, found {found}  [schema: {}]", rule.schema())]
    NotAtomic { rule: RuleId, found: Formula },
    #[error("{rule} does not introduce the succedent {found}  [schema: {}]", rule.schema())]
    WrongSuccedent { rule: RuleId, found: Formula },
    #[error("{rule}: principal formula {formula} does not occur in {side}  [schema: {}]", rule.schema())]
    MissingPrincipal { rule: RuleId, side: Side, formula: Formula },
    #[error("{rule}: no candidate principal formula in {side}  [schema: {}]", rule.schema())]
    NoCandidate { rule: RuleId, side: Side },
    #[error("{rule} cannot have {formula} as principal formula  [schema: {}]", rule.schema())]
    WrongPrincipal { rule: RuleId, formula: Formula },
    #[error("{rule}: premise {index} should be `{expected}`, found `{found}`  [schema: {}]", rule.schema())]
    PremiseMismatch { rule: RuleId, index: usize, expected: Box<Sequent>, found: Box<Sequent> },
    #[error("{rule} node lacks its cut formula or context split  [schema: {}]", rule.schema())]
    MissingCutData { rule: RuleId },
    #[error("{rule} node carries cut data although it is not a cut")]
    StrayCutData { rule: RuleId },
    #[error("{rule}: context split does not add up to the conclusion contexts  [schema: {}]", rule.schema())]
    SplitMismatch { rule: RuleId },
}

fn need_polarity(rule: RuleId, s: &Sequent, expected: Polarity) -> Result<(), Violation> {
    if s.polarity == expected {
        Ok(())
    } else {
        Err(Violation::Polarity { rule, expected, found: s.polarity })
    }
}

fn need_member(rule: RuleId, s: &Sequent, side: Side, f: &Formula) -> Result<(), Violation> {
    if s.side(side).contains(f) {
        Ok(())
    } else {
        Err(Violation::MissingPrincipal { rule, side, formula: f.clone() })
    }
}

fn split(rule: RuleId, f: &Formula) -> Result<(&Formula, &Formula), Violation> {
    match f.as_binary() {
        Some((c, a, b)) if Some(c) == rule.connective() => Ok((a, b)),
        _ => Err(Violation::WrongPrincipal { rule, formula: f.clone() }),
    }
}

/// Premises of `rule` with conclusion `s` and principal formula `principal`,
/// in figure order. Cut rules are not handled here (see [`cut_instance`]).
pub fn instance(rule: RuleId, s: &Sequent, principal: &Formula) -> Result<Vec<Sequent>, Violation> {
    use Polarity::{Minus, Plus};
    use RuleId::*;
    use Side::{Assumption as A, Counterassumption as C};

    match rule.site() {
        PrincipalSite::None => unreachable!("cut rules have no principal formula"),
        PrincipalSite::Reflexivity(side, pol) => {
            need_polarity(rule, s, pol)?;
            if !s.succedent.is_atom() {
                return Err(Violation::NotAtomic { rule, found: s.succedent.clone() });
            }
            if principal != &s.succedent {
                return Err(Violation::WrongPrincipal { rule, formula: principal.clone() });
            }
            need_member(rule, s, side, principal)?;
            Ok(vec![])
        }
        PrincipalSite::Succedent(pol) => {
            need_polarity(rule, s, pol)?;
            if principal != &s.succedent {
                return Err(Violation::WrongPrincipal { rule, formula: principal.clone() });
            }
            let constant = match rule {
                BotRMinus => Some(Formula::Bottom),
                TopRPlus => Some(Formula::Top),
                _ => None,
            };
            if let Some(k) = constant {
                return if s.succedent == k {
                    Ok(vec![])
                } else {
                    Err(Violation::WrongSuccedent { rule, found: s.succedent.clone() })
                };
            }
            let (a, b) = split(rule, &s.succedent)
                .map_err(|_| Violation::WrongSuccedent { rule, found: s.succedent.clone() })?;
            let goal = |p: Polarity, f: &Formula| s.with_goal(p, f.clone());
            Ok(match rule {
                AndRPlus => vec![goal(Plus, a), goal(Plus, b)],
                AndRMinus1 => vec![goal(Minus, a)],
                AndRMinus2 => vec![goal(Minus, b)],
                OrRPlus1 => vec![goal(Plus, a)],
                OrRPlus2 => vec![goal(Plus, b)],
                OrRMinus => vec![goal(Minus, a), goal(Minus, b)],
                ImpRPlus => vec![s.with(A, a.clone()).with_goal(Plus, b.clone())],
                ImpRMinus => vec![goal(Plus, a), goal(Minus, b)],
                CoimpRPlus => vec![goal(Plus, a), goal(Minus, b)],
                CoimpRMinus => vec![s.with(C, b.clone()).with_goal(Minus, a.clone())],
                _ => unreachable!(),
            })
        }
        PrincipalSite::Context(side) => {
            match rule {
                BotLa | TopLc => {
                    let k = if rule == BotLa { Formula::Bottom } else { Formula::Top };
                    if principal != &k {
                        return Err(Violation::WrongPrincipal { rule, formula: principal.clone() });
                    }
                    need_member(rule, s, side, principal)?;
                    return Ok(vec![]);
                }
                _ => {}
            }
            let (a, b) = split(rule, principal)?;
            need_member(rule, s, side, principal)?;
            let base = s.without(side, principal).expect("membership checked");
            Ok(match rule {
                AndLa => vec![base.with(A, a.clone()).with(A, b.clone())],
                AndLc => vec![base.with(C, a.clone()), base.with(C, b.clone())],
                OrLa => vec![base.with(A, a.clone()), base.with(A, b.clone())],
                OrLc => vec![base.with(C, a.clone()).with(C, b.clone())],
                ImpLa => vec![s.with_goal(Plus, a.clone()), base.with(A, b.clone())],
                ImpLc => vec![base.with(A, a.clone()).with(C, b.clone())],
                CoimpLa => vec![base.with(A, a.clone()).with(C, b.clone())],
                CoimpLc => vec![s.with_goal(Minus, b.clone()), base.with(C, a.clone())],
                _ => unreachable!(),
            })
        }
    }
}

/// Premises of a cut with the given cut formula and split.
pub fn cut_instance(
    rule: RuleId,
    s: &Sequent,
    annotation: &Annotation,
) -> Result<Vec<Sequent>, Violation> {
    let (Some(d), Some(sp)) = (&annotation.cut_formula, &annotation.split) else {
        return Err(Violation::MissingCutData { rule });
    };
    if sp.gamma() != s.gamma || sp.delta() != s.delta {
        return Err(Violation::SplitMismatch { rule });
    }
    let (pol, right_gamma, right_delta) = match rule {
        RuleId::CutA => (Polarity::Plus, sp.gamma_right.with(d.clone()), sp.delta_right.clone()),
        RuleId::CutC => (Polarity::Minus, sp.gamma_right.clone(), sp.delta_right.with(d.clone())),
        _ => unreachable!("not a cut rule"),
    };
    Ok(vec![
        Sequent::new(sp.gamma_left.clone(), sp.delta_left.clone(), pol, d.clone()),
        Sequent::new(right_gamma, right_delta, s.polarity, s.succedent.clone()),
    ])
}

/// Formulas that could be principal for `rule` in `s`, canonical order.
pub fn candidates(rule: RuleId, s: &Sequent) -> Vec<Formula> {
    match rule.site() {
        PrincipalSite::None => vec![],
        PrincipalSite::Succedent(_) | PrincipalSite::Reflexivity(..) => vec![s.succedent.clone()],
        PrincipalSite::Context(side) => {
            let ctx = s.side(side);
            match rule {
                RuleId::BotLa => ctx.contains(&Formula::Bottom).then_some(Formula::Bottom).into_iter().collect(),
                RuleId::TopLc => ctx.contains(&Formula::Top).then_some(Formula::Top).into_iter().collect(),
                _ => ctx
                    .formulas()
                    .filter(|f| f.connective() == rule.connective())
                    .cloned()
                    .collect(),
            }
        }
    }
}

fn compare(rule: RuleId, expected: &[Sequent], found: &[Sequent]) -> Result<(), Violation> {
    for (index, (e, f)) in expected.iter().zip(found).enumerate() {
        if e != f {
            return Err(Violation::PremiseMismatch {
                rule,
                index,
                expected: Box::new(e.clone()),
                found: Box::new(f.clone()),
            });
        }
    }
    Ok(())
}

/// Checks one inference. On success returns the principal formula that makes
/// the instance match (`None` for cuts).
pub fn check_rule_instance(
    conclusion: &Sequent,
    rule: RuleId,
    premises: &[Sequent],
    annotation: &Annotation,
) -> Result<Option<Formula>, Violation> {
    if premises.len() != rule.arity() {
        return Err(Violation::Arity { rule, expected: rule.arity(), found: premises.len() });
    }
    if rule.is_cut() {
        let expected = cut_instance(rule, conclusion, annotation)?;
        compare(rule, &expected, premises)?;
        return Ok(None);
    }
    if annotation.cut_formula.is_some() || annotation.split.is_some() {
        return Err(Violation::StrayCutData { rule });
    }
    if let Some(p) = &annotation.principal {
        let expected = instance(rule, conclusion, p)?;
        compare(rule, &expected, premises)?;
        return Ok(Some(p.clone()));
    }
    let mut first_err = None;
    for p in candidates(rule, conclusion) {
        match instance(rule, conclusion, &p).and_then(|e| compare(rule, &e, premises)) {
            Ok(()) => return Ok(Some(p)),
            Err(e) => {
                first_err.get_or_insert(e);
            }
        }
    }
    Err(first_err.unwrap_or_else(|| match rule.site() {
        PrincipalSite::Context(side) => Violation::NoCandidate { rule, side },
        _ => unreachable!("succedent rules always have a candidate"),
    }))
}

/// One backward reading of a rule at a sequent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub rule: RuleId,
    pub annotation: Annotation,
    pub premises: Vec<Sequent>,
}

impl Expansion {
    pub fn principal(&self) -> &Formula {
        self.annotation.principal.as_ref().expect("expansions name their principal")
    }
}

/// Every cut-free rule instance whose conclusion is exactly `s`.
pub fn backward_expansions(s: &Sequent) -> Vec<Expansion> {
    let mut out = Vec::new();
    for rule in RuleId::PRIMITIVE.into_iter().filter(|&r| may_conclude(r, s)) {
        for p in candidates(rule, s) {
            if let Ok(premises) = instance(rule, s, &p) {
                out.push(Expansion { rule, annotation: Annotation::principal(p), premises });
            }
        }
    }
    out
}

/// Cheap necessary condition for `rule` to conclude `s`: polarity and the
/// shape of the succedent. Context rules always pass.
fn may_conclude(rule: RuleId, s: &Sequent) -> bool {
    match rule.site() {
        PrincipalSite::None => false,
        PrincipalSite::Context(_) => true,
        PrincipalSite::Reflexivity(_, pol) => s.polarity == pol && s.succedent.is_atom(),
        PrincipalSite::Succedent(pol) => {
            s.polarity == pol
                && match rule {
                    RuleId::TopRPlus => s.succedent == Formula::Top,
                    RuleId::BotRMinus => s.succedent == Formula::Bottom,
                    _ => s.succedent.connective() == rule.connective(),
                }
        }
    }
}

/// Whether a zero-premise rule closes `s`, in the fixed priority order
/// ⊥Lᵃ, ⊤Lᶜ, ⊤R⁺, ⊥R⁻, Rf⁺, Rf⁻.
pub fn closing_axiom(s: &Sequent) -> Option<RuleId> {
    use RuleId::*;
    [BotLa, TopLc, TopRPlus, BotRMinus, RfPlus, RfMinus]
        .into_iter()
        .find(|&r| candidates(r, s).iter().any(|p| instance(r, s, p).is_ok()))
}

/// The left rule that decomposes compound `f` on `side`.
pub fn left_rule_for(f: &Formula, side: Side) -> Option<RuleId> {
    let c: Connective = f.connective()?;
    Some(RuleId::left_rule(c, side))
}
