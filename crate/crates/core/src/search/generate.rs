//! Random cut-free derivations, built forwards. Two-premise rules need equal
//! contexts in both premises, so independently generated subderivations are
//! weakened to a common context before they are joined.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::kernel::{Context, Derivation, Polarity, RuleId, Sequent, Side};
use crate::syntax::{Connective, Formula};
use crate::transform::weaken::weaken_unchecked;
use crate::transform::{derive_identity, Options};

/// A valid cut-free derivation with roughly `size_budget` nodes.
pub fn random_derivation(seed: u64, size_budget: usize) -> Derivation {
    Generator::new(seed).derivation(size_budget)
}

pub struct Generator {
    rng: ChaCha8Rng,
    /// Atom names to draw from.
    pub atoms: Vec<String>,
}

const NO_CHECK: Options = Options { validate: false };

fn weaken(d: &Derivation, gamma: &Context, delta: &Context) -> Derivation {
    weaken_unchecked(d, gamma, delta, &NO_CHECK).expect("unvalidated weakening is total")
}

/// Weakens `d` so its contexts become exactly `gamma`/`delta` (which must
/// contain them).
fn weaken_to(d: &Derivation, gamma: &Context, delta: &Context) -> Derivation {
    weaken(d, &gamma.monus(&d.conclusion.gamma), &delta.monus(&d.conclusion.delta))
}

/// A premise together with the formulas its rule makes active in it.
struct Slot {
    d: Derivation,
    gamma_active: Context,
    delta_active: Context,
}

impl Slot {
    fn new(d: Derivation, gamma_active: Vec<Formula>, delta_active: Vec<Formula>) -> Slot {
        Slot { d, gamma_active: gamma_active.into_iter().collect(), delta_active: delta_active.into_iter().collect() }
    }
}

/// Weakens every slot to the common context `base + actives` and builds
/// the node, whose contexts are that base plus the principal formulas.
fn join(rule: RuleId, slots: Vec<Slot>, conclusion_gamma: Vec<Formula>, conclusion_delta: Vec<Formula>, pol: Polarity, succ: Formula) -> Derivation {
    let mut gamma = Context::new();
    let mut delta = Context::new();
    for s in &slots {
        gamma = gamma.max_union(&s.d.conclusion.gamma.monus(&s.gamma_active));
        delta = delta.max_union(&s.d.conclusion.delta.monus(&s.delta_active));
    }
    let premises = slots
        .iter()
        .map(|s| weaken_to(&s.d, &gamma.sum(&s.gamma_active), &delta.sum(&s.delta_active)))
        .collect();
    let mut cg = gamma;
    let mut cd = delta;
    for f in conclusion_gamma {
        cg.insert(f);
    }
    for f in conclusion_delta {
        cd.insert(f);
    }
    Derivation::new(rule, Sequent::new(cg, cd, pol, succ), premises)
}

impl Generator {
    pub fn new(seed: u64) -> Generator {
        Generator { rng: ChaCha8Rng::seed_from_u64(seed), atoms: vec!["p".into(), "q".into(), "r".into()] }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// A random formula of depth at most `depth`.
    pub fn formula(&mut self, depth: usize) -> Formula {
        let roll = self.rng.gen_range(0..10);
        if depth == 0 || roll < 4 {
            return match roll % 5 {
                0 => Formula::Bottom,
                1 => Formula::Top,
                _ => Formula::atom(self.atoms.choose(&mut self.rng).expect("atoms").clone()),
            };
        }
        let c = *Connective::ALL.choose(&mut self.rng).expect("connectives");
        let a = self.formula(depth - 1);
        let b = self.formula(depth - 1);
        c.apply(a, b)
    }

    fn compound(&mut self, depth: usize) -> Formula {
        let c = *Connective::ALL.choose(&mut self.rng).expect("connectives");
        let a = self.formula(depth.saturating_sub(1));
        let b = self.formula(depth.saturating_sub(1));
        c.apply(a, b)
    }

    fn polarity(&mut self) -> Polarity {
        if self.rng.gen_bool(0.5) {
            Polarity::Plus
        } else {
            Polarity::Minus
        }
    }

    fn context(&mut self, max: usize) -> Context {
        let n = self.rng.gen_range(0..=max);
        (0..n).map(|_| self.formula(1)).collect()
    }

    /// A random derivation with roughly `budget` nodes.
    pub fn derivation(&mut self, budget: usize) -> Derivation {
        let pol = self.polarity();
        let c = self.formula(2);
        self.goal(pol, &c, budget)
    }

    /// A random derivation of some sequent with succedent `c` at `pol`.
    pub fn goal(&mut self, pol: Polarity, c: &Formula, budget: usize) -> Derivation {
        if budget <= 1 {
            return self.closer(pol, c);
        }
        let roll = self.rng.gen_range(0..10);
        if roll == 0 {
            let id = derive_identity(&self.context(1), &self.context(1), c, pol);
            if id.size() <= budget {
                return id;
            }
        }
        if roll < 5 {
            if let Some(rule) = self.right_rule_for(pol, c) {
                return self.rooted_at(rule, pol, c, budget);
            }
        }
        let rule = *LEFT.choose(&mut self.rng).expect("left rules");
        let principal = self.compound_for(rule);
        self.left(rule, &principal, pol, c, budget)
    }

    /// A zero-premise derivation concluding something with succedent `c`.
    fn closer(&mut self, pol: Polarity, c: &Formula) -> Derivation {
        let mut options = vec![RuleId::BotLa, RuleId::TopLc];
        match (c, pol) {
            (Formula::Atom(_), Polarity::Plus) => options.push(RuleId::RfPlus),
            (Formula::Atom(_), Polarity::Minus) => options.push(RuleId::RfMinus),
            (Formula::Top, Polarity::Plus) => options.push(RuleId::TopRPlus),
            (Formula::Bottom, Polarity::Minus) => options.push(RuleId::BotRMinus),
            _ => {}
        }
        if options.len() > 2 {
            // prefer the rule that actually looks at the succedent
            options.extend([options[2]; 2]);
        }
        let rule = *options.choose(&mut self.rng).expect("closers");
        let mut gamma = self.context(1);
        let mut delta = self.context(1);
        match rule {
            RuleId::BotLa => gamma.insert(Formula::Bottom),
            RuleId::TopLc => delta.insert(Formula::Top),
            RuleId::RfPlus => gamma.insert(c.clone()),
            RuleId::RfMinus => delta.insert(c.clone()),
            _ => {}
        }
        Derivation::leaf(rule, Sequent::new(gamma, delta, pol, c.clone()))
    }

    fn right_rule_for(&mut self, pol: Polarity, c: &Formula) -> Option<RuleId> {
        use RuleId::*;
        let conn = c.connective()?;
        let options: &[RuleId] = match (conn, pol) {
            (Connective::And, Polarity::Plus) => &[AndRPlus],
            (Connective::And, Polarity::Minus) => &[AndRMinus1, AndRMinus2],
            (Connective::Or, Polarity::Plus) => &[OrRPlus1, OrRPlus2],
            (Connective::Or, Polarity::Minus) => &[OrRMinus],
            (Connective::Imp, Polarity::Plus) => &[ImpRPlus],
            (Connective::Imp, Polarity::Minus) => &[ImpRMinus],
            (Connective::Coimp, Polarity::Plus) => &[CoimpRPlus],
            (Connective::Coimp, Polarity::Minus) => &[CoimpRMinus],
        };
        options.choose(&mut self.rng).copied()
    }

    fn compound_for(&mut self, rule: RuleId) -> Formula {
        let conn = rule.connective().expect("logical rule");
        let a = self.formula(1);
        let b = self.formula(1);
        conn.apply(a, b)
    }

    /// Splits the budget left after one node between `n` premises.
    fn split(&mut self, budget: usize, n: usize) -> Vec<usize> {
        let rest = budget.saturating_sub(1).max(n);
        if n == 1 {
            return vec![rest];
        }
        let first = self.rng.gen_range(1..rest);
        vec![first, rest - first]
    }

    /// A random derivation whose last rule is `rule`. Right rules decompose
    /// `c`, which must fit them; left rules decompose a random compound.
    pub fn rooted_at(&mut self, rule: RuleId, pol: Polarity, c: &Formula, budget: usize) -> Derivation {
        use Polarity::{Minus, Plus};
        use RuleId::*;
        if rule.is_zero_premise() {
            return self.closer_with(rule, pol, c);
        }
        if rule.is_left_rule() {
            let principal = self.compound_for(rule);
            return self.left(rule, &principal, pol, c, budget);
        }
        let (_, a, b) = c.as_binary().expect("right rules decompose compounds");
        let (a, b) = (a.clone(), b.clone());
        let bs = self.split(budget, rule.arity());
        let sub = |g: &mut Self, i: usize, p: Polarity, f: &Formula| g.goal(p, f, bs[i]);
        let slots = match rule {
            AndRPlus => vec![Slot::new(sub(self, 0, Plus, &a), vec![], vec![]), Slot::new(sub(self, 1, Plus, &b), vec![], vec![])],
            OrRMinus => vec![Slot::new(sub(self, 0, Minus, &a), vec![], vec![]), Slot::new(sub(self, 1, Minus, &b), vec![], vec![])],
            ImpRMinus | CoimpRPlus => vec![Slot::new(sub(self, 0, Plus, &a), vec![], vec![]), Slot::new(sub(self, 1, Minus, &b), vec![], vec![])],
            AndRMinus1 => vec![Slot::new(sub(self, 0, Minus, &a), vec![], vec![])],
            AndRMinus2 => vec![Slot::new(sub(self, 0, Minus, &b), vec![], vec![])],
            OrRPlus1 => vec![Slot::new(sub(self, 0, Plus, &a), vec![], vec![])],
            OrRPlus2 => vec![Slot::new(sub(self, 0, Plus, &b), vec![], vec![])],
            ImpRPlus => vec![Slot::new(sub(self, 0, Plus, &b), vec![a.clone()], vec![])],
            CoimpRMinus => vec![Slot::new(sub(self, 0, Minus, &a), vec![], vec![b.clone()])],
            r => unreachable!("{r} is not a logical right rule"),
        };
        join(rule, slots, vec![], vec![], rule_polarity(rule).unwrap_or(pol), c.clone())
    }

    fn closer_with(&mut self, rule: RuleId, pol: Polarity, c: &Formula) -> Derivation {
        let mut gamma = self.context(1);
        let mut delta = self.context(1);
        match rule {
            RuleId::BotLa => gamma.insert(Formula::Bottom),
            RuleId::TopLc => delta.insert(Formula::Top),
            RuleId::RfPlus => gamma.insert(c.clone()),
            RuleId::RfMinus => delta.insert(c.clone()),
            _ => {}
        }
        Derivation::leaf(rule, Sequent::new(gamma, delta, pol, c.clone()))
    }

    /// A derivation ending in left rule `rule` with the given principal.
    pub fn left(&mut self, rule: RuleId, principal: &Formula, pol: Polarity, c: &Formula, budget: usize) -> Derivation {
        use Polarity::{Minus, Plus};
        use RuleId::*;
        let (_, a, b) = principal.as_binary().expect("compound principal");
        let (a, b) = (a.clone(), b.clone());
        let bs = self.split(budget, rule.arity());
        let p = principal.clone();
        let (slots, cg, cd) = match rule {
            AndLa => (vec![Slot::new(self.goal(pol, c, bs[0]), vec![a, b], vec![])], vec![p], vec![]),
            OrLc => (vec![Slot::new(self.goal(pol, c, bs[0]), vec![], vec![a, b])], vec![], vec![p]),
            AndLc => (
                vec![Slot::new(self.goal(pol, c, bs[0]), vec![], vec![a]), Slot::new(self.goal(pol, c, bs[1]), vec![], vec![b])],
                vec![],
                vec![p],
            ),
            OrLa => (
                vec![Slot::new(self.goal(pol, c, bs[0]), vec![a], vec![]), Slot::new(self.goal(pol, c, bs[1]), vec![b], vec![])],
                vec![p],
                vec![],
            ),
            ImpLc => (vec![Slot::new(self.goal(pol, c, bs[0]), vec![a], vec![b])], vec![], vec![p]),
            CoimpLa => (vec![Slot::new(self.goal(pol, c, bs[0]), vec![a], vec![b])], vec![p], vec![]),
            ImpLa => (
                vec![
                    Slot::new(self.goal(Plus, &a, bs[0]), vec![p.clone()], vec![]),
                    Slot::new(self.goal(pol, c, bs[1]), vec![b], vec![]),
                ],
                vec![p],
                vec![],
            ),
            CoimpLc => (
                vec![
                    Slot::new(self.goal(Minus, &b, bs[0]), vec![], vec![p.clone()]),
                    Slot::new(self.goal(pol, c, bs[1]), vec![], vec![a]),
                ],
                vec![],
                vec![p],
            ),
            r => unreachable!("{r} is not a logical left rule"),
        };
        join(rule, slots, cg, cd, pol, c.clone())
    }

    /// A random cut-free derivation ending in `rule`, with random goal.
    pub fn with_root(&mut self, rule: RuleId, budget: usize) -> Derivation {
        use RuleId::*;
        let pol = rule_polarity(rule).unwrap_or_else(|| self.polarity());
        let c = match rule {
            RfPlus | RfMinus => Formula::atom(self.atoms.choose(&mut self.rng).expect("atoms").clone()),
            TopRPlus => Formula::Top,
            BotRMinus => Formula::Bottom,
            BotLa | TopLc => self.formula(1),
            r if r.is_right_rule() => r.connective().expect("logical").apply(self.formula(1), self.formula(1)),
            _ => self.formula(1),
        };
        self.rooted_at(rule, pol, &c, budget)
    }

    /// Premises for a cut on a random formula: the left premise concludes
    /// `⊢⁺ D` (`Cutᵃ`) or `⊢⁻ D` (`Cutᶜ`), the right one has `D` among its
    /// assumptions or counterassumptions.
    pub fn cut_pair(&mut self, variant: RuleId, budget: usize) -> (Derivation, Derivation, Formula) {
        let (side, pol) = match variant {
            RuleId::CutA => (Side::Assumption, Polarity::Plus),
            _ => (Side::Counterassumption, Polarity::Minus),
        };
        let d = if self.rng.gen_bool(0.7) { self.compound(2) } else { self.formula(1) };
        let left_budget = self.rng.gen_range(1..=budget.max(1));
        let left = match (d.connective(), self.rng.gen_bool(0.6)) {
            (Some(_), true) => match self.right_rule_for(pol, &d) {
                Some(rule) => self.rooted_at(rule, pol, &d, left_budget),
                None => self.goal(pol, &d, left_budget),
            },
            _ => self.goal(pol, &d, left_budget),
        };
        let right_budget = budget.saturating_sub(left_budget).max(1);
        let right_pol = self.polarity();
        let c = self.formula(1);
        let right = match d.connective() {
            Some(conn) if self.rng.gen_bool(0.5) => {
                self.left(RuleId::left_rule(conn, side), &d, right_pol, &c, right_budget)
            }
            _ => {
                let r = self.goal(right_pol, &c, right_budget);
                let one = Context::from([d.clone()]);
                match side {
                    Side::Assumption => weaken(&r, &one, &Context::new()),
                    Side::Counterassumption => weaken(&r, &Context::new(), &one),
                }
            }
        };
        (left, right, d)
    }
}

const LEFT: [RuleId; 8] = [
    RuleId::AndLa,
    RuleId::AndLc,
    RuleId::OrLa,
    RuleId::OrLc,
    RuleId::ImpLa,
    RuleId::ImpLc,
    RuleId::CoimpLa,
    RuleId::CoimpLc,
];

/// The polarity a rule's conclusion must have, if it is fixed.
fn rule_polarity(rule: RuleId) -> Option<Polarity> {
    use crate::kernel::PrincipalSite;
    match rule.site() {
        PrincipalSite::Succedent(p) | PrincipalSite::Reflexivity(_, p) => Some(p),
        _ => None,
    }
}
