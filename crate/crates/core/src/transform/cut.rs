//! Cut elimination as a case machine. A cut is pushed upwards past the last
//! rule of one premise (same cut formula, smaller cut-height) or replaced by
//! cuts on the immediate subformulas of the cut formula; the recursion
//! terminates on the lexicographic pair (weight of the cut formula,
//! cut-height), which every [`CutStep`] records.

use std::fmt;

use super::contract::contract_many_unchecked;
use super::weaken::{unweaken_unchecked, weaken_unchecked, UnweakenTarget};
use super::{principal_of, rebuild, require_cut_free, Options, Result, TransformError};
use crate::kernel::{
    check_rule_instance, Context, ContextSplit, Derivation, Polarity, RuleId, Sequent, Side, Violation,
};
use crate::syntax::{Connective, Formula};

/// The refinement of a case number.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Detail {
    None,
    /// Lettered subcase, e.g. the `(b)` of `1.2(b)`.
    Letter(char),
    /// Numbered subcase, e.g. the final `.1` of `4.10.1`.
    Index(u8),
}

/// Which transformation handled a cut, e.g. `1.2(b)`, `3.5`, `4.10.1`, `5.3`.
///
/// Group 1 is `Cutᵃ` and group 2 `Cutᶜ` with a zero-premise premise; 3 pushes
/// the cut above the left premise's last rule; 4 above the right premise's;
/// 5 splits a cut whose formula is principal on both sides.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CutCase {
    pub group: u8,
    pub number: u8,
    pub detail: Detail,
}

impl CutCase {
    const fn new(group: u8, number: u8, detail: Detail) -> CutCase {
        CutCase { group, number, detail }
    }

    /// The case number without lettered subcases, e.g. `1.2` or `4.10`.
    pub fn id(&self) -> String {
        format!("{}.{}", self.group, self.number)
    }

    /// Every case number the machine can report.
    pub fn all_ids() -> Vec<String> {
        let counts = [(1, 3), (2, 3), (3, 8), (4, 16), (5, 4)];
        counts
            .iter()
            .flat_map(|&(g, n)| (1..=n).map(move |k| format!("{g}.{k}")))
            .collect()
    }
}

impl fmt::Display for CutCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.group, self.number)?;
        match self.detail {
            Detail::None => Ok(()),
            Detail::Letter(c) => write!(f, "({c})"),
            Detail::Index(i) => write!(f, ".{i}"),
        }
    }
}

/// One cut the machine processed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutStep {
    pub id: usize,
    /// The cut whose transformation produced this one.
    pub parent: Option<usize>,
    pub variant: RuleId,
    pub cut_formula: Formula,
    pub weight: usize,
    pub cut_height: usize,
    pub case: CutCase,
}

impl CutStep {
    pub fn measure(&self) -> (usize, usize) {
        (self.weight, self.cut_height)
    }

    /// `case=-3.1- weight=3 cutheight=4`
    pub fn trace_line(&self) -> String {
        format!("case=-{}- weight={} cutheight={}", self.case, self.weight, self.cut_height)
    }
}

/// A cut-free derivation together with the log of every cut handled on the
/// way, in the order they were entered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Elimination {
    pub derivation: Derivation,
    pub log: Vec<CutStep>,
}

impl Elimination {
    pub fn trace(&self) -> String {
        self.log.iter().map(|s| s.trace_line() + "\n").collect()
    }
}

/// Eliminates the cut of `left` and `right` on `cut_formula`.
pub fn eliminate_cut(left: &Derivation, right: &Derivation, cut_formula: &Formula, variant: RuleId) -> Result<Derivation> {
    eliminate_cut_with(left, right, cut_formula, variant, &Options::default()).map(|e| e.derivation)
}

pub fn eliminate_cut_with(
    left: &Derivation,
    right: &Derivation,
    cut_formula: &Formula,
    variant: RuleId,
    opts: &Options,
) -> Result<Elimination> {
    require_cut_free(left)?;
    require_cut_free(right)?;
    check_figure(left, right, cut_formula, variant)?;
    let mut m = Machine { opts: *opts, log: Vec::new() };
    let derivation = m.elim(left, right, cut_formula, variant, None)?;
    Ok(Elimination { derivation, log: m.log })
}

/// Removes every cut from a checked derivation, innermost first.
pub fn eliminate_all_cuts(d: &Derivation, opts: &Options) -> Result<Elimination> {
    if let Some(v) = crate::kernel::check_derivation(d).first_violation {
        return Err(TransformError::InvalidInput(Box::new(v)));
    }
    let mut m = Machine { opts: *opts, log: Vec::new() };
    let derivation = m.all(d)?;
    Ok(Elimination { derivation, log: m.log })
}

fn cut_side(variant: RuleId) -> (Side, Polarity) {
    match variant {
        RuleId::CutA => (Side::Assumption, Polarity::Plus),
        RuleId::CutC => (Side::Counterassumption, Polarity::Minus),
        r => panic!("{r} is not a cut rule"),
    }
}

fn check_figure(left: &Derivation, right: &Derivation, d: &Formula, variant: RuleId) -> Result<()> {
    if !variant.is_cut() {
        return Err(TransformError::Internal(format!("{variant} is not a cut rule")));
    }
    let (side, pol) = cut_side(variant);
    let l = &left.conclusion;
    if l.polarity != pol {
        return Err(TransformError::FigureMismatch(Violation::Polarity { rule: variant, expected: pol, found: l.polarity }));
    }
    if &l.succedent != d {
        return Err(TransformError::FigureMismatch(Violation::WrongSuccedent { rule: variant, found: l.succedent.clone() }));
    }
    let Some(rest) = right.conclusion.without(side, d) else {
        return Err(TransformError::FigureMismatch(Violation::MissingPrincipal { rule: variant, side, formula: d.clone() }));
    };
    let split = ContextSplit::new(l.gamma.clone(), l.delta.clone(), rest.gamma, rest.delta);
    let node = Derivation::cut(variant, d.clone(), split, left.clone(), right.clone());
    check_rule_instance(&node.conclusion, variant, &[l.clone(), right.conclusion.clone()], &node.annotation)
        .map_err(TransformError::FigureMismatch)?;
    Ok(())
}

/// The eight left rules in case order.
const LEFT_RULES: [RuleId; 8] = [
    RuleId::AndLa,
    RuleId::AndLc,
    RuleId::OrLa,
    RuleId::OrLc,
    RuleId::ImpLa,
    RuleId::ImpLc,
    RuleId::CoimpLa,
    RuleId::CoimpLc,
];

fn left_rule_number(rule: RuleId) -> u8 {
    LEFT_RULES.iter().position(|&r| r == rule).expect("left rule") as u8 + 1
}

fn right_rule_case(rule: RuleId) -> (u8, Detail) {
    use RuleId::*;
    match rule {
        AndRPlus => (9, Detail::None),
        AndRMinus1 => (10, Detail::Index(1)),
        AndRMinus2 => (10, Detail::Index(2)),
        OrRPlus1 => (11, Detail::Index(1)),
        OrRPlus2 => (11, Detail::Index(2)),
        OrRMinus => (12, Detail::None),
        ImpRPlus => (13, Detail::None),
        ImpRMinus => (14, Detail::None),
        CoimpRPlus => (15, Detail::None),
        CoimpRMinus => (16, Detail::None),
        r => unreachable!("{r} is not a logical right rule"),
    }
}

fn connective_number(c: Connective) -> u8 {
    match c {
        Connective::And => 1,
        Connective::Or => 2,
        Connective::Imp => 3,
        Connective::Coimp => 4,
    }
}

/// The premise of `→Lᵃ` / `⤙Lᶜ` that does not carry the conclusion's
/// succedent.
fn is_side_premise(rule: RuleId, index: usize) -> bool {
    matches!(rule, RuleId::ImpLa | RuleId::CoimpLc) && index == 0
}

/// Everything about one cut that the case analysis looks at.
struct Redex<'a> {
    left: &'a Derivation,
    right: &'a Derivation,
    d: &'a Formula,
    variant: RuleId,
    side: Side,
    /// Γ′ and Δ′: the right premise's contexts without the cut formula.
    rest: Sequent,
    /// The cut's conclusion.
    target: Sequent,
}

impl Redex<'_> {
    fn classify(&self) -> CutCase {
        use Detail::Letter;
        use RuleId::*;
        let (l, r) = (self.left.rule, self.right.rule);
        let cut_a = self.variant == CutA;
        let rest = &self.rest;

        if l.is_zero_premise() {
            let c = match l {
                RfPlus | RfMinus => 'a',
                BotLa => 'b',
                TopLc => 'c',
                _ => 'd',
            };
            return CutCase::new(if cut_a { 1 } else { 2 }, 1, Letter(c));
        }
        if r.is_zero_premise() {
            let succ_in = |side: Side| rest.side(side).contains(&rest.succedent);
            let bot_in_gamma = rest.gamma.contains(&Formula::Bottom);
            let top_in_delta = rest.delta.contains(&Formula::Top);
            let plus = self.right.conclusion.polarity == Polarity::Plus;
            let (group, number, c) = match (cut_a, plus) {
                (true, true) => (1, 2, match r {
                    RfPlus if succ_in(Side::Assumption) => 'a',
                    RfPlus => 'b',
                    BotLa if bot_in_gamma => 'c',
                    BotLa => 'd',
                    TopLc => 'e',
                    _ => 'f',
                }),
                (true, false) => (1, 3, match r {
                    RfMinus => 'a',
                    BotLa if bot_in_gamma => 'b',
                    BotLa => 'c',
                    TopLc => 'd',
                    _ => 'e',
                }),
                (false, true) => (2, 2, match r {
                    RfPlus => 'a',
                    BotLa => 'b',
                    TopLc if top_in_delta => 'c',
                    TopLc => 'd',
                    _ => 'e',
                }),
                (false, false) => (2, 3, match r {
                    RfMinus if succ_in(Side::Counterassumption) => 'a',
                    RfMinus => 'b',
                    BotLa => 'c',
                    TopLc if top_in_delta => 'd',
                    TopLc => 'e',
                    _ => 'f',
                }),
            };
            return CutCase::new(group, number, Letter(c));
        }
        if l.is_left_rule() {
            return CutCase::new(3, left_rule_number(l), Detail::None);
        }
        if self.principal_in_right() {
            let c = self.d.connective().expect("principal formulas of right rules are compound");
            return CutCase::new(5, connective_number(c), Detail::None);
        }
        if r.is_left_rule() {
            CutCase::new(4, left_rule_number(r), Detail::None)
        } else {
            let (n, detail) = right_rule_case(r);
            CutCase::new(4, n, detail)
        }
    }

    fn principal_in_right(&self) -> bool {
        let Some(c) = self.d.connective() else { return false };
        self.right.rule == RuleId::left_rule(c, self.side) && principal_of(self.right).as_ref() == Some(self.d)
    }
}

struct Machine {
    opts: Options,
    log: Vec<CutStep>,
}

impl Machine {
    fn all(&mut self, d: &Derivation) -> Result<Derivation> {
        let premises = d.premises.iter().map(|p| self.all(p)).collect::<Result<Vec<_>>>()?;
        if d.rule.is_cut() {
            let formula = d.annotation.cut_formula.as_ref().expect("checked cut");
            let out = self.elim(&premises[0], &premises[1], formula, d.rule, None)?;
            if out.conclusion != d.conclusion {
                return Err(TransformError::Internal("cut elimination changed the endsequent".into()));
            }
            Ok(out)
        } else {
            rebuild(d, d.conclusion.clone(), premises, &self.opts)
        }
    }

    fn weaken(&self, d: &Derivation, g: &Context, dl: &Context) -> Result<Derivation> {
        weaken_unchecked(d, g, dl, &self.opts)
    }

    fn elim(
        &mut self,
        left: &Derivation,
        right: &Derivation,
        d: &Formula,
        variant: RuleId,
        parent: Option<usize>,
    ) -> Result<Derivation> {
        let (side, _) = cut_side(variant);
        let rest = right.conclusion.without(side, d).ok_or_else(|| {
            TransformError::Internal(format!("cut formula {d} missing from `{}`", right.conclusion))
        })?;
        let l = &left.conclusion;
        let target = Sequent::new(
            l.gamma.sum(&rest.gamma),
            l.delta.sum(&rest.delta),
            rest.polarity,
            rest.succedent.clone(),
        );
        let redex = Redex { left, right, d, variant, side, rest, target };
        let case = redex.classify();
        let id = self.log.len();
        self.log.push(CutStep {
            id,
            parent,
            variant,
            cut_formula: d.clone(),
            weight: d.weight(),
            cut_height: left.height() + right.height(),
            case,
        });
        let out = match case.group {
            1 | 2 if case.number == 1 => self.left_axiom(&redex)?,
            1 | 2 => self.right_axiom(&redex, case, id)?,
            3 => self.permute_left(&redex, id)?,
            4 => self.permute_right(&redex, id)?,
            _ => self.principal(&redex, id)?,
        };
        if out.conclusion != redex.target {
            return Err(TransformError::Internal(format!(
                "case {case} concluded `{}` instead of `{}`",
                out.conclusion, redex.target
            )));
        }
        Ok(out)
    }

    fn leaf(&self, rule: RuleId, s: &Sequent) -> Result<Derivation> {
        super::node(rule, s.clone(), vec![], &self.opts)
    }

    /// The left premise is an axiom.
    fn left_axiom(&mut self, x: &Redex) -> Result<Derivation> {
        use RuleId::*;
        let l = &x.left.conclusion;
        match x.left.rule {
            BotLa | TopLc => self.leaf(x.left.rule, &x.target),
            // the cut formula is an atom already among the left premise's
            // own contexts
            RfPlus => self.weaken(x.right, &l.gamma.without(x.d).expect("reflexive"), &l.delta),
            RfMinus => self.weaken(x.right, &l.gamma, &l.delta.without(x.d).expect("reflexive")),
            TopRPlus | BotRMinus => {
                let which = if x.left.rule == TopRPlus { UnweakenTarget::TopInGamma } else { UnweakenTarget::BotInDelta };
                let bare = unweaken_unchecked(x.right, which, &self.opts)?;
                self.weaken(&bare, &l.gamma, &l.delta)
            }
            r => Err(TransformError::Internal(format!("{r} cannot conclude a cut's left premise"))),
        }
    }

    /// The right premise is an axiom.
    fn right_axiom(&mut self, x: &Redex, case: CutCase, id: usize) -> Result<Derivation> {
        match (case.group, case.number, case.detail) {
            // the axiom's succedent is the cut formula itself
            (1, 2, Detail::Letter('b')) | (2, 3, Detail::Letter('b')) => {
                self.weaken(x.left, &x.rest.gamma, &x.rest.delta)
            }
            // the axiom's constant is the cut formula: the left premise must
            // end in a left rule
            (1, 2, Detail::Letter('d')) | (1, 3, Detail::Letter('c')) | (2, 2, Detail::Letter('d')) | (2, 3, Detail::Letter('e')) => {
                if !x.left.rule.is_left_rule() {
                    return Err(TransformError::Internal(format!(
                        "case {case}: left premise ends in {}, expected a left rule",
                        x.left.rule
                    )));
                }
                self.permute_left(x, id)
            }
            _ => self.leaf(x.right.rule, &x.target),
        }
    }

    /// Pushes the cut above the left premise's last (left) rule.
    fn permute_left(&mut self, x: &Redex, id: usize) -> Result<Derivation> {
        let rule = x.left.rule;
        let mut premises = Vec::with_capacity(x.left.premises.len());
        for (i, p) in x.left.premises.iter().enumerate() {
            premises.push(if is_side_premise(rule, i) {
                self.weaken(p, &x.rest.gamma, &x.rest.delta)?
            } else {
                self.elim(p, x.right, x.d, x.variant, Some(id))?
            });
        }
        rebuild(x.left, x.target.clone(), premises, &self.opts)
    }

    /// Pushes the cut above the right premise's last rule.
    fn permute_right(&mut self, x: &Redex, id: usize) -> Result<Derivation> {
        let premises = x
            .right
            .premises
            .iter()
            .map(|p| self.elim(x.left, p, x.d, x.variant, Some(id)))
            .collect::<Result<Vec<_>>>()?;
        rebuild(x.right, x.target.clone(), premises, &self.opts)
    }

    /// The cut formula is principal on both sides.
    fn principal(&mut self, x: &Redex, id: usize) -> Result<Derivation> {
        use RuleId::*;
        let (_, a, b) = x.d.as_binary().expect("compound");
        let (l, r) = (x.left, x.right);
        let (lp, rp) = (&l.premises, &r.premises);
        let lg = &l.conclusion.gamma;
        let ld = &l.conclusion.delta;
        let parent = Some(id);
        match (x.variant, l.rule) {
            // one premise of the left rule matches one premise of the right
            (CutC, AndRMinus1) | (CutA, OrRPlus1) => self.elim(&lp[0], &rp[0], a, x.variant, parent),
            (CutC, AndRMinus2) | (CutA, OrRPlus2) => self.elim(&lp[0], &rp[1], b, x.variant, parent),
            // two cuts, then contraction of the doubled left contexts
            (CutA, AndRPlus) | (CutC, OrRMinus) => {
                let upper = self.elim(&lp[0], &rp[0], a, x.variant, parent)?;
                let lower = self.elim(&lp[1], &upper, b, x.variant, parent)?;
                contract_many_unchecked(&lower, lg, ld, &self.opts)
            }
            // a cut on A at ⊢⁺ feeds a cut on B at ⊢⁻, whichever cut we
            // started from
            (CutC, ImpRMinus) | (CutA, CoimpRPlus) => {
                let upper = self.elim(&lp[0], &rp[0], a, CutA, parent)?;
                let lower = self.elim(&lp[1], &upper, b, CutC, parent)?;
                contract_many_unchecked(&lower, lg, ld, &self.opts)
            }
            // three cuts: the copy of the cut formula in the right rule's
            // side premise, the subformula cut, and a final cut joining them
            (CutA, ImpRPlus) => {
                let side = self.elim(l, &rp[0], x.d, CutA, parent)?;
                let main = self.elim(&lp[0], &rp[1], b, CutA, parent)?;
                let joined = self.elim(&side, &main, a, CutA, parent)?;
                contract_many_unchecked(&joined, &lg.sum(&x.rest.gamma), &ld.sum(&x.rest.delta), &self.opts)
            }
            (CutC, CoimpRMinus) => {
                let side = self.elim(l, &rp[0], x.d, CutC, parent)?;
                let main = self.elim(&lp[0], &rp[1], a, CutC, parent)?;
                let joined = self.elim(&side, &main, b, CutC, parent)?;
                contract_many_unchecked(&joined, &lg.sum(&x.rest.gamma), &ld.sum(&x.rest.delta), &self.opts)
            }
            (v, rule) => Err(TransformError::Internal(format!("{v} with left premise by {rule} is not a principal redex"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{check_derivation, parse_sequent};
    use crate::syntax::parse_formula;
    use crate::transform::derive_identity;

    fn seq(s: &str) -> Sequent {
        parse_sequent(s).unwrap()
    }

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn two_axioms() {
        let ax = Derivation::leaf(RuleId::RfPlus, seq("p ; |-+ p"));
        let e = eliminate_cut_with(&ax, &ax, &f("p"), RuleId::CutA, &Options::default()).unwrap();
        assert_eq!(e.derivation, ax);
        assert_eq!(e.log.len(), 1);
        assert_eq!(e.log[0].trace_line(), "case=-1.1(a)- weight=1 cutheight=0");
    }

    #[test]
    fn conjunction_principal_on_both_sides() {
        let d = f("p /\\ q");
        let left = derive_identity(&Context::new(), &Context::new(), &d, Polarity::Plus);
        let right = Derivation::new(
            RuleId::AndLa,
            seq("p /\\ q ; |-+ p"),
            vec![Derivation::leaf(RuleId::RfPlus, seq("p, q ; |-+ p"))],
        );
        let e = eliminate_cut_with(&left, &right, &d, RuleId::CutA, &Options::default()).unwrap();
        let r = check_derivation(&e.derivation);
        assert!(r.valid && r.cut_count == 0);
        assert_eq!(e.derivation.conclusion, seq("p /\\ q ; |-+ p"));
        assert_eq!(e.log[0].case.to_string(), "5.1");
        for step in &e.log[1..] {
            let parent = &e.log[step.parent.unwrap()];
            assert!(step.measure() < parent.measure());
        }
    }

    #[test]
    fn implication_cutc_becomes_cuta() {
        let d = f("p -> q");
        let left = derive_identity(&Context::new(), &Context::new(), &d, Polarity::Minus);
        // left ends in →Lᶜ; push it until the →R⁻ meets →Lᶜ
        let right = derive_identity(&Context::new(), &Context::new(), &d, Polarity::Minus);
        let e = eliminate_cut_with(&left, &right, &d, RuleId::CutC, &Options::default()).unwrap();
        assert!(check_derivation(&e.derivation).valid);
        assert!(e.derivation.is_cut_free());
        let cross = e.log.iter().any(|s| {
            s.variant == RuleId::CutA && s.parent.map(|p| e.log[p].variant) == Some(RuleId::CutC)
        });
        assert!(cross, "{}", e.trace());
    }

    #[test]
    fn mismatched_figure_is_reported() {
        let ax = Derivation::leaf(RuleId::RfPlus, seq("p ; |-+ p"));
        let other = Derivation::leaf(RuleId::RfPlus, seq("q ; |-+ q"));
        assert!(matches!(
            eliminate_cut(&ax, &other, &f("p"), RuleId::CutA),
            Err(TransformError::FigureMismatch(Violation::MissingPrincipal { .. }))
        ));
        assert!(matches!(
            eliminate_cut(&ax, &ax, &f("p"), RuleId::CutC),
            Err(TransformError::FigureMismatch(Violation::Polarity { .. }))
        ));
    }

    #[test]
    fn case_ids_cover_all_groups() {
        let ids = CutCase::all_ids();
        assert_eq!(ids.len(), 34);
        assert!(ids.contains(&"4.16".to_string()));
    }
}
