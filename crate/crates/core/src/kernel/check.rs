use thiserror::Error;

use super::{check_rule_instance, Derivation, Sequent, Violation};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("cut-height is only defined at a cut node, found {0}")]
    NotACut(super::RuleId),
}

/// A violation together with the node it occurred at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeViolation {
    /// Premise indices from the root.
    pub path: Vec<usize>,
    pub conclusion: Sequent,
    pub violation: Violation,
}

impl std::fmt::Display for NodeViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let path: Vec<String> = self.path.iter().map(usize::to_string).collect();
        write!(
            f,
            "at node [{}] concluding `{}`: {}",
            path.join("."),
            self.conclusion,
            self.violation
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub valid: bool,
    pub height: usize,
    pub cut_count: usize,
    /// The first failing node in pre-order.
    pub first_violation: Option<NodeViolation>,
}

/// Checks every node of `d` against the rule table.
pub fn check_derivation(d: &Derivation) -> CheckReport {
    let mut first = None;
    let mut path = Vec::new();
    visit(d, &mut path, &mut first);
    CheckReport {
        valid: first.is_none(),
        height: d.height(),
        cut_count: d.cut_count(),
        first_violation: first,
    }
}

fn visit(d: &Derivation, path: &mut Vec<usize>, first: &mut Option<NodeViolation>) {
    if first.is_some() {
        return;
    }
    let premises: Vec<Sequent> = d.premises.iter().map(|p| p.conclusion.clone()).collect();
    if let Err(violation) = check_rule_instance(&d.conclusion, d.rule, &premises, &d.annotation) {
        *first = Some(NodeViolation { path: path.clone(), conclusion: d.conclusion.clone(), violation });
        return;
    }
    for (i, p) in d.premises.iter().enumerate() {
        path.push(i);
        visit(p, path, first);
        path.pop();
    }
}

/// Sum of the heights of the two premises of a cut.
pub fn cut_height(d: &Derivation) -> Result<usize, KernelError> {
    if !d.rule.is_cut() {
        return Err(KernelError::NotACut(d.rule));
    }
    Ok(d.premises.iter().map(Derivation::height).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{parse_sequent, ContextSplit, Context, RuleId};
    use crate::syntax::Formula;

    fn seq(s: &str) -> Sequent {
        parse_sequent(s).unwrap()
    }

    #[test]
    fn single_axiom() {
        let d = Derivation::leaf(RuleId::RfPlus, seq("p ; |-+ p"));
        let r = check_derivation(&d);
        assert!(r.valid);
        assert_eq!((r.height, r.cut_count), (0, 0));
    }

    #[test]
    fn conjunction_of_falsum() {
        let d = Derivation::new(
            RuleId::AndLa,
            seq("F /\\ F ; |-+ F /\\ F"),
            vec![Derivation::leaf(RuleId::BotLa, seq("F, F ; |-+ F /\\ F"))],
        );
        let r = check_derivation(&d);
        assert!(r.valid, "{:?}", r.first_violation);
        assert_eq!(r.height, 1);
    }

    #[test]
    fn cut_on_two_axioms() {
        let p = Formula::atom("p");
        let left = Derivation::leaf(RuleId::RfPlus, seq("p ; |-+ p"));
        let right = Derivation::leaf(RuleId::RfPlus, seq("p ; |-+ p"));
        let split = ContextSplit::new(Context::from([p.clone()]), Context::new(), Context::new(), Context::new());
        let d = Derivation::cut(RuleId::CutA, p, split, left, right);
        let r = check_derivation(&d);
        assert!(r.valid, "{:?}", r.first_violation);
        assert_eq!(r.cut_count, 1);
        assert_eq!(cut_height(&d), Ok(0));
        assert!(cut_height(&d.premises[0]).is_err());
    }

    #[test]
    fn violation_path_points_at_node() {
        let bad = Derivation::new(
            RuleId::ImpRPlus,
            seq("; |-+ p -> p"),
            vec![Derivation::leaf(RuleId::RfPlus, seq("; |-+ p"))],
        );
        let r = check_derivation(&bad);
        assert!(!r.valid);
        assert_eq!(r.first_violation.unwrap().path, vec![] as Vec<usize>);
    }
}
