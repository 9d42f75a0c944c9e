use super::{Context, RuleId, Sequent};
use crate::syntax::Formula;

/// How the conclusion contexts of a cut divide between its premises:
/// `(Γ, Γ′; Δ, Δ′)` with Γ, Δ from the left premise and Γ′, Δ′ from the
/// right one.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ContextSplit {
    pub gamma_left: Context,
    pub gamma_right: Context,
    pub delta_left: Context,
    pub delta_right: Context,
}

impl ContextSplit {
    pub fn new(gamma_left: Context, delta_left: Context, gamma_right: Context, delta_right: Context) -> Self {
        ContextSplit { gamma_left, gamma_right, delta_left, delta_right }
    }

    pub fn gamma(&self) -> Context {
        self.gamma_left.sum(&self.gamma_right)
    }

    pub fn delta(&self) -> Context {
        self.delta_left.sum(&self.delta_right)
    }

    pub fn dual(&self) -> ContextSplit {
        ContextSplit {
            gamma_left: self.delta_left.map(Formula::dual),
            gamma_right: self.delta_right.map(Formula::dual),
            delta_left: self.gamma_left.map(Formula::dual),
            delta_right: self.gamma_right.map(Formula::dual),
        }
    }
}

/// Optional per-node data. Cut nodes must carry `cut_formula` and `split`;
/// other nodes may name their principal formula.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Annotation {
    pub principal: Option<Formula>,
    pub cut_formula: Option<Formula>,
    pub split: Option<ContextSplit>,
}

impl Annotation {
    pub fn is_empty(&self) -> bool {
        self.principal.is_none() && self.cut_formula.is_none() && self.split.is_none()
    }

    pub fn principal(f: Formula) -> Annotation {
        Annotation { principal: Some(f), ..Annotation::default() }
    }

    pub fn cut(d: Formula, split: ContextSplit) -> Annotation {
        Annotation { principal: None, cut_formula: Some(d), split: Some(split) }
    }

    pub fn dual(&self) -> Annotation {
        Annotation {
            principal: self.principal.as_ref().map(Formula::dual),
            cut_formula: self.cut_formula.as_ref().map(Formula::dual),
            split: self.split.as_ref().map(ContextSplit::dual),
        }
    }
}

/// A finite tree of rule instances; premises are in figure order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Derivation {
    pub conclusion: Sequent,
    pub rule: RuleId,
    pub premises: Vec<Derivation>,
    pub annotation: Annotation,
}

impl Derivation {
    pub fn new(rule: RuleId, conclusion: Sequent, premises: Vec<Derivation>) -> Derivation {
        Derivation { conclusion, rule, premises, annotation: Annotation::default() }
    }

    pub fn leaf(rule: RuleId, conclusion: Sequent) -> Derivation {
        Derivation::new(rule, conclusion, Vec::new())
    }

    pub fn with_annotation(mut self, annotation: Annotation) -> Derivation {
        self.annotation = annotation;
        self
    }

    /// A cut node. The conclusion is assembled from the split and the right
    /// premise's succedent.
    pub fn cut(
        rule: RuleId,
        cut_formula: Formula,
        split: ContextSplit,
        left: Derivation,
        right: Derivation,
    ) -> Derivation {
        debug_assert!(rule.is_cut());
        let right_goal = &right.conclusion;
        let conclusion = Sequent::new(
            split.gamma(),
            split.delta(),
            right_goal.polarity,
            right_goal.succedent.clone(),
        );
        Derivation {
            conclusion,
            rule,
            premises: vec![left, right],
            annotation: Annotation::cut(cut_formula, split),
        }
    }

    /// 0 for zero-premise nodes, otherwise one more than the highest premise.
    pub fn height(&self) -> usize {
        self.premises.iter().map(|p| p.height() + 1).max().unwrap_or(0)
    }

    pub fn cut_count(&self) -> usize {
        usize::from(self.rule.is_cut()) + self.premises.iter().map(Derivation::cut_count).sum::<usize>()
    }

    pub fn is_cut_free(&self) -> bool {
        self.cut_count() == 0
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        1 + self.premises.iter().map(Derivation::size).sum::<usize>()
    }

    /// Every node, breadth-first from the root.
    pub fn nodes(&self) -> Vec<&Derivation> {
        let mut out = vec![self];
        let mut i = 0;
        while i < out.len() {
            let node = out[i];
            i += 1;
            out.extend(node.premises.iter());
        }
        out
    }

    /// Node at a path of premise indices.
    pub fn at(&self, path: &[usize]) -> Option<&Derivation> {
        path.iter().try_fold(self, |d, &i| d.premises.get(i))
    }

    /// The derivation of the dual endsequent: every sequent, rule and
    /// annotation dualized, premises swapped where the dual figure lists them
    /// the other way round.
    pub fn dual(&self) -> Derivation {
        let mut premises: Vec<Derivation> = self.premises.iter().map(Derivation::dual).collect();
        if self.rule.dual_swaps_premises() {
            premises.reverse();
        }
        Derivation {
            conclusion: self.conclusion.dual(),
            rule: self.rule.dual(),
            premises,
            annotation: self.annotation.dual(),
        }
    }

    /// Drops every annotation except the mandatory cut data.
    pub fn strip_principals(&self) -> Derivation {
        let mut annotation = self.annotation.clone();
        annotation.principal = None;
        Derivation {
            conclusion: self.conclusion.clone(),
            rule: self.rule,
            premises: self.premises.iter().map(Derivation::strip_principals).collect(),
            annotation,
        }
    }
}
