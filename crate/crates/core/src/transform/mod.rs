//! Proof transformations: identity expansion, weakening, inversion,
//! contraction and cut elimination. Each one takes checked cut-free
//! derivations and returns checked cut-free derivations.
//!
//! Nodes built here carry no principal annotation unless they copy an input
//! node; the checker infers the principal formula.

mod contract;
mod cut;
mod identity;
mod invert;
pub(crate) mod weaken;

use thiserror::Error;

use crate::kernel::{check_derivation, check_rule_instance, Derivation, NodeViolation, RuleId, Sequent, Violation};
use crate::syntax::Formula;

pub use crate::kernel::Side;
pub use contract::{contract, contract_many};
pub use cut::{eliminate_all_cuts, eliminate_cut, eliminate_cut_with, CutCase, CutStep, Detail, Elimination};
pub use identity::derive_identity;
pub use invert::{invert, inverted_sequents};
pub use weaken::{unweaken_special, weaken, weaken_many, UnweakenTarget};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    /// Re-check every node as it is built.
    pub validate: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { validate: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("input derivation is invalid {0}")]
    InvalidInput(Box<NodeViolation>),
    #[error("input derivation contains {0} cut(s); this transformation needs a cut-free derivation")]
    CutInInput(usize),
    #[error("{formula} does not occur in {side} of the endsequent")]
    OccurrenceNotFound { side: Side, formula: Formula },
    #[error("contraction needs two occurrences of {formula} in {side}, found {found}")]
    TooFewOccurrences { side: Side, formula: Formula, found: usize },
    #[error("only compound formulas can be inverted, not {0}")]
    UnsupportedTarget(Formula),
    #[error("premises do not fit the cut figure: {0}")]
    FigureMismatch(Violation),
    #[error("internal invariant failed: {0}")]
    Internal(String),
}

type Result<T> = std::result::Result<T, TransformError>;

fn require_cut_free(d: &Derivation) -> Result<()> {
    let report = check_derivation(d);
    if let Some(v) = report.first_violation {
        return Err(TransformError::InvalidInput(Box::new(v)));
    }
    if report.cut_count > 0 {
        return Err(TransformError::CutInInput(report.cut_count));
    }
    Ok(())
}

fn premise_conclusions(d: &Derivation) -> Vec<Sequent> {
    d.premises.iter().map(|p| p.conclusion.clone()).collect()
}

/// The principal formula of a non-cut node, as the checker infers it.
pub(crate) fn principal_of(d: &Derivation) -> Option<Formula> {
    check_rule_instance(&d.conclusion, d.rule, &premise_conclusions(d), &d.annotation)
        .ok()
        .flatten()
}

fn validated(d: Derivation, opts: &Options) -> Result<Derivation> {
    if opts.validate {
        check_rule_instance(&d.conclusion, d.rule, &premise_conclusions(&d), &d.annotation)
            .map_err(|v| TransformError::Internal(format!("built node concluding `{}` is wrong: {v}", d.conclusion)))?;
    }
    Ok(d)
}

/// A fresh node without annotation.
fn node(rule: RuleId, conclusion: Sequent, premises: Vec<Derivation>, opts: &Options) -> Result<Derivation> {
    validated(Derivation::new(rule, conclusion, premises), opts)
}

/// Same rule and annotation as `template`, new conclusion and premises.
fn rebuild(template: &Derivation, conclusion: Sequent, premises: Vec<Derivation>, opts: &Options) -> Result<Derivation> {
    validated(
        Derivation { conclusion, rule: template.rule, premises, annotation: template.annotation.clone() },
        opts,
    )
}
