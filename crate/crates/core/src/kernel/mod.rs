//! Sequents over multiset contexts, derivation trees, the rule table and the
//! proof checker.

mod check;
mod context;
mod derivation;
mod rule;
mod schema;
mod sequent;

use std::fmt;

pub use check::{check_derivation, cut_height, CheckReport, KernelError, NodeViolation};
pub use context::Context;
pub use derivation::{Annotation, ContextSplit, Derivation};
pub use rule::{PrincipalSite, RuleId};
pub use schema::{
    backward_expansions, candidates, check_rule_instance, closing_axiom, cut_instance, instance,
    left_rule_for, Expansion, Violation,
};
pub use sequent::{parse_sequent, Sequent};

/// `⊢⁺` derives a verification, `⊢⁻` a falsification.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Polarity {
    Plus,
    Minus,
}

impl Polarity {
    pub fn flip(self) -> Polarity {
        match self {
            Polarity::Plus => Polarity::Minus,
            Polarity::Minus => Polarity::Plus,
        }
    }

    pub fn turnstile(self) -> &'static str {
        match self {
            Polarity::Plus => "|-+",
            Polarity::Minus => "|--",
        }
    }

    /// `+` or `-`.
    pub fn sign(self) -> char {
        match self {
            Polarity::Plus => '+',
            Polarity::Minus => '-',
        }
    }

    pub fn from_sign(s: &str) -> Option<Polarity> {
        match s {
            "+" => Some(Polarity::Plus),
            "-" => Some(Polarity::Minus),
            _ => None,
        }
    }
}

impl fmt::Display for Polarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Polarity::Plus => "⊢⁺",
            Polarity::Minus => "⊢⁻",
        })
    }
}

/// Assumptions (Γ, marked `a`) or counterassumptions (Δ, marked `c`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Side {
    Assumption,
    Counterassumption,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Assumption => Side::Counterassumption,
            Side::Counterassumption => Side::Assumption,
        }
    }

    /// `a` or `c`.
    pub fn letter(self) -> char {
        match self {
            Side::Assumption => 'a',
            Side::Counterassumption => 'c',
        }
    }

    pub fn from_letter(s: &str) -> Option<Side> {
        match s {
            "a" => Some(Side::Assumption),
            "c" => Some(Side::Counterassumption),
            _ => None,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Assumption => "the assumptions",
            Side::Counterassumption => "the counterassumptions",
        })
    }
}
