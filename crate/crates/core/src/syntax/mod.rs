//! Formulas of the bi-intuitionistic language: atoms, the two constants and
//! the four binary connectives, together with the ASCII concrete syntax.
//!
//! | connective     | token |
//! |----------------|-------|
//! | falsum         | `F`   |
//! | verum          | `T`   |
//! | conjunction    | `/\`  |
//! | disjunction    | `\/`  |
//! | implication    | `->`  |
//! | co-implication | `-<`  |
//!
//! `/\` binds tighter than `\/`, which binds tighter than the two arrows.
//! Both arrows are right-associative and may not be mixed at the same level
//! without parentheses. `/\` and `\/` associate to the left.

mod parse;
mod print;

use std::fmt;

pub use parse::{parse_formula, ParseError, ParseErrorKind};
pub use print::{format_formula, format_formula_latex};

/// A formula. Structural equality is the only identity used anywhere in the
/// crate; the derived `Ord` is the canonical order of multiset members.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Formula {
    Atom(String),
    Bottom,
    Top,
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    /// `Coimp(a, b)` is written `a -< b` and read "b co-implies a".
    Coimp(Box<Formula>, Box<Formula>),
}

/// The binary connectives.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Connective {
    And,
    Or,
    Imp,
    Coimp,
}

impl Connective {
    pub const ALL: [Connective; 4] = [
        Connective::And,
        Connective::Or,
        Connective::Imp,
        Connective::Coimp,
    ];

    pub fn token(self) -> &'static str {
        match self {
            Connective::And => "/\\",
            Connective::Or => "\\/",
            Connective::Imp => "->",
            Connective::Coimp => "-<",
        }
    }

    pub fn apply(self, left: Formula, right: Formula) -> Formula {
        let (l, r) = (Box::new(left), Box::new(right));
        match self {
            Connective::And => Formula::And(l, r),
            Connective::Or => Formula::Or(l, r),
            Connective::Imp => Formula::Imp(l, r),
            Connective::Coimp => Formula::Coimp(l, r),
        }
    }
}

impl Formula {
    /// Builds an atom. Panics if `name` is not a valid identifier; use
    /// [`parse_formula`] for untrusted input.
    pub fn atom(name: impl Into<String>) -> Formula {
        let name = name.into();
        assert!(
            parse::is_atom_name(&name),
            "invalid atom name {name:?}"
        );
        Formula::Atom(name)
    }

    pub fn and(left: Formula, right: Formula) -> Formula {
        Connective::And.apply(left, right)
    }

    pub fn or(left: Formula, right: Formula) -> Formula {
        Connective::Or.apply(left, right)
    }

    pub fn imp(left: Formula, right: Formula) -> Formula {
        Connective::Imp.apply(left, right)
    }

    pub fn coimp(left: Formula, right: Formula) -> Formula {
        Connective::Coimp.apply(left, right)
    }

    /// Splits a compound formula into its connective and immediate subformulas.
    pub fn as_binary(&self) -> Option<(Connective, &Formula, &Formula)> {
        match self {
            Formula::And(a, b) => Some((Connective::And, a, b)),
            Formula::Or(a, b) => Some((Connective::Or, a, b)),
            Formula::Imp(a, b) => Some((Connective::Imp, a, b)),
            Formula::Coimp(a, b) => Some((Connective::Coimp, a, b)),
            _ => None,
        }
    }

    pub fn connective(&self) -> Option<Connective> {
        self.as_binary().map(|(c, _, _)| c)
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, Formula::Atom(_))
    }

    pub fn is_compound(&self) -> bool {
        self.as_binary().is_some()
    }

    /// w(F) = w(T) = 0, w(p) = 1, w(A # B) = w(A) + w(B) + 1.
    pub fn weight(&self) -> usize {
        match self {
            Formula::Bottom | Formula::Top => 0,
            Formula::Atom(_) => 1,
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) | Formula::Coimp(a, b) => {
                a.weight() + b.weight() + 1
            }
        }
    }

    /// Number of connectives on the longest root-to-leaf path.
    pub fn depth(&self) -> usize {
        match self.as_binary() {
            Some((_, a, b)) => 1 + a.depth().max(b.depth()),
            None => 0,
        }
    }

    /// All subformulas including `self`, each listed once, in canonical order.
    pub fn subformulas(&self) -> Vec<Formula> {
        let mut out = std::collections::BTreeSet::new();
        fn walk(f: &Formula, out: &mut std::collections::BTreeSet<Formula>) {
            if out.insert(f.clone()) {
                if let Some((_, a, b)) = f.as_binary() {
                    walk(a, out);
                    walk(b, out);
                }
            }
        }
        walk(self, &mut out);
        out.into_iter().collect()
    }

    /// The verification/falsification dual: swaps F and T, conjunction and
    /// disjunction, and sends `A -> B` to `B* -< A*` (and back).
    pub fn dual(&self) -> Formula {
        match self {
            Formula::Atom(_) => self.clone(),
            Formula::Bottom => Formula::Top,
            Formula::Top => Formula::Bottom,
            Formula::And(a, b) => Formula::or(a.dual(), b.dual()),
            Formula::Or(a, b) => Formula::and(a.dual(), b.dual()),
            Formula::Imp(a, b) => Formula::coimp(b.dual(), a.dual()),
            Formula::Coimp(a, b) => Formula::imp(b.dual(), a.dual()),
        }
    }
}

/// Weight of a formula; see [`Formula::weight`].
pub fn weight(f: &Formula) -> usize {
    f.weight()
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_formula(self))
    }
}

impl std::str::FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_formula(s)
    }
}
