//! Proof checking, admissibility transformations and bounded proof search
//! for a bi-intuitionistic sequent calculus with verification (`⊢⁺`) and
//! falsification (`⊢⁻`) sequents over multiset contexts.
//!
//! * [`syntax`] — formulas, the ASCII concrete syntax and the weight measure.
//! * [`kernel`] — sequents, derivations, the rule table and the checker.
//! * [`transform`] — identity expansion, weakening, inversion, contraction
//!   and cut elimination as total functions on checked derivations.
//! * [`search`] — loop-checked backward proof search and a random
//!   derivation generator.
//! * [`format`] — derivation files, indented trees and LaTeX output.
//! * [`corpus`] — the golden corpus runner and coverage report.
//! * [`cli`] — the command-line front end.

pub mod syntax;
pub mod kernel;
pub mod transform;
pub mod search;
pub mod format;
pub mod corpus;
pub mod cli;
