//! Derivation files and human-readable renderings.
//!
//! A derivation file is JSON: each node is an object with the fields
//! `rule`, `conclusion` (sequent text), an optional `annotation` and
//! `premises`. Files written by [`derivation_to_data`] read back to the same
//! tree and print back to the same bytes.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::kernel::{parse_sequent, Annotation, Context, ContextSplit, Derivation, Polarity, RuleId, Sequent};
use crate::syntax::{format_formula_latex, parse_formula, Formula, ParseError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed derivation data: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unknown rule name `{0}`")]
    UnknownRule(String),
    #[error("in field `{field}` (`{text}`): {source}")]
    Parse {
        field: &'static str,
        text: String,
        #[source]
        source: ParseError,
    },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Node {
    rule: String,
    conclusion: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    annotation: Option<Note>,
    #[serde(default)]
    premises: Vec<Node>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Note {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    principal: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cut_formula: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    context_split: Option<Split>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Split {
    gamma_left: Vec<String>,
    gamma_right: Vec<String>,
    delta_left: Vec<String>,
    delta_right: Vec<String>,
}

fn list(c: &Context) -> Vec<String> {
    c.occurrences().map(Formula::to_string).collect()
}

fn to_node(d: &Derivation) -> Node {
    let a = &d.annotation;
    let annotation = (!a.is_empty()).then(|| Note {
        principal: a.principal.as_ref().map(Formula::to_string),
        cut_formula: a.cut_formula.as_ref().map(Formula::to_string),
        context_split: a.split.as_ref().map(|s| Split {
            gamma_left: list(&s.gamma_left),
            gamma_right: list(&s.gamma_right),
            delta_left: list(&s.delta_left),
            delta_right: list(&s.delta_right),
        }),
    });
    Node {
        rule: d.rule.name().to_string(),
        conclusion: d.conclusion.to_string(),
        annotation,
        premises: d.premises.iter().map(to_node).collect(),
    }
}

fn formula(field: &'static str, text: &str) -> Result<Formula, FormatError> {
    parse_formula(text).map_err(|source| FormatError::Parse { field, text: text.to_string(), source })
}

fn context(field: &'static str, items: &[String]) -> Result<Context, FormatError> {
    items.iter().map(|t| formula(field, t)).collect()
}

fn from_node(n: &Node) -> Result<Derivation, FormatError> {
    let rule = RuleId::from_name(&n.rule).ok_or_else(|| FormatError::UnknownRule(n.rule.clone()))?;
    let conclusion = parse_sequent(&n.conclusion).map_err(|source| FormatError::Parse {
        field: "conclusion",
        text: n.conclusion.clone(),
        source,
    })?;
    let mut annotation = Annotation::default();
    if let Some(note) = &n.annotation {
        annotation.principal = note.principal.as_deref().map(|t| formula("principal", t)).transpose()?;
        annotation.cut_formula = note.cut_formula.as_deref().map(|t| formula("cut_formula", t)).transpose()?;
        if let Some(s) = &note.context_split {
            annotation.split = Some(ContextSplit {
                gamma_left: context("context_split", &s.gamma_left)?,
                gamma_right: context("context_split", &s.gamma_right)?,
                delta_left: context("context_split", &s.delta_left)?,
                delta_right: context("context_split", &s.delta_right)?,
            });
        }
    }
    let premises = n.premises.iter().map(from_node).collect::<Result<Vec<_>, _>>()?;
    Ok(Derivation { conclusion, rule, premises, annotation })
}

/// The derivation file text, ending in a newline.
pub fn derivation_to_data(d: &Derivation) -> String {
    let mut s = serde_json::to_string_pretty(&to_node(d)).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn derivation_from_data(text: &str) -> Result<Derivation, FormatError> {
    let node: Node = serde_json::from_str(text)?;
    from_node(&node)
}

/// One line per node, premises indented below their conclusion:
///
/// ```text
/// ; |-+ p -> p   [→R⁺]
///   p ; |-+ p   [Rf⁺]
/// ```
pub fn derivation_to_tree(d: &Derivation) -> String {
    let mut out = String::new();
    tree(d, 0, &mut out);
    out
}

fn tree(d: &Derivation, depth: usize, out: &mut String) {
    out.push_str(&"  ".repeat(depth));
    out.push_str(&d.conclusion.to_string());
    out.push_str("   [");
    out.push_str(d.rule.symbol());
    if let Some(f) = &d.annotation.cut_formula {
        out.push_str(" on ");
        out.push_str(&f.to_string());
    }
    out.push_str("]\n");
    for p in &d.premises {
        tree(p, depth + 1, out);
    }
}

fn latex_list(c: &Context) -> String {
    c.occurrences().map(format_formula_latex).collect::<Vec<_>>().join(", ")
}

/// `(\Gamma; \Delta) \vdash^{+} C` with the contexts spelled out;
/// an empty side prints as `\emptyset`.
pub fn sequent_to_latex(s: &Sequent) -> String {
    let side = |c: &Context| if c.is_empty() { "\\emptyset".to_string() } else { latex_list(c) };
    let sign = match s.polarity {
        Polarity::Plus => "+",
        Polarity::Minus => "-",
    };
    format!("({}; {}) \\vdash^{{{}}} {}", side(&s.gamma), side(&s.delta), sign, format_formula_latex(&s.succedent))
}

/// Nested `\infer` commands (proof.sty).
pub fn derivation_to_latex(d: &Derivation) -> String {
    let mut out = String::new();
    latex(d, 0, &mut out);
    out.push('\n');
    out
}

fn latex(d: &Derivation, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    out.push_str(&format!("{pad}\\infer[\\scriptstyle {}]{{{}}}{{", d.rule.latex(), sequent_to_latex(&d.conclusion)));
    if d.premises.is_empty() {
        out.push('}');
        return;
    }
    out.push('\n');
    for (i, p) in d.premises.iter().enumerate() {
        if i > 0 {
            out.push_str(&format!("\n{pad}  &\n"));
        }
        latex(p, depth + 1, out);
    }
    out.push_str(&format!("\n{pad}}}"));
}
