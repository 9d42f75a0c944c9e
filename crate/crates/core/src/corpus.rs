//! The golden corpus: a directory of derivation files plus `manifest.json`,
//! which lists cases. Each case runs one operation on inputs read from the
//! directory and compares the result with expected derivation files and/or
//! an expected shape.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::format::{derivation_from_data, derivation_to_data, FormatError};
use crate::kernel::{check_derivation, parse_sequent, Context, Derivation, Polarity, RuleId, Side};
use crate::search::{prove, random_derivation, SearchConfig, SearchOutcome};
use crate::syntax::{parse_formula, Formula};
use crate::transform::{
    contract, derive_identity, eliminate_cut_with, invert, unweaken_special, weaken, CutCase, Options,
    UnweakenTarget,
};

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Manifest {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
    #[error("{path}: {source}")]
    Derivation {
        path: PathBuf,
        #[source]
        source: FormatError,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Manifest {
    pub cases: Vec<GoldenCase>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GoldenCase {
    pub id: String,
    pub description: String,
    /// Which displayed figure or proof step the case replays.
    pub source: String,
    pub operation: Operation,
    #[serde(default)]
    pub expected: Expected,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Operation {
    Identity { gamma: Vec<String>, delta: Vec<String>, formula: String, polarity: String },
    Weaken { input: String, formula: String, side: String },
    Unweaken { input: String, target: String },
    Invert { input: String, formula: String, side: String },
    Contract { input: String, formula: String, side: String },
    CutEliminate { left: String, right: String, cut_formula: String, variant: String },
    Prove { sequent: String },
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    /// Files the outputs must equal, in order.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub derivations: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root_rule: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub height: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub endsequent: Option<String>,
    /// The case label of the outermost cut, e.g. `1.2(b)` or `4.16`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_case: Option<String>,
    /// The cuts the outermost cut is rewritten into, in creation order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subcuts: Option<Vec<SubCut>>,
    /// `proved` or `refuted`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outcome: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubCut {
    /// `a` or `c`.
    pub variant: String,
    pub cut_formula: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cut_height: Option<usize>,
}

/// Result of one case.
#[derive(Clone, Debug, Default)]
pub struct GoldenReport {
    pub id: String,
    pub diffs: Vec<String>,
    /// Rules used in the case's outputs.
    pub rules: BTreeSet<RuleId>,
    /// Case number of the outermost cut, for cut cases.
    pub cut_case: Option<String>,
}

impl GoldenReport {
    pub fn passed(&self) -> bool {
        self.diffs.is_empty()
    }
}

#[derive(Clone, Debug, Default)]
pub struct Coverage {
    pub missing_rules: Vec<RuleId>,
    pub missing_cut_cases: Vec<String>,
}

impl Coverage {
    pub fn is_complete(&self) -> bool {
        self.missing_rules.is_empty() && self.missing_cut_cases.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct CorpusReport {
    pub reports: Vec<GoldenReport>,
    pub coverage: Coverage,
}

impl CorpusReport {
    pub fn failures(&self) -> impl Iterator<Item = &GoldenReport> {
        self.reports.iter().filter(|r| !r.passed())
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none() && self.coverage.is_complete()
    }
}

pub fn load_manifest(dir: &Path) -> Result<Manifest, CorpusError> {
    let path = dir.join("manifest.json");
    let text = fs::read_to_string(&path).map_err(|source| CorpusError::Io { path: path.clone(), source })?;
    serde_json::from_str(&text).map_err(|source| CorpusError::Manifest { path, source })
}

pub fn load_derivation(path: &Path) -> Result<Derivation, CorpusError> {
    let text = fs::read_to_string(path).map_err(|source| CorpusError::Io { path: path.to_path_buf(), source })?;
    derivation_from_data(&text).map_err(|source| CorpusError::Derivation { path: path.to_path_buf(), source })
}

/// Runs every case and computes coverage of the rules and cut cases.
pub fn run_corpus(dir: &Path) -> Result<CorpusReport, CorpusError> {
    let manifest = load_manifest(dir)?;
    let reports: Vec<GoldenReport> = manifest.cases.iter().map(|c| run_golden(c, dir)).collect();
    let coverage = coverage(&reports);
    Ok(CorpusReport { reports, coverage })
}

fn coverage(reports: &[GoldenReport]) -> Coverage {
    let passed = reports.iter().filter(|r| r.passed());
    let mut rules = BTreeSet::new();
    let mut cases = BTreeSet::new();
    for r in passed {
        rules.extend(r.rules.iter().copied());
        cases.extend(r.cut_case.iter().cloned());
    }
    Coverage {
        missing_rules: RuleId::PRIMITIVE.into_iter().filter(|r| !rules.contains(r)).collect(),
        missing_cut_cases: CutCase::all_ids().into_iter().filter(|c| !cases.contains(c)).collect(),
    }
}

/// Rewrites every derivation file in `dir` in canonical form; returns the
/// files that changed.
pub fn rewrite_corpus(dir: &Path) -> Result<Vec<PathBuf>, CorpusError> {
    let mut changed = Vec::new();
    let entries = fs::read_dir(dir).map_err(|source| CorpusError::Io { path: dir.to_path_buf(), source })?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "deriv"))
        .collect();
    paths.sort();
    for path in paths {
        let text = fs::read_to_string(&path).map_err(|source| CorpusError::Io { path: path.clone(), source })?;
        let d = derivation_from_data(&text).map_err(|source| CorpusError::Derivation { path: path.clone(), source })?;
        let canonical = derivation_to_data(&d);
        if canonical != text {
            fs::write(&path, canonical).map_err(|source| CorpusError::Io { path: path.clone(), source })?;
            changed.push(path);
        }
    }
    Ok(changed)
}

fn side(text: &str) -> Result<Side, String> {
    Side::from_letter(text).ok_or_else(|| format!("side must be `a` or `c`, found `{text}`"))
}

fn formula(text: &str) -> Result<Formula, String> {
    parse_formula(text).map_err(|e| format!("`{text}`: {e}"))
}

fn variant(text: &str) -> Result<RuleId, String> {
    match text {
        "a" => Ok(RuleId::CutA),
        "c" => Ok(RuleId::CutC),
        _ => Err(format!("cut variant must be `a` or `c`, found `{text}`")),
    }
}

/// Path of the first node where two derivations differ, with both nodes.
pub fn first_difference(expected: &Derivation, found: &Derivation) -> Option<String> {
    fn go(e: &Derivation, f: &Derivation, path: &mut Vec<usize>) -> Option<String> {
        let here = || path.iter().map(usize::to_string).collect::<Vec<_>>().join(".");
        if e.rule != f.rule || e.conclusion != f.conclusion || e.premises.len() != f.premises.len() {
            return Some(format!(
                "at node [{}]: expected `{}` by {}, found `{}` by {}",
                here(),
                e.conclusion,
                e.rule,
                f.conclusion,
                f.rule
            ));
        }
        if e.annotation != f.annotation {
            return Some(format!("at node [{}]: annotations differ", here()));
        }
        for (i, (pe, pf)) in e.premises.iter().zip(&f.premises).enumerate() {
            path.push(i);
            let d = go(pe, pf, path);
            path.pop();
            if d.is_some() {
                return d;
            }
        }
        None
    }
    go(expected, found, &mut Vec::new())
}

struct Run<'a> {
    dir: &'a Path,
    report: GoldenReport,
}

impl Run<'_> {
    fn fail(&mut self, msg: impl Into<String>) {
        self.report.diffs.push(msg.into());
    }

    fn load(&self, file: &str) -> Result<Derivation, String> {
        load_derivation(&self.dir.join(file)).map_err(|e| e.to_string())
    }

    fn record(&mut self, d: &Derivation) {
        for n in d.nodes() {
            if !n.rule.is_cut() {
                self.report.rules.insert(n.rule);
            }
        }
    }

    /// Every output must check and be cut-free.
    fn validate(&mut self, outputs: &[Derivation]) {
        for (i, d) in outputs.iter().enumerate() {
            let r = check_derivation(d);
            if let Some(v) = r.first_violation {
                self.fail(format!("output {i} is invalid {v}"));
            } else if r.cut_count > 0 {
                self.fail(format!("output {i} has {} cut(s)", r.cut_count));
            }
        }
    }

    fn no_higher(&mut self, outputs: &[Derivation], input: &Derivation) {
        for (i, d) in outputs.iter().enumerate() {
            if d.height() > input.height() {
                self.fail(format!("output {i} has height {} above the input's {}", d.height(), input.height()));
            }
        }
    }

    fn execute(&mut self, op: &Operation) -> Result<Outputs, String> {
        let opts = Options::default();
        let terr = |e: crate::transform::TransformError| e.to_string();
        Ok(match op {
            Operation::Identity { gamma, delta, formula: f, polarity } => {
                let ctx = |items: &[String]| items.iter().map(|t| formula(t)).collect::<Result<Context, _>>();
                let pol = Polarity::from_sign(polarity).ok_or_else(|| format!("bad polarity `{polarity}`"))?;
                Outputs::plain(vec![derive_identity(&ctx(gamma)?, &ctx(delta)?, &formula(f)?, pol)])
            }
            Operation::Weaken { input, formula: f, side: s } => {
                let d = self.load(input)?;
                let out = weaken(&d, &formula(f)?, side(s)?).map_err(terr)?;
                self.no_higher(std::slice::from_ref(&out), &d);
                Outputs::plain(vec![out])
            }
            Operation::Unweaken { input, target } => {
                let d = self.load(input)?;
                let which = match target.as_str() {
                    "top-in-gamma" => UnweakenTarget::TopInGamma,
                    "bot-in-delta" => UnweakenTarget::BotInDelta,
                    t => return Err(format!("unknown unweakening target `{t}`")),
                };
                let out = unweaken_special(&d, which).map_err(terr)?;
                self.no_higher(std::slice::from_ref(&out), &d);
                Outputs::plain(vec![out])
            }
            Operation::Invert { input, formula: f, side: s } => {
                let d = self.load(input)?;
                let out = invert(&d, side(s)?, &formula(f)?).map_err(terr)?;
                self.no_higher(&out, &d);
                Outputs::plain(out)
            }
            Operation::Contract { input, formula: f, side: s } => {
                let d = self.load(input)?;
                let out = contract(&d, &formula(f)?, side(s)?).map_err(terr)?;
                self.no_higher(std::slice::from_ref(&out), &d);
                Outputs::plain(vec![out])
            }
            Operation::CutEliminate { left, right, cut_formula, variant: v } => {
                let (l, r) = (self.load(left)?, self.load(right)?);
                let (d, v) = (formula(cut_formula)?, variant(v)?);
                let e = eliminate_cut_with(&l, &r, &d, v, &opts).map_err(terr)?;
                let (side, _) = match v {
                    RuleId::CutA => (Side::Assumption, ()),
                    _ => (Side::Counterassumption, ()),
                };
                let rest = r.conclusion.without(side, &d).expect("figure checked");
                let mut target = rest.clone();
                target.gamma = l.conclusion.gamma.sum(&rest.gamma);
                target.delta = l.conclusion.delta.sum(&rest.delta);
                if e.derivation.conclusion != target {
                    self.fail(format!("cut elimination concluded `{}`, the cut concludes `{target}`", e.derivation.conclusion));
                }
                Outputs { derivations: vec![e.derivation.clone()], elimination: Some(e), outcome: None }
            }
            Operation::Prove { sequent } => {
                let s = parse_sequent(sequent).map_err(|e| e.to_string())?;
                let outcome = prove(&s, &SearchConfig::default());
                let derivations = outcome.proof().cloned().into_iter().collect();
                Outputs { derivations, elimination: None, outcome: Some(outcome) }
            }
        })
    }

    fn compare(&mut self, expected: &Expected, out: &Outputs) {
        let ds = &out.derivations;
        if !expected.derivations.is_empty() {
            if expected.derivations.len() != ds.len() {
                self.fail(format!("expected {} output(s), found {}", expected.derivations.len(), ds.len()));
            }
            for (file, d) in expected.derivations.iter().zip(ds) {
                match self.load(file) {
                    Ok(e) => {
                        if let Some(diff) = first_difference(&e, d) {
                            self.fail(format!("{file}: {diff}"));
                        }
                    }
                    Err(err) => self.fail(err),
                }
            }
        }
        let root = ds.first();
        if let (Some(name), Some(d)) = (&expected.root_rule, root) {
            if d.rule.name() != name {
                self.fail(format!("root rule is {}, expected {name}", d.rule.name()));
            }
        }
        if let (Some(h), Some(d)) = (expected.height, root) {
            if d.height() != h {
                self.fail(format!("height is {}, expected {h}", d.height()));
            }
        }
        if let (Some(text), Some(d)) = (&expected.endsequent, root) {
            match parse_sequent(text) {
                Ok(s) if s == d.conclusion => {}
                Ok(_) => self.fail(format!("endsequent is `{}`, expected `{text}`", d.conclusion)),
                Err(e) => self.fail(format!("expected endsequent `{text}`: {e}")),
            }
        }
        if let Some(want) = &expected.outcome {
            let got = match &out.outcome {
                Some(SearchOutcome::Proved(_)) => "proved",
                Some(SearchOutcome::Refuted) => "refuted",
                Some(SearchOutcome::BoundExhausted) => "bound-exhausted",
                None => "none",
            };
            if got != want {
                self.fail(format!("search outcome is {got}, expected {want}"));
            }
        }
        if let Some(e) = &out.elimination {
            let first = &e.log[0];
            if let Some(label) = &expected.first_case {
                if first.case.to_string() != *label {
                    self.fail(format!("outermost cut handled by case {}, expected {label}", first.case));
                }
            }
            if let Some(subs) = &expected.subcuts {
                let children: Vec<_> = e.log.iter().filter(|s| s.parent == Some(0)).collect();
                if children.len() != subs.len() {
                    self.fail(format!("{} direct sub-cut(s), expected {}", children.len(), subs.len()));
                }
                for (i, (c, want)) in children.iter().zip(subs).enumerate() {
                    let v = if c.variant == RuleId::CutA { "a" } else { "c" };
                    if v != want.variant || c.cut_formula.to_string() != want.cut_formula {
                        self.fail(format!(
                            "sub-cut {i} is Cut{v} on {}, expected Cut{} on {}",
                            c.cut_formula, want.variant, want.cut_formula
                        ));
                    }
                    if let Some(h) = want.cut_height {
                        if c.cut_height != h {
                            self.fail(format!("sub-cut {i} has cut-height {}, expected {h}", c.cut_height));
                        }
                    }
                }
            }
            for s in &e.log[1..] {
                let parent = &e.log[s.parent.expect("non-root steps have parents")];
                if s.measure() >= parent.measure() {
                    self.fail(format!("measure did not decrease from step {} to step {}", parent.id, s.id));
                }
            }
        }
    }
}

struct Outputs {
    derivations: Vec<Derivation>,
    elimination: Option<crate::transform::Elimination>,
    outcome: Option<SearchOutcome>,
}

impl Outputs {
    fn plain(derivations: Vec<Derivation>) -> Outputs {
        Outputs { derivations, elimination: None, outcome: None }
    }
}

/// Runs one case against the files in `dir`.
pub fn run_golden(case: &GoldenCase, dir: &Path) -> GoldenReport {
    let mut run = Run { dir, report: GoldenReport { id: case.id.clone(), ..GoldenReport::default() } };
    match run.execute(&case.operation) {
        Ok(out) => {
            run.validate(&out.derivations);
            run.compare(&case.expected, &out);
            for d in &out.derivations {
                run.record(d);
            }
            if let Some(e) = &out.elimination {
                run.report.cut_case = Some(e.log[0].case.id());
            }
        }
        Err(e) => run.fail(e),
    }
    run.report
}

/// Random derivations pushed through the checker, weakening, duality, the
/// file format and the search oracle; returns one message per failure.
pub fn random_regression(seed: u64, count: usize) -> Vec<String> {
    let mut failures = Vec::new();
    let oracle = SearchConfig::default();
    for i in 0..count as u64 {
        let d = random_derivation(seed.wrapping_add(i), 12);
        let tag = format!("seed {}", seed.wrapping_add(i));
        if let Some(v) = check_derivation(&d).first_violation {
            failures.push(format!("{tag}: generated derivation invalid {v}"));
            continue;
        }
        let dual = d.dual();
        if !check_derivation(&dual).valid || dual.height() != d.height() {
            failures.push(format!("{tag}: dual derivation is not a valid derivation of equal height"));
        }
        match weaken(&d, &Formula::atom("w"), Side::Counterassumption) {
            Ok(w) if check_derivation(&w).valid && w.height() <= d.height() => {}
            _ => failures.push(format!("{tag}: weakening failed")),
        }
        let text = derivation_to_data(&d);
        match derivation_from_data(&text) {
            Ok(back) if back == d && derivation_to_data(&back) == text => {}
            _ => failures.push(format!("{tag}: derivation file does not round-trip")),
        }
        if !prove(&d.conclusion, &oracle).is_proved() {
            failures.push(format!("{tag}: search finds no proof of `{}`", d.conclusion));
        }
    }
    failures
}
