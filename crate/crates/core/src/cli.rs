//! The `bint` command line. [`run`] takes the arguments and output streams
//! explicitly so it can be driven from tests.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::corpus::{load_derivation, random_regression, rewrite_corpus, run_corpus};
use crate::format::{derivation_to_data, derivation_to_latex, derivation_to_tree};
use crate::kernel::{check_derivation, parse_sequent, Context, Derivation, Polarity, RuleId, Side};
use crate::search::{prove, SearchConfig, SearchOutcome};
use crate::syntax::{parse_formula, Formula};
use crate::transform::{contract, derive_identity, eliminate_cut_with, invert, weaken, Options};

#[derive(Parser, Debug)]
#[command(name = "bint", version, about = "Checker, prover and proof transformations for bi-intuitionistic sequents")]
struct Cli {
    /// Depth bound for proof search.
    #[arg(long, global = true, default_value_t = 50)]
    max_depth: usize,
    /// Disable the branch-local loop check in proof search.
    #[arg(long, global = true)]
    no_loop_check: bool,
    /// Print the case log of cut elimination.
    #[arg(long, global = true)]
    trace: bool,
    /// Print derivations as LaTeX inference markup.
    #[arg(long, global = true)]
    latex: bool,
    /// Output format for derivations.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    /// Indented proof tree.
    Text,
    /// The derivation file format.
    Data,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a derivation file.
    Check { file: PathBuf },
    /// Search for a cut-free derivation of a sequent, e.g. "p ; |-+ p \/ q".
    Prove { sequent: String },
    /// Expand the identity sequent (Γ, C; Δ) ⊢⁺ C or (Γ; Δ, C) ⊢⁻ C.
    Identity {
        /// The side contexts "Γ ; Δ", comma-separated.
        contexts: String,
        formula: String,
        /// `+` or `-`.
        polarity: String,
    },
    /// Weaken every sequent of a derivation by a formula.
    Weaken { file: PathBuf, formula: String, side: String },
    /// Remove one of two copies of a formula from a derivation's conclusion.
    Contract { file: PathBuf, formula: String, side: String },
    /// Invert the left rule for a compound formula in the conclusion.
    Invert { file: PathBuf, formula: String, side: String },
    /// Eliminate a cut between two derivation files.
    CutEliminate {
        left: PathBuf,
        right: PathBuf,
        cut_formula: String,
        /// `a` (cut on an assumption) or `c` (cut on a counterassumption).
        variant: String,
    },
    /// Run the golden corpus.
    Golden {
        #[arg(default_value = "corpus")]
        dir: PathBuf,
        /// Rewrite every derivation file in canonical form first.
        #[arg(long)]
        rewrite: bool,
        /// Also push N random derivations (seeded by BINT_SEED) through the
        /// checker, weakening, duality, the file format and search.
        #[arg(long, value_name = "N")]
        random: Option<usize>,
    },
}

/// Exit code for usage or parse errors.
const USAGE: i32 = 2;

enum Failure {
    /// Exit 1: refuted, invalid or failed.
    Negative(String),
    /// Exit 2.
    Usage(String),
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn formula(text: &str) -> Result<Formula, Failure> {
    parse_formula(text).map_err(|e| Failure::Usage(format!("formula `{text}`: {e}")))
}

fn side(text: &str) -> Result<Side, Failure> {
    Side::from_letter(text).ok_or_else(|| Failure::Usage(format!("side must be `a` or `c`, found `{text}`")))
}

fn load(path: &Path) -> Result<Derivation, Failure> {
    load_derivation(path).map_err(usage)
}

fn contexts(text: &str) -> Result<(Context, Context), Failure> {
    let (g, d) = text.split_once(';').ok_or_else(|| Failure::Usage(format!("contexts `{text}` need the form `Γ ; Δ`")))?;
    let list = |t: &str| -> Result<Context, Failure> {
        t.split(',').map(str::trim).filter(|s| !s.is_empty()).map(formula).collect()
    };
    Ok((list(g)?, list(d)?))
}

impl Cli {
    fn render(&self, d: &Derivation) -> String {
        if self.latex {
            return derivation_to_latex(d) + "\n";
        }
        match self.format {
            OutputFormat::Text => derivation_to_tree(d),
            OutputFormat::Data => derivation_to_data(d),
        }
    }

    fn search_config(&self) -> SearchConfig {
        SearchConfig { max_depth: self.max_depth, loop_check: !self.no_loop_check, ..SearchConfig::default() }
    }

    fn execute(&self, out: &mut dyn Write) -> Result<(), Failure> {
        let mut emit = |s: String| out.write_all(s.as_bytes()).map_err(|e| Failure::Negative(e.to_string()));
        let opts = Options::default();
        let terr = |e: crate::transform::TransformError| Failure::Negative(e.to_string());
        match &self.command {
            Command::Check { file } => {
                let d = load(file)?;
                let r = check_derivation(&d);
                match r.first_violation {
                    None => emit(format!(
                        "valid, height {}, size {}, cuts {}\nconcludes {}\n",
                        r.height, d.size(), r.cut_count, d.conclusion
                    )),
                    Some(v) => Err(Failure::Negative(format!("invalid {v}"))),
                }
            }
            Command::Prove { sequent } => {
                let s = parse_sequent(sequent).map_err(|e| Failure::Usage(format!("sequent `{sequent}`: {e}")))?;
                match prove(&s, &self.search_config()) {
                    SearchOutcome::Proved(d) => emit(self.render(&d)),
                    SearchOutcome::Refuted => Err(Failure::Negative(format!("Refuted: `{s}` has no derivation"))),
                    SearchOutcome::BoundExhausted => Err(Failure::Negative(format!(
                        "BoundExhausted: no derivation of `{s}` within depth {}",
                        self.max_depth
                    ))),
                }
            }
            Command::Identity { contexts: text, formula: f, polarity } => {
                let (g, dl) = contexts(text)?;
                let pol = Polarity::from_sign(polarity)
                    .ok_or_else(|| Failure::Usage(format!("polarity must be `+` or `-`, found `{polarity}`")))?;
                emit(self.render(&derive_identity(&g, &dl, &formula(f)?, pol)))
            }
            Command::Weaken { file, formula: f, side: s } => {
                let d = weaken(&load(file)?, &formula(f)?, side(s)?).map_err(terr)?;
                emit(self.render(&d))
            }
            Command::Contract { file, formula: f, side: s } => {
                let d = contract(&load(file)?, &formula(f)?, side(s)?).map_err(terr)?;
                emit(self.render(&d))
            }
            Command::Invert { file, formula: f, side: s } => {
                for d in invert(&load(file)?, side(s)?, &formula(f)?).map_err(terr)? {
                    emit(self.render(&d))?;
                }
                Ok(())
            }
            Command::CutEliminate { left, right, cut_formula, variant } => {
                let v = match variant.as_str() {
                    "a" => RuleId::CutA,
                    "c" => RuleId::CutC,
                    _ => return Err(Failure::Usage(format!("cut variant must be `a` or `c`, found `{variant}`"))),
                };
                let e = eliminate_cut_with(&load(left)?, &load(right)?, &formula(cut_formula)?, v, &opts).map_err(terr)?;
                if self.trace {
                    emit(e.trace())?;
                }
                emit(self.render(&e.derivation))
            }
            Command::Golden { dir, rewrite, random } => {
                if *rewrite {
                    for p in rewrite_corpus(dir).map_err(usage)? {
                        emit(format!("rewrote {}\n", p.display()))?;
                    }
                }
                let report = run_corpus(dir).map_err(usage)?;
                let mut failed = 0;
                for r in &report.reports {
                    if r.passed() {
                        emit(format!("ok   {}\n", r.id))?;
                    } else {
                        failed += 1;
                        emit(format!("FAIL {}\n", r.id))?;
                        for d in &r.diffs {
                            emit(format!("       {d}\n"))?;
                        }
                    }
                }
                let cov = &report.coverage;
                if !cov.missing_rules.is_empty() {
                    let names: Vec<_> = cov.missing_rules.iter().map(|r| r.name()).collect();
                    emit(format!("rules never exercised: {}\n", names.join(", ")))?;
                }
                if !cov.missing_cut_cases.is_empty() {
                    emit(format!("cut cases never exercised: {}\n", cov.missing_cut_cases.join(", ")))?;
                }
                if let Some(n) = random {
                    let seed = std::env::var("BINT_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(0);
                    let problems = random_regression(seed, *n);
                    for p in &problems {
                        emit(format!("FAIL random {p}\n"))?;
                    }
                    emit(format!("random: {} of {n} derivations passed (BINT_SEED={seed})\n", n - problems.len()))?;
                    failed += problems.len();
                }
                emit(format!("{} of {} cases passed\n", report.reports.len() - report.failures().count(), report.reports.len()))?;
                if failed == 0 && cov.is_complete() {
                    Ok(())
                } else {
                    Err(Failure::Negative("golden corpus failed".into()))
                }
            }
        }
    }
}

/// Runs the command line; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match cli.execute(out) {
        Ok(()) => 0,
        Err(Failure::Negative(msg)) => {
            let _ = writeln!(err, "{msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            USAGE
        }
    }
}
