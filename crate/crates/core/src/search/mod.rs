//! Backward proof search over the cut-free rules, and random generation of
//! derivations.
//!
//! Search runs on sequents with duplicates removed: contraction and
//! weakening are admissible, so `(Γ;Δ) ⊢* C` is derivable exactly when its
//! set version is, and a proof of the set version weakens back up. Every
//! premise of every rule is built from subformulas of its conclusion, so
//! there are finitely many set sequents below any goal and the branch-local
//! loop check makes the search terminate.

mod generate;

use std::collections::{HashMap, HashSet};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::kernel::{backward_expansions, closing_axiom, Derivation, Expansion, RuleId, Sequent};
use crate::transform::Options;

pub use generate::{random_derivation, Generator};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Longest branch (in rule applications) the search will build.
    pub max_depth: usize,
    /// Prune a branch when its sequent already occurs below it.
    pub loop_check: bool,
    /// Return a proof of minimal height instead of the first one found.
    pub exhaustive: bool,
    /// Shuffles the order in which equally ranked rules are tried; 0 keeps
    /// the canonical order.
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { max_depth: 50, loop_check: true, exhaustive: false, seed: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)] // returned once per search
pub enum SearchOutcome {
    Proved(Derivation),
    /// Every backward expansion failed without hitting the depth bound: the
    /// sequent is not derivable.
    Refuted,
    /// No proof within `max_depth`.
    BoundExhausted,
}

impl SearchOutcome {
    pub fn is_proved(&self) -> bool {
        matches!(self, SearchOutcome::Proved(_))
    }

    pub fn proof(&self) -> Option<&Derivation> {
        match self {
            SearchOutcome::Proved(d) => Some(d),
            _ => None,
        }
    }
}

/// Searches for a cut-free derivation of `s`.
pub fn prove(s: &Sequent, cfg: &SearchConfig) -> SearchOutcome {
    let goal = s.to_set();
    let mut searcher = Searcher::new(cfg);
    let bounds: Vec<usize> = if cfg.exhaustive { (0..=cfg.max_depth).collect() } else { vec![cfg.max_depth] };
    let mut outcome = SearchOutcome::BoundExhausted;
    for bound in bounds {
        searcher.bound = bound;
        searcher.depth_failures.clear();
        match searcher.search(&goal, 0) {
            Ok(d) => {
                outcome = SearchOutcome::Proved(weaken_to(&d, s));
                break;
            }
            Err(fail) if !fail.cutoff => {
                outcome = SearchOutcome::Refuted;
                break;
            }
            Err(_) => {}
        }
    }
    outcome
}

/// Why a subsearch failed.
#[derive(Clone, Copy, Debug)]
struct Failure {
    /// Shallowest history position a loop check pruned against.
    floor: usize,
    /// Whether the depth bound cut some branch off.
    cutoff: bool,
}

impl Failure {
    const CUTOFF: Failure = Failure { floor: usize::MAX, cutoff: true };
    const FINAL: Failure = Failure { floor: usize::MAX, cutoff: false };

    fn merge(&mut self, other: Failure) {
        self.floor = self.floor.min(other.floor);
        self.cutoff |= other.cutoff;
    }
}

struct Searcher {
    loop_check: bool,
    bound: usize,
    rng: Option<ChaCha8Rng>,
    proved: HashMap<Sequent, (Derivation, usize)>,
    refuted: HashSet<Sequent>,
    /// Without the loop check: the largest remaining depth at which a
    /// sequent ran into the bound.
    depth_failures: HashMap<Sequent, usize>,
    history: HashMap<Sequent, usize>,
}

fn weaken_to(d: &Derivation, s: &Sequent) -> Derivation {
    let g = s.gamma.monus(&d.conclusion.gamma);
    let dl = s.delta.monus(&d.conclusion.delta);
    crate::transform::weaken::weaken_unchecked(d, &g, &dl, &Options { validate: false })
        .expect("weakening without validation cannot fail")
}

fn rank(e: &Expansion) -> u8 {
    match e.rule {
        RuleId::ImpLa | RuleId::CoimpLc => 3,
        r => r.arity() as u8,
    }
}

impl Searcher {
    fn new(cfg: &SearchConfig) -> Searcher {
        Searcher {
            loop_check: cfg.loop_check,
            bound: cfg.max_depth,
            rng: (cfg.seed != 0).then(|| ChaCha8Rng::seed_from_u64(cfg.seed)),
            proved: HashMap::new(),
            refuted: HashSet::new(),
            depth_failures: HashMap::new(),
            history: HashMap::new(),
        }
    }

    fn expansions(&mut self, s: &Sequent) -> Vec<Expansion> {
        let mut es: Vec<Expansion> = backward_expansions(s).into_iter().filter(|e| !e.rule.is_zero_premise()).collect();
        if let Some(rng) = &mut self.rng {
            es.shuffle(rng);
        }
        es.sort_by_key(rank);
        es
    }

    fn search(&mut self, s: &Sequent, depth: usize) -> Result<Derivation, Failure> {
        let remaining = self.bound - depth;
        if let Some((d, h)) = self.proved.get(s) {
            if *h <= remaining {
                return Ok(d.clone());
            }
        }
        if self.refuted.contains(s) {
            return Err(Failure::FINAL);
        }
        if self.loop_check {
            if let Some(&at) = self.history.get(s) {
                return Err(Failure { floor: at, cutoff: false });
            }
        }
        if let Some(rule) = closing_axiom(s) {
            let d = Derivation::leaf(rule, s.clone());
            self.proved.insert(s.clone(), (d.clone(), 0));
            return Ok(d);
        }
        if remaining == 0 {
            return Err(Failure::CUTOFF);
        }
        if !self.loop_check && self.depth_failures.get(s).is_some_and(|&r| r >= remaining) {
            return Err(Failure::CUTOFF);
        }

        self.history.insert(s.clone(), depth);
        let mut failure = Failure::FINAL;
        let mut found = None;
        'expansions: for e in self.expansions(s) {
            let mut premises = Vec::with_capacity(e.premises.len());
            for p in &e.premises {
                match self.search(&p.to_set(), depth + 1) {
                    Ok(d) => premises.push(weaken_to(&d, p)),
                    Err(f) => {
                        failure.merge(f);
                        continue 'expansions;
                    }
                }
            }
            found = Some(Derivation::new(e.rule, s.clone(), premises));
            break;
        }
        self.history.remove(s);

        if let Some(d) = found {
            let h = d.height();
            self.proved.insert(s.clone(), (d.clone(), h));
            return Ok(d);
        }
        // loops back to this very sequent do not depend on the branch below it
        if failure.floor >= depth {
            failure.floor = usize::MAX;
        }
        if !failure.cutoff && failure.floor == usize::MAX {
            self.refuted.insert(s.clone());
        } else if !self.loop_check && failure.cutoff {
            let r = self.depth_failures.entry(s.clone()).or_insert(0);
            *r = (*r).max(remaining);
        }
        Err(failure)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{check_derivation, parse_sequent};

    fn run(text: &str) -> SearchOutcome {
        prove(&parse_sequent(text).unwrap(), &SearchConfig::default())
    }

    #[test]
    fn identity_implication() {
        let SearchOutcome::Proved(d) = run("; |-+ p -> p") else { panic!("not proved") };
        let r = check_derivation(&d);
        assert!(r.valid && r.cut_count == 0);
        assert_eq!(d.height(), 1);
    }

    #[test]
    fn copying_rule_counterexample() {
        assert!(run("F -> F ; |-+ F -> F").is_proved());
        assert_eq!(run("F -> F ; |-+ F"), SearchOutcome::Refuted);
    }

    #[test]
    fn peirce_fails() {
        assert_eq!(run("; |-+ ((p -> q) -> p) -> p"), SearchOutcome::Refuted);
    }

    #[test]
    fn proof_concludes_the_exact_multiset_sequent() {
        let s = parse_sequent("p, p, q ; r, r |-+ p /\\ q").unwrap();
        let SearchOutcome::Proved(d) = prove(&s, &SearchConfig::default()) else { panic!() };
        assert_eq!(d.conclusion, s);
        assert!(check_derivation(&d).valid);
    }

    #[test]
    fn exhaustive_finds_shorter_proofs() {
        let s = parse_sequent("p /\\ q ; |-+ p \\/ r").unwrap();
        let cfg = SearchConfig { exhaustive: true, ..SearchConfig::default() };
        let d = prove(&s, &cfg).proof().unwrap().clone();
        assert_eq!(d.height(), 2);
    }

    #[test]
    fn no_loop_check_still_proves() {
        let s = parse_sequent("p -> q, p ; |-+ q").unwrap();
        let cfg = SearchConfig { loop_check: false, max_depth: 8, ..SearchConfig::default() };
        assert!(prove(&s, &cfg).is_proved());
    }
}
