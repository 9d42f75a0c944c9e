//! Acceptance criteria 1–9, one PASS/FAIL line each. Runs as a plain binary
//! (no test harness) so the lines are always printed.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use anyhow::{bail, ensure, Context as _, Result};
use bint::corpus::{load_derivation, run_corpus};
use bint::format::{derivation_from_data, derivation_to_data};
use bint::kernel::{
    backward_expansions, check_derivation, check_rule_instance, parse_sequent, Annotation, Context, Derivation,
    Polarity, PrincipalSite, RuleId, Sequent, Side,
};
use bint::search::{prove, Generator, SearchConfig};
use bint::syntax::{parse_formula, Connective, Formula};
use bint::transform::{contract, eliminate_cut_with, invert, inverted_sequents, weaken, weaken_many, Options};

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn corpus_files() -> Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = fs::read_dir(corpus_dir())?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "deriv"))
        .collect();
    files.sort();
    Ok(files)
}

/// The fixed randomized corpus shared by criteria 3, 4, 5 and 7.
fn random_corpus() -> Vec<Derivation> {
    let mut g = Generator::new(2024);
    (0..200).map(|_| g.derivation(14)).collect()
}

// ---------------------------------------------------------------------------
// 1. An independent reading of the rule figures: for each formula of the
// sequent, the premises its rule demands. Written without the library's
// rule table.

type Reading = (RuleId, Option<Formula>, Vec<Sequent>);

fn seq(g: &Context, d: &Context, pol: Polarity, c: &Formula) -> Sequent {
    Sequent::new(g.clone(), d.clone(), pol, c.clone())
}

fn figure_readings(s: &Sequent) -> Vec<Reading> {
    use Formula::*;
    use Polarity::{Minus, Plus};
    use RuleId::*;
    let (g, d, c) = (&s.gamma, &s.delta, &s.succedent);
    let mut out: Vec<Reading> = Vec::new();
    match (s.polarity, c) {
        (Plus, Atom(_)) if g.contains(c) => out.push((RfPlus, None, vec![])),
        (Minus, Atom(_)) if d.contains(c) => out.push((RfMinus, None, vec![])),
        (Plus, Top) => out.push((TopRPlus, None, vec![])),
        (Minus, Bottom) => out.push((BotRMinus, None, vec![])),
        (Plus, And(a, b)) => out.push((AndRPlus, None, vec![seq(g, d, Plus, a), seq(g, d, Plus, b)])),
        (Minus, And(a, b)) => {
            out.push((AndRMinus1, None, vec![seq(g, d, Minus, a)]));
            out.push((AndRMinus2, None, vec![seq(g, d, Minus, b)]));
        }
        (Plus, Or(a, b)) => {
            out.push((OrRPlus1, None, vec![seq(g, d, Plus, a)]));
            out.push((OrRPlus2, None, vec![seq(g, d, Plus, b)]));
        }
        (Minus, Or(a, b)) => out.push((OrRMinus, None, vec![seq(g, d, Minus, a), seq(g, d, Minus, b)])),
        (Plus, Imp(a, b)) => out.push((ImpRPlus, None, vec![seq(&g.with((**a).clone()), d, Plus, b)])),
        (Minus, Imp(a, b)) => out.push((ImpRMinus, None, vec![seq(g, d, Plus, a), seq(g, d, Minus, b)])),
        (Plus, Coimp(a, b)) => out.push((CoimpRPlus, None, vec![seq(g, d, Plus, a), seq(g, d, Minus, b)])),
        (Minus, Coimp(a, b)) => out.push((CoimpRMinus, None, vec![seq(g, &d.with((**b).clone()), Minus, a)])),
        _ => {}
    }
    let pol = s.polarity;
    for f in g.formulas() {
        let rest = g.without(f).unwrap();
        let principal = Some(f.clone());
        match f {
            Bottom => out.push((BotLa, principal, vec![])),
            And(a, b) => out.push((AndLa, principal, vec![seq(&rest.with((**a).clone()).with((**b).clone()), d, pol, c)])),
            Or(a, b) => out.push((
                OrLa,
                principal,
                vec![seq(&rest.with((**a).clone()), d, pol, c), seq(&rest.with((**b).clone()), d, pol, c)],
            )),
            Imp(a, b) => out.push((ImpLa, principal, vec![seq(g, d, Plus, a), seq(&rest.with((**b).clone()), d, pol, c)])),
            Coimp(a, b) => {
                out.push((CoimpLa, principal, vec![seq(&rest.with((**a).clone()), &d.with((**b).clone()), pol, c)]))
            }
            _ => {}
        }
    }
    for f in d.formulas() {
        let rest = d.without(f).unwrap();
        let principal = Some(f.clone());
        match f {
            Top => out.push((TopLc, principal, vec![])),
            And(a, b) => out.push((
                AndLc,
                principal,
                vec![seq(g, &rest.with((**a).clone()), pol, c), seq(g, &rest.with((**b).clone()), pol, c)],
            )),
            Or(a, b) => out.push((OrLc, principal, vec![seq(g, &rest.with((**a).clone()).with((**b).clone()), pol, c)])),
            Imp(a, b) => out.push((ImpLc, principal, vec![seq(&g.with((**a).clone()), &rest.with((**b).clone()), pol, c)])),
            Coimp(a, b) => out.push((CoimpLc, principal, vec![seq(g, d, Minus, b), seq(g, &rest.with((**a).clone()), pol, c)])),
            _ => {}
        }
    }
    out
}

fn library_readings(s: &Sequent) -> Vec<Reading> {
    backward_expansions(s)
        .into_iter()
        .map(|e| {
            let principal = match e.rule.site() {
                PrincipalSite::Context(_) => Some(e.principal().clone()),
                _ => None,
            };
            (e.rule, principal, e.premises)
        })
        .collect()
}

fn sorted(mut v: Vec<Reading>) -> Vec<Reading> {
    v.sort();
    v
}

/// Atoms p, q, the constants, and one connective over those.
fn small_formulas() -> Vec<Formula> {
    let base = vec![Formula::atom("p"), Formula::atom("q"), Formula::Bottom, Formula::Top];
    let mut all = base.clone();
    for c in Connective::ALL {
        for a in &base {
            for b in &base {
                all.push(c.apply(a.clone(), b.clone()));
            }
        }
    }
    all
}

/// All pairs of contexts with at most two occurrences between them.
fn small_context_pairs(fs: &[Formula]) -> Vec<(Context, Context)> {
    let ctx = |items: &[&Formula]| items.iter().map(|f| (*f).clone()).collect::<Context>();
    let mut pairs = vec![(Context::new(), Context::new())];
    for (i, a) in fs.iter().enumerate() {
        pairs.push((ctx(&[a]), Context::new()));
        pairs.push((Context::new(), ctx(&[a])));
        for b in &fs[i..] {
            pairs.push((ctx(&[a, b]), Context::new()));
            pairs.push((Context::new(), ctx(&[a, b])));
        }
        for b in fs {
            pairs.push((ctx(&[a]), ctx(&[b])));
        }
    }
    pairs
}

fn criterion_1() -> Result<String> {
    let start = Instant::now();
    let fs = small_formulas();
    let mut sequents = 0usize;
    let mut readings = 0usize;
    let mut seen = BTreeSet::new();
    for (g, d) in small_context_pairs(&fs) {
        for pol in [Polarity::Plus, Polarity::Minus] {
            for c in &fs {
                let s = seq(&g, &d, pol, c);
                let want = sorted(figure_readings(&s));
                if want != sorted(library_readings(&s)) {
                    bail!("rule table and figure reading disagree at `{s}`");
                }
                for (rule, principal, premises) in want {
                    let annotation = principal.map(Annotation::principal).unwrap_or_default();
                    check_rule_instance(&s, rule, &premises, &annotation)
                        .map_err(|v| anyhow::anyhow!("checker rejects a figure instance at `{s}`: {v}"))?;
                    seen.insert(rule);
                    readings += 1;
                }
                sequents += 1;
            }
        }
    }
    ensure!(seen.len() == 24, "only {} rules occurred", seen.len());
    let took = start.elapsed();
    ensure!(took < Duration::from_secs(60), "took {took:?}");
    Ok(format!("{sequents} sequents, {readings} rule instances agree, {:.1}s", took.as_secs_f64()))
}

// ---------------------------------------------------------------------------

fn criterion_2() -> Result<String> {
    let report = run_corpus(&corpus_dir())?;
    let identity: Vec<_> = report.reports.iter().filter(|r| r.id.starts_with("identity-")).collect();
    ensure!(identity.len() == 46, "expected 19 base and 4 inductive cases at both polarities, found {}", identity.len());
    for r in &identity {
        ensure!(r.passed(), "{}: {:?}", r.id, r.diffs);
        let d = load_derivation(&corpus_dir().join(format!("{}.deriv", r.id)))?;
        let inductive = r.id.starts_with("identity-p-");
        let ok = if inductive { d.height() == 2 } else { d.height() <= 1 };
        ensure!(ok, "{} has height {}", r.id, d.height());
    }
    Ok(format!("{} identity figures reproduced", identity.len()))
}

fn criterion_3(corpus: &[Derivation]) -> Result<String> {
    let extra = [parse_formula("r -> s")?, Formula::Top, parse_formula("p /\\ q")?];
    for (i, d) in corpus.iter().enumerate() {
        for side in [Side::Assumption, Side::Counterassumption] {
            let f = &extra[i % extra.len()];
            let w = weaken(d, f, side)?;
            ensure!(check_derivation(&w).valid, "weakening {i} invalid");
            ensure!(w.conclusion == d.conclusion.with(side, f.clone()), "weakening {i} adds the wrong formula");
            ensure!(w.height() <= d.height(), "weakening {i} grew");
            let many: Context = extra.iter().cloned().collect();
            let (g, dl) = match side {
                Side::Assumption => (many.clone(), Context::new()),
                Side::Counterassumption => (Context::new(), many.clone()),
            };
            let w = weaken_many(d, &g, &dl)?;
            ensure!(check_derivation(&w).valid && w.height() <= d.height(), "multi-weakening {i} failed");
            ensure!(w.conclusion.gamma == d.conclusion.gamma.sum(&g) && w.conclusion.delta == d.conclusion.delta.sum(&dl));
        }
    }
    Ok(format!("{} derivations, both sides, single and multiset weakening", corpus.len()))
}

fn criterion_4(corpus: &[Derivation]) -> Result<String> {
    let mut cases = BTreeSet::new();
    let mut runs = 0;
    for d in corpus {
        for side in [Side::Assumption, Side::Counterassumption] {
            for f in d.conclusion.side(side).formulas() {
                let Some(c) = f.connective() else { continue };
                let outs = invert(d, side, f)?;
                let want = inverted_sequents(&d.conclusion, side, f)?;
                ensure!(outs.iter().map(|o| &o.conclusion).eq(want.iter()), "inversion concluded the wrong sequents");
                for o in &outs {
                    ensure!(check_derivation(o).valid && o.height() <= d.height(), "inversion of {f} failed");
                }
                cases.insert((c, side));
                runs += 1;
            }
        }
    }
    ensure!(cases.len() == 8, "only {} of the eight cases occurred", cases.len());
    let cfg = SearchConfig::default();
    for (text, proved) in [
        ("F -> F ; |-+ F -> F", true),
        ("F -> F ; |-+ F", false),
        ("; T -< T |-- T -< T", true),
        ("; T -< T |-- T", false),
    ] {
        let got = prove(&parse_sequent(text)?, &cfg).is_proved();
        ensure!(got == proved, "`{text}`: expected proved={proved}");
    }
    Ok(format!("{runs} inversions covering all eight cases; negative pair holds"))
}

fn principal_nodes(d: &Derivation, out: &mut BTreeSet<(RuleId, Formula)>) {
    let premises: Vec<Sequent> = d.premises.iter().map(|p| p.conclusion.clone()).collect();
    if let Ok(Some(p)) = check_rule_instance(&d.conclusion, d.rule, &premises, &d.annotation) {
        out.insert((d.rule, p));
    }
    for p in &d.premises {
        principal_nodes(p, out);
    }
}

fn criterion_5(corpus: &[Derivation]) -> Result<String> {
    let mut cases = BTreeSet::new();
    let mut runs = 0;
    for d in corpus {
        let mut principals = BTreeSet::new();
        principal_nodes(d, &mut principals);
        for side in [Side::Assumption, Side::Counterassumption] {
            let fs: Vec<Formula> = d.conclusion.side(side).formulas().cloned().collect();
            for f in fs {
                let doubled = weaken(d, &f, side)?;
                let once = contract(&doubled, &f, side)?;
                ensure!(check_derivation(&once).valid, "contraction of {f} invalid");
                ensure!(once.height() <= doubled.height(), "contraction of {f} grew");
                ensure!(once.conclusion == d.conclusion, "contraction of {f} concluded the wrong sequent");
                if let Some(c) = f.connective() {
                    if principals.contains(&(RuleId::left_rule(c, side), f.clone())) {
                        cases.insert((c, side));
                    }
                }
                runs += 1;
            }
        }
    }
    ensure!(cases.len() == 8, "principal cases covered: {cases:?}");
    Ok(format!("{runs} contractions; principal cases for all four connectives on both sides"))
}

fn criterion_6() -> Result<String> {
    let start = Instant::now();
    let (mut height_up, mut c_to_a, mut a_to_c) = (false, false, false);
    let mut pairs = 0;
    for variant in [RuleId::CutA, RuleId::CutC] {
        let mut g = Generator::new(31);
        for i in 0..200 {
            let (l, r, d) = g.cut_pair(variant, 18);
            let e = eliminate_cut_with(&l, &r, &d, variant, &Options::default())
                .with_context(|| format!("{variant} pair {i}"))?;
            let rep = check_derivation(&e.derivation);
            ensure!(rep.valid && rep.cut_count == 0, "{variant} pair {i}: output invalid or not cut-free");
            let side = if variant == RuleId::CutA { Side::Assumption } else { Side::Counterassumption };
            let rest = r.conclusion.without(side, &d).context("cut formula missing")?;
            let want = Sequent::new(
                l.conclusion.gamma.sum(&rest.gamma),
                l.conclusion.delta.sum(&rest.delta),
                rest.polarity,
                rest.succedent.clone(),
            );
            ensure!(e.derivation.conclusion == want, "{variant} pair {i}: wrong endsequent");
            for s in &e.log[1..] {
                let p = &e.log[s.parent.unwrap()];
                ensure!(s.measure() < p.measure(), "{variant} pair {i}: measure did not decrease");
                height_up |= s.weight < p.weight && s.cut_height > p.cut_height;
                let case = p.case.id();
                c_to_a |= case == "5.3" && p.variant == RuleId::CutC && s.variant == RuleId::CutA;
                a_to_c |= case == "5.4" && p.variant == RuleId::CutA && s.variant == RuleId::CutC;
            }
            ensure!(prove(&e.derivation.conclusion, &SearchConfig::default()).is_proved(), "oracle disagrees");
            pairs += 1;
        }
    }
    ensure!(height_up, "no step traded weight for cut-height");
    ensure!(c_to_a && a_to_c, "cross-variant replacements missing (5.3: {c_to_a}, 5.4: {a_to_c})");
    let took = start.elapsed();
    ensure!(took < Duration::from_secs(300));
    Ok(format!("{pairs} pairs, {:.1}s", took.as_secs_f64()))
}

fn suite() -> Vec<(&'static str, bool)> {
    vec![
        ("; |-+ p -> q -> p", true),
        ("; |-+ (p -> q -> r) -> (p -> q) -> p -> r", true),
        ("; |-+ p /\\ q -> q /\\ p", true),
        ("; |-+ p \\/ q -> q \\/ p", true),
        ("; |-+ p /\\ q -> p", true),
        ("; |-+ p -> p \\/ q", true),
        ("; |-+ p -> q -> p /\\ q", true),
        ("; |-+ (p -> r) -> (q -> r) -> p \\/ q -> r", true),
        ("; |-+ p /\\ (q \\/ r) -> p /\\ q \\/ p /\\ r", true),
        ("; |-+ (p -> q) -> (q -> r) -> p -> r", true),
        ("; |-+ ((p -> q) -> p) -> p", false),
        ("; |-+ p \\/ (p -> F)", false),
    ]
}

fn criterion_7(corpus: &[Derivation]) -> Result<String> {
    let mut all: Vec<Derivation> = corpus.to_vec();
    for f in corpus_files()? {
        all.push(load_derivation(&f)?);
    }
    for d in &all {
        let dual = d.dual();
        ensure!(check_derivation(&dual).valid, "dual of `{}` invalid", d.conclusion);
        ensure!(dual.height() == d.height(), "dual of `{}` changed height", d.conclusion);
        ensure!(dual.dual() == *d, "duality is not an involution");
    }
    let cfg = SearchConfig::default();
    let mut sequents: Vec<Sequent> = suite().iter().map(|(t, _)| parse_sequent(t)).collect::<Result<_, _>>()?;
    sequents.extend(["F -> F ; |-+ F", "p -< q ; |-+ p", "; p |-- p /\\ q", "; |-- p -< (p \\/ q)"].map(|t| parse_sequent(t).unwrap()));
    for s in &sequents {
        ensure!(prove(s, &cfg).is_proved() == prove(&s.dual(), &cfg).is_proved(), "verdict on `{s}` is not dual-invariant");
    }
    Ok(format!("{} derivations dualized, {} verdicts dual-invariant", all.len(), sequents.len()))
}

fn criterion_8() -> Result<String> {
    let cfg = SearchConfig::default();
    let mut slowest = Duration::ZERO;
    for (text, provable) in suite() {
        let s = parse_sequent(text)?;
        let start = Instant::now();
        let outcome = prove(&s, &cfg);
        let took = start.elapsed();
        slowest = slowest.max(took);
        ensure!(outcome.is_proved() == provable, "`{text}`: expected proved={provable}");
        if let Some(d) = outcome.proof() {
            ensure!(check_derivation(d).valid && d.conclusion == s);
        }
        ensure!(took < Duration::from_secs(1), "`{text}` took {took:?}");
    }
    Ok(format!("10 theorems proved, Peirce and excluded middle refuted; slowest {:.1} ms", slowest.as_secs_f64() * 1e3))
}

fn criterion_9(corpus: &[Derivation]) -> Result<String> {
    let mut formulas = BTreeMap::new();
    let mut files = 0;
    for path in corpus_files()? {
        let text = fs::read_to_string(&path)?;
        let d = derivation_from_data(&text)?;
        ensure!(derivation_to_data(&d) == text, "{} does not round-trip", path.display());
        for n in d.nodes() {
            for f in n.conclusion.gamma.formulas().chain(n.conclusion.delta.formulas()).chain([&n.conclusion.succedent]) {
                formulas.insert(f.to_string(), f.clone());
            }
        }
        files += 1;
    }
    for d in corpus {
        let text = derivation_to_data(d);
        ensure!(derivation_from_data(&text)? == *d, "random derivation does not round-trip");
        formulas.insert(d.conclusion.succedent.to_string(), d.conclusion.succedent.clone());
    }
    for (text, f) in &formulas {
        let back = parse_formula(text)?;
        ensure!(back == *f && back.to_string() == *text, "`{text}` does not round-trip");
    }
    Ok(format!("{files} files and {} formulas round-trip", formulas.len()))
}

type Criterion<'a> = Box<dyn Fn() -> Result<String> + 'a>;

fn main() {
    let corpus = random_corpus();
    let criteria: Vec<(&str, Criterion)> = vec![
        ("rule-table completeness", Box::new(criterion_1)),
        ("identity golden suite", Box::new(criterion_2)),
        ("height-preserving weakening", Box::new(|| criterion_3(&corpus))),
        ("inversion", Box::new(|| criterion_4(&corpus))),
        ("height-preserving contraction", Box::new(|| criterion_5(&corpus))),
        ("cut elimination", Box::new(criterion_6)),
        ("duality", Box::new(|| criterion_7(&corpus))),
        ("regression suite", Box::new(criterion_8)),
        ("round-trips", Box::new(|| criterion_9(&corpus))),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {}: PASS  {name} — {detail}", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} — {e:#}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
