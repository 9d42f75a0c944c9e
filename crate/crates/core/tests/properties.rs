//! Invariants over generated formulas, sequents and derivations.

use bint::format::{derivation_from_data, derivation_to_data};
use bint::kernel::{backward_expansions, check_derivation, check_rule_instance, Context, Derivation, Polarity, Sequent, Side};
use bint::search::{prove, random_derivation, SearchConfig};
use bint::syntax::{parse_formula, Formula};
use bint::transform::{contract, invert, inverted_sequents, weaken};
use proptest::prelude::*;

fn formula() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        Just(Formula::Bottom),
        Just(Formula::Top),
        prop::sample::select(vec!["p", "q", "r"]).prop_map(Formula::atom),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        (0..4usize, inner.clone(), inner).prop_map(|(c, a, b)| match c {
            0 => Formula::and(a, b),
            1 => Formula::or(a, b),
            2 => Formula::imp(a, b),
            _ => Formula::coimp(a, b),
        })
    })
}

fn context() -> impl Strategy<Value = Context> {
    prop::collection::vec(formula(), 0..3).prop_map(|v| v.into_iter().collect())
}

fn sequent() -> impl Strategy<Value = Sequent> {
    (context(), context(), any::<bool>(), formula()).prop_map(|(g, d, plus, c)| {
        Sequent::new(g, d, if plus { Polarity::Plus } else { Polarity::Minus }, c)
    })
}

/// Weight computed from the printed text: atoms count 1, each binary token 1.
fn weight_from_text(f: &Formula) -> usize {
    let text = f.to_string();
    let binaries = ["/\\", "\\/", "->", "-<"].iter().map(|t| text.matches(t).count()).sum::<usize>();
    let atoms = text.split(|c: char| !c.is_ascii_alphanumeric()).filter(|w| !w.is_empty() && *w != "F" && *w != "T").count();
    atoms + binaries
}

fn derivation() -> impl Strategy<Value = Derivation> {
    (any::<u64>(), 1..16usize).prop_map(|(seed, budget)| random_derivation(seed, budget))
}

proptest! {
    #[test]
    fn formulas_round_trip(f in formula()) {
        let text = f.to_string();
        let back = parse_formula(&text).unwrap();
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(back, f);
    }

    #[test]
    fn weight_counts_atoms_and_connectives(f in formula()) {
        prop_assert_eq!(f.weight(), weight_from_text(&f));
    }

    #[test]
    fn formula_duality_is_an_involution(f in formula()) {
        prop_assert_eq!(f.dual().dual(), f.clone());
        prop_assert_eq!(f.dual().weight(), f.weight());
    }

    #[test]
    fn every_expansion_is_accepted_by_the_checker(s in sequent()) {
        for e in backward_expansions(&s) {
            let p = check_rule_instance(&s, e.rule, &e.premises, &Default::default());
            prop_assert!(p.is_ok(), "{} at {}: {:?}", e.rule, s, p);
            prop_assert!(e.premises.iter().all(|q| q.subformulas().iter().all(|f| s.subformulas().contains(f))));
        }
    }

    #[test]
    fn verdicts_are_dual_invariant(s in sequent()) {
        let cfg = SearchConfig { max_depth: 30, ..SearchConfig::default() };
        prop_assert_eq!(prove(&s, &cfg).is_proved(), prove(&s.dual(), &cfg).is_proved());
    }

    #[test]
    fn search_proofs_check(s in sequent()) {
        if let Some(d) = prove(&s, &SearchConfig::default()).proof() {
            let r = check_derivation(d);
            prop_assert!(r.valid && r.cut_count == 0);
            prop_assert_eq!(&d.conclusion, &s);
        }
    }

    #[test]
    fn derivation_files_round_trip(d in derivation()) {
        let text = derivation_to_data(&d);
        let back = derivation_from_data(&text).unwrap();
        prop_assert_eq!(derivation_to_data(&back), text);
        prop_assert_eq!(back, d);
    }

    #[test]
    fn dual_derivations_check(d in derivation()) {
        let dual = d.dual();
        prop_assert!(check_derivation(&dual).valid);
        prop_assert_eq!(dual.height(), d.height());
        prop_assert_eq!(&dual.conclusion, &d.conclusion.dual());
    }

    #[test]
    fn weakening_preserves_height(d in derivation(), f in formula(), a in any::<bool>()) {
        let side = if a { Side::Assumption } else { Side::Counterassumption };
        let w = weaken(&d, &f, side).unwrap();
        prop_assert!(check_derivation(&w).valid);
        prop_assert!(w.height() <= d.height());
        prop_assert_eq!(&w.conclusion, &d.conclusion.with(side, f));
    }

    #[test]
    fn inversion_preserves_height(d in derivation()) {
        for side in [Side::Assumption, Side::Counterassumption] {
            for f in d.conclusion.side(side).formulas().filter(|f| f.is_compound()) {
                let outs = invert(&d, side, f).unwrap();
                let want = inverted_sequents(&d.conclusion, side, f).unwrap();
                prop_assert_eq!(outs.len(), want.len());
                for (o, w) in outs.iter().zip(&want) {
                    prop_assert!(check_derivation(o).valid && o.height() <= d.height());
                    prop_assert_eq!(&o.conclusion, w);
                }
            }
        }
    }

    #[test]
    fn contraction_preserves_height(d in derivation()) {
        for side in [Side::Assumption, Side::Counterassumption] {
            for f in d.conclusion.side(side).formulas() {
                let doubled = weaken(&d, f, side).unwrap();
                let once = contract(&doubled, f, side).unwrap();
                prop_assert!(check_derivation(&once).valid && once.height() <= doubled.height());
                prop_assert_eq!(&once.conclusion, &d.conclusion);
            }
        }
    }
}
