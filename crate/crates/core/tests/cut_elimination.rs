use std::collections::HashMap;

use bint::kernel::{check_derivation, RuleId};
use bint::search::{prove, Generator, SearchConfig};
use bint::transform::{eliminate_cut_with, Options};

#[test]
fn random_pairs_eliminate() {
    let mut cases: HashMap<String, usize> = HashMap::new();
    for variant in [RuleId::CutA, RuleId::CutC] {
        let mut g = Generator::new(11);
        for i in 0..200 {
            let (l, r, d) = g.cut_pair(variant, 10);
            let e = eliminate_cut_with(&l, &r, &d, variant, &Options::default())
                .unwrap_or_else(|err| panic!("{variant} pair {i} on {d}: {err}\n{l:?}\n{r:?}"));
            let rep = check_derivation(&e.derivation);
            assert!(rep.valid && rep.cut_count == 0);
            for s in &e.log {
                *cases.entry(s.case.id()).or_default() += 1;
                if let Some(p) = s.parent {
                    assert!(s.measure() < e.log[p].measure());
                }
            }
            assert!(prove(&e.derivation.conclusion, &SearchConfig::default()).is_proved());
        }
    }
    let mut v: Vec<_> = cases.into_iter().collect();
    v.sort();
    eprintln!("{v:?}");
}
