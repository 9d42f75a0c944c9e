use std::collections::BTreeMap;

use crate::syntax::Formula;

/// A finite multiset of formulas, stored as a count map. Iteration follows
/// the canonical formula order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Context {
    counts: BTreeMap<Formula, usize>,
}

impl Context {
    pub fn new() -> Context {
        Context::default()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Total number of occurrences.
    pub fn len(&self) -> usize {
        self.counts.values().sum()
    }

    /// Number of distinct formulas.
    pub fn distinct(&self) -> usize {
        self.counts.len()
    }

    pub fn count(&self, f: &Formula) -> usize {
        self.counts.get(f).copied().unwrap_or(0)
    }

    pub fn contains(&self, f: &Formula) -> bool {
        self.counts.contains_key(f)
    }

    pub fn insert(&mut self, f: Formula) {
        *self.counts.entry(f).or_insert(0) += 1;
    }

    pub fn insert_n(&mut self, f: Formula, n: usize) {
        if n > 0 {
            *self.counts.entry(f).or_insert(0) += n;
        }
    }

    /// Removes one occurrence; returns false if there was none.
    pub fn remove(&mut self, f: &Formula) -> bool {
        match self.counts.get_mut(f) {
            None => false,
            Some(n) if *n > 1 => {
                *n -= 1;
                true
            }
            Some(_) => {
                self.counts.remove(f);
                true
            }
        }
    }

    pub fn with(&self, f: Formula) -> Context {
        let mut out = self.clone();
        out.insert(f);
        out
    }

    /// `self` with one occurrence of `f` removed, or `None` if absent.
    pub fn without(&self, f: &Formula) -> Option<Context> {
        let mut out = self.clone();
        out.remove(f).then_some(out)
    }

    /// Distinct formulas with their counts.
    pub fn iter(&self) -> impl Iterator<Item = (&Formula, usize)> + '_ {
        self.counts.iter().map(|(f, n)| (f, *n))
    }

    /// Distinct formulas.
    pub fn formulas(&self) -> impl Iterator<Item = &Formula> + '_ {
        self.counts.keys()
    }

    /// Every occurrence, repeated according to its count.
    pub fn occurrences(&self) -> impl Iterator<Item = &Formula> + '_ {
        self.counts
            .iter()
            .flat_map(|(f, n)| std::iter::repeat_n(f, *n))
    }

    /// Multiset sum.
    pub fn sum(&self, other: &Context) -> Context {
        let mut out = self.clone();
        for (f, n) in other.iter() {
            out.insert_n(f.clone(), n);
        }
        out
    }

    /// Multiset difference (truncated at zero).
    pub fn monus(&self, other: &Context) -> Context {
        let mut out = Context::new();
        for (f, n) in self.iter() {
            let m = n.saturating_sub(other.count(f));
            out.insert_n(f.clone(), m);
        }
        out
    }

    /// Pointwise maximum of counts.
    pub fn max_union(&self, other: &Context) -> Context {
        let mut out = self.clone();
        for (f, n) in other.iter() {
            let have = out.count(f);
            if n > have {
                out.insert_n(f.clone(), n - have);
            }
        }
        out
    }

    pub fn is_submultiset_of(&self, other: &Context) -> bool {
        self.iter().all(|(f, n)| other.count(f) >= n)
    }

    /// The same formulas with every count set to one.
    pub fn to_set(&self) -> Context {
        Context { counts: self.counts.keys().map(|f| (f.clone(), 1)).collect() }
    }

    pub fn map(&self, mut g: impl FnMut(&Formula) -> Formula) -> Context {
        let mut out = Context::new();
        for (f, n) in self.iter() {
            out.insert_n(g(f), n);
        }
        out
    }
}

impl FromIterator<Formula> for Context {
    fn from_iter<I: IntoIterator<Item = Formula>>(iter: I) -> Self {
        let mut out = Context::new();
        for f in iter {
            out.insert(f);
        }
        out
    }
}

impl<const N: usize> From<[Formula; N]> for Context {
    fn from(items: [Formula; N]) -> Self {
        items.into_iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Formula {
        Formula::atom("p")
    }

    fn q() -> Formula {
        Formula::atom("q")
    }

    #[test]
    fn multiset_semantics() {
        let a: Context = [p(), q(), p()].into();
        let b: Context = [q(), p(), p()].into();
        assert_eq!(a, b);
        assert_eq!(a.count(&p()), 2);
        assert_eq!(a.len(), 3);
        assert_eq!(a.distinct(), 2);
        assert_ne!(a, Context::from([p(), q()]));
    }

    #[test]
    fn remove_and_without() {
        let mut a: Context = [p(), p()].into();
        assert!(a.remove(&p()));
        assert_eq!(a.count(&p()), 1);
        assert!(a.remove(&p()));
        assert!(!a.remove(&p()));
        assert!(a.is_empty());
        assert!(Context::new().without(&q()).is_none());
    }

    #[test]
    fn arithmetic() {
        let a: Context = [p(), p(), q()].into();
        let b: Context = [p(), q(), q()].into();
        assert_eq!(a.sum(&b).count(&p()), 3);
        assert_eq!(a.monus(&b), Context::from([p()]));
        assert_eq!(a.max_union(&b), Context::from([p(), p(), q(), q()]));
        assert!(Context::from([p()]).is_submultiset_of(&a));
        assert!(!b.is_submultiset_of(&a));
        assert_eq!(a.to_set(), Context::from([p(), q()]));
    }
}
