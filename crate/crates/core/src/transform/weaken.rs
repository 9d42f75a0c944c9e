use super::{rebuild, require_cut_free, Options, Result, TransformError};
use crate::kernel::{Context, Derivation, Side};
use crate::syntax::Formula;

/// Adds `extra` to one side of every sequent in `d`. Rules and shape are
/// unchanged, so the height is too.
pub fn weaken(d: &Derivation, extra: &Formula, side: Side) -> Result<Derivation> {
    let one = Context::from([extra.clone()]);
    match side {
        Side::Assumption => weaken_many(d, &one, &Context::new()),
        Side::Counterassumption => weaken_many(d, &Context::new(), &one),
    }
}

/// Weakening by whole multisets on both sides at once.
pub fn weaken_many(d: &Derivation, gamma: &Context, delta: &Context) -> Result<Derivation> {
    require_cut_free(d)?;
    weaken_unchecked(d, gamma, delta, &Options::default())
}

pub(crate) fn weaken_unchecked(d: &Derivation, gamma: &Context, delta: &Context, opts: &Options) -> Result<Derivation> {
    if gamma.is_empty() && delta.is_empty() {
        return Ok(d.clone());
    }
    let mut s = d.conclusion.clone();
    s.gamma = s.gamma.sum(gamma);
    s.delta = s.delta.sum(delta);
    let premises = d
        .premises
        .iter()
        .map(|p| weaken_unchecked(p, gamma, delta, opts))
        .collect::<Result<Vec<_>>>()?;
    rebuild(d, s, premises, opts)
}

/// Which weakened-in formula [`unweaken_special`] removes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnweakenTarget {
    /// One `⊤` among the assumptions.
    TopInGamma,
    /// One `⊥` among the counterassumptions.
    BotInDelta,
}

impl UnweakenTarget {
    fn side_and_formula(self) -> (Side, Formula) {
        match self {
            UnweakenTarget::TopInGamma => (Side::Assumption, Formula::Top),
            UnweakenTarget::BotInDelta => (Side::Counterassumption, Formula::Bottom),
        }
    }
}

/// Drops one `⊤` from Γ (or `⊥` from Δ) everywhere. No rule uses such an
/// occurrence, so it survives to every node and can be removed throughout.
pub fn unweaken_special(d: &Derivation, which: UnweakenTarget) -> Result<Derivation> {
    require_cut_free(d)?;
    unweaken_unchecked(d, which, &Options::default())
}

pub(crate) fn unweaken_unchecked(d: &Derivation, which: UnweakenTarget, opts: &Options) -> Result<Derivation> {
    let (side, f) = which.side_and_formula();
    let s = d
        .conclusion
        .without(side, &f)
        .ok_or(TransformError::OccurrenceNotFound { side, formula: f.clone() })?;
    let premises = d
        .premises
        .iter()
        .map(|p| unweaken_unchecked(p, which, opts))
        .collect::<Result<Vec<_>>>()?;
    rebuild(d, s, premises, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{check_derivation, parse_sequent, RuleId};
    use crate::syntax::parse_formula;

    #[test]
    fn axiom_stays_axiom() {
        let d = Derivation::leaf(RuleId::RfPlus, parse_sequent("p ; |-+ p").unwrap());
        let w = weaken(&d, &Formula::atom("q"), Side::Assumption).unwrap();
        assert_eq!(w.rule, RuleId::RfPlus);
        assert_eq!(w.conclusion.to_string(), "p, q ; |-+ p");
    }

    #[test]
    fn top_round_trip() {
        let d = crate::transform::derive_identity(
            &Context::new(),
            &Context::new(),
            &parse_formula("p -> q").unwrap(),
            crate::kernel::Polarity::Plus,
        );
        let w = weaken(&d, &Formula::Top, Side::Assumption).unwrap();
        let back = unweaken_special(&w, UnweakenTarget::TopInGamma).unwrap();
        assert_eq!(back, d);
        assert!(check_derivation(&back).valid);
    }

    #[test]
    fn missing_top_is_reported() {
        let d = Derivation::leaf(RuleId::RfPlus, parse_sequent("p ; |-+ p").unwrap());
        assert!(matches!(
            unweaken_special(&d, UnweakenTarget::TopInGamma),
            Err(TransformError::OccurrenceNotFound { .. })
        ));
    }
}
