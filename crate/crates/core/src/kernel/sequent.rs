use std::fmt;

use super::{Context, Polarity, Side};
use crate::syntax::{parse_formula, Formula, ParseError, ParseErrorKind};

/// `(Γ; Δ) ⊢± C`: assumptions, counterassumptions, polarity and succedent.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Sequent {
    pub gamma: Context,
    pub delta: Context,
    pub polarity: Polarity,
    pub succedent: Formula,
}

impl Sequent {
    pub fn new(gamma: Context, delta: Context, polarity: Polarity, succedent: Formula) -> Sequent {
        Sequent { gamma, delta, polarity, succedent }
    }

    pub fn side(&self, side: Side) -> &Context {
        match side {
            Side::Assumption => &self.gamma,
            Side::Counterassumption => &self.delta,
        }
    }

    pub fn side_mut(&mut self, side: Side) -> &mut Context {
        match side {
            Side::Assumption => &mut self.gamma,
            Side::Counterassumption => &mut self.delta,
        }
    }

    /// The same sequent with one more occurrence of `f` on `side`.
    pub fn with(&self, side: Side, f: Formula) -> Sequent {
        let mut out = self.clone();
        out.side_mut(side).insert(f);
        out
    }

    /// One occurrence of `f` removed from `side`, or `None` if absent.
    pub fn without(&self, side: Side, f: &Formula) -> Option<Sequent> {
        let mut out = self.clone();
        out.side_mut(side).remove(f).then_some(out)
    }

    /// Same contexts, new polarity and succedent.
    pub fn with_goal(&self, polarity: Polarity, succedent: Formula) -> Sequent {
        Sequent { gamma: self.gamma.clone(), delta: self.delta.clone(), polarity, succedent }
    }

    /// Swap Γ and Δ, flip the polarity, dualize every formula.
    pub fn dual(&self) -> Sequent {
        Sequent {
            gamma: self.delta.map(Formula::dual),
            delta: self.gamma.map(Formula::dual),
            polarity: self.polarity.flip(),
            succedent: self.succedent.dual(),
        }
    }

    /// Every count capped at one.
    pub fn to_set(&self) -> Sequent {
        Sequent {
            gamma: self.gamma.to_set(),
            delta: self.delta.to_set(),
            polarity: self.polarity,
            succedent: self.succedent.clone(),
        }
    }

    /// Every formula occurring anywhere in the sequent, with subformulas.
    pub fn subformulas(&self) -> Vec<Formula> {
        let mut all = std::collections::BTreeSet::new();
        for f in self.gamma.formulas().chain(self.delta.formulas()).chain([&self.succedent]) {
            all.extend(f.subformulas());
        }
        all.into_iter().collect()
    }
}

fn write_list(ctx: &Context) -> String {
    ctx.occurrences().map(|f| f.to_string()).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let gamma = write_list(&self.gamma);
        if !gamma.is_empty() {
            parts.push(gamma);
        }
        parts.push(";".to_string());
        let delta = write_list(&self.delta);
        if !delta.is_empty() {
            parts.push(delta);
        }
        parts.push(self.polarity.turnstile().to_string());
        parts.push(self.succedent.to_string());
        f.write_str(&parts.join(" "))
    }
}

impl std::str::FromStr for Sequent {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_sequent(s)
    }
}

fn parse_list(text: &str, offset: usize) -> Result<Context, ParseError> {
    let mut out = Context::new();
    if text.trim().is_empty() {
        return Ok(out);
    }
    let mut start = 0;
    for piece in text.split(',') {
        out.insert(parse_formula(piece).map_err(|e| e.shifted(offset + start))?);
        start += piece.len() + 1;
    }
    Ok(out)
}

/// Parses `Gamma ; Delta |-+ C` or `Gamma ; Delta |-- C`.
pub fn parse_sequent(text: &str) -> Result<Sequent, ParseError> {
    let semi = text.find(';').ok_or(ParseError {
        position: text.len(),
        kind: ParseErrorKind::MissingSemicolon,
    })?;
    let rest = &text[semi + 1..];
    let (turn, polarity) = match (rest.find("|-+"), rest.find("|--")) {
        (Some(i), None) => (i, Polarity::Plus),
        (None, Some(i)) => (i, Polarity::Minus),
        (Some(i), Some(j)) => {
            return Err(ParseError {
                position: semi + 1 + i.max(j),
                kind: ParseErrorKind::DuplicateTurnstile,
            })
        }
        (None, None) => {
            return Err(ParseError { position: text.len(), kind: ParseErrorKind::MissingTurnstile })
        }
    };
    let after = semi + 1 + turn + 3;
    if text[after..].contains("|-") {
        let pos = after + text[after..].find("|-").unwrap_or(0);
        return Err(ParseError { position: pos, kind: ParseErrorKind::DuplicateTurnstile });
    }
    let gamma = parse_list(&text[..semi], 0)?;
    let delta = parse_list(&rest[..turn], semi + 1)?;
    let succedent = parse_formula(&text[after..]).map_err(|e| e.shifted(after))?;
    Ok(Sequent { gamma, delta, polarity, succedent })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn print_forms() {
        let s = parse_sequent(";|-+ p->p").unwrap();
        assert_eq!(s.to_string(), "; |-+ p -> p");
        let s = parse_sequent("F -> F ; |-+ F").unwrap();
        assert_eq!(s.to_string(), "F -> F ; |-+ F");
        let s = parse_sequent("p;q|--r").unwrap();
        assert_eq!(s.to_string(), "p ; q |-- r");
    }

    #[test]
    fn duplicates_become_counts() {
        let s = parse_sequent("q, p, p ; |-+ p").unwrap();
        assert_eq!(s.gamma.count(&Formula::atom("p")), 2);
        assert_eq!(s.to_string(), "p, p, q ; |-+ p");
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_sequent("p |-+ p").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::MissingSemicolon);
        let e = parse_sequent("p ; q").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::MissingTurnstile);
        let e = parse_sequent("p, & ; |-+ p").unwrap_err();
        assert_eq!(e.position, 3);
        let e = parse_sequent("; q |-+ (p").unwrap_err();
        assert_eq!(e.position, 8);
        let e = parse_sequent("p, ; |-+ p").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Empty);
    }

    #[test]
    fn dual_swaps_sides() {
        let s = parse_sequent("p -> q ; r |-+ T").unwrap();
        assert_eq!(s.dual().to_string(), "r ; q -< p |-- F");
        assert_eq!(s.dual().dual(), s);
    }
}
