use std::fmt;

use super::{Polarity, Side};
use crate::syntax::Connective;

/// The 24 primitive rules followed by the two cut rules.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum RuleId {
    RfPlus,
    RfMinus,
    BotLa,
    TopLc,
    BotRMinus,
    TopRPlus,
    AndRPlus,
    AndRMinus1,
    AndRMinus2,
    AndLa,
    AndLc,
    OrRPlus1,
    OrRPlus2,
    OrRMinus,
    OrLa,
    OrLc,
    ImpRPlus,
    ImpRMinus,
    ImpLa,
    ImpLc,
    CoimpRPlus,
    CoimpRMinus,
    CoimpLa,
    CoimpLc,
    CutA,
    CutC,
}

/// Where a rule finds its principal formula.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PrincipalSite {
    /// The succedent, at the given polarity.
    Succedent(Polarity),
    /// A context formula on the given side; any polarity.
    Context(Side),
    /// Rf⁺/Rf⁻: an atomic succedent also present on the given side.
    Reflexivity(Side, Polarity),
    /// Cut rules have a cut formula, not a principal formula.
    None,
}

use RuleId::*;

impl RuleId {
    pub const ALL: [RuleId; 26] = [
        RfPlus, RfMinus, BotLa, TopLc, BotRMinus, TopRPlus, AndRPlus, AndRMinus1, AndRMinus2,
        AndLa, AndLc, OrRPlus1, OrRPlus2, OrRMinus, OrLa, OrLc, ImpRPlus, ImpRMinus, ImpLa,
        ImpLc, CoimpRPlus, CoimpRMinus, CoimpLa, CoimpLc, CutA, CutC,
    ];

    /// The cut-free rules.
    pub const PRIMITIVE: [RuleId; 24] = [
        RfPlus, RfMinus, BotLa, TopLc, BotRMinus, TopRPlus, AndRPlus, AndRMinus1, AndRMinus2,
        AndLa, AndLc, OrRPlus1, OrRPlus2, OrRMinus, OrLa, OrLc, ImpRPlus, ImpRMinus, ImpLa,
        ImpLc, CoimpRPlus, CoimpRMinus, CoimpLa, CoimpLc,
    ];

    pub fn arity(self) -> usize {
        match self {
            RfPlus | RfMinus | BotLa | TopLc | BotRMinus | TopRPlus => 0,
            AndRPlus | AndLc | OrRMinus | OrLa | ImpRMinus | ImpLa | CoimpRPlus | CoimpLc
            | CutA | CutC => 2,
            _ => 1,
        }
    }

    pub fn is_zero_premise(self) -> bool {
        self.arity() == 0
    }

    pub fn is_cut(self) -> bool {
        matches!(self, CutA | CutC)
    }

    /// The connective a logical rule introduces.
    pub fn connective(self) -> Option<Connective> {
        Some(match self {
            AndRPlus | AndRMinus1 | AndRMinus2 | AndLa | AndLc => Connective::And,
            OrRPlus1 | OrRPlus2 | OrRMinus | OrLa | OrLc => Connective::Or,
            ImpRPlus | ImpRMinus | ImpLa | ImpLc => Connective::Imp,
            CoimpRPlus | CoimpRMinus | CoimpLa | CoimpLc => Connective::Coimp,
            _ => return None,
        })
    }

    pub fn site(self) -> PrincipalSite {
        use PrincipalSite as P;
        match self {
            RfPlus => P::Reflexivity(Side::Assumption, Polarity::Plus),
            RfMinus => P::Reflexivity(Side::Counterassumption, Polarity::Minus),
            BotLa | AndLa | OrLa | ImpLa | CoimpLa => P::Context(Side::Assumption),
            TopLc | AndLc | OrLc | ImpLc | CoimpLc => P::Context(Side::Counterassumption),
            TopRPlus | AndRPlus | OrRPlus1 | OrRPlus2 | ImpRPlus | CoimpRPlus => {
                P::Succedent(Polarity::Plus)
            }
            BotRMinus | AndRMinus1 | AndRMinus2 | OrRMinus | ImpRMinus | CoimpRMinus => {
                P::Succedent(Polarity::Minus)
            }
            CutA | CutC => P::None,
        }
    }

    /// The left (context) rule for a connective on a side.
    pub fn left_rule(c: Connective, side: Side) -> RuleId {
        match (c, side) {
            (Connective::And, Side::Assumption) => AndLa,
            (Connective::And, Side::Counterassumption) => AndLc,
            (Connective::Or, Side::Assumption) => OrLa,
            (Connective::Or, Side::Counterassumption) => OrLc,
            (Connective::Imp, Side::Assumption) => ImpLa,
            (Connective::Imp, Side::Counterassumption) => ImpLc,
            (Connective::Coimp, Side::Assumption) => CoimpLa,
            (Connective::Coimp, Side::Counterassumption) => CoimpLc,
        }
    }

    pub fn is_left_rule(self) -> bool {
        matches!(self.site(), PrincipalSite::Context(_)) && !self.is_zero_premise()
    }

    pub fn is_right_rule(self) -> bool {
        matches!(self.site(), PrincipalSite::Succedent(_)) && !self.is_zero_premise()
    }

    /// The rule obtained by swapping verification and falsification.
    pub fn dual(self) -> RuleId {
        match self {
            RfPlus => RfMinus,
            RfMinus => RfPlus,
            BotLa => TopLc,
            TopLc => BotLa,
            BotRMinus => TopRPlus,
            TopRPlus => BotRMinus,
            AndRPlus => OrRMinus,
            OrRMinus => AndRPlus,
            AndRMinus1 => OrRPlus1,
            OrRPlus1 => AndRMinus1,
            AndRMinus2 => OrRPlus2,
            OrRPlus2 => AndRMinus2,
            AndLa => OrLc,
            OrLc => AndLa,
            AndLc => OrLa,
            OrLa => AndLc,
            ImpRPlus => CoimpRMinus,
            CoimpRMinus => ImpRPlus,
            ImpLa => CoimpLc,
            CoimpLc => ImpLa,
            ImpRMinus => CoimpRPlus,
            CoimpRPlus => ImpRMinus,
            ImpLc => CoimpLa,
            CoimpLa => ImpLc,
            CutA => CutC,
            CutC => CutA,
        }
    }

    /// Whether the dual rule lists its premises in the opposite order.
    pub fn dual_swaps_premises(self) -> bool {
        matches!(self, ImpRMinus | CoimpRPlus)
    }

    /// Identifier used in derivation files.
    pub fn name(self) -> &'static str {
        match self {
            RfPlus => "RfPlus",
            RfMinus => "RfMinus",
            BotLa => "BotLa",
            TopLc => "TopLc",
            BotRMinus => "BotRMinus",
            TopRPlus => "TopRPlus",
            AndRPlus => "AndRPlus",
            AndRMinus1 => "AndRMinus1",
            AndRMinus2 => "AndRMinus2",
            AndLa => "AndLa",
            AndLc => "AndLc",
            OrRPlus1 => "OrRPlus1",
            OrRPlus2 => "OrRPlus2",
            OrRMinus => "OrRMinus",
            OrLa => "OrLa",
            OrLc => "OrLc",
            ImpRPlus => "ImpRPlus",
            ImpRMinus => "ImpRMinus",
            ImpLa => "ImpLa",
            ImpLc => "ImpLc",
            CoimpRPlus => "CoimpRPlus",
            CoimpRMinus => "CoimpRMinus",
            CoimpLa => "CoimpLa",
            CoimpLc => "CoimpLc",
            CutA => "CutA",
            CutC => "CutC",
        }
    }

    pub fn from_name(name: &str) -> Option<RuleId> {
        RuleId::ALL.into_iter().find(|r| r.name() == name)
    }

    /// Conventional notation, e.g. `∧R⁻₁`.
    pub fn symbol(self) -> &'static str {
        match self {
            RfPlus => "Rf⁺",
            RfMinus => "Rf⁻",
            BotLa => "⊥Lᵃ",
            TopLc => "⊤Lᶜ",
            BotRMinus => "⊥R⁻",
            TopRPlus => "⊤R⁺",
            AndRPlus => "∧R⁺",
            AndRMinus1 => "∧R⁻₁",
            AndRMinus2 => "∧R⁻₂",
            AndLa => "∧Lᵃ",
            AndLc => "∧Lᶜ",
            OrRPlus1 => "∨R⁺₁",
            OrRPlus2 => "∨R⁺₂",
            OrRMinus => "∨R⁻",
            OrLa => "∨Lᵃ",
            OrLc => "∨Lᶜ",
            ImpRPlus => "→R⁺",
            ImpRMinus => "→R⁻",
            ImpLa => "→Lᵃ",
            ImpLc => "→Lᶜ",
            CoimpRPlus => "⤙R⁺",
            CoimpRMinus => "⤙R⁻",
            CoimpLa => "⤙Lᵃ",
            CoimpLc => "⤙Lᶜ",
            CutA => "Cutᵃ",
            CutC => "Cutᶜ",
        }
    }

    /// Label for `\infer[...]`.
    pub fn latex(self) -> &'static str {
        match self {
            RfPlus => "Rf^{+}",
            RfMinus => "Rf^{-}",
            BotLa => "\\bot L^{a}",
            TopLc => "\\top L^{c}",
            BotRMinus => "\\bot R^{-}",
            TopRPlus => "\\top R^{+}",
            AndRPlus => "\\wedge R^{+}",
            AndRMinus1 => "\\wedge R^{-}_{1}",
            AndRMinus2 => "\\wedge R^{-}_{2}",
            AndLa => "\\wedge L^{a}",
            AndLc => "\\wedge L^{c}",
            OrRPlus1 => "\\vee R^{+}_{1}",
            OrRPlus2 => "\\vee R^{+}_{2}",
            OrRMinus => "\\vee R^{-}",
            OrLa => "\\vee L^{a}",
            OrLc => "\\vee L^{c}",
            ImpRPlus => "\\to R^{+}",
            ImpRMinus => "\\to R^{-}",
            ImpLa => "\\to L^{a}",
            ImpLc => "\\to L^{c}",
            CoimpRPlus => "\\Yleft R^{+}",
            CoimpRMinus => "\\Yleft R^{-}",
            CoimpLa => "\\Yleft L^{a}",
            CoimpLc => "\\Yleft L^{c}",
            CutA => "Cut^{a}",
            CutC => "Cut^{c}",
        }
    }

    /// The rule figure as text, premises left to right, `*` for any polarity.
    pub fn schema(self) -> &'static str {
        match self {
            RfPlus => "(Γ, p; Δ) ⊢⁺ p",
            RfMinus => "(Γ; Δ, p) ⊢⁻ p",
            BotLa => "(Γ, ⊥; Δ) ⊢* C",
            TopLc => "(Γ; Δ, ⊤) ⊢* C",
            BotRMinus => "(Γ; Δ) ⊢⁻ ⊥",
            TopRPlus => "(Γ; Δ) ⊢⁺ ⊤",
            AndRPlus => "(Γ; Δ) ⊢⁺ A   (Γ; Δ) ⊢⁺ B  /  (Γ; Δ) ⊢⁺ A ∧ B",
            AndRMinus1 => "(Γ; Δ) ⊢⁻ A  /  (Γ; Δ) ⊢⁻ A ∧ B",
            AndRMinus2 => "(Γ; Δ) ⊢⁻ B  /  (Γ; Δ) ⊢⁻ A ∧ B",
            AndLa => "(Γ, A, B; Δ) ⊢* C  /  (Γ, A ∧ B; Δ) ⊢* C",
            AndLc => "(Γ; Δ, A) ⊢* C   (Γ; Δ, B) ⊢* C  /  (Γ; Δ, A ∧ B) ⊢* C",
            OrRPlus1 => "(Γ; Δ) ⊢⁺ A  /  (Γ; Δ) ⊢⁺ A ∨ B",
            OrRPlus2 => "(Γ; Δ) ⊢⁺ B  /  (Γ; Δ) ⊢⁺ A ∨ B",
            OrRMinus => "(Γ; Δ) ⊢⁻ A   (Γ; Δ) ⊢⁻ B  /  (Γ; Δ) ⊢⁻ A ∨ B",
            OrLa => "(Γ, A; Δ) ⊢* C   (Γ, B; Δ) ⊢* C  /  (Γ, A ∨ B; Δ) ⊢* C",
            OrLc => "(Γ; Δ, A, B) ⊢* C  /  (Γ; Δ, A ∨ B) ⊢* C",
            ImpRPlus => "(Γ, A; Δ) ⊢⁺ B  /  (Γ; Δ) ⊢⁺ A → B",
            ImpRMinus => "(Γ; Δ) ⊢⁺ A   (Γ; Δ) ⊢⁻ B  /  (Γ; Δ) ⊢⁻ A → B",
            ImpLa => "(Γ, A → B; Δ) ⊢⁺ A   (Γ, B; Δ) ⊢* C  /  (Γ, A → B; Δ) ⊢* C",
            ImpLc => "(Γ, A; Δ, B) ⊢* C  /  (Γ; Δ, A → B) ⊢* C",
            CoimpRPlus => "(Γ; Δ) ⊢⁺ A   (Γ; Δ) ⊢⁻ B  /  (Γ; Δ) ⊢⁺ A ⤙ B",
            CoimpRMinus => "(Γ; Δ, B) ⊢⁻ A  /  (Γ; Δ) ⊢⁻ A ⤙ B",
            CoimpLa => "(Γ, A; Δ, B) ⊢* C  /  (Γ, A ⤙ B; Δ) ⊢* C",
            CoimpLc => "(Γ; Δ, A ⤙ B) ⊢⁻ B   (Γ; Δ, A) ⊢* C  /  (Γ; Δ, A ⤙ B) ⊢* C",
            CutA => "(Γ; Δ) ⊢⁺ D   (Γ′, D; Δ′) ⊢* C  /  (Γ, Γ′; Δ, Δ′) ⊢* C",
            CutC => "(Γ; Δ) ⊢⁻ D   (Γ′; Δ′, D) ⊢* C  /  (Γ, Γ′; Δ, Δ′) ⊢* C",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}
