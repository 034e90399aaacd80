use std::fmt;

use num::BigInt;
use serde::Serialize;

use super::facts::Flag::{self, *};

/// Numeric side conditions on the characteristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Guard {
    /// `p > n(V)`
    PGtN,
    /// `p ≥ dim V`
    PGeDim,
    /// `p > 2·dim V − 2`
    PGt2DimMinus2,
    /// `p ≥ a(G)`
    PGeA,
    /// `p` very good for `G`
    PVeryGood,
}

impl Guard {
    pub const ALL: [Guard; 5] = [Guard::PGtN, Guard::PGeDim, Guard::PGt2DimMinus2, Guard::PGeA, Guard::PVeryGood];

    pub fn describe(self) -> &'static str {
        match self {
            Guard::PGtN => "p > n(V)",
            Guard::PGeDim => "p >= dim V",
            Guard::PGt2DimMinus2 => "p > 2 dim V - 2",
            Guard::PGeA => "p >= a(G)",
            Guard::PVeryGood => "p very good for G",
        }
    }

    /// Bare comparison, given the relevant quantity.
    pub fn compare(self, p: u64, quantity: &BigInt) -> bool {
        let p = BigInt::from(p);
        match self {
            Guard::PGtN => p > *quantity,
            Guard::PGeDim | Guard::PGeA => p >= *quantity,
            Guard::PGt2DimMinus2 => p > BigInt::from(2) * quantity - 2,
            Guard::PVeryGood => unreachable!("very-good is not a numeric comparison"),
        }
    }
}

impl fmt::Display for Guard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.describe())
    }
}

/// A conclusion, possibly needing premises beyond the rule's own.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Conclusion {
    pub flag: Flag,
    pub extra: &'static [Flag],
}

const fn c(flag: Flag) -> Conclusion {
    Conclusion { flag, extra: &[] }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Rule {
    pub id: &'static str,
    pub premises: &'static [Flag],
    pub guard: Option<Guard>,
    pub conclusions: &'static [Conclusion],
    pub citation: &'static str,
}

static RULES: [Rule; 23] = [
    Rule {
        id: "R1",
        premises: &[HisGcr],
        guard: Some(Guard::PGtN),
        conclusions: &[c(VSemisimpleOverH)],
        citation: "G-complete reducibility of H forces V to be a semisimple H-module once p exceeds n(V)",
    },
    Rule {
        id: "R2",
        premises: &[NonDegenerate, VSemisimpleOverH],
        guard: Some(Guard::PGtN),
        conclusions: &[c(HisGcr)],
        citation: "for non-degenerate V and p > n(V), semisimplicity of V over H gives G-complete reducibility",
    },
    Rule {
        id: "R3a",
        premises: &[IndexPrimeToP, HIdentityReductive],
        guard: Some(Guard::PGeA),
        conclusions: &[c(HisGcr)],
        citation: "for p >= a(G) and component index prime to p, reductive identity component implies G-complete reducibility",
    },
    Rule {
        id: "R3b",
        premises: &[IndexPrimeToP, HisGcr],
        guard: Some(Guard::PGeA),
        conclusions: &[c(HIdentityReductive)],
        citation: "for p >= a(G) and component index prime to p, G-complete reducibility implies reductive identity component",
    },
    Rule {
        id: "R4",
        premises: &[HisGcr],
        guard: Some(Guard::PGeDim),
        conclusions: &[c(VSemisimpleOverH)],
        citation: "for p >= dim V, G-complete reducibility of H makes V a semisimple H-module",
    },
    Rule {
        id: "R5",
        premises: &[NonDegenerate, VtensorVdualSemisimpleOverH],
        guard: None,
        conclusions: &[c(HisGcr), c(HSeparableInG)],
        citation: "semisimple action on V tensor V* gives G-complete reducibility and separability of the image",
    },
    Rule {
        id: "R6",
        premises: &[],
        guard: Some(Guard::PGeDim),
        conclusions: &[
            c(VSemisimpleOverG),
            Conclusion {
                flag: VSemisimpleOverHConn,
                extra: &[HIdentityReductive],
            },
        ],
        citation: "modules of dimension at most p for a connected reductive group are semisimple",
    },
    Rule {
        id: "R7",
        premises: &[VSemisimpleOverH],
        guard: Some(Guard::PGt2DimMinus2),
        conclusions: &[c(VtensorVdualSemisimpleOverH)],
        citation: "tensor products of semisimple modules stay semisimple below the 2 dim V - 2 threshold",
    },
    Rule {
        id: "R8",
        premises: &[ReductivePairGlvG, VSemisimpleOverH],
        guard: None,
        conclusions: &[c(HisGcr)],
        citation: "for a reductive pair (GL(V), G), a semisimple H-module V makes H G-completely reducible",
    },
    Rule {
        id: "R9",
        premises: &[ReductivePairGlvG],
        guard: None,
        conclusions: &[c(HSeparableInG)],
        citation: "in a reductive pair every subgroup is separable",
    },
    Rule {
        id: "R10",
        premises: &[],
        guard: Some(Guard::PGt2DimMinus2),
        conclusions: &[c(ReductivePairGlvG)],
        citation: "above 2 dim V - 2 the pair (GL(V), G) is reductive",
    },
    Rule {
        id: "R11",
        premises: &[IndexPrimeToP, HisGcr],
        guard: Some(Guard::PGeDim),
        conclusions: &[c(VSemisimpleOverH)],
        citation: "for p >= dim V and index prime to p, G-complete reducibility gives semisimplicity of V",
    },
    Rule {
        id: "R12",
        premises: &[NonDegenerate, VSemisimpleOverH],
        guard: Some(Guard::PGt2DimMinus2),
        conclusions: &[c(HisGcr)],
        citation: "for non-degenerate V above 2 dim V - 2, semisimplicity of V gives G-complete reducibility",
    },
    Rule {
        id: "R13a",
        premises: &[NonDegenerate, IndexPrimeToP, HIdentityReductive, VSemisimpleOverH, ReductivePairGlvG],
        guard: Some(Guard::PGt2DimMinus2),
        conclusions: &[c(HisGcr)],
        citation: "above 2 dim V - 2 with index prime to p, reductive identity component implies G-complete reducibility",
    },
    Rule {
        id: "R13b",
        premises: &[NonDegenerate, IndexPrimeToP, HisGcr],
        guard: Some(Guard::PGt2DimMinus2),
        conclusions: &[c(HIdentityReductive)],
        citation: "above 2 dim V - 2 with index prime to p, G-complete reducibility implies reductive identity component",
    },
    Rule {
        id: "R14",
        premises: &[HisGcr],
        guard: None,
        conclusions: &[c(HIdentityReductive)],
        citation: "G-completely reducible subgroups have reductive identity component",
    },
    Rule {
        id: "R15",
        premises: &[],
        guard: Some(Guard::PGeDim),
        conclusions: &[
            c(GsatConnectedReductive),
            Conclusion {
                flag: HsatGsatCr,
                extra: &[HisGcr],
            },
        ],
        citation: "for p >= dim V the saturation of the image of G is connected reductive, and saturations preserve complete reducibility",
    },
    Rule {
        id: "R16",
        premises: &[NonDegenerate, HsatGsatCr],
        guard: Some(Guard::PGt2DimMinus2),
        conclusions: &[c(HisGcr)],
        citation: "above 2 dim V - 2 complete reducibility of the saturations descends to H",
    },
    Rule {
        id: "R17a",
        premises: &[VSemisimpleOverH],
        guard: Some(Guard::PGeDim),
        conclusions: &[c(VSemisimpleOverHsat)],
        citation: "for p >= dim V a module is semisimple over H exactly when it is over the saturation of H",
    },
    Rule {
        id: "R17b",
        premises: &[VSemisimpleOverHsat],
        guard: Some(Guard::PGeDim),
        conclusions: &[c(VSemisimpleOverH)],
        citation: "for p >= dim V a module is semisimple over H exactly when it is over the saturation of H",
    },
    Rule {
        id: "R18",
        premises: &[HSaturated],
        guard: None,
        conclusions: &[c(IndexPrimeToP)],
        citation: "a saturated subgroup has component index prime to p",
    },
    Rule {
        id: "R19",
        premises: &[HSemisimpleOnLieG],
        guard: Some(Guard::PVeryGood),
        conclusions: &[c(HisGcr)],
        citation: "for very good p, semisimple action on the adjoint module gives G-complete reducibility",
    },
    Rule {
        id: "R20",
        premises: &[VSemisimpleOverHConn, IndexPrimeToP],
        guard: None,
        conclusions: &[c(VSemisimpleOverH)],
        citation: "semisimplicity over the identity component lifts to H when the index is prime to p",
    },
];

/// The fixed rule table, in application order.
pub fn rule_table() -> &'static [Rule] {
    &RULES
}

pub fn rule(id: &str) -> Option<&'static Rule> {
    RULES.iter().find(|r| r.id == id)
}
