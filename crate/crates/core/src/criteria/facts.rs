use std::fmt;
use std::str::FromStr;

use num::BigInt;
use serde::Serialize;

use super::CriteriaError;
use crate::repcalc::{DimResult, Exactness};
use crate::rootsys::GroupSpec;

macro_rules! flags {
    ($($name:ident => $text:literal),* $(,)?) => {
        /// Unit atoms: hypotheses and conclusions about `H ≤ G → GL(V)`.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
        pub enum Flag { $($name),* }

        impl Flag {
            pub const ALL: &'static [Flag] = &[$(Flag::$name),*];

            pub fn name(self) -> &'static str {
                match self { $(Flag::$name => $text),* }
            }
        }
    };
}

flags! {
    NonDegenerate => "NonDegenerate",
    Faithful => "Faithful",
    IndexPrimeToP => "IndexPrimeToP",
    HisGcr => "HisGcr",
    HIdentityReductive => "HIdentityReductive",
    VSemisimpleOverH => "VSemisimpleOverH",
    VSemisimpleOverHConn => "VSemisimpleOverHConn",
    VSemisimpleOverG => "VSemisimpleOverG",
    VtensorVdualSemisimpleOverH => "VtensorVdualSemisimpleOverH",
    ReductivePairGlvG => "ReductivePairGLV_G",
    HSeparableInG => "HSeparableInG",
    PVeryGood => "PVeryGood",
    HSemisimpleOnLieG => "HSemisimpleOnLieG",
    HSaturated => "HSaturated",
    VSemisimpleOverHsat => "VSemisimpleOverHsat",
    HsatGsatCr => "HsatGsatCr",
    GsatConnectedReductive => "GsatConnectedReductive",
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Flag {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        Flag::ALL.iter().copied().find(|f| f.name() == s).ok_or(())
    }
}

/// A ground fact.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "atom", content = "value")]
pub enum Fact {
    PrimeIs(u64),
    GroupIs(GroupSpec),
    ModuleDim(DimResult),
    ModuleN(BigInt),
    Flag(Flag),
}

impl From<Flag> for Fact {
    fn from(f: Flag) -> Self {
        Fact::Flag(f)
    }
}

impl fmt::Display for Fact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fact::PrimeIs(p) => write!(f, "PrimeIs {p}"),
            Fact::GroupIs(g) => write!(f, "GroupIs {g}"),
            Fact::ModuleDim(d) => write!(f, "ModuleDim {} {}", d.value, d.exactness),
            Fact::ModuleN(n) => write!(f, "ModuleN {n}"),
            Fact::Flag(x) => write!(f, "{x}"),
        }
    }
}

fn parse_exactness(s: &str) -> Option<Exactness> {
    match s {
        "exact" => Some(Exactness::Exact),
        "weyl-upper-bound" => Some(Exactness::WeylUpperBound),
        "user-override" => Some(Exactness::UserOverride),
        _ => None,
    }
}

/// Parses one fact body, e.g. `ModuleDim 27 exact` or `HisGcr`.
pub fn parse_fact(body: &str) -> Result<Fact, String> {
    let tok: Vec<&str> = body.split_whitespace().collect();
    let (name, args) = tok.split_first().ok_or_else(|| "missing atom name".to_string())?;
    let int = |s: &str| s.parse::<BigInt>().map_err(|_| format!("`{s}` is not an integer"));
    let arity = |n: usize| {
        if args.len() == n {
            Ok(())
        } else {
            Err(format!("{name} takes {n} argument(s), got {}", args.len()))
        }
    };
    match *name {
        "PrimeIs" => {
            arity(1)?;
            args[0]
                .parse::<u64>()
                .map(Fact::PrimeIs)
                .map_err(|_| format!("`{}` is not a non-negative integer", args[0]))
        }
        "ModuleN" => {
            arity(1)?;
            Ok(Fact::ModuleN(int(args[0])?))
        }
        "ModuleDim" => {
            if args.is_empty() || args.len() > 2 {
                return Err("ModuleDim takes a value and an optional exactness".into());
            }
            let exactness = match args.get(1) {
                Some(s) => parse_exactness(s).ok_or_else(|| format!("unknown exactness `{s}`"))?,
                None => Exactness::Exact,
            };
            Ok(Fact::ModuleDim(DimResult {
                value: int(args[0])?,
                exactness,
            }))
        }
        "GroupIs" => {
            arity(1)?;
            args[0]
                .parse::<GroupSpec>()
                .map(Fact::GroupIs)
                .map_err(|e| e.to_string())
        }
        other => {
            let flag = other
                .parse::<Flag>()
                .map_err(|_| format!("unknown atom `{other}`"))?;
            arity(0)?;
            Ok(Fact::Flag(flag))
        }
    }
}

/// Facts file: one `fact <Atom> [args]` per line; `#` starts a comment.
pub fn parse_facts(text: &str) -> Result<Vec<Fact>, CriteriaError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| CriteriaError::Parse { line: i + 1, msg };
        let body = line
            .strip_prefix("fact")
            .filter(|rest| rest.is_empty() || rest.starts_with(char::is_whitespace))
            .ok_or_else(|| err("expected `fact <Atom> [args]`".into()))?;
        out.push(parse_fact(body).map_err(err)?);
    }
    Ok(out)
}

pub fn write_facts(facts: &[Fact]) -> String {
    facts.iter().map(|f| format!("fact {f}\n")).collect()
}
