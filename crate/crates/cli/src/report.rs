use serde::Serialize;
use serde_json::Value;

/// Where an expected value or claim comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Basis {
    /// A value stated in the published literature.
    Published,
    /// Derived here by an independent computation.
    Computed,
    /// True by definition or construction.
    Definitional,
}

impl Basis {
    pub fn tag(self) -> &'static str {
        match self {
            Basis::Published => "published",
            Basis::Computed => "computed",
            Basis::Definitional => "definitional",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub check: String,
    pub value: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pass: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Provenance {
    pub claim: String,
    pub basis: Basis,
    pub note: String,
}

/// The machine-readable block every command can emit.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub inputs: Value,
    pub verdicts: Vec<Verdict>,
    pub witnesses: Vec<Value>,
    pub provenance: Vec<Provenance>,
}

impl Report {
    pub fn new(command: &'static str, inputs: Value) -> Self {
        Self {
            command,
            inputs,
            verdicts: Vec::new(),
            witnesses: Vec::new(),
            provenance: Vec::new(),
        }
    }

    pub fn verdict(&mut self, check: impl Into<String>, value: impl Serialize) {
        self.verdicts.push(Verdict {
            check: check.into(),
            value: serde_json::to_value(value).expect("serializable"),
            expected: None,
            pass: None,
        });
    }

    pub fn expect(&mut self, check: impl Into<String>, value: impl Serialize, expected: impl Serialize, basis: Basis) {
        let check = check.into();
        let value = serde_json::to_value(value).expect("serializable");
        let expected = serde_json::to_value(expected).expect("serializable");
        let pass = value == expected;
        self.provenance.push(Provenance {
            claim: check.clone(),
            basis,
            note: String::new(),
        });
        self.verdicts.push(Verdict {
            check,
            value,
            expected: Some(expected),
            pass: Some(pass),
        });
    }

    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass != Some(false))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

/// Result of one invocation: exit code plus rendered output.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub code: i32,
    pub text: String,
    pub report: Option<Report>,
}

impl Outcome {
    pub fn usage(msg: impl Into<String>) -> Self {
        Self {
            code: exit::USAGE,
            text: msg.into(),
            report: None,
        }
    }
}

pub mod exit {
    pub const OK: i32 = 0;
    pub const NEGATIVE: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const INCONCLUSIVE: i32 = 3;
}
