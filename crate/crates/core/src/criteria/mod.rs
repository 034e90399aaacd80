//! Forward-chaining inference over implications between complete
//! reducibility, semisimplicity and characteristic bounds.

mod bounds;
mod engine;
mod facts;
mod rules;

use thiserror::Error;

use crate::repcalc::RepCalcError;

pub use bounds::{check_bounds, BoundCheck, BoundReport};
pub use engine::{applicable_rules, guard_holds, infer, Derivation, ExplainNode, Inference};
pub use facts::{parse_fact, parse_facts, write_facts, Fact, Flag};
pub use rules::{rule, rule_table, Conclusion, Guard, Rule};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CriteriaError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("contradictory values for {0}")]
    Contradictory(&'static str),
    #[error("derivation is not part of this inference")]
    NotDerived,
    #[error("premise `{0}` is neither an input nor derived earlier")]
    DanglingPremise(String),
    #[error(transparent)]
    RepCalc(#[from] RepCalcError),
}
