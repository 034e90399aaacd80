use std::collections::HashSet;
use std::fmt::Write as _;

use num::BigInt;
use serde::Serialize;

use super::facts::{Fact, Flag};
use super::rules::{rule, rule_table, Guard, Rule};
use super::CriteriaError;
use crate::repcalc::DimResult;
use crate::rootsys::{a_invariant, is_very_good_for_group, GroupSpec};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Derivation {
    pub conclusion: Flag,
    pub rule_id: &'static str,
    pub premises: Vec<Fact>,
}

/// Numeric atoms and flags available to guards.
#[derive(Debug, Clone, Default)]
struct Context {
    prime: Option<u64>,
    group: Option<GroupSpec>,
    dim: Option<DimResult>,
    n: Option<BigInt>,
}

impl Context {
    fn from_facts(facts: &[Fact]) -> Result<Self, CriteriaError> {
        fn set<T: PartialEq + Clone>(slot: &mut Option<T>, v: &T, name: &'static str) -> Result<(), CriteriaError> {
            match slot {
                Some(old) if old != v => Err(CriteriaError::Contradictory(name)),
                _ => {
                    *slot = Some(v.clone());
                    Ok(())
                }
            }
        }
        let mut ctx = Context::default();
        for f in facts {
            match f {
                Fact::PrimeIs(p) => set(&mut ctx.prime, p, "PrimeIs")?,
                Fact::GroupIs(g) => set(&mut ctx.group, g, "GroupIs")?,
                Fact::ModuleDim(d) => set(&mut ctx.dim, d, "ModuleDim")?,
                Fact::ModuleN(n) => set(&mut ctx.n, n, "ModuleN")?,
                Fact::Flag(_) => {}
            }
        }
        Ok(ctx)
    }

    /// `Some(numeric premises)` when the guard holds; `None` when it fails or
    /// its inputs are missing.
    fn guard(&self, g: Guard, flags: &HashSet<Flag>) -> Option<Vec<Fact>> {
        let p = self.prime?;
        let prime = Fact::PrimeIs(p);
        match g {
            Guard::PGtN => {
                let n = self.n.as_ref()?;
                g.compare(p, n).then(|| vec![prime, Fact::ModuleN(n.clone())])
            }
            Guard::PGeDim | Guard::PGt2DimMinus2 => {
                let d = self.dim.as_ref()?;
                g.compare(p, &d.value).then(|| vec![prime, Fact::ModuleDim(d.clone())])
            }
            Guard::PGeA => {
                let grp = self.group.as_ref()?;
                g.compare(p, &BigInt::from(a_invariant(grp)))
                    .then(|| vec![prime, Fact::GroupIs(grp.clone())])
            }
            Guard::PVeryGood => match &self.group {
                Some(grp) => is_very_good_for_group(grp, p).then(|| vec![prime, Fact::GroupIs(grp.clone())]),
                None => flags
                    .contains(&Flag::PVeryGood)
                    .then(|| vec![prime, Fact::Flag(Flag::PVeryGood)]),
            },
        }
    }
}

/// Whether a rule's guard holds for the given facts (`true` for unguarded
/// rules; `false` when a needed numeric atom is absent).
pub fn guard_holds(r: &Rule, facts: &[Fact]) -> Result<bool, CriteriaError> {
    let ctx = Context::from_facts(facts)?;
    let flags = flag_set(facts);
    Ok(match r.guard {
        None => true,
        Some(g) => ctx.guard(g, &flags).is_some(),
    })
}

/// Rules whose premises are all among `facts` and whose guard holds,
/// regardless of whether their conclusions are new.
pub fn applicable_rules(facts: &[Fact]) -> Result<Vec<&'static str>, CriteriaError> {
    let ctx = Context::from_facts(facts)?;
    let flags = flag_set(facts);
    Ok(rule_table()
        .iter()
        .filter(|r| r.premises.iter().all(|f| flags.contains(f)))
        .filter(|r| r.guard.is_none_or(|g| ctx.guard(g, &flags).is_some()))
        .map(|r| r.id)
        .collect())
}

fn flag_set(facts: &[Fact]) -> HashSet<Flag> {
    facts
        .iter()
        .filter_map(|f| match f {
            Fact::Flag(x) => Some(*x),
            _ => None,
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Inference {
    pub inputs: Vec<Fact>,
    pub derivations: Vec<Derivation>,
}

/// Forward chaining to a fixpoint. Rules run in table order, repeatedly,
/// each seeing everything derived so far. A rule contributes at most one
/// derivation per conclusion, and input facts are never re-derived.
pub fn infer(facts: &[Fact]) -> Result<Inference, CriteriaError> {
    let ctx = Context::from_facts(facts)?;
    let mut inputs: Vec<Fact> = Vec::new();
    for f in facts {
        if !inputs.contains(f) {
            inputs.push(f.clone());
        }
    }
    let input_flags = flag_set(&inputs);
    let mut known = input_flags.clone();
    let mut fired: HashSet<(&'static str, Flag)> = HashSet::new();
    let mut derivations = Vec::new();
    loop {
        let mut changed = false;
        for r in rule_table() {
            if !r.premises.iter().all(|f| known.contains(f)) {
                continue;
            }
            let numeric = match r.guard {
                None => Vec::new(),
                Some(g) => match ctx.guard(g, &known) {
                    Some(v) => v,
                    None => continue,
                },
            };
            for c in r.conclusions {
                if input_flags.contains(&c.flag)
                    || fired.contains(&(r.id, c.flag))
                    || !c.extra.iter().all(|f| known.contains(f))
                {
                    continue;
                }
                let mut premises = numeric.clone();
                premises.extend(r.premises.iter().chain(c.extra).map(|f| Fact::Flag(*f)));
                derivations.push(Derivation {
                    conclusion: c.flag,
                    rule_id: r.id,
                    premises,
                });
                fired.insert((r.id, c.flag));
                known.insert(c.flag);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    Ok(Inference { inputs, derivations })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ExplainNode {
    Input { fact: Fact },
    Derived {
        fact: Fact,
        rule_id: &'static str,
        citation: &'static str,
        premises: Vec<ExplainNode>,
    },
}

impl ExplainNode {
    /// Number of distinct derivation steps in the tree.
    pub fn steps(&self) -> usize {
        let mut seen = HashSet::new();
        self.collect_steps(&mut seen);
        seen.len()
    }

    fn collect_steps(&self, seen: &mut HashSet<(&'static str, String)>) {
        if let ExplainNode::Derived {
            fact,
            rule_id,
            premises,
            ..
        } = self
        {
            seen.insert((rule_id, fact.to_string()));
            for p in premises {
                p.collect_steps(seen);
            }
        }
    }

    /// Longest chain of derivation nodes from the root.
    pub fn depth(&self) -> usize {
        match self {
            ExplainNode::Input { .. } => 0,
            ExplainNode::Derived { premises, .. } => 1 + premises.iter().map(|p| p.depth()).max().unwrap_or(0),
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out, 0);
        out
    }

    fn render_into(&self, out: &mut String, indent: usize) {
        let pad = "  ".repeat(indent);
        match self {
            ExplainNode::Input { fact } => {
                let _ = writeln!(out, "{pad}{fact}  [input]");
            }
            ExplainNode::Derived {
                fact,
                rule_id,
                citation,
                premises,
            } => {
                let _ = writeln!(out, "{pad}{fact}  [{rule_id}: {citation}]");
                for p in premises {
                    p.render_into(out, indent + 1);
                }
            }
        }
    }
}

impl Inference {
    /// Facts known after inference: inputs, then derived flags in order.
    pub fn closure(&self) -> Vec<Fact> {
        let mut out = self.inputs.clone();
        for d in &self.derivations {
            let f = Fact::Flag(d.conclusion);
            if !out.contains(&f) {
                out.push(f);
            }
        }
        out
    }

    pub fn derived_flags(&self) -> Vec<Flag> {
        let mut out: Vec<Flag> = Vec::new();
        for d in &self.derivations {
            if !out.contains(&d.conclusion) {
                out.push(d.conclusion);
            }
        }
        out
    }

    /// The first derivation of a flag.
    pub fn first(&self, flag: Flag) -> Option<&Derivation> {
        self.derivations.iter().find(|d| d.conclusion == flag)
    }

    pub fn by_rule(&self, rule_id: &str, flag: Flag) -> Option<&Derivation> {
        self.derivations
            .iter()
            .find(|d| d.rule_id == rule_id && d.conclusion == flag)
    }

    /// Proof tree of a derivation. Derived premises resolve to their first
    /// derivation, which always precedes any use.
    pub fn explain(&self, d: &Derivation) -> Result<ExplainNode, CriteriaError> {
        let pos = self
            .derivations
            .iter()
            .position(|x| x == d)
            .ok_or(CriteriaError::NotDerived)?;
        self.explain_at(pos)
    }

    fn explain_at(&self, pos: usize) -> Result<ExplainNode, CriteriaError> {
        let d = &self.derivations[pos];
        let mut premises = Vec::new();
        for p in &d.premises {
            if self.inputs.contains(p) {
                premises.push(ExplainNode::Input { fact: p.clone() });
                continue;
            }
            let Fact::Flag(flag) = p else {
                return Err(CriteriaError::DanglingPremise(p.to_string()));
            };
            let earlier = self.derivations[..pos]
                .iter()
                .position(|x| x.conclusion == *flag)
                .ok_or_else(|| CriteriaError::DanglingPremise(p.to_string()))?;
            premises.push(self.explain_at(earlier)?);
        }
        Ok(ExplainNode::Derived {
            fact: Fact::Flag(d.conclusion),
            rule_id: d.rule_id,
            citation: rule(d.rule_id).map_or("", |r| r.citation),
            premises,
        })
    }
}
