use num::BigInt;
use serde::Serialize;

use super::facts::Fact;
use super::rules::Guard;
use super::CriteriaError;
use crate::repcalc::{module_dim, n_of_module, DimResult, Exactness, ModuleSpec};
use crate::rootsys::{a_invariant, is_very_good_for_group};
use crate::scalar::WeightScalar;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub guard: Guard,
    pub description: &'static str,
    /// `n(V)`, `dim V`, `2 dim V − 2` or `a(G)`; absent for the very-good test.
    pub quantity: Option<BigInt>,
    pub holds: bool,
    /// Set when the dimension is only an upper bound: a `true` verdict is
    /// then safe, a `false` one may be pessimistic.
    pub conservative: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub p: u64,
    pub n: BigInt,
    pub dim: DimResult,
    pub a: u64,
    pub checks: Vec<BoundCheck>,
}

impl BoundReport {
    pub fn check(&self, g: Guard) -> &BoundCheck {
        self.checks.iter().find(|c| c.guard == g).expect("every guard is reported")
    }

    /// The numeric facts this report licenses for the inference engine.
    pub fn facts(&self, group: &crate::rootsys::GroupSpec) -> Vec<Fact> {
        vec![
            Fact::PrimeIs(self.p),
            Fact::GroupIs(group.clone()),
            Fact::ModuleDim(self.dim.clone()),
            Fact::ModuleN(self.n.clone()),
        ]
    }
}

/// Evaluates the five characteristic bounds for a module.
pub fn check_bounds<T: WeightScalar>(m: &ModuleSpec<T>, p: u64) -> Result<BoundReport, CriteriaError> {
    let n = n_of_module(m)?.to_big();
    let dim = module_dim(m, p)?;
    let a = a_invariant(&m.group);
    let conservative = dim.exactness == Exactness::WeylUpperBound;
    let mk = |guard: Guard, quantity: BigInt, conservative: bool| BoundCheck {
        guard,
        description: guard.describe(),
        holds: guard.compare(p, &quantity),
        quantity: Some(quantity),
        conservative,
    };
    let checks = vec![
        mk(Guard::PGtN, n.clone(), false),
        mk(Guard::PGeDim, dim.value.clone(), conservative),
        BoundCheck {
            quantity: Some(BigInt::from(2) * &dim.value - 2),
            ..mk(Guard::PGt2DimMinus2, dim.value.clone(), conservative)
        },
        mk(Guard::PGeA, BigInt::from(a), false),
        BoundCheck {
            guard: Guard::PVeryGood,
            description: Guard::PVeryGood.describe(),
            quantity: None,
            holds: is_very_good_for_group(&m.group, p),
            conservative: false,
        },
    ];
    Ok(BoundReport { p, n, dim, a, checks })
}
