//! Module-level invariants: `n(V)`, Steinberg digits, A₁ dimensions in
//! characteristic `p`, and the restricted Clebsch–Gordan rule.

use std::fmt;

use num::{BigInt, One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rootsys::{Family, GroupSpec, RootSystem, RootSystemError, Weight};
use crate::scalar::WeightScalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepCalcError {
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("module has no composition factors")]
    NoFactors,
    #[error("factor {factor} gives {got} weights for {expected} simple components")]
    ComponentMismatch {
        factor: usize,
        got: usize,
        expected: usize,
    },
    #[error("multiplicity of factor {0} must be at least 1")]
    ZeroMultiplicity(usize),
    #[error("L({m}) ⊗ L({n}) is outside the restricted range m + n ≤ p - 1 = {bound}")]
    OutsideRestrictedRange { m: u64, n: u64, bound: u64 },
    #[error("digit {digit} in slot {slot} is not restricted for p = {p}")]
    UnrestrictedDigit { slot: usize, digit: u64, p: u64 },
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn check_prime(p: u64) -> Result<(), RepCalcError> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(RepCalcError::NotPrime(p))
    }
}

/// One composition factor: a highest weight for each simple component, with
/// multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factor<T = i64> {
    pub weights: Vec<Weight<T>>,
    pub multiplicity: u64,
}

/// A module described by its composition factors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleSpec<T = i64> {
    pub group: GroupSpec,
    pub factors: Vec<Factor<T>>,
    pub dim_override: Option<BigInt>,
}

impl<T: WeightScalar> ModuleSpec<T> {
    /// A simple module for a simple group.
    pub fn simple(group: GroupSpec, weight: Weight<T>) -> Self {
        Self {
            group,
            factors: vec![Factor {
                weights: vec![weight],
                multiplicity: 1,
            }],
            dim_override: None,
        }
    }

    fn validate(&self) -> Result<Vec<RootSystem>, RepCalcError> {
        if self.factors.is_empty() {
            return Err(RepCalcError::NoFactors);
        }
        let systems: Vec<RootSystem> = self.group.components.iter().map(|t| RootSystem::new(*t)).collect();
        for (i, f) in self.factors.iter().enumerate() {
            if f.weights.len() != systems.len() {
                return Err(RepCalcError::ComponentMismatch {
                    factor: i,
                    got: f.weights.len(),
                    expected: systems.len(),
                });
            }
            if f.multiplicity == 0 {
                return Err(RepCalcError::ZeroMultiplicity(i));
            }
            for (w, rs) in f.weights.iter().zip(&systems) {
                if w.rank() != rs.rank() {
                    return Err(RootSystemError::WeightLength {
                        got: w.rank(),
                        rank: rs.rank(),
                    }
                    .into());
                }
                if !w.is_dominant() {
                    return Err(RepCalcError::NotDominant(w.to_string()));
                }
            }
        }
        Ok(systems)
    }
}

/// Base-`p` expansion `λ = λ₀ + pλ₁ + … + pʳλᵣ` with restricted digits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PDigits<T = i64> {
    pub p: u64,
    pub digits: Vec<Weight<T>>,
}

impl<T: WeightScalar> PDigits<T> {
    pub fn recompose(&self) -> Weight<T> {
        let p = T::from(self.p as i64);
        let rank = self.digits[0].rank();
        let mut acc = Weight::zero(rank);
        for d in self.digits.iter().rev() {
            acc = acc.scale(&p).add(d);
        }
        acc
    }
}

pub fn is_restricted<T: WeightScalar>(w: &Weight<T>, p: u64) -> bool {
    let p = T::from(p as i64);
    w.coeffs().iter().all(|c| *c < p)
}

/// Coefficient-wise base-`p` digits of a dominant weight. The zero weight has
/// the single digit `[0]`.
pub fn steinberg_digits<T: WeightScalar>(w: &Weight<T>, p: u64) -> Result<PDigits<T>, RepCalcError> {
    if !w.is_dominant() {
        return Err(RepCalcError::NotDominant(w.to_string()));
    }
    check_prime(p)?;
    let pt = T::from(p as i64);
    let mut rest: Vec<T> = w.coeffs().to_vec();
    let mut digits = Vec::new();
    loop {
        let mut digit = Vec::with_capacity(rest.len());
        for c in rest.iter_mut() {
            let (q, r) = c.div_rem(&pt);
            digit.push(r);
            *c = q;
        }
        digits.push(Weight::new(digit));
        if rest.iter().all(Zero::is_zero) {
            break;
        }
    }
    Ok(PDigits { p, digits })
}

/// `n(V)` as the maximum of `n` over the highest weights of the composition
/// factors, summing over simple components.
///
/// Subtracting a positive root strictly lowers `n`, so within each factor the
/// maximum over all weights is attained at the highest weight.
pub fn n_of_module<T: WeightScalar>(m: &ModuleSpec<T>) -> Result<T, RepCalcError> {
    let systems = m.validate()?;
    let mut best: Option<T> = None;
    for f in &m.factors {
        let mut n = T::zero();
        for (w, rs) in f.weights.iter().zip(&systems) {
            n = n + rs.n_of_weight(w)?;
        }
        best = Some(match best {
            Some(b) if b >= n => b,
            _ => n,
        });
    }
    Ok(best.expect("factors are nonempty"))
}

/// Both sides of `n(λ) = Σ pⁱ n(λᵢ)` over the Steinberg digits of `λ`.
pub fn n_digit_identity<T: WeightScalar>(rs: &RootSystem, w: &Weight<T>, p: u64) -> Result<(T, T), RepCalcError> {
    let lhs = rs.n_of_weight(w)?;
    let digits = steinberg_digits(w, p)?;
    let pt = T::from(p as i64);
    let mut rhs = T::zero();
    for d in digits.digits.iter().rev() {
        rhs = rhs * pt.clone() + rs.n_of_weight(d)?;
    }
    Ok((lhs, rhs))
}

/// `n(λᵢ)` for each restricted digit, next to `p` and the digit's Weyl
/// dimension, so callers can compare `p > n(λᵢ)` with `p ≥ dim L(λᵢ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DigitBound {
    pub slot: usize,
    pub n: BigInt,
    pub weyl_dim: BigInt,
    pub p_exceeds_n: bool,
}

pub fn digit_bounds<T: WeightScalar>(rs: &RootSystem, w: &Weight<T>, p: u64) -> Result<Vec<DigitBound>, RepCalcError> {
    let digits = steinberg_digits(w, p)?;
    digits
        .digits
        .iter()
        .enumerate()
        .map(|(slot, d)| {
            let n = rs.n_of_weight(d)?.to_big();
            Ok(DigitBound {
                slot,
                p_exceeds_n: BigInt::from(p) > n,
                n,
                weyl_dim: rs.weyl_dim(d)?,
            })
        })
        .collect()
}

/// `dim L(m)` for SL₂ in characteristic `p`: the product of `(mᵢ + 1)` over
/// the base-`p` digits of `m`.
pub fn dim_simple_a1<T: WeightScalar>(m: &T, p: u64) -> BigInt {
    let mut m = m.to_big();
    let p = BigInt::from(p);
    let mut dim = BigInt::one();
    while !m.is_zero() {
        let digit = &m % &p;
        dim *= digit + 1;
        m /= &p;
    }
    dim
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Exactness {
    Exact,
    WeylUpperBound,
    UserOverride,
}

impl fmt::Display for Exactness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Exactness::Exact => "exact",
            Exactness::WeylUpperBound => "weyl-upper-bound",
            Exactness::UserOverride => "user-override",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DimResult {
    pub value: BigInt,
    pub exactness: Exactness,
}

/// Dimension of the module in characteristic `p`.
///
/// Exact for A₁ components; other simple components contribute their Weyl
/// dimension, which bounds the simple module's dimension from above.
pub fn module_dim<T: WeightScalar>(m: &ModuleSpec<T>, p: u64) -> Result<DimResult, RepCalcError> {
    if let Some(v) = &m.dim_override {
        return Ok(DimResult {
            value: v.clone(),
            exactness: Exactness::UserOverride,
        });
    }
    check_prime(p)?;
    let systems = m.validate()?;
    let mut total = BigInt::zero();
    let mut exactness = Exactness::Exact;
    for f in &m.factors {
        let mut dim = BigInt::one();
        for (w, rs) in f.weights.iter().zip(&systems) {
            if rs.simple_type().family() == Family::A && rs.rank() == 1 {
                dim *= dim_simple_a1(&w.coeffs()[0], p);
            } else {
                exactness = Exactness::WeylUpperBound;
                dim *= rs.weyl_dim(w)?;
            }
        }
        total += dim * BigInt::from(f.multiplicity);
    }
    Ok(DimResult { value: total, exactness })
}

/// Highest weights of `L(m) ⊗ L(n)` for SL₂ when `m + n ≤ p − 1`.
pub fn clebsch_gordan_a1(m: u64, n: u64, p: u64) -> Result<Vec<u64>, RepCalcError> {
    check_prime(p)?;
    if m + n > p - 1 {
        return Err(RepCalcError::OutsideRestrictedRange { m, n, bound: p - 1 });
    }
    let low = m.abs_diff(n);
    Ok((0..=(m.min(n))).map(|i| m + n - 2 * i).filter(|k| *k >= low).collect())
}

/// Outcome of decomposing `V ⊗ W*` slot by slot.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum TwistedVerdict {
    /// Every slot decomposes; each summand is listed by its restricted digits
    /// `(k₀, k₁, …)`, i.e. `L(k₀) ⊗ L(k₁)^[1] ⊗ …`.
    Semisimple { summands: Vec<Vec<u64>> },
    /// Some slot leaves the restricted Clebsch–Gordan range.
    UndecidedSymbolically { slot: usize, m: u64, n: u64 },
}

/// Decides semisimplicity of `V ⊗ W*` for `V = ⊗ L(mᵢ)^[i]`,
/// `W = ⊗ L(nᵢ)^[i]` (A₁ simples are self-dual) by applying the restricted
/// Clebsch–Gordan rule in each Frobenius slot. When every slot satisfies
/// `mᵢ + nᵢ ≤ p − 1`, each summand has restricted digits and is therefore
/// simple by Steinberg's tensor product theorem.
pub fn a1_twisted_semisimplicity(v: &[u64], w: &[u64], p: u64) -> Result<TwistedVerdict, RepCalcError> {
    check_prime(p)?;
    let slots = v.len().max(w.len()).max(1);
    let digit = |d: &[u64], i: usize| d.get(i).copied().unwrap_or(0);
    for digits in [v, w] {
        if let Some((slot, d)) = digits.iter().enumerate().find(|(_, d)| **d >= p) {
            return Err(RepCalcError::UnrestrictedDigit { slot, digit: *d, p });
        }
    }
    let mut per_slot = Vec::with_capacity(slots);
    for i in 0..slots {
        let (m, n) = (digit(v, i), digit(w, i));
        match clebsch_gordan_a1(m, n, p) {
            Ok(ks) => per_slot.push(ks),
            Err(_) => return Ok(TwistedVerdict::UndecidedSymbolically { slot: i, m, n }),
        }
    }
    let mut summands: Vec<Vec<u64>> = vec![Vec::new()];
    for ks in &per_slot {
        summands = summands
            .into_iter()
            .flat_map(|prefix| {
                ks.iter().map(move |k| {
                    let mut s = prefix.clone();
                    s.push(*k);
                    s
                })
            })
            .collect();
    }
    Ok(TwistedVerdict::Semisimple { summands })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::SimpleType;

    fn a1(m: i64) -> Weight {
        Weight::new(vec![m])
    }

    fn group(s: &str) -> GroupSpec {
        s.parse().unwrap()
    }

    #[test]
    fn digits_of_91_base_3() {
        let d = steinberg_digits(&a1(91), 3).unwrap();
        let flat: Vec<i64> = d.digits.iter().map(|w| w.coeffs()[0]).collect();
        assert_eq!(flat, vec![1, 0, 1, 0, 1]);
        assert_eq!(d.recompose(), a1(91));
    }

    #[test]
    fn digits_edge_cases() {
        let d = steinberg_digits(&a1(2), 3).unwrap();
        assert_eq!(d.digits, vec![a1(2)]);
        let d = steinberg_digits(&a1(3), 3).unwrap();
        assert_eq!(d.digits, vec![a1(0), a1(1)]);
        let d = steinberg_digits(&Weight::<i64>::zero(3), 5).unwrap();
        assert_eq!(d.digits, vec![Weight::zero(3)]);
        assert!(steinberg_digits(&a1(-1), 3).is_err());
        assert!(steinberg_digits(&a1(4), 4).is_err());
    }

    #[test]
    fn restrictedness() {
        assert!(is_restricted(&a1(2), 3));
        assert!(!is_restricted(&a1(3), 3));
        assert!(is_restricted(&Weight::<i64>::fundamental(6, 1), 2));
    }

    #[test]
    fn n_of_modules() {
        let e6: ModuleSpec = ModuleSpec::simple(group("E6"), Weight::fundamental(6, 1));
        assert_eq!(n_of_module(&e6).unwrap(), 16);
        let m = ModuleSpec {
            group: group("A1"),
            factors: vec![
                Factor { weights: vec![a1(1)], multiplicity: 2 },
                Factor { weights: vec![a1(3)], multiplicity: 1 },
            ],
            dim_override: None,
        };
        assert_eq!(n_of_module(&m).unwrap(), 3);
        let trivial: ModuleSpec = ModuleSpec::simple(group("B3"), Weight::zero(3));
        assert_eq!(n_of_module(&trivial).unwrap(), 0);
        let empty: ModuleSpec = ModuleSpec {
            group: group("A1"),
            factors: vec![],
            dim_override: None,
        };
        assert_eq!(n_of_module(&empty), Err(RepCalcError::NoFactors));
        // product group: n adds over components
        let prod = ModuleSpec {
            group: group("A1xA2"),
            factors: vec![Factor {
                weights: vec![a1(1), Weight::new(vec![1, 0])],
                multiplicity: 1,
            }],
            dim_override: None,
        };
        assert_eq!(n_of_module(&prod).unwrap(), 1 + 2);
    }

    /// Each positive root has positive `n`, which is what makes the highest
    /// weight attain `n(V)` within a factor.
    #[test]
    fn positive_roots_have_positive_n() {
        for t in ["A4", "B3", "C4", "D5", "E6", "E7", "E8", "F4", "G2"] {
            let rs = RootSystem::new(t.parse::<SimpleType>().unwrap());
            for beta in rs.positive_roots() {
                assert!(rs.n_of_weight(&rs.root_to_weight(beta)).unwrap() > 0);
            }
        }
    }

    #[test]
    fn digit_identity_examples() {
        let rs = RootSystem::new("A1".parse().unwrap());
        assert_eq!(n_digit_identity(&rs, &a1(91), 3).unwrap(), (91, 91));
        let a2 = RootSystem::new("A2".parse().unwrap());
        for p in [2u64, 3, 5, 7] {
            let w = Weight::new(vec![p as i64 + 1, 0]);
            let (l, r) = n_digit_identity(&a2, &w, p).unwrap();
            assert_eq!(l, r);
            assert_eq!(l, 2 * (p as i64 + 1));
        }
    }

    #[test]
    fn a1_dimensions() {
        assert_eq!(dim_simple_a1(&91i64, 3), 8.into());
        assert_eq!(dim_simple_a1(&3i64, 3), 2.into());
        for p in [2u64, 3, 5, 7] {
            for m in 0..p as i64 {
                assert_eq!(dim_simple_a1(&m, p), (m + 1).into());
            }
        }
        assert_eq!(dim_simple_a1(&0i64, 2), 1.into());
    }

    #[test]
    fn module_dims() {
        let m = ModuleSpec::simple(group("A1"), a1(91));
        let d = module_dim(&m, 3).unwrap();
        assert_eq!((d.value, d.exactness), (8.into(), Exactness::Exact));
        let e6: ModuleSpec = ModuleSpec::simple(group("E6"), Weight::fundamental(6, 1));
        let d = module_dim(&e6, 29).unwrap();
        assert_eq!((d.value, d.exactness), (27.into(), Exactness::WeylUpperBound));
        let mut o = e6.clone();
        o.dim_override = Some(10.into());
        let d = module_dim(&o, 29).unwrap();
        assert_eq!((d.value, d.exactness), (10.into(), Exactness::UserOverride));
        let mult = ModuleSpec {
            group: group("A1xA1"),
            factors: vec![Factor {
                weights: vec![a1(1), a1(2)],
                multiplicity: 2,
            }],
            dim_override: None,
        };
        assert_eq!(module_dim(&mult, 5).unwrap().value, 12.into());
    }

    #[test]
    fn clebsch_gordan() {
        assert_eq!(clebsch_gordan_a1(1, 1, 3).unwrap(), vec![2, 0]);
        assert_eq!(clebsch_gordan_a1(4, 0, 5).unwrap(), vec![4]);
        assert_eq!(clebsch_gordan_a1(2, 3, 7).unwrap(), vec![5, 3, 1]);
        assert!(matches!(
            clebsch_gordan_a1(1, 1, 2),
            Err(RepCalcError::OutsideRestrictedRange { .. })
        ));
        for p in [2u64, 3, 5, 7, 11] {
            for m in 0..p {
                for n in 0..p - m {
                    let ks = clebsch_gordan_a1(m, n, p).unwrap();
                    let total: u64 = ks.iter().map(|k| k + 1).sum();
                    assert_eq!(total, (m + 1) * (n + 1));
                }
            }
        }
    }

    #[test]
    fn twisted_example() {
        match a1_twisted_semisimplicity(&[1, 1, 1], &[1, 1, 1], 3).unwrap() {
            TwistedVerdict::Semisimple { summands } => {
                assert_eq!(summands.len(), 8);
                for s in &summands {
                    assert_eq!(s.len(), 3);
                    assert!(s.iter().all(|k| *k == 0 || *k == 2));
                }
                let mut sorted = summands.clone();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sorted.len(), 8);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            a1_twisted_semisimplicity(&[0], &[0], 3).unwrap(),
            TwistedVerdict::Semisimple { summands: vec![vec![0]] }
        );
        assert_eq!(
            a1_twisted_semisimplicity(&[1], &[1], 2).unwrap(),
            TwistedVerdict::UndecidedSymbolically { slot: 0, m: 1, n: 1 }
        );
        assert!(a1_twisted_semisimplicity(&[3], &[0], 3).is_err());
    }

    #[test]
    fn digit_bounds_compare_n_with_p() {
        let rs = RootSystem::new("A1".parse().unwrap());
        let b = digit_bounds(&rs, &a1(91), 3).unwrap();
        assert_eq!(b.len(), 5);
        assert!(b.iter().all(|d| d.p_exceeds_n));
        assert_eq!(b[0].weyl_dim, 2.into());
    }
}
