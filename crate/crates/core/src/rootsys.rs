//! Root systems of the simple types A–G.
//!
//! Simple roots and fundamental weights follow Bourbaki numbering:
//!
//! | type | diagram (numbering)                    | short roots            |
//! |------|----------------------------------------|------------------------|
//! | A_n  | 1 - 2 - … - n                          | –                      |
//! | B_n  | 1 - 2 - … - (n-1) => n                 | α_n                    |
//! | C_n  | 1 - 2 - … - (n-1) <= n                 | α_1 … α_{n-1}          |
//! | D_n  | 1 - … - (n-2) with n-1 and n on (n-2)  | –                      |
//! | E_n  | 1 - 3 - 4 - 5 - … - n, 2 on 4          | –                      |
//! | F_4  | 1 - 2 => 3 - 4                         | α_3, α_4               |
//! | G_2  | 1 <= 2 (triple bond)                   | α_1                    |
//!
//! Weights are given by their coordinates in the fundamental-weight basis, so
//! `⟨ω_i, α̌_j⟩ = δ_ij`. Every positive root `β` is stored by its coefficients
//! in the simple-root basis, and its coroot by its coefficients in the
//! simple-coroot basis; the pairing of a weight with a coroot is then a plain
//! dot product.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::WeightScalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootSystemError {
    #[error("rank {rank} is not valid for type {family}")]
    InvalidRank { family: Family, rank: usize },
    #[error("cannot parse simple type `{0}` (expected e.g. `E6`, `A1`)")]
    Parse(String),
    #[error("positive root index {index} out of range ({count} positive roots)")]
    RootIndex { index: usize, count: usize },
    #[error("weight has {got} coordinates, root system has rank {rank}")]
    WeightLength { got: usize, rank: usize },
    #[error("weight {0} is not dominant")]
    NotDominant(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    fn rank_is_valid(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for Family {
    type Err = RootSystemError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            _ => Err(RootSystemError::Parse(s.to_string())),
        }
    }
}

/// A simple type such as `E6`. Low-rank coincidences (`B2`/`C2`, `D3`/`A3`)
/// are accepted and keep their own labelling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootSystemError> {
        if family.rank_is_valid(rank) {
            Ok(Self { family, rank })
        } else {
            Err(RootSystemError::InvalidRank { family, rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = RootSystemError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut chars = s.chars();
        let family: Family = chars
            .next()
            .ok_or_else(|| RootSystemError::Parse(s.to_string()))?
            .to_string()
            .parse()?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| RootSystemError::Parse(s.to_string()))?;
        SimpleType::new(family, rank)
    }
}

/// A reductive group up to isogeny: simple components plus a central torus.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct GroupSpec {
    pub components: Vec<SimpleType>,
    pub torus_rank: usize,
}

impl GroupSpec {
    pub fn simple(t: SimpleType) -> Self {
        Self {
            components: vec![t],
            torus_rank: 0,
        }
    }

    pub fn torus(rank: usize) -> Self {
        Self {
            components: Vec::new(),
            torus_rank: rank,
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.components.iter().map(|t| t.to_string()).collect();
        if self.torus_rank > 0 || parts.is_empty() {
            parts.push(format!("T{}", self.torus_rank));
        }
        write!(f, "{}", parts.join("x"))
    }
}

/// Parses `E6`, `A1xA2`, `A1xT1`, `T2` (components separated by `x` or `*`).
impl FromStr for GroupSpec {
    type Err = RootSystemError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut spec = GroupSpec::default();
        for part in s.split(['x', '*']).map(str::trim) {
            if part.is_empty() {
                return Err(RootSystemError::Parse(s.to_string()));
            }
            if let Some(r) = part.strip_prefix(['T', 't']) {
                let r: usize = r.parse().map_err(|_| RootSystemError::Parse(s.to_string()))?;
                spec.torus_rank += r;
            } else {
                spec.components.push(part.parse()?);
            }
        }
        Ok(spec)
    }
}

/// A weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weight<T = i64> {
    coeffs: Vec<T>,
}

impl<T: WeightScalar> Weight<T> {
    pub fn new(coeffs: Vec<T>) -> Self {
        Self { coeffs }
    }

    pub fn zero(rank: usize) -> Self {
        Self {
            coeffs: vec![T::zero(); rank],
        }
    }

    /// The fundamental weight `ω_i` (1-based, Bourbaki).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.coeffs[i - 1] = T::one();
        w
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * k.clone()).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }

    pub fn map<U: WeightScalar>(&self, f: impl Fn(&T) -> U) -> Weight<U> {
        Weight::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: WeightScalar> fmt::Display for Weight<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Positive roots, coroots and the Cartan matrix of a simple type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootSystem {
    simple_type: SimpleType,
    /// `cartan[i][j] = ⟨α_j, α̌_i⟩`.
    cartan: Vec<Vec<i64>>,
    /// `(α_i, α_i) / 2`, short roots normalised to 1.
    half_norms: Vec<i64>,
    positive_roots: Vec<Vec<i64>>,
    /// Coroot of each positive root in the simple-coroot basis.
    coroots: Vec<Vec<i64>>,
    /// Sum of all positive coroots (`2ρ̌`) in the simple-coroot basis.
    coroot_sum: Vec<i64>,
}

fn gram_matrix(t: SimpleType) -> Vec<Vec<i64>> {
    let n = t.rank;
    let mut g = vec![vec![0i64; n]; n];
    let mut edge = |i: usize, j: usize, v: i64| {
        g[i][j] = v;
        g[j][i] = v;
    };
    let half_norms: Vec<i64> = match t.family {
        Family::A | Family::D | Family::E => vec![1; n],
        Family::B => (0..n).map(|i| if i + 1 < n { 2 } else { 1 }).collect(),
        Family::C => (0..n).map(|i| if i + 1 < n { 1 } else { 2 }).collect(),
        Family::F => vec![2, 2, 1, 1],
        Family::G => vec![1, 3],
    };
    match t.family {
        Family::A => (0..n - 1).for_each(|i| edge(i, i + 1, -1)),
        Family::B => (0..n - 1).for_each(|i| edge(i, i + 1, -2)),
        Family::C => (0..n - 1).for_each(|i| edge(i, i + 1, if i + 2 < n { -1 } else { -2 })),
        Family::D => {
            (0..n - 2).for_each(|i| edge(i, i + 1, -1));
            edge(n - 3, n - 1, -1);
        }
        Family::E => {
            edge(0, 2, -1);
            edge(1, 3, -1);
            (2..n - 1).for_each(|i| edge(i, i + 1, -1));
        }
        Family::F => {
            edge(0, 1, -2);
            edge(1, 2, -2);
            edge(2, 3, -1);
        }
        Family::G => edge(0, 1, -3),
    }
    for (i, d) in half_norms.iter().enumerate() {
        g[i][i] = 2 * d;
    }
    g
}

impl RootSystem {
    /// Builds the root system, enumerating positive roots by closure from the
    /// simple roots using root strings.
    pub fn new(simple_type: SimpleType) -> Self {
        let n = simple_type.rank;
        let gram = gram_matrix(simple_type);
        let half_norms: Vec<i64> = (0..n).map(|i| gram[i][i] / 2).collect();
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| gram[i][j] / half_norms[i]).collect())
            .collect();

        let pairing_with_simple = |beta: &[i64], i: usize| -> i64 {
            beta.iter().zip(&cartan[i]).map(|(c, a)| c * a).sum()
        };

        let mut all: HashSet<Vec<i64>> = HashSet::new();
        let mut level: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                e
            })
            .collect();
        let mut positive_roots = Vec::new();
        while !level.is_empty() {
            level.sort();
            all.extend(level.iter().cloned());
            let mut next: Vec<Vec<i64>> = Vec::new();
            for beta in &level {
                for i in 0..n {
                    // p = length of the α_i-string below β
                    let mut p = 0i64;
                    let mut down = beta.clone();
                    loop {
                        down[i] -= 1;
                        if down[i] < 0 || !all.contains(&down) {
                            break;
                        }
                        p += 1;
                    }
                    if p - pairing_with_simple(beta, i) > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if !next.contains(&up) {
                            next.push(up);
                        }
                    }
                }
            }
            positive_roots.append(&mut level);
            level = next;
        }

        let norm = |beta: &[i64]| -> i64 {
            let mut s = 0;
            for i in 0..n {
                for j in 0..n {
                    s += beta[i] * beta[j] * gram[i][j];
                }
            }
            s
        };
        let coroots: Vec<Vec<i64>> = positive_roots
            .iter()
            .map(|beta| {
                let half = norm(beta) / 2;
                (0..n)
                    .map(|i| {
                        let num = beta[i] * half_norms[i];
                        debug_assert_eq!(num % half, 0);
                        num / half
                    })
                    .collect()
            })
            .collect();
        let coroot_sum = (0..n)
            .map(|i| coroots.iter().map(|c| c[i]).sum())
            .collect();

        Self {
            simple_type,
            cartan,
            half_norms,
            positive_roots,
            coroots,
            coroot_sum,
        }
    }

    pub fn simple_type(&self) -> SimpleType {
        self.simple_type
    }

    pub fn rank(&self) -> usize {
        self.simple_type.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn half_norms(&self) -> &[i64] {
        &self.half_norms
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn coroots(&self) -> &[Vec<i64>] {
        &self.coroots
    }

    fn check_len<T: WeightScalar>(&self, w: &Weight<T>) -> Result<(), RootSystemError> {
        if w.rank() != self.rank() {
            return Err(RootSystemError::WeightLength {
                got: w.rank(),
                rank: self.rank(),
            });
        }
        Ok(())
    }

    /// `⟨λ, β̌⟩` for the positive root with the given index.
    pub fn pairing<T: WeightScalar>(&self, w: &Weight<T>, root: usize) -> Result<T, RootSystemError> {
        self.check_len(w)?;
        let coroot = self.coroots.get(root).ok_or(RootSystemError::RootIndex {
            index: root,
            count: self.positive_roots.len(),
        })?;
        Ok(dot(coroot, w.coeffs()))
    }

    /// `n(λ) = Σ_{β>0} ⟨λ, β̌⟩`.
    pub fn n_of_weight<T: WeightScalar>(&self, w: &Weight<T>) -> Result<T, RootSystemError> {
        self.check_len(w)?;
        Ok(dot(&self.coroot_sum, w.coeffs()))
    }

    pub fn coxeter_number(&self) -> usize {
        2 * self.positive_roots.len() / self.rank()
    }

    /// The highest root in fundamental-weight coordinates.
    pub fn highest_root(&self) -> Weight<i64> {
        let theta = self.positive_roots.last().expect("root systems are nonempty");
        self.root_to_weight(theta)
    }

    /// Converts simple-root coefficients to fundamental-weight coordinates.
    pub fn root_to_weight(&self, beta: &[i64]) -> Weight<i64> {
        Weight::new(
            self.cartan
                .iter()
                .map(|row| row.iter().zip(beta).map(|(a, c)| a * c).sum())
                .collect(),
        )
    }

    /// Weyl's dimension formula, evaluated with exact rationals.
    pub fn weyl_dim<T: WeightScalar>(&self, w: &Weight<T>) -> Result<BigInt, RootSystemError> {
        self.check_len(w)?;
        if !w.is_dominant() {
            return Err(RootSystemError::NotDominant(w.to_string()));
        }
        let shifted: Vec<BigInt> = w.coeffs().iter().map(|c| c.to_big() + BigInt::one()).collect();
        let rho = vec![BigInt::one(); self.rank()];
        let mut product = BigRational::one();
        for coroot in &self.coroots {
            let num: BigInt = dot(coroot, &shifted);
            let den: BigInt = dot(coroot, &rho);
            product *= BigRational::new(num, den);
        }
        debug_assert!(product.is_integer());
        Ok(product.to_integer())
    }
}

fn dot<T: WeightScalar>(small: &[i64], coeffs: &[T]) -> T {
    small
        .iter()
        .zip(coeffs)
        .fold(T::zero(), |acc, (a, c)| acc + T::from(*a) * c.clone())
}

/// `a(G)`: one more than the largest rank of a simple component, and at least 1.
pub fn a_invariant(g: &GroupSpec) -> u64 {
    g.components
        .iter()
        .map(|t| t.rank as u64 + 1)
        .fold(1, u64::max)
}

/// Good primes: `p ≠ 2` for B, C, D; `p ∉ {2,3}` for exceptional types and
/// additionally `p ≠ 5` for E8.
pub fn is_good_prime(t: SimpleType, p: u64) -> bool {
    match t.family {
        Family::A => true,
        Family::B | Family::C | Family::D => p != 2,
        Family::E if t.rank == 8 => !matches!(p, 2 | 3 | 5),
        Family::E | Family::F | Family::G => !matches!(p, 2 | 3),
    }
}

/// Very good: good, and `p ∤ n+1` for type `A_n`.
pub fn is_very_good_prime(t: SimpleType, p: u64) -> bool {
    is_good_prime(t, p) && !(t.family == Family::A && (t.rank as u64 + 1).is_multiple_of(p))
}

pub fn is_very_good_for_group(g: &GroupSpec, p: u64) -> bool {
    g.components.iter().all(|t| is_very_good_prime(*t, p))
}
