//! The finite field `GF(p^k) = GF(p)[x] / (f)`.
//!
//! Elements are stored as an index `Σ cᵢ pⁱ` of their little-endian
//! coefficient vector `(c₀, …, c_{k−1})`, so `0` and `1` are the field's zero
//! and one. Multiplication goes through discrete-log tables built from the
//! primitive element.

use std::fmt;

use thiserror::Error;

/// Largest field order handled (tables are `O(q)`).
pub const MAX_ORDER: u64 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("field order {0} exceeds the supported maximum {MAX_ORDER}")]
    TooLarge(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("modulus must be monic of degree {0} with coefficients below p")]
    BadModulus(usize),
    #[error("modulus is reducible over GF({0})")]
    Reducible(u32),
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("cannot parse field element `{0}`")]
    ParseElem(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FqElem(pub(crate) u32);

impl FqElem {
    pub const ZERO: FqElem = FqElem(0);
    pub const ONE: FqElem = FqElem(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Index `Σ cᵢ pⁱ` of the coefficient vector.
    pub fn index(self) -> u32 {
        self.0
    }
}

pub struct FqField {
    p: u32,
    k: usize,
    q: u32,
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    add_table: Option<Vec<u32>>,
    primitive: FqElem,
}

impl fmt::Debug for FqField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod {:?}", self.p, self.k, self.modulus)
    }
}

impl PartialEq for FqField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.modulus == other.modulus
    }
}

impl Eq for FqField {}

pub(crate) fn is_prime_u64(p: u64) -> bool {
    crate::repcalc::is_prime(p)
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// Dense polynomials over the prime field, little-endian, used only while
// constructing the field.
fn trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn prime_poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = prime_inv(m[dm], p);
    while r.len() > dm {
        let shift = r.len() - 1 - dm;
        let factor = (r[r.len() - 1] as u64 * lead_inv as u64 % p as u64) as u32;
        for (i, c) in m.iter().enumerate() {
            let t = &mut r[shift + i];
            *t = ((*t as u64 + (p - factor) as u64 * *c as u64) % p as u64) as u32;
        }
        trim(&mut r);
    }
    r
}

fn prime_inv(a: u32, p: u32) -> u32 {
    let (mut base, mut e, mut acc) = (a as u64, p as u64 - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

fn prime_poly_mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + *x as u64 * *y as u64) % p as u64;
        }
    }
    let prod: Vec<u32> = prod.into_iter().map(|v| v as u32).collect();
    prime_poly_rem(&prod, m, p)
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(m: &[u32], p: u32) -> bool {
    let deg = m.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut divisor = Vec::with_capacity(d + 1);
            let mut rest = idx;
            for _ in 0..d {
                divisor.push((rest % p as u64) as u32);
                rest /= p as u64;
            }
            divisor.push(1);
            if prime_poly_rem(m, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn index_to_coeffs(mut idx: u32, p: u32, k: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(k);
    for _ in 0..k {
        out.push(idx % p);
        idx /= p;
    }
    out
}

fn coeffs_to_index(c: &[u32], p: u32) -> u32 {
    c.iter().rev().fold(0, |acc, d| acc * p + d)
}

/// Iterates coefficient vectors of length `k` in lexicographic order on
/// `(c₀, c₁, …)`.
fn lex_vectors(p: u32, k: usize) -> impl Iterator<Item = Vec<u32>> {
    let total = (p as u64).pow(k as u32);
    (0..total).map(move |mut n| {
        let mut v = vec![0u32; k];
        for slot in (0..k).rev() {
            v[slot] = (n % p as u64) as u32;
            n /= p as u64;
        }
        v
    })
}

impl FqField {
    /// `GF(p^k)` with the lexicographically least monic irreducible modulus
    /// (comparing `(c₀, …, c_{k−1})`).
    pub fn new(p: u64, k: usize) -> Result<Self, FieldError> {
        Self::check_size(p, k)?;
        let p32 = p as u32;
        for lower in lex_vectors(p32, k) {
            let mut m = lower;
            m.push(1);
            if is_irreducible(&m, p32) {
                return Self::build(p32, m);
            }
        }
        unreachable!("irreducible polynomials of every degree exist")
    }

    pub fn prime(p: u64) -> Result<Self, FieldError> {
        Self::new(p, 1)
    }

    /// `GF(p)[x]/(modulus)` for a caller-supplied monic irreducible modulus
    /// `c₀ + c₁x + … + x^k`.
    pub fn with_modulus(p: u64, modulus: Vec<u32>) -> Result<Self, FieldError> {
        let k = modulus.len().saturating_sub(1);
        Self::check_size(p, k)?;
        if modulus.last() != Some(&1) || modulus.iter().any(|c| *c as u64 >= p) {
            return Err(FieldError::BadModulus(k));
        }
        if !is_irreducible(&modulus, p as u32) {
            return Err(FieldError::Reducible(p as u32));
        }
        Self::build(p as u32, modulus)
    }

    fn check_size(p: u64, k: usize) -> Result<(), FieldError> {
        if !is_prime_u64(p) {
            return Err(FieldError::NotPrime(p));
        }
        if k == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let q = (p as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
        if q > MAX_ORDER as u128 {
            return Err(FieldError::TooLarge(q.min(u64::MAX as u128) as u64));
        }
        Ok(())
    }

    fn build(p: u32, modulus: Vec<u32>) -> Result<Self, FieldError> {
        let k = modulus.len() - 1;
        let q = p.pow(k as u32);
        let order = (q - 1) as u64;
        let factors = prime_factors(order);
        let pow_slow = |base: &[u32], mut e: u64| -> Vec<u32> {
            let mut acc = vec![1u32];
            let mut b = base.to_vec();
            while e > 0 {
                if e & 1 == 1 {
                    acc = prime_poly_mulmod(&acc, &b, &modulus, p);
                }
                b = prime_poly_mulmod(&b, &b, &modulus, p);
                e >>= 1;
            }
            acc
        };
        let is_one = |v: &[u32]| v.len() == 1 && v[0] == 1;
        let mut primitive = None;
        for cand in lex_vectors(p, k) {
            let mut poly = cand.clone();
            trim(&mut poly);
            if poly.is_empty() {
                continue;
            }
            if order == 1 || factors.iter().all(|r| !is_one(&pow_slow(&poly, order / r))) {
                primitive = Some(cand);
                break;
            }
        }
        let gamma = primitive.expect("multiplicative group is cyclic");
        let mut gamma_poly = gamma.clone();
        trim(&mut gamma_poly);

        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![0u32; q as usize];
        let mut cur = vec![1u32];
        for i in 0..order {
            let mut padded = cur.clone();
            padded.resize(k, 0);
            let idx = coeffs_to_index(&padded, p);
            exp.push(idx);
            log[idx as usize] = i as u32;
            cur = prime_poly_mulmod(&cur, &gamma_poly, &modulus, p);
        }
        let neg = (0..q)
            .map(|i| {
                let c: Vec<u32> = index_to_coeffs(i, p, k).iter().map(|d| (p - d) % p).collect();
                coeffs_to_index(&c, p)
            })
            .collect();
        let mut field = Self {
            p,
            k,
            q,
            modulus,
            exp,
            log,
            neg,
            add_table: None,
            primitive: FqElem(coeffs_to_index(&gamma, p)),
        };
        if k > 1 && q <= 256 {
            let table = (0..q * q)
                .map(|i| field.add_digits(i / q, i % q))
                .collect();
            field.add_table = Some(table);
        }
        Ok(field)
    }

    pub fn characteristic(&self) -> u64 {
        self.p as u64
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> u64 {
        self.q as u64
    }

    /// Modulus coefficients `c₀ … c_k` (monic).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The least generator of the multiplicative group in lexicographic order.
    pub fn primitive(&self) -> FqElem {
        self.primitive
    }

    pub fn zero(&self) -> FqElem {
        FqElem::ZERO
    }

    pub fn one(&self) -> FqElem {
        FqElem::ONE
    }

    pub fn from_int(&self, n: i64) -> FqElem {
        FqElem(n.rem_euclid(self.p as i64) as u32)
    }

    pub fn from_coeffs(&self, c: &[u32]) -> Result<FqElem, FieldError> {
        if c.len() > self.k || c.iter().any(|d| *d >= self.p) {
            return Err(FieldError::ParseElem(format!("{c:?}")));
        }
        Ok(FqElem(coeffs_to_index(c, self.p)))
    }

    pub fn coeffs(&self, e: FqElem) -> Vec<u32> {
        index_to_coeffs(e.0, self.p, self.k)
    }

    /// Key under which element order is lexicographic on `(c₀, c₁, …)`.
    pub fn lex_key(&self, e: FqElem) -> u32 {
        self.coeffs(e).iter().fold(0, |acc, d| acc * self.p + d)
    }

    /// All elements in lexicographic order of coefficient vectors.
    pub fn elements(&self) -> Vec<FqElem> {
        lex_vectors(self.p, self.k)
            .map(|c| FqElem(coeffs_to_index(&c, self.p)))
            .collect()
    }

    fn add_digits(&self, a: u32, b: u32) -> u32 {
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.k {
            let d = (a % self.p + b % self.p) % self.p;
            out += d * place;
            place *= self.p;
            a /= self.p;
            b /= self.p;
        }
        out
    }

    #[inline]
    pub fn add(&self, a: FqElem, b: FqElem) -> FqElem {
        if self.k == 1 {
            let s = a.0 + b.0;
            return FqElem(if s >= self.p { s - self.p } else { s });
        }
        match &self.add_table {
            Some(t) => FqElem(t[(a.0 * self.q + b.0) as usize]),
            None => FqElem(self.add_digits(a.0, b.0)),
        }
    }

    #[inline]
    pub fn neg(&self, a: FqElem) -> FqElem {
        FqElem(self.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: FqElem, b: FqElem) -> FqElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FqElem, b: FqElem) -> FqElem {
        if a.0 == 0 || b.0 == 0 {
            return FqElem::ZERO;
        }
        if self.k == 1 {
            return FqElem(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32);
        }
        let order = self.q - 1;
        let s = self.log[a.0 as usize] + self.log[b.0 as usize];
        FqElem(self.exp[(if s >= order { s - order } else { s }) as usize])
    }

    pub fn inv(&self, a: FqElem) -> Result<FqElem, FieldError> {
        if a.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        let order = self.q - 1;
        let l = self.log[a.0 as usize];
        Ok(FqElem(self.exp[((order - l) % order) as usize]))
    }

    pub fn div(&self, a: FqElem, b: FqElem) -> Result<FqElem, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FqElem, e: u64) -> FqElem {
        if e == 0 {
            return FqElem::ONE;
        }
        if a.is_zero() {
            return FqElem::ZERO;
        }
        let order = (self.q - 1) as u64;
        let l = self.log[a.0 as usize] as u64;
        FqElem(self.exp[((l * (e % order)) % order) as usize])
    }

    /// The Frobenius automorphism `e ↦ e^p`.
    pub fn frobenius(&self, a: FqElem) -> FqElem {
        self.pow(a, self.p as u64)
    }

    /// `e ↦ e^(p^i)`.
    pub fn frobenius_pow(&self, a: FqElem, i: usize) -> FqElem {
        let order = (self.q - 1) as u64;
        let mut e = 1u64;
        for _ in 0..(i % self.k) {
            e = e * self.p as u64 % order.max(1);
        }
        if order == 1 {
            return a;
        }
        self.pow(a, e)
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: FqElem) -> u64 {
        let order = (self.q - 1) as u64;
        let l = self.log[a.0 as usize] as u64;
        order / num::integer::gcd(order, l)
    }

    pub fn format_elem(&self, e: FqElem) -> String {
        let parts: Vec<String> = self.coeffs(e).iter().map(|c| c.to_string()).collect();
        parts.join(",")
    }

    /// Parses `a0,a1,…` (exactly `k` coefficients).
    pub fn parse_elem(&self, s: &str) -> Result<FqElem, FieldError> {
        let parts: Result<Vec<u32>, _> = s.split(',').map(|t| t.trim().parse::<u32>()).collect();
        match parts {
            Ok(c) if c.len() == self.k => self.from_coeffs(&c),
            _ => Err(FieldError::ParseElem(s.to_string())),
        }
    }
}
