//! Univariate polynomials over `GF(q)` and their factorization into distinct
//! irreducible factors (square-free split, distinct-degree, then
//! Cantor–Zassenhaus equal-degree splitting).

use num::BigUint;
use num::One;
use rand::Rng;

use super::field::{FqElem, FqField};
use crate::meataxe::RandomSource;

/// Little-endian coefficients with no trailing zeros; the zero polynomial is
/// empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly(pub Vec<FqElem>);

impl Poly {
    pub fn new(mut c: Vec<FqElem>) -> Self {
        while c.last().is_some_and(|e| e.is_zero()) {
            c.pop();
        }
        Poly(c)
    }

    pub fn one() -> Self {
        Poly(vec![FqElem::ONE])
    }

    /// `x`
    pub fn x() -> Self {
        Poly(vec![FqElem::ZERO, FqElem::ONE])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[FqElem] {
        &self.0
    }

    pub fn lead(&self) -> FqElem {
        *self.0.last().unwrap_or(&FqElem::ZERO)
    }
}

/// Polynomial arithmetic bound to a field.
pub struct PolyRing<'a> {
    pub field: &'a FqField,
}

impl<'a> PolyRing<'a> {
    pub fn new(field: &'a FqField) -> Self {
        Self { field }
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Poly {
        let f = self.field;
        let n = a.0.len().max(b.0.len());
        Poly::new(
            (0..n)
                .map(|i| {
                    f.add(
                        *a.0.get(i).unwrap_or(&FqElem::ZERO),
                        *b.0.get(i).unwrap_or(&FqElem::ZERO),
                    )
                })
                .collect(),
        )
    }

    pub fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        let neg = Poly(b.0.iter().map(|c| self.field.neg(*c)).collect());
        self.add(a, &neg)
    }

    pub fn scale(&self, a: &Poly, s: FqElem) -> Poly {
        Poly::new(a.0.iter().map(|c| self.field.mul(*c, s)).collect())
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() {
            return Poly::default();
        }
        let f = self.field;
        let mut out = vec![FqElem::ZERO; a.0.len() + b.0.len() - 1];
        for (i, x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(*x, *y));
            }
        }
        Poly::new(out)
    }

    /// Quotient and remainder; panics on division by the zero polynomial.
    pub fn divrem(&self, a: &Poly, b: &Poly) -> (Poly, Poly) {
        let f = self.field;
        let db = b.degree().expect("division by zero polynomial");
        let lead_inv = f.inv(b.lead()).expect("leading coefficient is nonzero");
        let mut r = a.0.clone();
        if r.len() <= db {
            return (Poly::default(), a.clone());
        }
        let mut q = vec![FqElem::ZERO; r.len() - db];
        for i in (db..r.len()).rev() {
            let c = f.mul(r[i], lead_inv);
            if c.is_zero() {
                continue;
            }
            q[i - db] = c;
            for (j, bj) in b.0.iter().enumerate() {
                let idx = i - db + j;
                r[idx] = f.sub(r[idx], f.mul(c, *bj));
            }
        }
        r.truncate(db);
        (Poly::new(q), Poly::new(r))
    }

    pub fn rem(&self, a: &Poly, b: &Poly) -> Poly {
        self.divrem(a, b).1
    }

    pub fn monic(&self, a: &Poly) -> Poly {
        if a.is_zero() {
            return a.clone();
        }
        let inv = self.field.inv(a.lead()).expect("nonzero lead");
        self.scale(a, inv)
    }

    /// Monic gcd.
    pub fn gcd(&self, a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    pub fn derivative(&self, a: &Poly) -> Poly {
        Poly::new(
            a.0.iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| self.field.mul(*c, self.field.from_int(i as i64)))
                .collect(),
        )
    }

    pub fn mulmod(&self, a: &Poly, b: &Poly, m: &Poly) -> Poly {
        self.rem(&self.mul(a, b), m)
    }

    pub fn powmod(&self, base: &Poly, exp: &BigUint, m: &Poly) -> Poly {
        let mut acc = self.rem(&Poly::one(), m);
        let base = self.rem(base, m);
        for i in (0..exp.bits()).rev() {
            acc = self.mulmod(&acc, &acc, m);
            if exp.bit(i) {
                acc = self.mulmod(&acc, &base, m);
            }
        }
        acc
    }

    pub fn eval(&self, a: &Poly, x: FqElem) -> FqElem {
        a.0.iter()
            .rev()
            .fold(FqElem::ZERO, |acc, c| self.field.add(self.field.mul(acc, x), *c))
    }

    /// Distinct monic irreducible factors of a nonzero polynomial, sorted by
    /// degree then coefficients.
    pub fn distinct_irreducible_factors(&self, a: &Poly, rng: &mut RandomSource) -> Vec<Poly> {
        let mut out = Vec::new();
        self.collect_factors(&self.monic(a), rng, &mut out);
        out.sort_by(|x, y| x.degree().cmp(&y.degree()).then_with(|| x.0.cmp(&y.0)));
        out.dedup();
        out
    }

    fn collect_factors(&self, a: &Poly, rng: &mut RandomSource, out: &mut Vec<Poly>) {
        if a.degree().unwrap_or(0) == 0 {
            return;
        }
        let d = self.derivative(a);
        if d.is_zero() {
            // a(x) = b(x^p)^… : take the p-th root coefficient-wise
            let p = self.field.characteristic() as usize;
            let root_exp = self.field.order() / self.field.characteristic();
            let b = Poly::new(
                a.0.iter()
                    .step_by(p)
                    .map(|c| self.field.pow(*c, root_exp))
                    .collect(),
            );
            self.collect_factors(&b, rng, out);
            return;
        }
        let g = self.gcd(a, &d);
        let squarefree = self.divrem(a, &g).0;
        self.squarefree_factors(&squarefree, rng, out);
        self.collect_factors(&g, rng, out);
    }

    fn squarefree_factors(&self, a: &Poly, rng: &mut RandomSource, out: &mut Vec<Poly>) {
        let q = BigUint::from(self.field.order());
        let mut rest = a.clone();
        let mut h = Poly::x();
        let mut i = 1;
        while rest.degree().unwrap_or(0) >= 2 * i {
            h = self.powmod(&h, &q, &rest);
            let g = self.gcd(&rest, &self.sub(&h, &Poly::x()));
            if g.degree().unwrap_or(0) > 0 {
                self.equal_degree(&g, i, rng, out);
                rest = self.divrem(&rest, &g).0;
                h = self.rem(&h, &rest);
            }
            i += 1;
        }
        if rest.degree().unwrap_or(0) > 0 {
            out.push(self.monic(&rest));
        }
    }

    fn equal_degree(&self, a: &Poly, d: usize, rng: &mut RandomSource, out: &mut Vec<Poly>) {
        let n = a.degree().unwrap_or(0);
        if n == d {
            out.push(self.monic(a));
            return;
        }
        let f = self.field;
        let q = BigUint::from(f.order());
        loop {
            let r = Poly::new((0..n).map(|_| random_elem(f, rng)).collect());
            if r.degree().unwrap_or(0) == 0 {
                continue;
            }
            let t = if f.characteristic() == 2 {
                // trace map r + r² + … + r^(2^(kd−1))
                let mut acc = r.clone();
                let mut cur = r.clone();
                for _ in 1..(f.degree() * d) {
                    cur = self.mulmod(&cur, &cur, a);
                    acc = self.add(&acc, &cur);
                }
                acc
            } else {
                let e = (q.pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
                self.sub(&self.powmod(&r, &e, a), &Poly::one())
            };
            let g = self.gcd(a, &t);
            let dg = g.degree().unwrap_or(0);
            if dg > 0 && dg < n {
                let other = self.divrem(a, &g).0;
                self.equal_degree(&g, d, rng, out);
                self.equal_degree(&other, d, rng, out);
                return;
            }
        }
    }
}

pub(crate) fn random_elem(f: &FqField, rng: &mut RandomSource) -> FqElem {
    FqElem(rng.rng().gen_range(0..f.order() as u32))
}
