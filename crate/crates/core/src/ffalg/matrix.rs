//! Dense matrices over `GF(q)`.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use thiserror::Error;

use super::field::{FqElem, FqField};
use super::poly::{Poly, PolyRing};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is singular")]
    Singular,
    #[error("matrices live over different fields")]
    FieldMismatch,
}

#[derive(Clone)]
pub struct Matrix {
    field: Arc<FqField>,
    rows: usize,
    cols: usize,
    data: Vec<FqElem>,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
            && (Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field)
    }
}

impl Eq for Matrix {}

impl Hash for Matrix {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
        self.cols.hash(state);
        self.data.hash(state);
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {:?}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|e| self.field.format_elem(*e)).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: &Arc<FqField>, rows: usize, cols: usize) -> Self {
        Self {
            field: field.clone(),
            rows,
            cols,
            data: vec![FqElem::ZERO; rows * cols],
        }
    }

    pub fn identity(field: &Arc<FqField>, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, FqElem::ONE);
        }
        m
    }

    pub fn from_vec(field: &Arc<FqField>, rows: usize, cols: usize, data: Vec<FqElem>) -> Self {
        assert_eq!(data.len(), rows * cols, "data length does not match shape");
        Self {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(field: &Arc<FqField>, rows: &[Vec<FqElem>], cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend_from_slice(r);
        }
        Self::from_vec(field, rows.len(), cols, data)
    }

    /// Integer entries reduced mod `p`.
    pub fn from_ints(field: &Arc<FqField>, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data: Vec<Vec<FqElem>> = rows
            .iter()
            .map(|r| r.iter().map(|x| field.from_int(*x)).collect())
            .collect();
        Self::from_rows(field, &data, cols)
    }

    pub fn field(&self) -> &Arc<FqField> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> FqElem {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: FqElem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FqElem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<FqElem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn data(&self) -> &[FqElem] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| self.get(i, j) == if i == j { FqElem::ONE } else { FqElem::ZERO })
            })
    }

    pub fn map(&self, f: impl Fn(FqElem) -> FqElem) -> Self {
        Self {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|e| f(*e)).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    fn check_field(&self, other: &Self) -> Result<(), MatrixError> {
        if Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field {
            Ok(())
        } else {
            Err(MatrixError::FieldMismatch)
        }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, MatrixError> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(MatrixError::Shape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &*self.field;
        let mut out = Self::zeros(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            let out_row = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                let b_row = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, b) in out_row.iter_mut().zip(b_row) {
                    if !b.is_zero() {
                        *o = f.add(*o, f.mul(a, *b));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Panics on shape mismatch; see [`Matrix::checked_mul`].
    pub fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("matrix product shapes")
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &*self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.add(*a, *b)).collect();
        Self::from_vec(&self.field, self.rows, self.cols, data)
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &*self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.sub(*a, *b)).collect();
        Self::from_vec(&self.field, self.rows, self.cols, data)
    }

    pub fn scale(&self, s: FqElem) -> Self {
        let f = self.field.clone();
        self.map(|e| f.mul(e, s))
    }

    /// `M v` for a column vector `v`.
    pub fn apply(&self, v: &[FqElem]) -> Vec<FqElem> {
        assert_eq!(v.len(), self.cols);
        let f = &*self.field;
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(FqElem::ZERO, |acc, (a, b)| f.add(acc, f.mul(*a, *b)))
            })
            .collect()
    }

    /// Kronecker product: block `(i, j)` is `self[i][j] · other`.
    pub fn kron(&self, other: &Self) -> Self {
        let f = &*self.field;
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Self::zeros(&self.field, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(i * other.rows + k, j * other.cols + l, f.mul(a, other.get(k, l)));
                    }
                }
            }
        }
        out
    }

    /// Block-diagonal sum.
    pub fn block_diag(&self, other: &Self) -> Self {
        let mut out = Self::zeros(&self.field, self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j));
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::identity(&self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(pr, r);
            let inv = f.inv(self.get(r, c)).expect("pivot is nonzero");
            for j in c..self.cols {
                let v = f.mul(self.get(r, j), inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i != r {
                    let factor = self.get(i, c);
                    if !factor.is_zero() {
                        self.row_axpy(i, r, f.neg(factor), c);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// `row[dst] += s · row[src]`, starting at column `from`.
    fn row_axpy(&mut self, dst: usize, src: usize, s: FqElem, from: usize) {
        let f = &*self.field;
        let cols = self.cols;
        for j in from..cols {
            let v = self.data[src * cols + j];
            if !v.is_zero() {
                let d = &mut self.data[dst * cols + j];
                *d = f.add(*d, f.mul(s, v));
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis (as rows) of the right kernel `{x : M x = 0}`.
    pub fn nullspace(&self) -> Self {
        let (r, pivots) = self.rref();
        let f = &*self.field;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Self::zeros(&self.field, free.len(), self.cols);
        for (b, &fc) in free.iter().enumerate() {
            basis.set(b, fc, FqElem::ONE);
            for (pr, &pc) in pivots.iter().enumerate() {
                basis.set(b, pc, f.neg(r.get(pr, fc)));
            }
        }
        basis
    }

    pub fn inverse(&self) -> Result<Self, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::Shape(format!("{}x{} is not square", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut aug = Self::zeros(&self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, FqElem::ONE);
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(MatrixError::Singular);
        }
        let mut inv = Self::zeros(&self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j));
            }
        }
        Ok(inv)
    }

    pub fn det(&self) -> FqElem {
        assert!(self.is_square());
        let f = self.field.clone();
        let mut m = self.clone();
        let mut det = FqElem::ONE;
        for c in 0..m.cols {
            let Some(pr) = (c..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                return FqElem::ZERO;
            };
            if pr != c {
                m.swap_rows(pr, c);
                det = f.neg(det);
            }
            let pivot = m.get(c, c);
            det = f.mul(det, pivot);
            let inv = f.inv(pivot).expect("nonzero pivot");
            for i in c + 1..m.rows {
                let factor = m.get(i, c);
                if !factor.is_zero() {
                    m.row_axpy(i, c, f.neg(f.mul(factor, inv)), c);
                }
            }
        }
        det
    }

    /// Characteristic polynomial `det(xI − M)`, via reduction to upper
    /// Hessenberg form.
    pub fn char_poly(&self) -> Poly {
        assert!(self.is_square());
        let f = self.field.clone();
        let n = self.rows;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !h.get(i, m - 1).is_zero()) else {
                continue;
            };
            if i != m {
                h.swap_rows(i, m);
                for r in 0..n {
                    let a = h.get(r, i);
                    let b = h.get(r, m);
                    h.set(r, i, b);
                    h.set(r, m, a);
                }
            }
            let inv = f.inv(h.get(m, m - 1)).expect("nonzero pivot");
            for i in m + 1..n {
                let u = f.mul(h.get(i, m - 1), inv);
                if u.is_zero() {
                    continue;
                }
                h.row_axpy(i, m, f.neg(u), 0);
                for r in 0..n {
                    let v = f.add(h.get(r, m), f.mul(u, h.get(r, i)));
                    h.set(r, m, v);
                }
            }
        }
        // p_k = (x − h_kk) p_{k−1} − Σ_{i<k} h_ik (Π_{j=i+1..k} h_{j,j−1}) p_{i−1}
        let ring = PolyRing::new(&f);
        let mut polys: Vec<Poly> = vec![Poly::one()];
        for k in 0..n {
            let lin = Poly::new(vec![f.neg(h.get(k, k)), FqElem::ONE]);
            let mut pk = ring.mul(&lin, &polys[k]);
            let mut prod = FqElem::ONE;
            for i in (0..k).rev() {
                prod = f.mul(prod, h.get(i + 1, i));
                if prod.is_zero() {
                    break;
                }
                let coeff = f.mul(h.get(i, k), prod);
                pk = ring.sub(&pk, &ring.scale(&polys[i], coeff));
            }
            polys.push(pk);
        }
        polys.pop().expect("at least the constant polynomial")
    }

    /// `p(M)` by Horner's rule.
    pub fn eval_poly(&self, p: &Poly) -> Self {
        let n = self.rows;
        let mut acc = Self::zeros(&self.field, n, n);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self);
            for i in 0..n {
                let v = self.field.add(acc.get(i, i), *c);
                acc.set(i, i, v);
            }
        }
        acc
    }
}

/// One solution of `A x = b`, if any.
pub fn solve(a: &Matrix, b: &[FqElem]) -> Option<Vec<FqElem>> {
    assert_eq!(a.rows(), b.len());
    let n = a.cols();
    let mut aug = Matrix::zeros(a.field(), a.rows(), n + 1);
    for i in 0..a.rows() {
        for j in 0..n {
            aug.set(i, j, a.get(i, j));
        }
        aug.set(i, n, b[i]);
    }
    let pivots = aug.rref_in_place();
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![FqElem::ZERO; n];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug.get(r, n);
    }
    Some(x)
}
