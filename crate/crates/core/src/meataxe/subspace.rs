use std::sync::Arc;

use serde::Serialize;

use super::MeataxeError;
use crate::ffalg::{FqElem, FqField, MatRep, Matrix};

/// An invariant subspace, as the rows of a reduced echelon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubmoduleWitness {
    basis: Matrix,
    pivots: Vec<usize>,
}

#[derive(Serialize)]
struct WitnessView {
    dim: usize,
    basis: Vec<Vec<String>>,
}

impl Serialize for SubmoduleWitness {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let f = self.basis.field();
        WitnessView {
            dim: self.dim(),
            basis: (0..self.dim())
                .map(|i| self.basis.row(i).iter().map(|e| f.format_elem(*e)).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl SubmoduleWitness {
    /// Span of the given rows (any spanning set, zero rows allowed).
    pub fn span(field: &Arc<FqField>, rows: &[Vec<FqElem>], ambient: usize) -> Self {
        let (r, pivots) = Matrix::from_rows(field, rows, ambient).rref();
        let mut data = Vec::with_capacity(pivots.len() * ambient);
        for i in 0..pivots.len() {
            data.extend_from_slice(r.row(i));
        }
        Self {
            basis: Matrix::from_vec(field, pivots.len(), ambient, data),
            pivots,
        }
    }

    pub fn whole(field: &Arc<FqField>, n: usize) -> Self {
        Self {
            basis: Matrix::identity(field, n),
            pivots: (0..n).collect(),
        }
    }

    pub fn zero(field: &Arc<FqField>, n: usize) -> Self {
        Self {
            basis: Matrix::zeros(field, 0, n),
            pivots: Vec::new(),
        }
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    /// `v` minus its projection along the pivots; zero iff `v` is in the span.
    pub fn residual(&self, v: &[FqElem]) -> Vec<FqElem> {
        let f = self.basis.field();
        let mut out = v.to_vec();
        for (i, &c) in self.pivots.iter().enumerate() {
            let a = out[c];
            if a.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(self.basis.row(i)) {
                *o = f.sub(*o, f.mul(a, *b));
            }
        }
        out
    }

    pub fn contains(&self, v: &[FqElem]) -> bool {
        self.residual(v).iter().all(|e| e.is_zero())
    }

    /// Coordinates of a member vector with respect to the echelon basis.
    pub fn coords(&self, v: &[FqElem]) -> Vec<FqElem> {
        self.pivots.iter().map(|&c| v[c]).collect()
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        (0..other.dim()).all(|i| self.contains(other.basis.row(i)))
    }

    /// Index of the first generator that moves the subspace, if any.
    pub fn first_non_invariant(&self, r: &MatRep) -> Option<usize> {
        r.generators()
            .iter()
            .position(|g| (0..self.dim()).any(|i| !self.contains(&g.apply(self.basis.row(i)))))
    }

    pub fn is_invariant(&self, r: &MatRep) -> bool {
        self.first_non_invariant(r).is_none()
    }

    /// Image of a subspace given in this subspace's coordinates.
    pub fn lift(&self, inner: &Self) -> Self {
        let f = self.basis.field();
        if inner.dim() == 0 {
            return Self::zero(f, self.ambient_dim());
        }
        let rows = inner.basis.mul(&self.basis).row_vecs();
        Self::span(f, &rows, self.ambient_dim())
    }

    /// A subspace contained in this one, rewritten in its coordinates.
    pub fn relative(&self, outer_member: &Self) -> Self {
        let rows: Vec<Vec<FqElem>> = (0..outer_member.dim())
            .map(|i| self.coords(outer_member.basis.row(i)))
            .collect();
        Self::span(self.basis.field(), &rows, self.dim())
    }

    /// Non-pivot columns; they index a basis of the quotient by this space.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ambient_dim()).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Preimage of a subspace of the quotient given in quotient coordinates.
    pub fn preimage(&self, quotient_sub: &Self) -> Self {
        let n = self.ambient_dim();
        let free = self.free_columns();
        let mut rows = self.basis.row_vecs();
        for i in 0..quotient_sub.dim() {
            let mut v = vec![FqElem::ZERO; n];
            for (a, &c) in free.iter().enumerate() {
                v[c] = quotient_sub.basis.get(i, a);
            }
            rows.push(v);
        }
        Self::span(self.basis.field(), &rows, n)
    }
}

/// The smallest invariant subspace containing `v`.
pub fn spin(r: &MatRep, v: &[FqElem]) -> Result<SubmoduleWitness, MeataxeError> {
    let n = r.dim();
    if v.len() != n {
        return Err(MeataxeError::VectorLength { found: v.len(), dim: n });
    }
    if v.iter().all(|e| e.is_zero()) {
        return Err(MeataxeError::ZeroVector);
    }
    let f = r.field().clone();
    // semi-echelon basis: each vector has a leading one at its pivot and is
    // reduced against earlier pivots
    let mut basis: Vec<(usize, Vec<FqElem>)> = Vec::new();
    let reduce = |basis: &[(usize, Vec<FqElem>)], mut w: Vec<FqElem>| -> Option<(usize, Vec<FqElem>)> {
        for (pc, b) in basis {
            let a = w[*pc];
            if !a.is_zero() {
                for (x, y) in w.iter_mut().zip(b) {
                    *x = f.sub(*x, f.mul(a, *y));
                }
            }
        }
        let pc = w.iter().position(|e| !e.is_zero())?;
        let inv = f.inv(w[pc]).expect("nonzero");
        for x in w.iter_mut() {
            *x = f.mul(*x, inv);
        }
        Some((pc, w))
    };
    basis.push(reduce(&basis, v.to_vec()).expect("nonzero"));
    let mut next = 0;
    while next < basis.len() && basis.len() < n {
        let v = basis[next].1.clone();
        for g in r.generators() {
            if let Some(b) = reduce(&basis, g.apply(&v)) {
                basis.push(b);
                if basis.len() == n {
                    break;
                }
            }
        }
        next += 1;
    }
    let rows: Vec<Vec<FqElem>> = basis.into_iter().map(|(_, b)| b).collect();
    let w = SubmoduleWitness::span(&f, &rows, n);
    debug_assert!(w.is_invariant(r));
    Ok(w)
}

/// Action on an invariant subspace, in its echelon coordinates.
pub fn restrict(r: &MatRep, w: &SubmoduleWitness) -> Result<MatRep, MeataxeError> {
    if let Some(i) = w.first_non_invariant(r) {
        return Err(MeataxeError::NotInvariant(i));
    }
    let f = r.field();
    let k = w.dim();
    let gens = r
        .generators()
        .iter()
        .map(|g| {
            let mut m = Matrix::zeros(f, k, k);
            for i in 0..k {
                let image = g.apply(w.basis().row(i));
                for (j, c) in w.coords(&image).into_iter().enumerate() {
                    m.set(j, i, c);
                }
            }
            m
        })
        .collect();
    Ok(MatRep::with_labels(f, k, gens, r.labels().to_vec()).expect("restriction of invertible maps"))
}

/// Action on `V / W`, in the basis of free columns of `W`.
pub fn quotient(r: &MatRep, w: &SubmoduleWitness) -> Result<MatRep, MeataxeError> {
    if let Some(i) = w.first_non_invariant(r) {
        return Err(MeataxeError::NotInvariant(i));
    }
    let f = r.field();
    let free = w.free_columns();
    let m = free.len();
    let gens = r
        .generators()
        .iter()
        .map(|g| {
            let mut q = Matrix::zeros(f, m, m);
            for (a, &c) in free.iter().enumerate() {
                let col: Vec<FqElem> = (0..r.dim()).map(|i| g.get(i, c)).collect();
                let res = w.residual(&col);
                for (b, &d) in free.iter().enumerate() {
                    q.set(b, a, res[d]);
                }
            }
            q
        })
        .collect();
    Ok(MatRep::with_labels(f, m, gens, r.labels().to_vec()).expect("quotient of invertible maps"))
}

/// Representation by transposed generators (used for Norton's test).
pub(crate) fn transposed(r: &MatRep) -> MatRep {
    let gens = r.generators().iter().map(|g| g.transpose()).collect();
    MatRep::new(r.field(), r.dim(), gens).expect("transpose of invertible")
}
