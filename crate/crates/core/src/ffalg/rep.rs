//! Matrix representations given by generator images.

use std::collections::{HashSet, VecDeque};
use std::sync::Arc;

use thiserror::Error;

use super::field::{FqElem, FqField};
use super::matrix::Matrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("representation needs at least one generator")]
    NoGenerators,
    #[error("generator {index} is {rows}x{cols}, expected {dim}x{dim}")]
    Shape {
        index: usize,
        rows: usize,
        cols: usize,
        dim: usize,
    },
    #[error("generator {0} is not invertible")]
    NotInvertible(usize),
    #[error("representations live over different fields")]
    FieldMismatch,
    #[error("generator count mismatch: {0} vs {1}")]
    GeneratorCount(usize, usize),
    #[error("generator labels differ at position {0}")]
    LabelMismatch(usize),
    #[error("group has more than {0} elements")]
    CapExceeded(usize),
}

/// A representation `ρ: H → GL(V)` recorded by the images of generators of
/// `H`. Matrices act on column vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatRep {
    field: Arc<FqField>,
    dim: usize,
    gens: Vec<Matrix>,
    labels: Vec<Option<String>>,
}

impl MatRep {
    pub fn new(field: &Arc<FqField>, dim: usize, gens: Vec<Matrix>) -> Result<Self, RepError> {
        let labels = vec![None; gens.len()];
        Self::with_labels(field, dim, gens, labels)
    }

    pub fn with_labels(
        field: &Arc<FqField>,
        dim: usize,
        gens: Vec<Matrix>,
        labels: Vec<Option<String>>,
    ) -> Result<Self, RepError> {
        if gens.is_empty() {
            return Err(RepError::NoGenerators);
        }
        assert_eq!(gens.len(), labels.len(), "one label slot per generator");
        for (index, g) in gens.iter().enumerate() {
            if g.rows() != dim || g.cols() != dim {
                return Err(RepError::Shape {
                    index,
                    rows: g.rows(),
                    cols: g.cols(),
                    dim,
                });
            }
            if **g.field() != **field {
                return Err(RepError::FieldMismatch);
            }
            if g.det().is_zero() && dim > 0 {
                return Err(RepError::NotInvertible(index));
            }
        }
        Ok(Self {
            field: field.clone(),
            dim,
            gens,
            labels,
        })
    }

    /// `dim`-dimensional trivial representation with `ngens` generators.
    pub fn trivial(field: &Arc<FqField>, dim: usize, ngens: usize) -> Self {
        Self::new(field, dim, vec![Matrix::identity(field, dim); ngens.max(1)])
            .expect("identity generators are valid")
    }

    pub fn field(&self) -> &Arc<FqField> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.gens
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    pub fn ngens(&self) -> usize {
        self.gens.len()
    }

    fn map_gens(&self, f: impl Fn(&Matrix) -> Matrix, dim: usize) -> Self {
        Self {
            field: self.field.clone(),
            dim,
            gens: self.gens.iter().map(f).collect(),
            labels: self.labels.clone(),
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<(), RepError> {
        if *self.field != *other.field {
            return Err(RepError::FieldMismatch);
        }
        if self.gens.len() != other.gens.len() {
            return Err(RepError::GeneratorCount(self.gens.len(), other.gens.len()));
        }
        for (i, (a, b)) in self.labels.iter().zip(&other.labels).enumerate() {
            if let (Some(a), Some(b)) = (a, b) {
                if a != b {
                    return Err(RepError::LabelMismatch(i));
                }
            }
        }
        Ok(())
    }

    fn merged_labels(&self, other: &Self) -> Vec<Option<String>> {
        self.labels
            .iter()
            .zip(&other.labels)
            .map(|(a, b)| a.clone().or_else(|| b.clone()))
            .collect()
    }

    /// Diagonal action `g ↦ ρ₁(g) ⊗ ρ₂(g)`.
    pub fn tensor(&self, other: &Self) -> Result<Self, RepError> {
        self.check_compatible(other)?;
        Ok(Self {
            field: self.field.clone(),
            dim: self.dim * other.dim,
            gens: self.gens.iter().zip(&other.gens).map(|(a, b)| a.kron(b)).collect(),
            labels: self.merged_labels(other),
        })
    }

    /// Generators replaced by their inverse transposes.
    pub fn dual(&self) -> Self {
        self.map_gens(
            |g| g.inverse().expect("generators are invertible").transpose(),
            self.dim,
        )
    }

    /// Entrywise `e ↦ e^(p^i)`.
    pub fn twist(&self, i: usize) -> Self {
        let f = self.field.clone();
        self.map_gens(|g| g.map(|e| f.frobenius_pow(e, i)), self.dim)
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self, RepError> {
        self.check_compatible(other)?;
        Ok(Self {
            field: self.field.clone(),
            dim: self.dim + other.dim,
            gens: self
                .gens
                .iter()
                .zip(&other.gens)
                .map(|(a, b)| a.block_diag(b))
                .collect(),
            labels: self.merged_labels(other),
        })
    }

    /// Conjugation action `X ↦ gXg⁻¹` on `n×n` matrices in the row-major
    /// elementary basis, together with a basis (as rows) of the trace-zero
    /// subspace.
    pub fn adjoint_rep(&self) -> (Self, Matrix) {
        let n = self.dim;
        let gl = self.map_gens(
            |g| g.kron(&g.inverse().expect("generators are invertible").transpose()),
            n * n,
        );
        let f = &self.field;
        let mut rows = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    let mut v = vec![FqElem::ZERO; n * n];
                    v[i * n + j] = FqElem::ONE;
                    rows.push(v);
                }
            }
        }
        for i in 0..n.saturating_sub(1) {
            let mut v = vec![FqElem::ZERO; n * n];
            v[i * n + i] = FqElem::ONE;
            v[(n - 1) * n + (n - 1)] = f.neg(FqElem::ONE);
            rows.push(v);
        }
        let sl = Matrix::from_rows(f, &rows, n * n);
        (gl, sl)
    }

    /// All group elements by breadth-first closure from the identity under
    /// right multiplication by generators.
    pub fn group_closure(&self, cap: usize) -> Result<Vec<Matrix>, RepError> {
        closure_of(&self.field, self.dim, &self.gens, cap)
    }

    /// Dimension of `{X : gX = Xg for every generator g}`.
    pub fn lie_centralizer(&self) -> usize {
        let n = self.dim;
        if n == 0 {
            return 0;
        }
        let id = Matrix::identity(&self.field, n);
        let blocks: Vec<Matrix> = self
            .gens
            .iter()
            .map(|g| g.kron(&id).sub(&id.kron(&g.transpose())))
            .collect();
        let mut stacked = Matrix::zeros(&self.field, blocks.len() * n * n, n * n);
        for (b, m) in blocks.iter().enumerate() {
            for i in 0..n * n {
                for j in 0..n * n {
                    stacked.set(b * n * n + i, j, m.get(i, j));
                }
            }
        }
        n * n - stacked.rank()
    }
}

/// Breadth-first closure of a set of invertible matrices.
pub(crate) fn closure_of(
    field: &Arc<FqField>,
    dim: usize,
    gens: &[Matrix],
    cap: usize,
) -> Result<Vec<Matrix>, RepError> {
    let id = Matrix::identity(field, dim);
    let mut seen: HashSet<Matrix> = HashSet::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(id.clone());
    order.push(id.clone());
    queue.push_back(id);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.mul(g);
            if seen.insert(y.clone()) {
                if order.len() >= cap {
                    return Err(RepError::CapExceeded(cap));
                }
                order.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(order)
}

/// Natural representation of `SL₂(F_q)` on generators `[[1,1],[0,1]]` and
/// `[[1,0],[γ,1]]`, `γ` the field's primitive element.
///
/// These generate all of `SL₂(F_q)` for odd `q` and for `q = 2`. Over
/// `GF(2^k)` with `k > 1` both generators are involutions and only a dihedral
/// subgroup is reached.
pub fn sl2_generators(field: &Arc<FqField>) -> MatRep {
    let (z, o, g) = (FqElem::ZERO, FqElem::ONE, field.primitive());
    let upper = Matrix::from_rows(field, &[vec![o, o], vec![z, o]], 2);
    let lower = Matrix::from_rows(field, &[vec![o, z], vec![g, o]], 2);
    MatRep::with_labels(
        field,
        2,
        vec![upper, lower],
        vec![Some("x".into()), Some("y".into())],
    )
    .expect("unitriangular generators")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffalg::matrix::solve;

    fn gf(p: u64, k: usize) -> Arc<FqField> {
        Arc::new(FqField::new(p, k).unwrap())
    }

    #[test]
    fn sl2_orders() {
        for (p, k, order) in [(2, 1, 6), (3, 1, 24), (5, 1, 120), (3, 2, 720), (7, 1, 336)] {
            let f = gf(p, k);
            let r = sl2_generators(&f);
            assert!(r.generators().iter().all(|g| g.det() == FqElem::ONE));
            assert_eq!(r.group_closure(10_000).unwrap().len(), order);
        }
        // two involutions generate a dihedral group in characteristic 2
        let f4 = gf(2, 2);
        assert_eq!(sl2_generators(&f4).group_closure(10_000).unwrap().len(), 10);
    }

    #[test]
    fn closure_cap_and_trivial() {
        let f = gf(3, 2);
        let r = sl2_generators(&f);
        assert_eq!(r.group_closure(100), Err(RepError::CapExceeded(100)));
        assert_eq!(MatRep::trivial(&f, 3, 2).group_closure(1).unwrap().len(), 1);
        let u = MatRep::new(&f, 2, vec![r.generators()[0].clone()]).unwrap();
        assert_eq!(u.group_closure(100).unwrap().len(), 3);
    }

    #[test]
    fn constructors_validate() {
        let f = gf(3, 1);
        assert_eq!(MatRep::new(&f, 2, vec![]), Err(RepError::NoGenerators));
        let sing = Matrix::from_ints(&f, &[&[1, 1], &[1, 1]]);
        assert_eq!(MatRep::new(&f, 2, vec![sing]), Err(RepError::NotInvertible(0)));
        let a = MatRep::trivial(&f, 2, 1);
        let b = MatRep::trivial(&f, 2, 2);
        assert_eq!(a.tensor(&b), Err(RepError::GeneratorCount(1, 2)));
        let c = MatRep::trivial(&gf(5, 1), 2, 1);
        assert_eq!(a.direct_sum(&c), Err(RepError::FieldMismatch));
    }

    #[test]
    fn tensor_dual_twist_basics() {
        let f = gf(3, 2);
        let r = sl2_generators(&f);
        let one = MatRep::trivial(&f, 1, 2);
        assert_eq!(r.tensor(&one).unwrap().generators(), r.generators());
        assert_eq!(r.dual().dual().generators(), r.generators());
        assert_eq!(one.dual().generators(), one.generators());
        assert_eq!(r.twist(0), r);
        assert_eq!(r.twist(2), r);
        let t = r.twist(1);
        assert!(t.generators().iter().all(|g| g.det() == FqElem::ONE));
        assert_eq!(t.generators()[1].get(1, 0), f.pow(f.primitive(), 3));
        let prime = gf(5, 1);
        let rp = sl2_generators(&prime);
        assert_eq!(rp.twist(1), rp);
        let v = r.tensor(&r.twist(2)).unwrap().tensor(&r.twist(4)).unwrap();
        assert_eq!(v.dim(), 8);
        let s = r.direct_sum(&one).unwrap();
        assert_eq!(s.dim(), 3);
        let empty = MatRep::trivial(&f, 0, 2);
        assert_eq!(r.direct_sum(&empty).unwrap().generators(), r.generators());
    }

    /// The natural module is self-dual: solve `X g = g^{-T} X` for an
    /// invertible `X`.
    #[test]
    fn natural_sl2_is_self_dual() {
        let f = gf(3, 2);
        let r = sl2_generators(&f);
        let d = r.dual();
        let id = Matrix::identity(&f, 2);
        // vec(X g − h X) = (I ⊗ gᵀ − h ⊗ I) vec(X) in row-major vec
        let mut rows = Vec::new();
        for (g, h) in r.generators().iter().zip(d.generators()) {
            let m = id.kron(&g.transpose()).sub(&h.kron(&id));
            rows.extend(m.row_vecs());
        }
        let sys = Matrix::from_rows(&f, &rows, 4);
        let ns = sys.nullspace();
        assert_eq!(ns.rows(), 1);
        let x = Matrix::from_vec(&f, 2, 2, ns.row(0).to_vec());
        assert!(x.inverse().is_ok());
        for (g, h) in r.generators().iter().zip(d.generators()) {
            assert_eq!(x.mul(g), h.mul(&x));
        }
        assert!(solve(&sys, &[FqElem::ZERO; 8]).is_some());
    }

    #[test]
    fn adjoint_preserves_trace_zero() {
        for (p, k) in [(2, 1), (3, 2)] {
            let f = gf(p, k);
            let r = sl2_generators(&f);
            let (gl, sl) = r.adjoint_rep();
            assert_eq!(gl.dim(), 4);
            assert_eq!(sl.rows(), 3);
            for g in gl.generators() {
                for i in 0..sl.rows() {
                    let image = g.apply(sl.row(i));
                    let mut stacked = sl.row_vecs();
                    stacked.push(image);
                    assert_eq!(Matrix::from_rows(&f, &stacked, 4).rank(), 3);
                }
            }
        }
        let f = gf(5, 1);
        let r = MatRep::new(&f, 1, vec![Matrix::from_ints(&f, &[&[2]])]).unwrap();
        assert!(r.adjoint_rep().0.generators()[0].is_identity());
    }

    #[test]
    fn lie_centralizer_values() {
        let f = gf(3, 2);
        assert_eq!(MatRep::trivial(&f, 3, 2).lie_centralizer(), 9);
        let r = sl2_generators(&f);
        assert_eq!(r.lie_centralizer(), 1);
        let triv = MatRep::trivial(&f, 1, 2);
        assert_eq!(r.direct_sum(&triv).unwrap().lie_centralizer(), 2);
        // adjoint of a decomposable module has at least one more invariant
        let (gl, _) = r.direct_sum(&triv).unwrap().adjoint_rep();
        assert!(gl.lie_centralizer() >= 2);
    }
}
