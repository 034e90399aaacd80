//! Saturation of finite matrix groups: the truncated binomial powers
//! `u^t = Σ_{i<p} C(t, i) (u − 1)^i` of unipotent elements, and closure under
//! them with `t` ranging over the field of definition.

use std::collections::HashSet;
use std::sync::Arc;

use thiserror::Error;

use crate::ffalg::rep::closure_of;
use crate::ffalg::{FqElem, FqField, MatRep, Matrix, RepError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SaturateError {
    #[error("matrix is {0}x{1}, expected square")]
    NotSquare(usize, usize),
    #[error("matrix is not unipotent")]
    NotUnipotent,
    #[error("characteristic {p} is below the dimension {dim}; saturation needs p >= dim")]
    CharacteristicBelowDim { p: u64, dim: usize },
    #[error(transparent)]
    Rep(#[from] RepError),
}

/// `(m − 1)^n = 0`.
pub fn is_unipotent(m: &Matrix) -> Result<bool, SaturateError> {
    if !m.is_square() {
        return Err(SaturateError::NotSquare(m.rows(), m.cols()));
    }
    let eps = m.sub(&Matrix::identity(m.field(), m.rows()));
    Ok(eps.pow(m.rows() as u64).is_zero())
}

fn check_char(field: &FqField, dim: usize) -> Result<(), SaturateError> {
    let p = field.characteristic();
    if (p as u128) < dim as u128 {
        return Err(SaturateError::CharacteristicBelowDim { p, dim });
    }
    Ok(())
}

/// A unipotent `u = 1 + ε` with `ε^p = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnipotentElem {
    u: Matrix,
    eps_powers: Vec<Matrix>,
}

impl UnipotentElem {
    pub fn new(u: &Matrix) -> Result<Self, SaturateError> {
        if !is_unipotent(u)? {
            return Err(SaturateError::NotUnipotent);
        }
        let f = u.field();
        check_char(f, u.rows())?;
        let p = f.characteristic() as usize;
        let eps = u.sub(&Matrix::identity(f, u.rows()));
        let mut eps_powers = vec![Matrix::identity(f, u.rows())];
        for i in 1..p.min(u.rows().max(1) + 1) {
            let next = eps_powers[i - 1].mul(&eps);
            if next.is_zero() {
                break;
            }
            eps_powers.push(next);
        }
        Ok(Self {
            u: u.clone(),
            eps_powers,
        })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.u
    }

    pub fn eps(&self) -> Matrix {
        self.u.sub(&Matrix::identity(self.u.field(), self.u.rows()))
    }
}

/// `C(t, i) = t(t−1)⋯(t−i+1) / i!` in the field, `i < p`.
pub fn binomial(field: &FqField, t: FqElem, i: usize) -> FqElem {
    let mut num = FqElem::ONE;
    let mut den = FqElem::ONE;
    for j in 0..i {
        num = field.mul(num, field.sub(t, field.from_int(j as i64)));
        den = field.mul(den, field.from_int(j as i64 + 1));
    }
    field.div(num, den).expect("i < p so i! is a unit")
}

/// `u^t = Σ_{i=0}^{p−1} C(t, i) ε^i`.
pub fn sat_power(u: &UnipotentElem, t: FqElem) -> Matrix {
    let f = u.u.field();
    let mut acc = Matrix::zeros(f, u.u.rows(), u.u.cols());
    for (i, e) in u.eps_powers.iter().enumerate() {
        let c = binomial(f, t, i);
        if !c.is_zero() {
            acc = acc.add(&e.scale(c));
        }
    }
    acc
}

/// An additive basis of the field over its prime field: `1, x, …, x^{k−1}`.
fn parameter_basis(f: &FqField) -> Vec<FqElem> {
    (0..f.degree())
        .map(|i| {
            let mut c = vec![0u32; f.degree()];
            c[i] = 1;
            f.from_coeffs(&c).expect("unit coefficient vector")
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct SaturatedClosure {
    pub field: Arc<FqField>,
    /// Elements in breadth-first order from the identity.
    pub elements: Vec<Matrix>,
    pub saturated: bool,
    /// Unipotents whose one-parameter subgroups contributed new elements.
    pub adjoined: Vec<Matrix>,
    /// Input generators followed by the added `u^t` generators.
    pub generators: Vec<Matrix>,
}

impl SaturatedClosure {
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    /// Representation of the saturated group on the same space.
    pub fn as_rep(&self) -> MatRep {
        let dim = self.elements[0].rows();
        MatRep::new(&self.field, dim, self.generators.clone()).expect("group elements are invertible")
    }
}

/// Fixpoint of group closure and adjoining `{u^t : t ∈ GF(q)}` for every
/// unipotent element found. Since `t ↦ u^t` is additive, adjoining `u^t` for
/// `t` in an additive basis of the field suffices.
pub fn saturated_closure(r: &MatRep, cap: usize) -> Result<SaturatedClosure, SaturateError> {
    let f = r.field().clone();
    let n = r.dim();
    check_char(&f, n)?;
    let basis = parameter_basis(&f);
    let mut gens: Vec<Matrix> = r.generators().to_vec();
    let mut adjoined = Vec::new();
    loop {
        let elements = closure_of(&f, n, &gens, cap)?;
        let set: HashSet<&Matrix> = elements.iter().collect();
        let mut fresh = Vec::new();
        for x in &elements {
            if x.is_identity() || !is_unipotent(x)? {
                continue;
            }
            let u = UnipotentElem::new(x)?;
            let mut grew = false;
            for t in &basis {
                let y = sat_power(&u, *t);
                if !set.contains(&y) && !fresh.contains(&y) {
                    fresh.push(y);
                    grew = true;
                }
            }
            if grew {
                adjoined.push(x.clone());
            }
        }
        if fresh.is_empty() {
            let saturated = is_saturated(&elements, &f)?;
            return Ok(SaturatedClosure {
                field: f,
                elements,
                saturated,
                adjoined,
                generators: gens,
            });
        }
        gens.extend(fresh);
    }
}

/// Every field-parameter power of every unipotent member lies in the set.
pub fn is_saturated(elements: &[Matrix], field: &FqField) -> Result<bool, SaturateError> {
    let set: HashSet<&Matrix> = elements.iter().collect();
    let params = field.elements();
    for x in elements {
        if x.is_identity() || !is_unipotent(x)? {
            continue;
        }
        let u = UnipotentElem::new(x)?;
        if params.iter().any(|t| !set.contains(&sat_power(&u, *t))) {
            return Ok(false);
        }
    }
    Ok(true)
}
