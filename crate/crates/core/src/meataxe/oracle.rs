//! Exhaustive submodule lattices for tiny modules.

use itertools::Itertools;

use super::subspace::SubmoduleWitness;
use super::MeataxeError;
use crate::ffalg::{FqElem, MatRep, Matrix};

/// Guard on `q^dim`.
pub const MAX_ENUMERATED_VECTORS: u128 = 100_000;
/// Guard on the total number of subspaces visited.
pub const MAX_ENUMERATED_SUBSPACES: u128 = 2_000_000;

/// Number of subspaces of `GF(q)^n`, summed Gaussian binomials.
fn subspace_count(q: u128, n: usize) -> u128 {
    let mut total: u128 = 0;
    for k in 0..=n {
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        for i in 0..k {
            num = num.saturating_mul(q.saturating_pow((n - i) as u32).saturating_sub(1));
            den = den.saturating_mul(q.saturating_pow((i + 1) as u32) - 1);
        }
        total = total.saturating_add(num / den.max(1));
    }
    total
}

/// Every invariant subspace, by enumerating reduced echelon forms.
pub fn brute_force_submodules(r: &MatRep) -> Result<Vec<SubmoduleWitness>, MeataxeError> {
    let f = r.field();
    let n = r.dim();
    let q = f.order() as u128;
    let vectors = q.checked_pow(n as u32).unwrap_or(u128::MAX);
    if vectors > MAX_ENUMERATED_VECTORS {
        return Err(MeataxeError::EnumerationTooLarge(format!("q^dim = {vectors}")));
    }
    let count = subspace_count(q, n);
    if count > MAX_ENUMERATED_SUBSPACES {
        return Err(MeataxeError::EnumerationTooLarge(format!("{count} subspaces")));
    }
    let elems = f.elements();
    let mut out = Vec::new();
    for k in 0..=n {
        for pivots in (0..n).combinations(k) {
            let free: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(i, &pc)| {
                    let pivots = &pivots;
                    (pc + 1..n).filter(move |c| !pivots.contains(c)).map(move |c| (i, c))
                })
                .collect();
            let mut base = Matrix::zeros(f, k, n);
            for (i, &pc) in pivots.iter().enumerate() {
                base.set(i, pc, FqElem::ONE);
            }
            let choices = std::iter::repeat_n(elems.iter().copied(), free.len())
                .multi_cartesian_product();
            let mut visit = |m: Matrix| {
                let w = SubmoduleWitness::span(f, &m.row_vecs(), n);
                if w.is_invariant(r) {
                    out.push(w);
                }
            };
            if free.is_empty() {
                visit(base.clone());
                continue;
            }
            for assignment in choices {
                let mut m = base.clone();
                for (&(i, c), v) in free.iter().zip(assignment) {
                    m.set(i, c, v);
                }
                visit(m);
            }
        }
    }
    Ok(out)
}

/// Semisimple iff every member of the lattice has a complement in it.
pub fn lattice_is_semisimple(lattice: &[SubmoduleWitness], n: usize) -> bool {
    lattice.iter().all(|w| {
        lattice.iter().any(|c| {
            if w.dim() + c.dim() != n {
                return false;
            }
            let mut rows = w.basis().row_vecs();
            rows.extend(c.basis().row_vecs());
            rows.is_empty() || Matrix::from_rows(w.basis().field(), &rows, n).rank() == n
        })
    })
}
