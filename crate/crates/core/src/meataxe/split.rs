use serde::Serialize;

use super::norton::{find_proper_submodule, IrreducibilityOutcome};
use super::subspace::{quotient, restrict, SubmoduleWitness};
use super::{MeataxeError, RandomSource};
use crate::ffalg::{FqElem, MatRep, Matrix};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum SplitResult {
    Splits { complement: SubmoduleWitness },
    DoesNotSplit,
}

impl SplitResult {
    pub fn splits(&self) -> bool {
        matches!(self, SplitResult::Splits { .. })
    }

    pub fn label(&self) -> &'static str {
        if self.splits() {
            "splits"
        } else {
            "does-not-split"
        }
    }
}

/// Looks for an invariant complement to `w` by solving for an equivariant
/// section of `V → V/W`.
///
/// In the basis (echelon rows of `W`, free unit vectors) each generator is
/// `[[g_W, D], [0, ḡ]]`; sections `ē_a ↦ e_{c_a} + Σ X_{ja} b_j` are
/// equivariant iff `g_W X − X ḡ = −D` for every generator.
pub fn has_equivariant_complement(r: &MatRep, w: &SubmoduleWitness) -> Result<SplitResult, MeataxeError> {
    if let Some(i) = w.first_non_invariant(r) {
        return Err(MeataxeError::NotInvariant(i));
    }
    let f = r.field();
    let n = r.dim();
    let k = w.dim();
    if k == n {
        return Ok(SplitResult::Splits {
            complement: SubmoduleWitness::zero(f, n),
        });
    }
    if k == 0 {
        return Ok(SplitResult::Splits {
            complement: SubmoduleWitness::whole(f, n),
        });
    }
    let free = w.free_columns();
    let m = free.len();
    let sub = restrict(r, w)?;
    let quo = quotient(r, w)?;
    let id_k = Matrix::identity(f, k);
    let id_m = Matrix::identity(f, m);

    let mut rows: Vec<Vec<FqElem>> = Vec::new();
    let mut rhs: Vec<FqElem> = Vec::new();
    for ((g, gw), gq) in r.generators().iter().zip(sub.generators()).zip(quo.generators()) {
        // vec is row-major over the k×m unknown X
        let block = gw.kron(&id_m).sub(&id_k.kron(&gq.transpose()));
        rows.extend(block.row_vecs());
        let mut d = Matrix::zeros(f, k, m);
        for (a, &c) in free.iter().enumerate() {
            let col: Vec<FqElem> = (0..n).map(|i| g.get(i, c)).collect();
            for (j, x) in w.coords(&col).into_iter().enumerate() {
                d.set(j, a, x);
            }
        }
        rhs.extend(d.data().iter().map(|x| f.neg(*x)));
    }
    let system = Matrix::from_rows(f, &rows, k * m);
    let Some(x) = crate::ffalg::solve(&system, &rhs) else {
        return Ok(SplitResult::DoesNotSplit);
    };
    let comp_rows: Vec<Vec<FqElem>> = free
        .iter()
        .enumerate()
        .map(|(a, &c)| {
            let mut v = vec![FqElem::ZERO; n];
            v[c] = FqElem::ONE;
            for j in 0..k {
                let coeff = x[j * m + a];
                for (t, b) in v.iter_mut().zip(w.basis().row(j)) {
                    *t = f.add(*t, f.mul(coeff, *b));
                }
            }
            v
        })
        .collect();
    let complement = SubmoduleWitness::span(f, &comp_rows, n);
    debug_assert!(complement.is_invariant(r) && complement.dim() == m);
    Ok(SplitResult::Splits { complement })
}

/// Whether the image of `embedding` (rows spanning a copy of `sub` inside
/// `amb`) is a direct summand. The rows must intertwine: `g·eᵢ = Σⱼ sub(g)ⱼᵢ eⱼ`.
pub fn is_summand_of(sub: &MatRep, amb: &MatRep, embedding: &Matrix) -> Result<SplitResult, MeataxeError> {
    let f = amb.field();
    for (idx, (gs, ga)) in sub.generators().iter().zip(amb.generators()).enumerate() {
        for i in 0..embedding.rows() {
            let lhs = ga.apply(embedding.row(i));
            let mut rhs = vec![FqElem::ZERO; amb.dim()];
            for j in 0..embedding.rows() {
                let c = gs.get(j, i);
                for (t, e) in rhs.iter_mut().zip(embedding.row(j)) {
                    *t = f.add(*t, f.mul(c, *e));
                }
            }
            if lhs != rhs {
                return Err(MeataxeError::EmbeddingMismatch(idx));
            }
        }
    }
    let w = SubmoduleWitness::span(f, &embedding.row_vecs(), amb.dim());
    has_equivariant_complement(amb, &w)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum SemisimpleVerdict {
    /// Irreducible summands whose direct sum is the whole module.
    Semisimple { summands: Vec<SubmoduleWitness> },
    /// `witness` is an irreducible submodule with no invariant complement;
    /// `extension`, when found, is a submodule `U ⊇ W` with `U/W`
    /// irreducible in which `W` still has no complement.
    NotSemisimple {
        witness: SubmoduleWitness,
        extension: Option<SubmoduleWitness>,
    },
    Inconclusive { budget: usize },
}

impl SemisimpleVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            SemisimpleVerdict::Semisimple { .. } => "semisimple",
            SemisimpleVerdict::NotSemisimple { .. } => "not-semisimple",
            SemisimpleVerdict::Inconclusive { .. } => "inconclusive",
        }
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self {
            SemisimpleVerdict::Semisimple { .. } => Some(true),
            SemisimpleVerdict::NotSemisimple { .. } => Some(false),
            SemisimpleVerdict::Inconclusive { .. } => None,
        }
    }
}

/// An irreducible submodule found by repeated descent, in `r`'s coordinates.
fn irreducible_submodule(r: &MatRep, rng: &mut RandomSource, budget: usize) -> Option<SubmoduleWitness> {
    let f = r.field();
    let mut cur = SubmoduleWitness::whole(f, r.dim());
    loop {
        let sub = restrict(r, &cur).expect("descent stays invariant");
        match find_proper_submodule(&sub, rng, budget) {
            IrreducibilityOutcome::Irreducible => return Some(cur),
            IrreducibilityOutcome::Reducible(s) => cur = cur.lift(&s),
            IrreducibilityOutcome::Inconclusive { .. } => return None,
        }
    }
}

/// Number of attempts at locating a non-split extension of a witness.
const EXTENSION_ATTEMPTS: usize = 24;

fn non_split_extension(
    r: &MatRep,
    w: &SubmoduleWitness,
    rng: &mut RandomSource,
    budget: usize,
) -> Option<SubmoduleWitness> {
    let q = quotient(r, w).ok()?;
    for _ in 0..EXTENSION_ATTEMPTS {
        let s = irreducible_submodule(&q, rng, budget)?;
        let u = w.preimage(&s);
        let ur = restrict(r, &u).ok()?;
        let w_in_u = u.relative(w);
        if !has_equivariant_complement(&ur, &w_in_u).ok()?.splits() {
            return Some(u);
        }
    }
    None
}

/// Peel-and-split: repeatedly find an irreducible submodule and an invariant
/// complement to it, recursing into the complement. `budget` bounds the tries
/// of each irreducibility search.
pub fn is_semisimple(r: &MatRep, rng: &mut RandomSource, budget: usize) -> SemisimpleVerdict {
    let f = r.field();
    let n = r.dim();
    let mut cur = SubmoduleWitness::whole(f, n);
    let mut summands = Vec::new();
    while cur.dim() > 0 {
        let rep = restrict(r, &cur).expect("complements are invariant");
        let Some(w) = irreducible_submodule(&rep, rng, budget) else {
            return SemisimpleVerdict::Inconclusive { budget };
        };
        match has_equivariant_complement(&rep, &w).expect("witness is invariant") {
            SplitResult::Splits { complement } => {
                summands.push(cur.lift(&w));
                cur = cur.lift(&complement);
            }
            SplitResult::DoesNotSplit => {
                let extension = non_split_extension(&rep, &w, rng, budget).map(|u| cur.lift(&u));
                let witness = cur.lift(&w);
                debug_assert!(witness.is_invariant(r));
                debug_assert!(extension.as_ref().is_none_or(|u| u.is_invariant(r)));
                return SemisimpleVerdict::NotSemisimple { witness, extension };
            }
        }
    }
    debug_assert!(summands.iter().all(|s| s.is_invariant(r)));
    SemisimpleVerdict::Semisimple { summands }
}
