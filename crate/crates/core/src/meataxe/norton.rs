use rand::Rng;

use super::subspace::{spin, transposed, SubmoduleWitness};
use super::RandomSource;
use crate::ffalg::poly::random_elem;
use crate::ffalg::{MatRep, Matrix, PolyRing};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IrreducibilityOutcome {
    /// A proper nonzero invariant subspace.
    Reducible(SubmoduleWitness),
    /// Norton's criterion certified irreducibility.
    Irreducible,
    /// No verdict within the allotted tries.
    Inconclusive { tries: usize },
}

/// Random element of the enveloping algebra: a combination of the identity,
/// the generators, and a few products of at most `max_len` generators.
fn random_algebra_element(r: &MatRep, rng: &mut RandomSource, max_len: usize) -> Matrix {
    let f = r.field();
    let gens = r.generators();
    let mut theta = Matrix::identity(f, r.dim()).scale(random_elem(f, rng));
    for g in gens {
        theta = theta.add(&g.scale(random_elem(f, rng)));
    }
    for _ in 0..gens.len() + 2 {
        let len = rng.rng().gen_range(2..=max_len.max(2));
        let mut word = gens[rng.rng().gen_range(0..gens.len())].clone();
        for _ in 1..len {
            word = word.mul(&gens[rng.rng().gen_range(0..gens.len())]);
        }
        theta = theta.add(&word.scale(random_elem(f, rng)));
    }
    theta
}

/// Randomised search for a proper submodule with Norton's irreducibility
/// certificate. Product length in sampled algebra elements grows every ten
/// failed tries.
pub fn find_proper_submodule(r: &MatRep, rng: &mut RandomSource, tries: usize) -> IrreducibilityOutcome {
    let n = r.dim();
    if n <= 1 {
        return IrreducibilityOutcome::Irreducible;
    }
    let f = r.field();
    let ring = PolyRing::new(f);
    let mut rt: Option<MatRep> = None;
    for attempt in 0..tries {
        let theta = random_algebra_element(r, rng, 3 + attempt / 10);
        let cp = theta.char_poly();
        for factor in ring.distinct_irreducible_factors(&cp, rng) {
            let ft = theta.eval_poly(&factor);
            let kernel = ft.nullspace();
            if kernel.rows() == 0 {
                continue;
            }
            let s = spin(r, kernel.row(0)).expect("kernel vector is nonzero");
            if s.dim() < n {
                return IrreducibilityOutcome::Reducible(s);
            }
            if Some(kernel.rows()) != factor.degree() {
                continue;
            }
            let rt = rt.get_or_insert_with(|| transposed(r));
            let kt = ft.transpose().nullspace();
            let t = spin(rt, kt.row(0)).expect("kernel vector is nonzero");
            if t.dim() < n {
                // annihilator of a transpose-invariant subspace is invariant
                let ann = t.basis().nullspace();
                let w = SubmoduleWitness::span(f, &ann.row_vecs(), n);
                debug_assert!(w.is_invariant(r));
                return IrreducibilityOutcome::Reducible(w);
            }
            return IrreducibilityOutcome::Irreducible;
        }
    }
    IrreducibilityOutcome::Inconclusive { tries }
}

/// `Some(true)` irreducible, `Some(false)` reducible, `None` inconclusive.
pub fn is_irreducible(r: &MatRep, rng: &mut RandomSource, tries: usize) -> Option<bool> {
    match find_proper_submodule(r, rng, tries) {
        IrreducibilityOutcome::Irreducible => Some(true),
        IrreducibilityOutcome::Reducible(_) => Some(false),
        IrreducibilityOutcome::Inconclusive { .. } => None,
    }
}
