//! Submodule search and semisimplicity decisions for matrix representations
//! over finite fields.
//!
//! Vectors are columns and generators act by `v ↦ g v`. Subspaces are stored
//! as matrices whose rows are a reduced echelon basis; coordinates of a vector
//! inside such a subspace are its entries at the pivot columns.

mod norton;
mod oracle;
mod split;
mod subspace;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

pub use norton::{find_proper_submodule, is_irreducible, IrreducibilityOutcome};
pub use oracle::{brute_force_submodules, lattice_is_semisimple, MAX_ENUMERATED_SUBSPACES, MAX_ENUMERATED_VECTORS};
pub use split::{has_equivariant_complement, is_semisimple, is_summand_of, SemisimpleVerdict, SplitResult};
pub use subspace::{quotient, restrict, spin, SubmoduleWitness};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MeataxeError {
    #[error("cannot spin the zero vector")]
    ZeroVector,
    #[error("vector has length {found}, module has dimension {dim}")]
    VectorLength { found: usize, dim: usize },
    #[error("subspace is not invariant under generator {0}")]
    NotInvariant(usize),
    #[error("embedding does not intertwine generator {0}")]
    EmbeddingMismatch(usize),
    #[error("subspace enumeration too large: {0}")]
    EnumerationTooLarge(String),
}

/// Seeded generator; identical seeds reproduce identical runs.
#[derive(Debug, Clone)]
pub struct RandomSource {
    seed: u64,
    rng: ChaCha8Rng,
}

impl RandomSource {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }
}
