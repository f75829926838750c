//! Exact computations behind the classification of commutative triples
//! `(K ⋉ N, K, τ)` over the three two-step nilpotent case algebras.
//!
//! * [`weights`]: dominant weights, Weyl dimensions, Freudenthal multiplicities.
//! * [`tensor`]: Brauer–Klimyk tensor products and the one-row rule for `so(2m)`.
//! * [`metaplectic`]: truncated metaplectic spectra and multiplicity-freeness scans.
//! * [`nilpotent`]: quaternions, octonions, the case brackets, `B_λ`, Pfaffians
//!   and stabilizer dimensions.
//! * [`classifier`]: restriction rules and the end-to-end verdict pipeline.
//! * [`sweep`]: named batch checks reproduced by the `nilcomm sweep` command.

#![allow(clippy::needless_range_loop, clippy::large_enum_variant)]

pub mod catalog;
pub mod classifier;
pub mod error;
pub mod json;
pub mod metaplectic;
pub mod nilpotent;
pub mod notation;
pub mod rational;
pub mod sweep;
pub mod tensor;
pub mod weights;

pub use error::{Error, Result};

/// Resource guard for representation-theoretic computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest module dimension any single computation may expand.
    pub max_dim: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_dim: 1_000_000 }
    }
}
