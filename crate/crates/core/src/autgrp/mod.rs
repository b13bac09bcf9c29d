//! Named automorphism families of the free group, relation verification
//! suites, the Andreadakis filtration, Johnson homomorphisms, and the rank
//! pipelines built on them.

mod filtration;
mod gens;
mod rank;
mod suites;

pub use filtration::{andreadakis_member, johnson};
pub use gens::{endo_of, endo_of_inverse, evaluate, Family, GroupSpec, GroupWord, NamedGenerator};
pub use rank::{
    conjecture_probe, gamma_generators, gr_rank, psigma_gr2_basis_rank, Method, ProbeReport,
};
pub use suites::{verify_relations, Suite, SuiteReport};

use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AutError {
    /// Invalid indices, malformed input, or a violated precondition.
    Input(String),
    /// Outside the configured size guard.
    Resource {
        n: usize,
        k: usize,
        max_n: usize,
        max_k: usize,
    },
    /// The endomorphism does not act trivially on the required nilpotent
    /// quotient.
    NotInFiltration { k: usize },
    Word(crate::word::WordError),
    Series(crate::series::SeriesError),
    Lie(crate::liealg::LieError),
}

impl fmt::Display for AutError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AutError::Input(msg) => write!(f, "invalid input: {msg}"),
            AutError::Resource { n, k, max_n, max_k } => write!(
                f,
                "size guard rejects n={n}, k={k} (limits: n <= {max_n}, k <= {max_k})"
            ),
            AutError::NotInFiltration { k } => {
                write!(f, "endomorphism is not in the filtration term {k}")
            }
            AutError::Word(e) => write!(f, "{e}"),
            AutError::Series(e) => write!(f, "{e}"),
            AutError::Lie(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for AutError {}

impl From<crate::word::WordError> for AutError {
    fn from(e: crate::word::WordError) -> Self {
        AutError::Word(e)
    }
}

impl From<crate::series::SeriesError> for AutError {
    fn from(e: crate::series::SeriesError) -> Self {
        AutError::Series(e)
    }
}

impl From<crate::liealg::LieError> for AutError {
    fn from(e: crate::liealg::LieError) -> Self {
        AutError::Lie(e)
    }
}

/// Resource limits for suites and rank pipelines. Tensor dimensions grow
/// like `n^(k+1)`, so both knobs are enforced before any allocation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SizeGuard {
    pub max_n: usize,
    pub max_k: usize,
}

impl SizeGuard {
    /// Default guard for relation suites.
    pub fn suites() -> SizeGuard {
        SizeGuard { max_n: 5, max_k: 6 }
    }

    /// Default guard for rank pipelines.
    pub fn ranks() -> SizeGuard {
        SizeGuard { max_n: 4, max_k: 4 }
    }

    pub fn custom(max_n: usize, max_k: usize) -> SizeGuard {
        SizeGuard { max_n, max_k }
    }

    pub fn admit(&self, n: usize, k: usize) -> Result<(), AutError> {
        if n > self.max_n || k > self.max_k {
            return Err(AutError::Resource {
                n,
                k,
                max_n: self.max_n,
                max_k: self.max_k,
            });
        }
        Ok(())
    }
}
