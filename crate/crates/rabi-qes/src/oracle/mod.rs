//! Brute-force verifier: the Rabi Hamiltonian in a truncated boson basis,
//! diagonalized with a self-contained dense symmetric eigensolver.

mod hamiltonian;
mod jacobi;
mod spectrum;

pub use hamiltonian::{build_hamiltonian, TruncatedHamiltonian};
pub use spectrum::{
    converged_spectrum, eig_symmetric, eig_symmetric_with_vectors, verify_juddian, JuddianPoint,
    SpectrumResult,
};

/// Errors from the truncated-basis oracle.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("boson truncation must satisfy N >= 1, got {0}")]
    TruncationTooSmall(usize),
    #[error("need at least one requested eigenvalue, got k = {0}")]
    NoLevelsRequested(usize),
    #[error("eigensolver did not converge within {cap} sweeps")]
    EigensolverStalled { cap: usize },
    #[error("truncation cap {cap} exceeded before the spectrum converged")]
    TruncationExceeded {
        cap: usize,
        /// Result at the largest truncation reached.
        best: Option<Box<SpectrumResult>>,
    },
    #[error("not a Juddian point: constraint residual {residual:e} exceeds {tol:e}")]
    NotJuddian { residual: f64, tol: f64 },
}
