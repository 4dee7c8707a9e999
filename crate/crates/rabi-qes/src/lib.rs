//! Quasi-exact (Juddian) spectra of the quantum Rabi model.
//!
//! A single bosonic mode coupled to a two-level system admits isolated
//! eigenvalues of the elementary form `E = n - kappa^2` whenever the
//! couplings sit on the zero set of a level-`n` condition polynomial in
//! `(kappa^2, mu^2)`. This crate computes those polynomials exactly,
//! isolates their real roots with Sturm sequences, reconstructs the
//! terminating series eigenfunctions, and independently verifies every
//! crossing by dense diagonalization in a truncated boson basis.
//!
//! The pieces:
//!
//! - [`exact`]: arbitrary-precision rational scalars, bivariate/univariate
//!   polynomial algebra, guaranteed real-root isolation and refinement.
//! - [`qes`]: the series recurrence, condition polynomials, quasi-exact
//!   energies, two-component eigenfunctions, and the canonical-form
//!   parameter dictionary.
//! - [`oracle`]: brute-force cross-check via a truncated Fock-basis
//!   Hamiltonian and a self-contained Jacobi eigensolver.
//! - [`solver`]: the end-to-end pipeline from `(n, mu)` to verified
//!   crossings.
//! - [`verify`]: named check suites behind the `rabi-qes verify` command.
//!
//! Start with the runnable programs under `examples/`; each one exercises a
//! single capability end to end.

pub mod cli;
pub mod config;
pub mod exact;
pub mod oracle;
pub mod qes;
pub mod solver;
pub mod verify;

pub use config::Config;
pub use oracle::{JuddianPoint, SpectrumResult};
pub use qes::{ModelParams, QesIndex, SeriesSolution};
pub use solver::juddian_points;

/// Umbrella error for the solver pipeline.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Exact(#[from] exact::Error),
    #[error(transparent)]
    Qes(#[from] qes::Error),
    #[error(transparent)]
    Oracle(#[from] oracle::Error),
}
