//! Quasi-exact solution machinery for the Rabi Hamiltonian: the series
//! recurrence, condition polynomials, quasi-exact energies, the canonical
//! parameter dictionary, and eigenfunction reconstruction.

mod condition;
mod model;
mod parameters;
mod recurrence;
mod series;
mod wavefunction;

pub use condition::{condition_polynomial, condition_polynomial_with_max, CONDITION_POLY_MAX};
pub use model::{ModelParams, QesIndex};
pub use parameters::{parameter_map, ParameterMap};
pub use recurrence::{
    juddian_constraint, juddian_constraint_exact, juddian_constraint_relative, qes_energy,
    series_recurrence_step,
};
pub use series::{
    continue_series, ode_residual, ode_residual_exact, ode_residual_poly, terminating_series,
    terminating_series_exact, SeriesSolution,
};
pub use wavefunction::{bargmann_inverse, bargmann_map, wavefunctions, WavefunctionPair};

/// Errors from the quasi-exact solution layer.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("kappa must be finite, got {0}")]
    InvalidKappa(f64),
    #[error("mu must be finite and nonnegative, got {0}")]
    InvalidMu(f64),
    #[error("level index n={n} outside supported range {min}..={max}")]
    IndexOutOfRange { n: u32, min: u32, max: u32 },
    #[error("row m={m} is the constraint row for n={n}, not a recurrence step")]
    ConstraintRow { m: u32, n: u32 },
    #[error("decoupled case, series closure undefined (mu = 0)")]
    DecoupledSplitting,
    #[error("Bargmann substitution singular (kappa = 0)")]
    SingularSubstitution,
    #[error("constraint residual {residual:e} exceeds tolerance {tol:e}")]
    ConstraintResidual { residual: f64, tol: f64 },
}
