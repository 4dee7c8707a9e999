//! Fixed numeric constants of the solver, gathered in one record.

/// Tolerances and limits shared across the solver pipeline. `Default`
/// carries the pinned production values; tests and callers may loosen or
/// tighten individual fields.
#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    /// Relative acceptance bound on the series termination constraint.
    pub constraint_tol: f64,
    /// Bar on the second-order equation residual of an accepted series.
    pub ode_residual_tol: f64,
    /// Final relative tolerance for polynomial root refinement.
    pub root_refine_tol: f64,
    /// Absolute constraint bound below which a point is handed to the
    /// oracle for Juddian verification.
    pub oracle_constraint_tol: f64,
    /// Convergence target for truncated-spectrum eigenvalues.
    pub oracle_tol: f64,
    /// Boson-number truncation schedule: start, doubling up to the cap.
    pub oracle_start_n: usize,
    pub oracle_max_n: usize,
    /// Cyclic Jacobi sweep cap.
    pub jacobi_sweep_cap: usize,
    /// Off-diagonal Frobenius reduction factor declaring the eigensolver
    /// converged.
    pub jacobi_off_tol: f64,
    /// Relative window for clustering oracle eigenvalues around a
    /// quasi-exact energy when measuring crossing multiplicity.
    pub cluster_window: f64,
    /// Largest level index served by the symbolic condition polynomials.
    pub condition_poly_max: u32,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            constraint_tol: 1e-10,
            ode_residual_tol: 1e-10,
            root_refine_tol: 1e-14,
            oracle_constraint_tol: 1e-8,
            oracle_tol: 1e-10,
            oracle_start_n: 16,
            oracle_max_n: 4096,
            jacobi_sweep_cap: 50,
            jacobi_off_tol: 1e-12,
            cluster_window: 1e-6,
            condition_poly_max: crate::qes::CONDITION_POLY_MAX,
        }
    }
}
