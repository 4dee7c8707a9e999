//! Rabi Hamiltonian in a truncated boson-number basis.

use super::Error;
use crate::qes::ModelParams;

/// Dense symmetric matrix of `H = a'a + kappa sigma_3 (a' + a) +
/// mu (sigma+ + sigma-)` truncated at boson occupation `N`.
///
/// Basis ordering is boson-major: index `i = 2 n_boson + s` with spin
/// component `s` in `{0, 1}` and the sign convention
/// `sigma_3 |s> = (-1)^s |s>`. Every entry is written through a mirrored
/// setter, so the matrix is symmetric by construction.
#[derive(Debug, Clone)]
pub struct TruncatedHamiltonian {
    dim: usize,
    n_boson: usize,
    entries: Vec<f64>,
    params: ModelParams,
}

impl TruncatedHamiltonian {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n_boson(&self) -> usize {
        self.n_boson
    }

    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    pub fn entry(&self, row: usize, col: usize) -> f64 {
        self.entries[row * self.dim + col]
    }

    pub(crate) fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.entry(i, i)).sum()
    }

    fn set_sym(&mut self, row: usize, col: usize, value: f64) {
        self.entries[row * self.dim + col] = value;
        self.entries[col * self.dim + row] = value;
    }
}

/// Assemble the truncated matrix; requires `N >= 1` so at least one boson
/// hop is representable.
pub fn build_hamiltonian(
    params: &ModelParams,
    n_boson: usize,
) -> Result<TruncatedHamiltonian, Error> {
    if n_boson < 1 {
        return Err(Error::TruncationTooSmall(n_boson));
    }
    let dim = 2 * (n_boson + 1);
    let mut h = TruncatedHamiltonian {
        dim,
        n_boson,
        entries: vec![0.0; dim * dim],
        params: *params,
    };
    let kappa = params.kappa();
    let mu = params.mu();
    for nb in 0..=n_boson {
        for s in 0..2usize {
            let i = 2 * nb + s;
            // a'a
            h.set_sym(i, i, nb as f64);
            // mu (sigma+ + sigma-): spin flip within the boson level
            if s == 0 {
                h.set_sym(i, i + 1, mu);
            }
            // kappa sigma_3 (a' + a): boson hop with spin-dependent sign
            if nb < n_boson {
                let sign = if s == 0 { 1.0 } else { -1.0 };
                let j = 2 * (nb + 1) + s;
                h.set_sym(i, j, sign * kappa * ((nb + 1) as f64).sqrt());
            }
        }
    }
    Ok(h)
}
