//! Bargmann-variable coordinate maps and two-component eigenfunctions.
//!
//! In the Bargmann picture the eigenproblem is the first-order system
//!
//! ```text
//! (z + kappa) psi1' + (kappa z - E) psi1 + mu psi2 = 0
//! (z - kappa) psi2' - (kappa z + E) psi2 + mu psi1 = 0
//! ```
//!
//! With `z = kappa (2x - 1)` and `psi1 = exp(-2 kappa^2 x) R(x)`, the first
//! equation recovers the second component algebraically:
//! `psi2 = -exp(-2 kappa^2 x) [x R'(x) - n R(x)] / mu`. Both components and
//! their derivatives are evaluated from the polynomial-times-exponential
//! form; nothing is differentiated numerically.

use super::series::SeriesSolution;
use super::{Error, ModelParams};

/// Forward coordinate map: `z = kappa (2x - 1)`.
pub fn bargmann_map(params: &ModelParams, x: f64) -> f64 {
    params.kappa() * (2.0 * x - 1.0)
}

/// Inverse map `x = (z / kappa + 1) / 2`; singular at `kappa = 0`.
pub fn bargmann_inverse(params: &ModelParams, z: f64) -> Result<f64, Error> {
    if params.kappa() == 0.0 {
        return Err(Error::SingularSubstitution);
    }
    Ok((z / params.kappa() + 1.0) / 2.0)
}

/// Both components of a quasi-exact eigenfunction, callable at any real
/// Bargmann coordinate `z`.
#[derive(Debug, Clone)]
pub struct WavefunctionPair {
    /// Series polynomial `R(x)`, index = degree.
    r: Vec<f64>,
    /// `S(x) = x R'(x) - n R(x)`; degree at most `n - 1` because the top
    /// coefficients cancel.
    s: Vec<f64>,
    pub params: ModelParams,
    pub energy: f64,
}

fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

fn derivative(coeffs: &[f64]) -> Vec<f64> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &c)| k as f64 * c)
        .collect()
}

/// Recover the two-component eigenfunction from a terminating series.
pub fn wavefunctions(series: &SeriesSolution) -> Result<WavefunctionPair, Error> {
    if series.params.mu() == 0.0 {
        return Err(Error::DecoupledSplitting);
    }
    if series.params.kappa() == 0.0 {
        return Err(Error::SingularSubstitution);
    }
    let n = series.n.get() as f64;
    let s = series
        .coeffs
        .iter()
        .enumerate()
        .map(|(k, &c)| (k as f64 - n) * c)
        .collect();
    Ok(WavefunctionPair {
        r: series.coeffs.clone(),
        s,
        params: series.params,
        energy: series.energy,
    })
}

impl WavefunctionPair {
    fn x_of(&self, z: f64) -> f64 {
        (z / self.params.kappa() + 1.0) / 2.0
    }

    fn gauge(&self, x: f64) -> f64 {
        (-2.0 * self.params.u() * x).exp()
    }

    pub fn psi1(&self, z: f64) -> f64 {
        let x = self.x_of(z);
        self.gauge(x) * horner(&self.r, x)
    }

    pub fn psi1_prime(&self, z: f64) -> f64 {
        let x = self.x_of(z);
        let r = horner(&self.r, x);
        let dr = horner(&derivative(&self.r), x);
        self.gauge(x) * (dr - 2.0 * self.params.u() * r) / (2.0 * self.params.kappa())
    }

    pub fn psi2(&self, z: f64) -> f64 {
        let x = self.x_of(z);
        -self.gauge(x) * horner(&self.s, x) / self.params.mu()
    }

    pub fn psi2_prime(&self, z: f64) -> f64 {
        let x = self.x_of(z);
        let s = horner(&self.s, x);
        let ds = horner(&derivative(&self.s), x);
        -self.gauge(x) * (ds - 2.0 * self.params.u() * s)
            / (2.0 * self.params.kappa() * self.params.mu())
    }

    /// Residual of the first component equation at `z`.
    pub fn residual_first(&self, z: f64) -> f64 {
        let kappa = self.params.kappa();
        (z + kappa) * self.psi1_prime(z)
            + (kappa * z - self.energy) * self.psi1(z)
            + self.params.mu() * self.psi2(z)
    }

    /// Residual of the second component equation at `z`; this one carries
    /// the full content of the second-order problem.
    pub fn residual_second(&self, z: f64) -> f64 {
        let kappa = self.params.kappa();
        (z - kappa) * self.psi2_prime(z) - (kappa * z + self.energy) * self.psi2(z)
            + self.params.mu() * self.psi1(z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Config;
    use crate::qes::{terminating_series, QesIndex};

    fn juddian_n1() -> SeriesSolution {
        let params = ModelParams::new(0.4, 0.6).unwrap();
        terminating_series(QesIndex::new(1), &params, &Config::default()).unwrap()
    }

    #[test]
    fn coordinate_map_round_trip() {
        let p = ModelParams::new(0.4, 0.6).unwrap();
        assert_eq!(bargmann_map(&p, 0.5), 0.0);
        assert_eq!(bargmann_map(&p, 0.0), -0.4);
        assert!((bargmann_inverse(&p, 0.4).unwrap() - 1.0).abs() < 1e-15);
        for x in [-1.0, 0.0, 0.3, 1.7] {
            let z = bargmann_map(&p, x);
            assert!((bargmann_inverse(&p, z).unwrap() - x).abs() < 1e-14);
        }
    }

    #[test]
    fn inverse_singular_at_zero_coupling() {
        let p = ModelParams::new(0.0, 0.6).unwrap();
        assert!(matches!(
            bargmann_inverse(&p, 0.1),
            Err(Error::SingularSubstitution)
        ));
    }

    #[test]
    fn component_values_at_left_edge() {
        // At z = -kappa (x = 0) the gauge factor is 1 and the derivative
        // term of the first equation drops out, so psi1 = c_0 = 1 and
        // psi2 = (kappa^2 + E) / mu = 5/3.
        let pair = wavefunctions(&juddian_n1()).unwrap();
        assert!((pair.psi1(-0.4) - 1.0).abs() < 1e-14);
        assert!((pair.psi2(-0.4) - 5.0 / 3.0).abs() < 1e-13);
    }

    #[test]
    fn residuals_vanish_across_sample_window() {
        let pair = wavefunctions(&juddian_n1()).unwrap();
        let kappa = pair.params.kappa();
        for k in 0..11 {
            let z = -2.0 * kappa + 4.0 * kappa * k as f64 / 10.0;
            assert!(pair.residual_first(z).abs() < 1e-10, "first at z={z}");
            assert!(pair.residual_second(z).abs() < 1e-10, "second at z={z}");
        }
    }

    #[test]
    fn rejects_degenerate_couplings() {
        let mut series = juddian_n1();
        series.params = ModelParams::new(0.0, 0.6).unwrap();
        assert!(matches!(
            wavefunctions(&series),
            Err(Error::SingularSubstitution)
        ));
    }
}
