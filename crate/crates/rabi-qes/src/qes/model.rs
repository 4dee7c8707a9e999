//! Physical couplings and the quasi-exact level index.

use super::Error;

/// Couplings of the Rabi Hamiltonian: `kappa` is the linear boson-spin
/// coupling, `mu` the half level splitting of the two-level system.
///
/// `mu >= 0` is enforced at construction (the spectrum depends on `mu^2`
/// only). `kappa = 0` is allowed here — the brute-force oracle supports it —
/// but Bargmann-space operations reject it, since the substitution
/// `z = kappa (2x - 1)` degenerates there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    kappa: f64,
    mu: f64,
}

impl ModelParams {
    pub fn new(kappa: f64, mu: f64) -> Result<Self, Error> {
        if !kappa.is_finite() {
            return Err(Error::InvalidKappa(kappa));
        }
        if !mu.is_finite() || mu < 0.0 {
            return Err(Error::InvalidMu(mu));
        }
        Ok(Self { kappa, mu })
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    /// Squared coupling `u = kappa^2`, the natural variable of the
    /// condition polynomials.
    pub fn u(&self) -> f64 {
        self.kappa * self.kappa
    }

    /// Squared splitting `w = mu^2`.
    pub fn w(&self) -> f64 {
        self.mu * self.mu
    }
}

/// Quasi-exact level index `n = 2j`. The degree-`n` polynomial solution
/// exists when the level-`n` condition polynomial vanishes; `n >= 1` is
/// required wherever a condition polynomial is involved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QesIndex(u32);

impl QesIndex {
    pub fn new(n: u32) -> Self {
        Self(n)
    }

    pub fn get(&self) -> u32 {
        self.0
    }

    /// Spin-algebra label `j = n / 2`.
    pub fn j(&self) -> f64 {
        f64::from(self.0) / 2.0
    }
}

impl From<u32> for QesIndex {
    fn from(n: u32) -> Self {
        Self(n)
    }
}

impl std::fmt::Display for QesIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negative_mu_rejected() {
        assert!(matches!(
            ModelParams::new(0.4, -0.1),
            Err(Error::InvalidMu(_))
        ));
        assert!(matches!(
            ModelParams::new(f64::NAN, 0.5),
            Err(Error::InvalidKappa(_))
        ));
    }

    #[test]
    fn squared_accessors() {
        let p = ModelParams::new(-0.4, 0.6).unwrap();
        assert!((p.u() - 0.16).abs() < 1e-15);
        assert!((p.w() - 0.36).abs() < 1e-15);
    }

    #[test]
    fn index_half() {
        assert_eq!(QesIndex::new(3).j(), 1.5);
        assert_eq!(QesIndex::from(2).get(), 2);
    }
}
