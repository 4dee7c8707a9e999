//! Dense univariate polynomials with floating-point coefficients.

/// Univariate real polynomial, dense representation, index = degree.
/// Trailing (leading-degree) zeros are trimmed on construction, so the
/// leading coefficient of a nonzero polynomial is nonzero.
#[derive(Debug, Clone, PartialEq)]
pub struct UnivariatePolynomial {
    coeffs: Vec<f64>,
}

impl UnivariatePolynomial {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::new(vec![0.0])
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0.0)
    }

    pub fn leading(&self) -> f64 {
        *self.coeffs.last().expect("coeffs never empty")
    }

    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| k as f64 * c)
            .collect();
        Self::new(coeffs)
    }

    /// Every real root lies in `[-B, B]` with
    /// `B = 1 + max_i |c_i / c_lead|` (Cauchy bound).
    pub fn cauchy_root_bound(&self) -> f64 {
        let lead = self.leading();
        if lead == 0.0 {
            return 1.0;
        }
        let max_ratio = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| (c / lead).abs())
            .fold(0.0, f64::max);
        1.0 + max_ratio
    }

    /// Construct `(x - r_0)(x - r_1)...` from its roots; test helper for
    /// oracles that need polynomials with known root sets.
    pub fn from_roots(roots: &[f64]) -> Self {
        let mut coeffs = vec![1.0];
        for &r in roots {
            let mut next = vec![0.0; coeffs.len() + 1];
            for (k, &c) in coeffs.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= r * c;
            }
            coeffs = next;
        }
        Self::new(coeffs)
    }
}
