//! Exact bivariate polynomials in `u = kappa^2` and `w = mu^2`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::{to_f64, ExactScalar, UnivariatePolynomial};

/// Polynomial in the squared couplings `u = kappa^2`, `w = mu^2` with exact
/// rational coefficients. Zero coefficients are never stored, so structural
/// equality is semantic equality.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivariatePolynomial {
    coeffs: BTreeMap<(u32, u32), ExactScalar>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: ExactScalar) -> Self {
        Self::monomial(0, 0, c)
    }

    /// `c * u^du * w^dw`.
    pub fn monomial(du: u32, dw: u32, c: ExactScalar) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert((du, dw), c);
        }
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `u^du * w^dw` (zero when absent).
    pub fn coeff(&self, du: u32, dw: u32) -> ExactScalar {
        self.coeffs
            .get(&(du, dw))
            .cloned()
            .unwrap_or_else(ExactScalar::zero)
    }

    /// Terms in ascending `(du, dw)` order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &ExactScalar)> {
        self.coeffs.iter().map(|(&(du, dw), c)| (du, dw, c))
    }

    /// Terms in descending `(du, dw)` order, the conventional display order.
    pub fn terms_desc(&self) -> impl Iterator<Item = (u32, u32, &ExactScalar)> {
        self.coeffs.iter().rev().map(|(&(du, dw), c)| (du, dw, c))
    }

    pub fn degree_u(&self) -> u32 {
        self.coeffs.keys().map(|&(du, _)| du).max().unwrap_or(0)
    }

    pub fn degree_w(&self) -> u32 {
        self.coeffs.keys().map(|&(_, dw)| dw).max().unwrap_or(0)
    }

    fn insert(&mut self, key: (u32, u32), value: ExactScalar) {
        if value.is_zero() {
            self.coeffs.remove(&key);
        } else {
            self.coeffs.insert(key, value);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (du, dw, c) in other.terms() {
            let sum = out.coeff(du, dw) + c;
            out.insert((du, dw), sum);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&ExactScalar::from_integer((-1).into())))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (au, aw, ac) in self.terms() {
            for (bu, bw, bc) in other.terms() {
                let key = (au + bu, aw + bw);
                let sum = out.coeff(key.0, key.1) + ac * bc;
                out.insert(key, sum);
            }
        }
        out
    }

    pub fn scale(&self, factor: &ExactScalar) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        let coeffs = self.coeffs.iter().map(|(&k, c)| (k, c * factor)).collect();
        Self { coeffs }
    }

    /// Exact evaluation at rational `(u, w)`.
    pub fn eval(&self, u: &ExactScalar, w: &ExactScalar) -> ExactScalar {
        let mut acc = ExactScalar::zero();
        for (du, dw, c) in self.terms() {
            let mut term = c.clone();
            for _ in 0..du {
                term *= u;
            }
            for _ in 0..dw {
                term *= w;
            }
            acc += term;
        }
        acc
    }

    /// Specialize `w` to a fixed rational, producing a univariate polynomial
    /// in `u`. Coefficients are combined exactly and only then rounded to
    /// `f64`.
    pub fn substitute_w(&self, w0: &ExactScalar) -> UnivariatePolynomial {
        let exact = self.substitute_w_exact(w0);
        let deg = exact.len().saturating_sub(1);
        let mut coeffs = vec![0.0; deg + 1];
        for (i, c) in exact.iter().enumerate() {
            coeffs[i] = to_f64(c);
        }
        UnivariatePolynomial::new(coeffs)
    }

    /// Exact-coefficient variant of [`Self::substitute_w`]; index = degree
    /// in `u`.
    pub fn substitute_w_exact(&self, w0: &ExactScalar) -> Vec<ExactScalar> {
        let deg = self.degree_u() as usize;
        let mut out = vec![ExactScalar::zero(); deg + 1];
        for (du, dw, c) in self.terms() {
            let mut term = c.clone();
            for _ in 0..dw {
                term *= w0;
            }
            out[du as usize] += term;
        }
        while out.len() > 1 && out.last().map(|c| c.is_zero()).unwrap_or(false) {
            out.pop();
        }
        out
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (du, dw, c) in self.terms_desc() {
            let neg = c < &ExactScalar::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut pieces = Vec::new();
            if mag != ExactScalar::from_integer(1.into()) || (du == 0 && dw == 0) {
                pieces.push(mag.to_string());
            }
            for (sym, d) in [("u", du), ("w", dw)] {
                match d {
                    0 => {}
                    1 => pieces.push(sym.to_string()),
                    _ => pieces.push(format!("{sym}^{d}")),
                }
            }
            write!(f, "{}", pieces.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::ratio;
    use super::*;

    fn p1() -> BivariatePolynomial {
        // 4u + w - 1
        BivariatePolynomial::monomial(1, 0, ratio(4, 1))
            .add(&BivariatePolynomial::monomial(0, 1, ratio(1, 1)))
            .add(&BivariatePolynomial::constant(ratio(-1, 1)))
    }

    #[test]
    fn additive_identity() {
        let p = p1();
        assert_eq!(p.add(&BivariatePolynomial::zero()), p);
    }

    #[test]
    fn monomial_product() {
        let u = BivariatePolynomial::monomial(1, 0, ratio(1, 1));
        let w = BivariatePolynomial::monomial(0, 1, ratio(1, 1));
        assert_eq!(u.mul(&w), BivariatePolynomial::monomial(1, 1, ratio(1, 1)));
    }

    #[test]
    fn eval_on_vanishing_locus() {
        // 4(4/25) + 9/25 - 1 == 0
        assert!(p1().eval(&ratio(4, 25), &ratio(9, 25)).is_zero());
    }

    #[test]
    fn degrees_add_under_multiplication() {
        let p = p1();
        let q = p.mul(&p);
        assert_eq!(q.degree_u(), 2);
        assert_eq!(q.degree_w(), 2);
    }

    #[test]
    fn substitute_w_specializes() {
        // 4u + 9/25 - 1 = 4u - 16/25
        let specialized = p1().substitute_w(&ratio(9, 25));
        assert_eq!(specialized.degree(), 1);
        assert_eq!(specialized.coeffs(), &[-0.64, 4.0]);
    }

    #[test]
    fn substitute_w_ignores_absent_w() {
        let p = BivariatePolynomial::monomial(2, 0, ratio(3, 1))
            .add(&BivariatePolynomial::constant(ratio(-5, 1)));
        let specialized = p.substitute_w_exact(&ratio(7, 13));
        assert_eq!(specialized, vec![ratio(-5, 1), ratio(0, 1), ratio(3, 1)]);
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let p = p1().sub(&p1());
        assert!(p.is_zero());
        assert_eq!(p.terms().count(), 0);
    }

    #[test]
    fn display_reads_naturally() {
        assert_eq!(p1().to_string(), "4 u + w - 1");
    }
}
