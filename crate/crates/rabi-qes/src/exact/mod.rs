//! Exact rational scalars, bivariate/univariate polynomial algebra, and
//! guaranteed real-root isolation.
//!
//! All symbolic work happens over arbitrary-precision rationals; conversion
//! to floating point only happens when a polynomial is specialized with
//! [`BivariatePolynomial::substitute_w`] and its roots are refined.

mod bivariate;
mod sturm;
mod univariate;

pub use bivariate::BivariatePolynomial;
pub use sturm::{refine_root, root_multiplicity, sturm_count, sturm_isolate, RootBracket};
pub use univariate::UnivariatePolynomial;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

/// Arbitrary-precision rational scalar. The representation keeps the
/// denominator strictly positive and numerator/denominator coprime after
/// every operation, so arithmetic is exact: `(a + b) - b == a`.
pub type ExactScalar = num_rational::BigRational;

/// Rational `p/q` from machine integers.
pub fn ratio(p: i64, q: i64) -> ExactScalar {
    ExactScalar::new(BigInt::from(p), BigInt::from(q))
}

/// Exact rational value of a finite `f64` (every finite double is dyadic).
pub fn from_f64(x: f64) -> Option<ExactScalar> {
    ExactScalar::from_float(x)
}

/// Nearest `f64` to an exact rational.
pub fn to_f64(x: &ExactScalar) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Errors from polynomial root isolation and refinement.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("invalid interval: lo={lo} must be below hi={hi}")]
    InvalidInterval { lo: f64, hi: f64 },
    #[error("root refinement stalled at {best} (bracket width {width:e})")]
    RefinementStalled { best: f64, width: f64 },
}
