//! Symbolic condition polynomials `P_n(u, w)` over exact rationals.
//!
//! The polynomials are produced by running the series recurrence with the
//! squared couplings kept as indeterminates, then reading off the
//! termination constraint. The result is normalized so the `u^n`
//! coefficient equals `4^n n!`, which makes every coefficient an exact
//! integer; the leading coefficients of the first levels are 4, 32, 384.

use std::collections::BTreeMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Error, QesIndex};
use crate::exact::{ratio, BivariatePolynomial, ExactScalar};

/// Default upper bound for the level index; coefficient sizes grow
/// factorially with `n`.
pub const CONDITION_POLY_MAX: u32 = 12;

fn cache() -> &'static RwLock<BTreeMap<u32, BivariatePolynomial>> {
    static CACHE: OnceLock<RwLock<BTreeMap<u32, BivariatePolynomial>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(BTreeMap::new()))
}

fn compute(n: u32) -> BivariatePolynomial {
    let one = ExactScalar::one();
    let u = BivariatePolynomial::monomial(1, 0, one.clone());
    let w = BivariatePolynomial::monomial(0, 1, one.clone());

    // c_0 = 1; rows m = 0 .. n-2 build c_1 .. c_{n-1} symbolically.
    let mut c_prev = BivariatePolynomial::zero();
    let mut c = BivariatePolynomial::constant(one.clone());
    for m in 0..n.saturating_sub(1) {
        let offset = i64::from(m) - i64::from(n);
        let multiplier = BivariatePolynomial::constant(ratio(offset * offset, 1))
            .add(&u.scale(&ratio(4 * offset, 1)))
            .sub(&w);
        let numerator = multiplier
            .mul(&c)
            .sub(&u.scale(&ratio(4 * (offset - 1), 1)).mul(&c_prev));
        let denom = i64::from(m + 1) * (i64::from(m) + 1 - i64::from(n));
        let next = numerator.scale(&ratio(1, denom));
        c_prev = c;
        c = next;
    }

    // Constraint row m = n-1: (1 - 4u - w) c_{n-1} + 8u c_{n-2}.
    let raw = BivariatePolynomial::constant(one)
        .sub(&u.scale(&ratio(4, 1)))
        .sub(&w)
        .mul(&c)
        .add(&u.scale(&ratio(8, 1)).mul(&c_prev));

    // Scale so the u^n coefficient is 4^n n!.
    let lead = raw.coeff(n, 0);
    debug_assert!(!lead.is_zero(), "constraint must reach degree n in u");
    let mut target = BigInt::one();
    for k in 1..=n {
        target *= BigInt::from(4) * BigInt::from(k);
    }
    let normalized = raw.scale(&(ExactScalar::from_integer(target) / lead));
    debug_assert!(
        normalized.terms().all(|(_, _, c)| c.is_integer()),
        "condition polynomial must have integer coefficients"
    );
    normalized
}

/// Condition polynomial for level `n` with the default index cap.
///
/// Its positive real roots in `u = kappa^2` at fixed `w = mu^2` are exactly
/// the Juddian crossing points of level `n`; `n = 0` carries no condition
/// and is out of range.
pub fn condition_polynomial(n: QesIndex) -> Result<BivariatePolynomial, Error> {
    condition_polynomial_with_max(n, CONDITION_POLY_MAX)
}

/// Same as [`condition_polynomial`] with a caller-chosen index cap.
pub fn condition_polynomial_with_max(
    n: QesIndex,
    n_max: u32,
) -> Result<BivariatePolynomial, Error> {
    let n = n.get();
    if n < 1 || n > n_max {
        return Err(Error::IndexOutOfRange {
            n,
            min: 1,
            max: n_max,
        });
    }
    if let Some(hit) = cache().read().expect("cache lock").get(&n) {
        return Ok(hit.clone());
    }
    let poly = compute(n);
    cache()
        .write()
        .expect("cache lock")
        .entry(n)
        .or_insert_with(|| poly.clone());
    Ok(poly)
}
