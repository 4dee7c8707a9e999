//! The three-term series recurrence behind the quasi-exact solutions.
//!
//! Inserting a power series `R(x) = sum_m c_m x^m` into the second-order
//! Bargmann-picture equation for level index `n = 2j` gives, for each power
//! `x^m`, the row
//!
//! ```text
//! (m+1)(m+1-n) c_{m+1} = [(m-n)(m-n+4u) - w] c_m - 4u (m-1-n) c_{m-1}
//! ```
//!
//! with `u = kappa^2`, `w = mu^2`. For `m+1 < n` the row determines the next
//! coefficient. At `m = n-1` the left side vanishes identically and the row
//! becomes the termination constraint
//!
//! ```text
//! R = (1 - 4u - w) c_{n-1} + 8u c_{n-2}
//! ```
//!
//! whose zero set (at fixed `w`) is exactly the Juddian crossing locus for
//! level `n`. Everything here is generic over the scalar so the same rows
//! run in `f64` and in exact rational arithmetic.

use num_traits::{FromPrimitive, Num};

use super::{Error, ModelParams, QesIndex};
use crate::exact::ExactScalar;

pub(crate) fn scalar<T: FromPrimitive>(k: i64) -> T {
    T::from_i64(k).expect("small integer must convert into the scalar type")
}

/// One recurrence row over any exact or floating scalar. `m + 1 == n` is the
/// constraint row and must not be stepped through.
pub(crate) fn step_raw<T>(n: u32, u: &T, w: &T, m: u32, c_m: &T, c_prev: &T) -> T
where
    T: Num + Clone + FromPrimitive,
{
    debug_assert!(m + 1 != n, "constraint row must be handled by the caller");
    let m = i64::from(m);
    let n = i64::from(n);
    let offset: T = scalar(m - n);
    let four: T = scalar(4);
    let coeff_m = offset.clone() * (offset + four.clone() * u.clone()) - w.clone();
    let coeff_prev = four * u.clone() * scalar::<T>(m - 1 - n);
    let denom: T = scalar((m + 1) * (m + 1 - n));
    (coeff_m * c_m.clone() - coeff_prev * c_prev.clone()) / denom
}

/// Continuation coefficient `c_{m+1}` from `(c_m, c_{m-1})` in `f64`.
pub fn series_recurrence_step(
    n: QesIndex,
    params: &ModelParams,
    m: u32,
    c_m: f64,
    c_prev: f64,
) -> Result<f64, Error> {
    if m + 1 == n.get() {
        return Err(Error::ConstraintRow { m, n: n.get() });
    }
    Ok(step_raw(
        n.get(),
        &params.u(),
        &params.w(),
        m,
        &c_m,
        &c_prev,
    ))
}

/// Run the recurrence from `c_0 = 1` up to `c_{n-1}` and return
/// `(c_{n-1}, c_{n-2})`.
pub(crate) fn leading_coefficients<T>(n: u32, u: &T, w: &T) -> (T, T)
where
    T: Num + Clone + FromPrimitive,
{
    let mut c_prev = T::zero();
    let mut c = T::one();
    for m in 0..n.saturating_sub(1) {
        let next = step_raw(n, u, w, m, &c, &c_prev);
        c_prev = c;
        c = next;
    }
    (c, c_prev)
}

pub(crate) fn constraint_raw<T>(n: u32, u: &T, w: &T) -> T
where
    T: Num + Clone + FromPrimitive,
{
    let (c_last, c_second) = leading_coefficients(n, u, w);
    let four: T = scalar(4);
    let eight: T = scalar(8);
    (T::one() - four * u.clone() - w.clone()) * c_last + eight * u.clone() * c_second
}

/// Termination-constraint residual for level `n`: zero exactly at the
/// Juddian points of the coupling plane.
pub fn juddian_constraint(n: QesIndex, params: &ModelParams) -> f64 {
    debug_assert!(n.get() >= 1, "constraint rows exist for n >= 1");
    constraint_raw(n.get(), &params.u(), &params.w())
}

/// Constraint residual scaled by the magnitude of its two contributions.
/// The raw constraint grows factorially with `n`, so acceptance thresholds
/// compare against this form.
pub fn juddian_constraint_relative(n: QesIndex, params: &ModelParams) -> f64 {
    debug_assert!(n.get() >= 1, "constraint rows exist for n >= 1");
    let (u, w) = (params.u(), params.w());
    let (c_last, c_second) = leading_coefficients(n.get(), &u, &w);
    let constraint = constraint_raw(n.get(), &u, &w);
    let scale = ((1.0 - 4.0 * u - w).abs() * c_last.abs() + 8.0 * u * c_second.abs()).max(1.0);
    constraint / scale
}

/// Exact-arithmetic constraint in the squared couplings `(u, w)`; equals the
/// level-`n` condition polynomial up to one fixed rational factor per `n`.
pub fn juddian_constraint_exact(n: QesIndex, u: &ExactScalar, w: &ExactScalar) -> ExactScalar {
    constraint_raw(n.get(), u, w)
}

/// Quasi-exact eigenvalue `E = n - kappa^2` attached to a terminating
/// degree-`n` solution.
pub fn qes_energy(n: QesIndex, params: &ModelParams) -> f64 {
    f64::from(n.get()) - params.u()
}
