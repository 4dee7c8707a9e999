//! Terminating series solutions and their differential-equation residuals.

use num_traits::{FromPrimitive, Num, Zero};

use super::recurrence::{juddian_constraint_relative, qes_energy, scalar, step_raw};
use super::{Error, ModelParams, QesIndex};
use crate::config::Config;
use crate::exact::ExactScalar;

/// A terminating degree-`n` series solution `R(x) = sum c_m x^m` with its
/// quasi-exact energy `E = n - kappa^2`.
///
/// Normalization fixes `c_0 = 1`. The tail coefficient is closed by
/// `c_n = 4 kappa^2 c_{n-1} / mu^2`, which makes every continuation
/// coefficient past degree `n` vanish; the termination constraint itself is
/// recorded in `constraint_residual`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesSolution {
    pub n: QesIndex,
    pub params: ModelParams,
    pub coeffs: Vec<f64>,
    pub energy: f64,
    pub constraint_residual: f64,
}

fn series_raw<T>(n: u32, u: &T, w: &T) -> (Vec<T>, T)
where
    T: Num + Clone + FromPrimitive,
{
    let mut coeffs = Vec::with_capacity(n as usize + 1);
    let mut c_prev = T::zero();
    let mut c = T::one();
    coeffs.push(c.clone());
    for m in 0..n.saturating_sub(1) {
        let next = step_raw(n, u, w, m, &c, &c_prev);
        coeffs.push(next.clone());
        c_prev = c;
        c = next;
    }
    let four: T = scalar(4);
    let eight: T = scalar(8);
    let constraint =
        (T::one() - four.clone() * u.clone() - w.clone()) * c.clone() + eight * u.clone() * c_prev;
    // Tail closure: force c_{n+1} = 0 in the m = n row.
    let c_tail = four * u.clone() * c / w.clone();
    coeffs.push(c_tail);
    (coeffs, constraint)
}

/// Build the terminating series for level `n` at a Juddian parameter point.
///
/// Fails when `mu = 0` (the closure divides by `mu^2`) or when the
/// constraint residual exceeds `config.constraint_tol` in relative terms.
pub fn terminating_series(
    n: QesIndex,
    params: &ModelParams,
    config: &Config,
) -> Result<SeriesSolution, Error> {
    if n.get() < 1 {
        return Err(Error::IndexOutOfRange {
            n: n.get(),
            min: 1,
            max: u32::MAX,
        });
    }
    if params.mu() == 0.0 {
        return Err(Error::DecoupledSplitting);
    }
    let rel = juddian_constraint_relative(n, params);
    if rel.abs() > config.constraint_tol {
        return Err(Error::ConstraintResidual {
            residual: rel,
            tol: config.constraint_tol,
        });
    }
    let (coeffs, _) = series_raw::<f64>(n.get(), &params.u(), &params.w());
    Ok(SeriesSolution {
        n,
        params: *params,
        coeffs,
        energy: qes_energy(n, params),
        constraint_residual: rel,
    })
}

/// Exact-rational terminating series at squared couplings `(u, w)`;
/// returns the coefficients `c_0 .. c_n` and the constraint value.
pub fn terminating_series_exact(
    n: QesIndex,
    u: &ExactScalar,
    w: &ExactScalar,
) -> Result<(Vec<ExactScalar>, ExactScalar), Error> {
    if n.get() < 1 {
        return Err(Error::IndexOutOfRange {
            n: n.get(),
            min: 1,
            max: u32::MAX,
        });
    }
    if w.is_zero() {
        return Err(Error::DecoupledSplitting);
    }
    Ok(series_raw(n.get(), u, w))
}

/// Continue the recurrence past the series tail: coefficients
/// `c_{n+1} .. c_{n+extra}` for a coefficient list `c_0 .. c_n`.
pub fn continue_series<T>(n: QesIndex, u: &T, w: &T, coeffs: &[T], extra: usize) -> Vec<T>
where
    T: Num + Clone + FromPrimitive,
{
    assert_eq!(coeffs.len(), n.get() as usize + 1, "need c_0 .. c_n");
    let mut out = Vec::with_capacity(extra);
    let mut c_prev = coeffs[n.get() as usize - 1].clone();
    let mut c = coeffs[n.get() as usize].clone();
    for m in n.get()..n.get() + extra as u32 {
        let next = step_raw(n.get(), u, w, m, &c, &c_prev);
        out.push(next.clone());
        c_prev = c;
        c = next;
    }
    out
}

fn poly_derivative<T>(coeffs: &[T]) -> Vec<T>
where
    T: Num + Clone + FromPrimitive,
{
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| scalar::<T>(k as i64) * c.clone())
        .collect()
}

fn poly_mul<T>(a: &[T], b: &[T]) -> Vec<T>
where
    T: Num + Clone,
{
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + ai.clone() * bj.clone();
        }
    }
    out
}

fn poly_accumulate<T>(acc: &mut Vec<T>, term: &[T])
where
    T: Num + Clone,
{
    if acc.len() < term.len() {
        acc.resize(term.len(), T::zero());
    }
    for (k, t) in term.iter().enumerate() {
        acc[k] = acc[k].clone() + t.clone();
    }
}

/// Coefficients of the second-order operator applied to the series,
///
/// ```text
/// x(1-x) R'' + [n(2x-1) + (x-1)(4ux-1)] R' + [4nu(1-x) + w - n^2] R
/// ```
///
/// assembled from analytic polynomial derivatives; identically zero exactly
/// when the series solves the level-`n` equation.
pub fn ode_residual_poly<T>(n: u32, u: &T, w: &T, coeffs: &[T]) -> Vec<T>
where
    T: Num + Clone + FromPrimitive,
{
    let n_i = i64::from(n);
    let d1 = poly_derivative(coeffs);
    let d2 = poly_derivative(&d1);
    let four_u = scalar::<T>(4) * u.clone();
    let n_u4 = scalar::<T>(4 * n_i) * u.clone();

    // x - x^2
    let curvature = vec![T::zero(), T::one(), T::zero() - T::one()];
    // n(2x-1) + (x-1)(4ux-1) = 4u x^2 + (2n - 1 - 4u) x + (1 - n)
    let drift = vec![
        scalar::<T>(1 - n_i),
        scalar::<T>(2 * n_i - 1) - four_u.clone(),
        four_u,
    ];
    // 4nu(1-x) + w - n^2
    let potential = vec![
        n_u4.clone() + w.clone() - scalar::<T>(n_i * n_i),
        T::zero() - n_u4,
    ];

    let mut acc = Vec::new();
    poly_accumulate(&mut acc, &poly_mul(&curvature, &d2));
    poly_accumulate(&mut acc, &poly_mul(&drift, &d1));
    poly_accumulate(&mut acc, &poly_mul(&potential, coeffs));
    acc
}

fn horner<T>(coeffs: &[T], x: &T) -> T
where
    T: Num + Clone,
{
    coeffs
        .iter()
        .rev()
        .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
}

/// Maximum absolute residual of the level-`n` equation over the sample
/// abscissas, using analytic derivatives of the series polynomial.
pub fn ode_residual(series: &SeriesSolution, sample_xs: &[f64]) -> f64 {
    let poly = ode_residual_poly(
        series.n.get(),
        &series.params.u(),
        &series.params.w(),
        &series.coeffs,
    );
    sample_xs
        .iter()
        .map(|&x| horner(&poly, &x).abs())
        .fold(0.0, f64::max)
}

/// Exact-arithmetic residual of the level-`n` equation at one abscissa.
pub fn ode_residual_exact(
    n: QesIndex,
    u: &ExactScalar,
    w: &ExactScalar,
    coeffs: &[ExactScalar],
    x: &ExactScalar,
) -> ExactScalar {
    let poly = ode_residual_poly(n.get(), u, w, coeffs);
    horner(&poly, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    fn params(kappa: f64, mu: f64) -> ModelParams {
        ModelParams::new(kappa, mu).unwrap()
    }

    #[test]
    fn level_one_series_at_juddian_point() {
        let cfg = Config::default();
        let s = terminating_series(QesIndex::new(1), &params(0.4, 0.6), &cfg).unwrap();
        assert_eq!(s.coeffs.len(), 2);
        assert_eq!(s.coeffs[0], 1.0);
        assert!((s.coeffs[1] - 16.0 / 9.0).abs() < 1e-12);
        assert!((s.energy - 0.84).abs() < 1e-15);
        assert!(s.constraint_residual.abs() < 1e-12);
    }

    #[test]
    fn decoupled_splitting_rejected() {
        let cfg = Config::default();
        let err = terminating_series(QesIndex::new(1), &params(0.5, 0.0), &cfg).unwrap_err();
        assert!(matches!(err, Error::DecoupledSplitting));
    }

    #[test]
    fn off_locus_point_rejected_with_residual() {
        let cfg = Config::default();
        let err = terminating_series(QesIndex::new(1), &params(0.5, 0.5), &cfg).unwrap_err();
        match err {
            Error::ConstraintResidual { residual, .. } => {
                assert!(residual.abs() > 0.1, "residual = {residual}")
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn level_two_series_terminates_at_refined_root() {
        let cfg = Config::default();
        let disc = (29.0f64 * 29.0 - 4.0 * 32.0 * 45.0 / 16.0).sqrt();
        let u = (29.0 - disc) / 64.0;
        let p = params(u.sqrt(), 0.5);
        let s = terminating_series(QesIndex::new(2), &p, &cfg).unwrap();
        assert_eq!(s.coeffs.len(), 3);
        let tail = continue_series(QesIndex::new(2), &p.u(), &p.w(), &s.coeffs, 2);
        let scale = s.coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
        assert!(tail[0].abs() <= 1e-10 * scale, "c3 = {}", tail[0]);
        assert!(tail[1].abs() <= 1e-10 * scale, "c4 = {}", tail[1]);
    }

    #[test]
    fn exact_series_continuation_vanishes_on_locus() {
        // n = 1 family: w = 1 - 4u.
        let u = ratio(1, 5);
        let w = ratio(1, 1) - ratio(4, 5);
        let (coeffs, constraint) = terminating_series_exact(QesIndex::new(1), &u, &w).unwrap();
        assert!(constraint.is_zero());
        let tail = continue_series(QesIndex::new(1), &u, &w, &coeffs, 2);
        assert!(tail[0].is_zero());
        assert!(tail[1].is_zero());
    }

    #[test]
    fn residual_vanishes_for_valid_series_and_flags_perturbation() {
        let cfg = Config::default();
        let s = terminating_series(QesIndex::new(1), &params(0.4, 0.6), &cfg).unwrap();
        let xs: Vec<f64> = (0..21).map(|k| k as f64 / 20.0).collect();
        assert!(ode_residual(&s, &xs) < 1e-10);

        let mut bent = s.clone();
        bent.coeffs[1] += 1e-3;
        assert!(ode_residual(&bent, &xs) > 1e-4);
    }

    #[test]
    fn exact_residual_is_identically_zero_on_rational_locus() {
        // u = 9/64, w = 7/16 satisfies 4u + w = 1.
        let u = ratio(9, 64);
        let w = ratio(7, 16);
        let (coeffs, constraint) = terminating_series_exact(QesIndex::new(1), &u, &w).unwrap();
        assert!(constraint.is_zero());
        for k in 0..=6 {
            let x = ratio(k, 6);
            let r = ode_residual_exact(QesIndex::new(1), &u, &w, &coeffs, &x);
            assert!(r.is_zero(), "residual at x = {k}/6 is {r}");
        }
    }
}
