//! End-to-end Juddian point solver: specialize the condition polynomial,
//! isolate and refine its positive roots, and verify each against the
//! brute-force spectrum.

use num_traits::Pow;

use crate::config::Config;
use crate::exact::{self, refine_root, sturm_isolate};
use crate::oracle::{verify_juddian, JuddianPoint};
use crate::qes::{condition_polynomial_with_max, ModelParams, QesIndex};
use crate::Error;

/// All Juddian crossings of level `n` at fixed splitting `mu > 0`, in
/// ascending `kappa` order. Empty when the specialized condition polynomial
/// has no positive real roots.
///
/// The root search runs over `u = kappa^2` on `(0, B]` with `B` the Cauchy
/// bound of the specialized polynomial, so no positive root can be missed;
/// `u = 0` is excluded because the Bargmann substitution degenerates at
/// zero coupling.
pub fn juddian_points(n: QesIndex, mu: f64, config: &Config) -> Result<Vec<JuddianPoint>, Error> {
    if !(mu.is_finite() && mu > 0.0) {
        return Err(crate::qes::Error::InvalidMu(mu).into());
    }
    let poly = condition_polynomial_with_max(n, config.condition_poly_max)?;
    let w0 = exact::from_f64(mu).expect("mu is finite").pow(2i32);
    let specialized = poly.substitute_w(&w0);
    let bound = specialized.cauchy_root_bound();
    let brackets = sturm_isolate(&specialized, 0.0, bound)?;
    let mut points = Vec::with_capacity(brackets.len());
    for bracket in &brackets {
        let u = refine_root(&specialized, bracket, config.root_refine_tol)?;
        if u <= 0.0 {
            continue;
        }
        let params = ModelParams::new(u.sqrt(), mu)?;
        points.push(verify_juddian(n, &params, config.oracle_tol, config)?);
    }
    Ok(points)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_one_single_crossing() {
        let points = juddian_points(QesIndex::new(1), 0.6, &Config::default()).unwrap();
        assert_eq!(points.len(), 1);
        let p = &points[0];
        assert!((p.kappa - 0.4).abs() < 1e-14, "kappa = {}", p.kappa);
        assert!((p.energy - 0.84).abs() < 1e-14);
        assert!(p.oracle_gap < 1e-7);
        assert_eq!(p.multiplicity, 2);
    }

    #[test]
    fn level_two_double_crossing() {
        let points = juddian_points(QesIndex::new(2), 0.5, &Config::default()).unwrap();
        assert_eq!(points.len(), 2);
        let disc = (29.0f64 * 29.0 - 4.0 * 32.0 * 45.0 / 16.0).sqrt();
        let expected = [((29.0 - disc) / 64.0).sqrt(), ((29.0 + disc) / 64.0).sqrt()];
        for (point, kappa) in points.iter().zip(expected.iter()) {
            assert!((point.kappa - kappa).abs() < 1e-12);
            assert!(point.oracle_gap < 1e-7);
        }
        assert!(points[0].kappa < points[1].kappa);
    }

    #[test]
    fn high_level_crossings_all_verify() {
        // Raw constraint values grow factorially with n; the scale-aware
        // acceptance keeps every genuine root.
        let points = juddian_points(QesIndex::new(8), 0.5, &Config::default()).unwrap();
        assert_eq!(points.len(), 8);
        for p in &points {
            assert!(
                p.oracle_gap < 1e-7,
                "gap = {:e} at kappa {}",
                p.oracle_gap,
                p.kappa
            );
            assert_eq!(p.multiplicity, 2);
        }
    }

    #[test]
    fn too_large_splitting_has_no_crossing() {
        // 4u = 1 - mu^2 < 0 for mu = 1.5.
        let points = juddian_points(QesIndex::new(1), 1.5, &Config::default()).unwrap();
        assert!(points.is_empty());
    }

    #[test]
    fn nonpositive_mu_rejected() {
        assert!(juddian_points(QesIndex::new(1), 0.0, &Config::default()).is_err());
        assert!(juddian_points(QesIndex::new(1), -0.3, &Config::default()).is_err());
    }
}
