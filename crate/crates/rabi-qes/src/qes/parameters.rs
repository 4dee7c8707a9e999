//! Dictionary from Rabi couplings to the canonical quasi-exactly-solvable
//! operator family.

use super::{ModelParams, QesIndex};

/// Parameters of the canonical QES form equivalent to the level-`n`
/// Bargmann-picture equation. `alpha` is always `1/2`; the radicand of `s`
/// is a sum of squares and nonnegative terms, so `s` is real and
/// nonnegative for every admissible input.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParameterMap {
    pub alpha: f64,
    pub lambda: f64,
    pub l: f64,
    pub a: f64,
    pub q: f64,
    pub s: f64,
}

/// Evaluate the canonical-form dictionary at level `n` (so `j = n/2`).
pub fn parameter_map(n: QesIndex, params: &ModelParams) -> ParameterMap {
    let j = n.j();
    let u = params.u();
    let w = params.w();
    let radicand = 4.0 * j * (j + 1.0) + (4.0 * u + 1.0) * (4.0 * u + 1.0);
    debug_assert!(radicand >= 0.0);
    let s = radicand.sqrt();
    ParameterMap {
        alpha: 0.5,
        lambda: -4.0 * j * (2.0 * u - j) - w,
        l: -2.0 * j - 0.5,
        a: -s - 0.5,
        q: 16.0 * u / ((2.0 * s + 1.0) * (2.0 * s + 1.0)),
        s,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn map(n: u32, kappa: f64, mu: f64) -> ParameterMap {
        parameter_map(QesIndex::new(n), &ModelParams::new(kappa, mu).unwrap())
    }

    #[test]
    fn ground_index_at_zero_coupling() {
        let m = map(0, 0.0, 0.5);
        assert_eq!(m.alpha, 0.5);
        assert_eq!(m.s, 1.0);
        assert_eq!(m.q, 0.0);
        assert_eq!(m.lambda, -0.25);
        assert_eq!(m.l, -0.5);
        assert_eq!(m.a, -1.5);
    }

    #[test]
    fn first_index_at_zero_coupling() {
        // j = 1/2: s = sqrt(3 + 1) = 2 independent of mu.
        for mu in [0.0, 0.3, 2.0] {
            let m = map(1, 0.0, mu);
            assert_eq!(m.s, 2.0);
            assert_eq!(m.q, 0.0);
            assert_eq!(m.l, -1.5);
            assert_eq!(m.a, -2.5);
        }
    }

    #[test]
    fn generic_point_recomputed_from_definitions() {
        let m = map(1, 0.4, 0.6);
        let s = (3.0f64 + 1.64 * 1.64).sqrt();
        assert!((m.s - s).abs() < 1e-15);
        assert!((m.s - 2.385288).abs() < 1e-6);
        let q = 2.56 / ((2.0 * s + 1.0) * (2.0 * s + 1.0));
        assert!((m.q - q).abs() < 1e-15);
        assert!((m.q - 0.076878).abs() < 1e-6);
        // lambda = -4j(2u - j) - w with j = 1/2.
        assert!((m.lambda - (-2.0 * (0.32 - 0.5) - 0.36)).abs() < 1e-15);
    }
}
