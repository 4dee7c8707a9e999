//! Sturm-sequence root counting, isolation, and bracket refinement.
//!
//! The sequence is built on the square-free part `p / gcd(p, p')`, so
//! repeated roots are counted once; multiplicity is reported separately by
//! [`root_multiplicity`]. Chain members are rescaled to unit max-norm, which
//! preserves the sign-variation property.

use super::{Error, UnivariatePolynomial};

/// Coefficients below this fraction of a remainder's scale are noise from
/// the floating-point division chain and are truncated to zero.
const REMAINDER_TRUNCATION: f64 = 1e-12;
/// Bisection stops refining once the bracket is this tight (scaled by the
/// root magnitude); Newton takes over from there.
const BISECTION_WIDTH: f64 = 1e-8;
const REFINE_ITERATION_CAP: usize = 120;

/// An interval guaranteed to contain exactly one distinct real root.
///
/// `value_lo` / `value_hi` are evaluations of the square-free part of the
/// isolated polynomial; either they differ in sign or one endpoint is an
/// exact root.
#[derive(Debug, Clone, PartialEq)]
pub struct RootBracket {
    pub lo: f64,
    pub hi: f64,
    pub value_lo: f64,
    pub value_hi: f64,
}

fn max_abs(coeffs: &[f64]) -> f64 {
    coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
}

/// Scale to unit max-norm; positive scaling keeps every Sturm sign intact.
fn normalized(p: UnivariatePolynomial) -> UnivariatePolynomial {
    let m = max_abs(p.coeffs());
    if m == 0.0 || m == 1.0 {
        return p;
    }
    UnivariatePolynomial::new(p.coeffs().iter().map(|c| c / m).collect())
}

/// Remainder of `a / b` by dense long division, with relative truncation of
/// round-off residue.
fn remainder(a: &UnivariatePolynomial, b: &UnivariatePolynomial) -> UnivariatePolynomial {
    let mut rem: Vec<f64> = a.coeffs().to_vec();
    let div = b.coeffs();
    let lead = *div.last().expect("divisor coeffs never empty");
    let scale = max_abs(&rem).max(max_abs(div));
    while rem.len() >= div.len() && !rem.iter().all(|&c| c == 0.0) {
        let q = rem.last().unwrap() / lead;
        let offset = rem.len() - div.len();
        for (k, &d) in div.iter().enumerate() {
            rem[offset + k] -= q * d;
        }
        rem.pop();
        if rem.is_empty() {
            break;
        }
    }
    for c in rem.iter_mut() {
        if c.abs() < REMAINDER_TRUNCATION * scale {
            *c = 0.0;
        }
    }
    UnivariatePolynomial::new(rem)
}

/// Monic gcd of `p` and `p'` via the Euclidean chain, used only to deflate
/// repeated roots. Simple-root inputs yield a constant.
fn gcd_with_derivative(p: &UnivariatePolynomial) -> UnivariatePolynomial {
    let mut r0 = normalized(p.clone());
    let mut r1 = normalized(p.derivative());
    while !r1.is_zero() && r1.degree() > 0 {
        let r2 = remainder(&r0, &r1);
        if r2.is_zero() {
            return r1;
        }
        r0 = r1;
        r1 = normalized(r2);
    }
    UnivariatePolynomial::new(vec![1.0])
}

/// Square-free part `p / gcd(p, p')`; returns `p` unchanged when the gcd is
/// constant.
fn square_free_part(p: &UnivariatePolynomial) -> UnivariatePolynomial {
    let g = gcd_with_derivative(p);
    if g.degree() == 0 {
        return p.clone();
    }
    // Long division p / g; exact up to round-off by construction.
    let mut rem: Vec<f64> = p.coeffs().to_vec();
    let div = g.coeffs();
    let lead = *div.last().unwrap();
    let mut quotient = vec![0.0; rem.len() - div.len() + 1];
    while rem.len() >= div.len() {
        let q = rem.last().unwrap() / lead;
        let offset = rem.len() - div.len();
        quotient[offset] = q;
        for (k, &d) in div.iter().enumerate() {
            rem[offset + k] -= q * d;
        }
        rem.pop();
        if rem.is_empty() {
            break;
        }
    }
    UnivariatePolynomial::new(quotient)
}

fn sturm_chain(q: &UnivariatePolynomial) -> Vec<UnivariatePolynomial> {
    let mut chain = vec![normalized(q.clone())];
    let d = q.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(normalized(d));
    loop {
        let len = chain.len();
        let r = remainder(&chain[len - 2], &chain[len - 1]);
        if r.is_zero() {
            break;
        }
        let neg = UnivariatePolynomial::new(r.coeffs().iter().map(|c| -c).collect());
        chain.push(normalized(neg));
        if chain.last().unwrap().degree() == 0 {
            break;
        }
    }
    chain
}

fn sign_variations(chain: &[UnivariatePolynomial], x: f64) -> usize {
    let mut variations = 0;
    let mut prev = 0i8;
    for member in chain {
        let v = member.eval(x);
        let sign = if v > 0.0 {
            1i8
        } else if v < 0.0 {
            -1i8
        } else {
            0i8
        };
        if sign != 0 {
            if prev != 0 && sign != prev {
                variations += 1;
            }
            prev = sign;
        }
    }
    variations
}

/// Round-off level of a Horner evaluation of `q` at `x`; values below this
/// have an untrustworthy sign.
fn eval_floor(q: &UnivariatePolynomial, x: f64) -> f64 {
    let ax = x.abs().max(1.0);
    let magnitude: f64 = q
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| c.abs() * ax.powi(k as i32))
        .sum();
    (q.degree() as f64 + 1.0) * f64::EPSILON * magnitude
}

/// Subdivision point whose chain-head sign is reliable. An exact zero is
/// fine (ignored signs count the right limit); a noisy near-zero is not,
/// so nudge off it. Signs of interior chain members never affect the
/// variation count, only the head needs guarding — and it must be the
/// chain's own (rescaled) head, the polynomial the counter actually reads.
fn split_point(head: &UnivariatePolynomial, lo: f64, hi: f64) -> f64 {
    let width = hi - lo;
    for fraction in [0.5, 0.53819, 0.46273, 0.57141, 0.42956] {
        let candidate = lo + width * fraction;
        let value = head.eval(candidate);
        if value == 0.0 || value.abs() > eval_floor(head, candidate) {
            return candidate;
        }
    }
    lo + 0.5 * width
}

fn isolate_recursive(
    chain: &[UnivariatePolynomial],
    q: &UnivariatePolynomial,
    lo: f64,
    hi: f64,
    v_lo: usize,
    v_hi: usize,
    out: &mut Vec<RootBracket>,
) {
    let count = v_lo.saturating_sub(v_hi);
    if count == 0 {
        return;
    }
    let mid = split_point(&chain[0], lo, hi);
    if count == 1 || mid <= lo || mid >= hi {
        // Either isolated, or the interval is a single ulp wide and the
        // remaining cluster is not separable in f64.
        out.push(RootBracket {
            lo,
            hi,
            value_lo: q.eval(lo),
            value_hi: q.eval(hi),
        });
        return;
    }
    let v_mid = sign_variations(chain, mid);
    isolate_recursive(chain, q, lo, mid, v_lo, v_mid, out);
    isolate_recursive(chain, q, mid, hi, v_mid, v_hi, out);
}

/// Isolate every distinct real root of `p` in the half-open interval
/// `(lo, hi]`. Returned brackets are disjoint, sorted ascending, and each
/// contains exactly one distinct root; their number equals the
/// sign-variation difference of the Sturm chain between `lo` and `hi`.
pub fn sturm_isolate(
    p: &UnivariatePolynomial,
    lo: f64,
    hi: f64,
) -> Result<Vec<RootBracket>, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if lo.partial_cmp(&hi) != Some(std::cmp::Ordering::Less) {
        return Err(Error::InvalidInterval { lo, hi });
    }
    if p.degree() == 0 {
        return Ok(Vec::new());
    }
    let q = square_free_part(p);
    let chain = sturm_chain(&q);
    let v_lo = sign_variations(&chain, lo);
    let v_hi = sign_variations(&chain, hi);
    let mut out = Vec::new();
    isolate_recursive(&chain, &q, lo, hi, v_lo, v_hi, &mut out);
    Ok(out)
}

/// Number of distinct real roots in `(lo, hi]`.
pub fn sturm_count(p: &UnivariatePolynomial, lo: f64, hi: f64) -> Result<usize, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if lo.partial_cmp(&hi) != Some(std::cmp::Ordering::Less) {
        return Err(Error::InvalidInterval { lo, hi });
    }
    let chain = sturm_chain(&square_free_part(p));
    Ok(sign_variations(&chain, lo).saturating_sub(sign_variations(&chain, hi)))
}

/// Polish an isolating bracket down to `tol * max(1, |root|)` by bisection
/// followed by bracket-safeguarded Newton steps on the square-free part.
pub fn refine_root(
    p: &UnivariatePolynomial,
    bracket: &RootBracket,
    tol: f64,
) -> Result<f64, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let q = square_free_part(p);
    let dq = q.derivative();
    let (mut a, mut b) = (bracket.lo, bracket.hi);
    let mut fa = q.eval(a);
    let fb = q.eval(b);
    if fb.abs() <= eval_floor(&q, b) {
        // The single root of the half-open bracket sits on its included
        // endpoint, to within evaluation precision.
        return Ok(b);
    }
    if fa.abs() <= eval_floor(&q, a) {
        // `a` is an excluded endpoint that happens to be a root itself.
        // The square-free part has simple roots, so the sign immediately
        // to the right of `a` is the derivative sign.
        fa = dq.eval(a);
        if fa == 0.0 {
            fa = q.eval(a + (b - a) * 1e-12);
        }
    }

    // Phase 1: bisection until the bracket is narrow enough for Newton.
    let mut iterations = 0;
    while b - a > BISECTION_WIDTH * b.abs().max(1.0) {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let fm = q.eval(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if (fm > 0.0) == (fa > 0.0) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
        iterations += 1;
        if iterations > REFINE_ITERATION_CAP {
            return Err(Error::RefinementStalled {
                best: 0.5 * (a + b),
                width: b - a,
            });
        }
    }

    // Phase 2: Newton with the bracket as a safety net.
    let mut x = 0.5 * (a + b);
    for _ in 0..REFINE_ITERATION_CAP {
        let fx = q.eval(x);
        if fx == 0.0 {
            return Ok(x);
        }
        if (fx > 0.0) == (fa > 0.0) {
            a = x;
            fa = fx;
        } else {
            b = x;
        }
        let scale = tol * x.abs().max(1.0);
        if b - a <= scale {
            return Ok(0.5 * (a + b));
        }
        let dfx = dq.eval(x);
        let next = if dfx != 0.0 {
            let candidate = x - fx / dfx;
            if candidate > a && candidate < b {
                candidate
            } else {
                0.5 * (a + b)
            }
        } else {
            0.5 * (a + b)
        };
        if (next - x).abs() <= scale {
            return Ok(next);
        }
        x = next;
    }
    Err(Error::RefinementStalled {
        best: x,
        width: b - a,
    })
}

/// Multiplicity of a (near-)root `x0` of `p`: the lowest derivative order
/// whose value at `x0` clears the round-off floor of its own evaluation.
pub fn root_multiplicity(p: &UnivariatePolynomial, x0: f64) -> usize {
    let mut current = p.clone();
    let scale_x = x0.abs().max(1.0);
    for order in 0..=p.degree() {
        let value = current.eval(x0);
        let floor: f64 = current
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| c.abs() * scale_x.powi(k as i32))
            .sum::<f64>()
            * 1e-9;
        if value.abs() > floor {
            return order;
        }
        current = current.derivative();
    }
    p.degree()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_root_isolated_and_refined() {
        // 4u - 16/25 has the single root u = 0.16.
        let p = UnivariatePolynomial::new(vec![-16.0 / 25.0, 4.0]);
        let brackets = sturm_isolate(&p, 0.0, 10.0).unwrap();
        assert_eq!(brackets.len(), 1);
        let root = refine_root(&p, &brackets[0], 1e-14).unwrap();
        assert!((root - 0.16).abs() < 1e-14);
    }

    #[test]
    fn quadratic_roots_from_formula() {
        // 32u^2 - 29u + 45/16; roots (29 +/- sqrt(481)) / 64.
        let p = UnivariatePolynomial::new(vec![45.0 / 16.0, -29.0, 32.0]);
        let disc = (29.0f64 * 29.0 - 4.0 * 32.0 * 45.0 / 16.0).sqrt();
        let expected_lo = (29.0 - disc) / 64.0;
        let expected_hi = (29.0 + disc) / 64.0;

        let brackets = sturm_isolate(&p, 0.0, 10.0).unwrap();
        assert_eq!(brackets.len(), 2);
        let lo = refine_root(&p, &brackets[0], 1e-14).unwrap();
        let hi = refine_root(&p, &brackets[1], 1e-14).unwrap();
        assert!((lo - expected_lo).abs() < 1e-13, "lo = {lo}");
        assert!((hi - expected_hi).abs() < 1e-13, "hi = {hi}");
    }

    #[test]
    fn no_real_roots() {
        let p = UnivariatePolynomial::new(vec![1.0, 0.0, 1.0]);
        assert!(sturm_isolate(&p, -10.0, 10.0).unwrap().is_empty());
    }

    #[test]
    fn zero_polynomial_rejected() {
        let p = UnivariatePolynomial::zero();
        assert!(matches!(
            sturm_isolate(&p, 0.0, 1.0),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn bad_interval_rejected() {
        let p = UnivariatePolynomial::new(vec![-1.0, 1.0]);
        assert!(matches!(
            sturm_isolate(&p, 1.0, 1.0),
            Err(Error::InvalidInterval { .. })
        ));
    }

    #[test]
    fn half_open_interval_excludes_lo_includes_hi() {
        // Roots at exactly 0 and 1.
        let p = UnivariatePolynomial::from_roots(&[0.0, 1.0]);
        let brackets = sturm_isolate(&p, 0.0, 1.0).unwrap();
        assert_eq!(brackets.len(), 1);
        let root = refine_root(&p, &brackets[0], 1e-14).unwrap();
        assert!((root - 1.0).abs() < 1e-12);
    }

    #[test]
    fn double_root_counted_once_with_multiplicity() {
        // (x - 2)^2 (x + 1)
        let p = UnivariatePolynomial::from_roots(&[2.0, 2.0, -1.0]);
        let brackets = sturm_isolate(&p, -5.0, 5.0).unwrap();
        assert_eq!(brackets.len(), 2);
        let upper = refine_root(&p, &brackets[1], 1e-12).unwrap();
        assert!((upper - 2.0).abs() < 1e-6);
        assert_eq!(root_multiplicity(&p, 2.0), 2);
        assert_eq!(root_multiplicity(&p, -1.0), 1);
    }

    #[test]
    fn refined_root_satisfies_residual_bound() {
        let roots = [-1.75, 0.3, 0.9, 4.0];
        let p = UnivariatePolynomial::from_roots(&roots);
        let dp = p.derivative();
        let tol = 1e-14;
        let brackets = sturm_isolate(&p, -10.0, 10.0).unwrap();
        assert_eq!(brackets.len(), roots.len());
        for b in &brackets {
            let r = refine_root(&p, b, tol).unwrap();
            let bound = dp.eval(r).abs() * tol * r.abs().max(1.0);
            assert!(
                p.eval(r).abs() <= bound.max(1e-13),
                "residual too large at {r}"
            );
        }
    }
}
