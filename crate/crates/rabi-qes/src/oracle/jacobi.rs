//! Cyclic Jacobi eigensolver for dense symmetric matrices.
//!
//! Plain row-cyclic sweeps with the rotation written in the numerically
//! stable `t = sgn(theta) / (|theta| + sqrt(theta^2 + 1))` form. Self
//! contained on purpose: the oracle must not share numerical machinery
//! with the code it cross-checks.

use super::Error;

#[derive(Debug)]
pub(crate) struct JacobiOutcome {
    /// Eigenvalues in ascending order.
    pub eigenvalues: Vec<f64>,
    /// Orthogonal eigenvector matrix (row-major, column `k` pairs with
    /// `eigenvalues[k]`), when accumulation was requested.
    pub vectors: Option<Vec<f64>>,
    /// Diagnostics, consumed by the solver's tests.
    #[allow(dead_code)]
    pub sweeps: usize,
    #[allow(dead_code)]
    pub off_diagonal: f64,
}

fn frobenius(a: &[f64]) -> f64 {
    a.iter().map(|x| x * x).sum::<f64>().sqrt()
}

fn off_diagonal_frobenius(a: &[f64], dim: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..dim {
        for j in 0..dim {
            if i != j {
                sum += a[i * dim + j] * a[i * dim + j];
            }
        }
    }
    sum.sqrt()
}

pub(crate) fn jacobi_eigen(
    matrix: &[f64],
    dim: usize,
    sweep_cap: usize,
    off_tol: f64,
    accumulate_vectors: bool,
) -> Result<JacobiOutcome, Error> {
    assert_eq!(matrix.len(), dim * dim);
    let mut a = matrix.to_vec();
    let mut v = if accumulate_vectors {
        let mut id = vec![0.0; dim * dim];
        for i in 0..dim {
            id[i * dim + i] = 1.0;
        }
        Some(id)
    } else {
        None
    };

    let norm = frobenius(&a);
    let target = off_tol * norm;
    let mut sweeps = 0;
    let mut off = off_diagonal_frobenius(&a, dim);
    while off > target && norm > 0.0 {
        if sweeps == sweep_cap {
            return Err(Error::EigensolverStalled { cap: sweep_cap });
        }
        sweeps += 1;
        for p in 0..dim.saturating_sub(1) {
            for q in (p + 1)..dim {
                let apq = a[p * dim + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * dim + p];
                let aqq = a[q * dim + q];
                // Entries below resolution would only churn round-off.
                if apq.abs() <= 0.5 * f64::EPSILON * (app.abs() + aqq.abs()) {
                    a[p * dim + q] = 0.0;
                    a[q * dim + p] = 0.0;
                    continue;
                }
                let theta = 0.5 * (aqq - app) / apq;
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);

                a[p * dim + p] = app - t * apq;
                a[q * dim + q] = aqq + t * apq;
                a[p * dim + q] = 0.0;
                a[q * dim + p] = 0.0;
                for i in 0..dim {
                    if i == p || i == q {
                        continue;
                    }
                    let aip = a[i * dim + p];
                    let aiq = a[i * dim + q];
                    let new_ip = aip - s * (aiq + tau * aip);
                    let new_iq = aiq + s * (aip - tau * aiq);
                    a[i * dim + p] = new_ip;
                    a[p * dim + i] = new_ip;
                    a[i * dim + q] = new_iq;
                    a[q * dim + i] = new_iq;
                }
                if let Some(vec) = v.as_mut() {
                    for i in 0..dim {
                        let vip = vec[i * dim + p];
                        let viq = vec[i * dim + q];
                        vec[i * dim + p] = vip - s * (viq + tau * vip);
                        vec[i * dim + q] = viq + s * (vip - tau * viq);
                    }
                }
            }
        }
        off = off_diagonal_frobenius(&a, dim);
    }

    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by(|&i, &j| {
        a[i * dim + i]
            .partial_cmp(&a[j * dim + j])
            .expect("eigenvalues are finite")
    });
    let eigenvalues: Vec<f64> = order.iter().map(|&i| a[i * dim + i]).collect();
    let vectors = v.map(|vec| {
        let mut sorted = vec![0.0; dim * dim];
        for (new_col, &old_col) in order.iter().enumerate() {
            for i in 0..dim {
                sorted[i * dim + new_col] = vec[i * dim + old_col];
            }
        }
        sorted
    });

    Ok(JacobiOutcome {
        eigenvalues,
        vectors,
        sweeps,
        off_diagonal: off,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_matrix_passes_through() {
        let m = [0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0];
        let out = jacobi_eigen(&m, 3, 50, 1e-12, false).unwrap();
        assert_eq!(out.eigenvalues, vec![0.0, 1.0, 1.0]);
        assert_eq!(out.sweeps, 0);
    }

    #[test]
    fn two_by_two_analytic() {
        // [[0, mu], [mu, 0]] has eigenvalues -mu, mu.
        let mu = 0.6;
        let m = [0.0, mu, mu, 0.0];
        let out = jacobi_eigen(&m, 2, 50, 1e-12, false).unwrap();
        assert!((out.eigenvalues[0] + mu).abs() < 1e-15);
        assert!((out.eigenvalues[1] - mu).abs() < 1e-15);
    }

    #[test]
    fn eigenvectors_reconstruct_matrix() {
        let m = [2.0, -1.0, 0.5, -1.0, 3.0, 0.25, 0.5, 0.25, -1.0];
        let out = jacobi_eigen(&m, 3, 50, 1e-13, true).unwrap();
        let v = out.vectors.unwrap();
        // Check A v_k = lambda_k v_k column by column.
        for k in 0..3 {
            for i in 0..3 {
                let av: f64 = (0..3).map(|j| m[i * 3 + j] * v[j * 3 + k]).sum();
                assert!(
                    (av - out.eigenvalues[k] * v[i * 3 + k]).abs() < 1e-12,
                    "column {k}, row {i}"
                );
            }
        }
    }

    #[test]
    fn trace_preserved() {
        let dim = 24;
        let mut m = vec![0.0; dim * dim];
        for i in 0..dim {
            for j in 0..=i {
                let x = ((i * 37 + j * 17) % 11) as f64 / 7.0 - 0.6;
                m[i * dim + j] = x;
                m[j * dim + i] = x;
            }
        }
        let trace: f64 = (0..dim).map(|i| m[i * dim + i]).sum();
        let out = jacobi_eigen(&m, dim, 50, 1e-12, false).unwrap();
        let sum: f64 = out.eigenvalues.iter().sum();
        assert!((sum - trace).abs() <= 1e-9 * trace.abs().max(1.0));
    }

    #[test]
    fn sweep_cap_reported() {
        let m = [1.0, 0.5, 0.5, -1.0];
        let err = jacobi_eigen(&m, 2, 0, 1e-12, false).unwrap_err();
        assert!(matches!(err, Error::EigensolverStalled { cap: 0 }));
    }
}
