#![allow(clippy::needless_range_loop)]

use super::DenseMatrix;
use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 100;

/// All eigenvalues of a real symmetric matrix, ascending, by cyclic Jacobi
/// rotations.
///
/// Sweeps continue until the off-diagonal Frobenius norm drops below
/// `tol · max(1, ‖M‖_F)`. Inputs whose largest `|m_ij - m_ji|` exceeds
/// `tol` are rejected.
pub fn symmetric_eigenvalues(m: &DenseMatrix<f64>, tol: f64) -> Result<Vec<f64>> {
    let asym = m.asymmetry();
    if asym > tol {
        return Err(Error::NotSymmetric(asym));
    }
    let n = m.order();
    let mut a = m.to_rows();
    // symmetrize so rotations act on an exactly symmetric matrix
    for i in 0..n {
        for j in 0..i {
            let avg = 0.5 * (a[i][j] + a[j][i]);
            a[i][j] = avg;
            a[j][i] = avg;
        }
    }
    let frob = a.iter().flatten().map(|v| v * v).sum::<f64>().sqrt();
    let target = tol * frob.max(1.0);

    let off_norm = |a: &[Vec<f64>]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..i {
                s += 2.0 * a[i][j] * a[i][j];
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    while off_norm(&a) > target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence(MAX_SWEEPS));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                a[p][p] -= t * apq;
                a[q][q] += t * apq;
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r][p];
                    let arq = a[r][q];
                    let new_rp = c * arp - s * arq;
                    let new_rq = s * arp + c * arq;
                    a[r][p] = new_rp;
                    a[p][r] = new_rp;
                    a[r][q] = new_rq;
                    a[q][r] = new_rq;
                }
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    eig.sort_by(f64::total_cmp);
    Ok(eig)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_spectrum() {
        let id: DenseMatrix<f64> = DenseMatrix::identity(5);
        assert_eq!(symmetric_eigenvalues(&id, 1e-12).unwrap(), vec![1.0; 5]);
    }

    #[test]
    fn two_by_two() {
        let m = DenseMatrix::from_rows(vec![vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        let e = symmetric_eigenvalues(&m, 1e-14).unwrap();
        assert!((e[0] - 1.0).abs() < 1e-14 && (e[1] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn cycle_laplacian_closed_form() {
        let n = 9;
        let m = DenseMatrix::from_fn(n, |i, j| {
            if i == j {
                2.0
            } else if (i + 1) % n == j || (j + 1) % n == i {
                -1.0
            } else {
                0.0
            }
        });
        let e = symmetric_eigenvalues(&m, 1e-13).unwrap();
        let mut expect: Vec<f64> = (0..n)
            .map(|k| 2.0 - 2.0 * (2.0 * std::f64::consts::PI * k as f64 / n as f64).cos())
            .collect();
        expect.sort_by(f64::total_cmp);
        for (a, b) in e.iter().zip(&expect) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn asymmetric_rejected() {
        let m = DenseMatrix::from_rows(vec![vec![1.0, 0.5], vec![0.0, 1.0]]).unwrap();
        assert!(matches!(symmetric_eigenvalues(&m, 1e-9), Err(Error::NotSymmetric(_))));
    }
}
