#![allow(clippy::needless_range_loop)]

use num_rational::BigRational;
use num_traits::Zero;

use super::DenseMatrix;
use crate::error::{Error, Result};

/// LU factorization with row pivoting over the rationals.
///
/// Factor once, then [`RationalLu::solve`] any number of right-hand sides.
#[derive(Debug, Clone)]
pub struct RationalLu {
    lu: Vec<Vec<BigRational>>,
    perm: Vec<usize>,
}

impl RationalLu {
    pub fn factor(m: &DenseMatrix<BigRational>) -> Result<Self> {
        let n = m.order();
        let mut lu = m.to_rows();
        let mut perm: Vec<usize> = (0..n).collect();
        for k in 0..n {
            let p = (k..n).find(|&r| !lu[r][k].is_zero()).ok_or(Error::Singular)?;
            lu.swap(k, p);
            perm.swap(k, p);
            let pivot = lu[k][k].clone();
            for i in k + 1..n {
                if lu[i][k].is_zero() {
                    continue;
                }
                let f = &lu[i][k] / &pivot;
                for j in k + 1..n {
                    let v = &lu[i][j] - &f * &lu[k][j];
                    lu[i][j] = v;
                }
                lu[i][k] = f;
            }
        }
        Ok(RationalLu { lu, perm })
    }

    pub fn order(&self) -> usize {
        self.lu.len()
    }

    pub fn solve(&self, rhs: &[BigRational]) -> Result<Vec<BigRational>> {
        let n = self.order();
        if rhs.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: rhs.len(),
            });
        }
        let mut y: Vec<BigRational> = self.perm.iter().map(|&p| rhs[p].clone()).collect();
        for i in 0..n {
            for j in 0..i {
                if !self.lu[i][j].is_zero() && !y[j].is_zero() {
                    let v = &y[i] - &self.lu[i][j] * &y[j];
                    y[i] = v;
                }
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                if !self.lu[i][j].is_zero() && !y[j].is_zero() {
                    let v = &y[i] - &self.lu[i][j] * &y[j];
                    y[i] = v;
                }
            }
            y[i] = &y[i] / &self.lu[i][i];
        }
        Ok(y)
    }
}

/// LU factorization with partial pivoting in `f64`.
#[derive(Debug, Clone)]
pub struct FloatLu {
    lu: Vec<Vec<f64>>,
    perm: Vec<usize>,
}

impl FloatLu {
    /// Pivots with magnitude below `1e-13 · max|m_ij|` count as singular.
    pub fn factor(m: &DenseMatrix<f64>) -> Result<Self> {
        let n = m.order();
        let mut lu = m.to_rows();
        let mut perm: Vec<usize> = (0..n).collect();
        let scale = lu
            .iter()
            .flatten()
            .fold(0.0f64, |acc, v| acc.max(v.abs()))
            .max(f64::MIN_POSITIVE);
        for k in 0..n {
            let p = (k..n)
                .max_by(|&a, &b| lu[a][k].abs().total_cmp(&lu[b][k].abs()))
                .expect("non-empty pivot range");
            if lu[p][k].abs() <= 1e-13 * scale {
                return Err(Error::Singular);
            }
            lu.swap(k, p);
            perm.swap(k, p);
            for i in k + 1..n {
                let f = lu[i][k] / lu[k][k];
                for j in k + 1..n {
                    lu[i][j] -= f * lu[k][j];
                }
                lu[i][k] = f;
            }
        }
        Ok(FloatLu { lu, perm })
    }

    pub fn solve(&self, rhs: &[f64]) -> Result<Vec<f64>> {
        let n = self.lu.len();
        if rhs.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: rhs.len(),
            });
        }
        let mut y: Vec<f64> = self.perm.iter().map(|&p| rhs[p]).collect();
        for i in 0..n {
            for j in 0..i {
                y[i] -= self.lu[i][j] * y[j];
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                y[i] -= self.lu[i][j] * y[j];
            }
            y[i] /= self.lu[i][i];
        }
        Ok(y)
    }
}

pub fn solve_linear_exact(m: &DenseMatrix<BigRational>, rhs: &[BigRational]) -> Result<Vec<BigRational>> {
    if rhs.len() != m.order() {
        return Err(Error::DimensionMismatch {
            expected: m.order(),
            got: rhs.len(),
        });
    }
    RationalLu::factor(m)?.solve(rhs)
}

pub fn solve_linear_f64(m: &DenseMatrix<f64>, rhs: &[f64]) -> Result<Vec<f64>> {
    if rhs.len() != m.order() {
        return Err(Error::DimensionMismatch {
            expected: m.order(),
            got: rhs.len(),
        });
    }
    FloatLu::factor(m)?.solve(rhs)
}
