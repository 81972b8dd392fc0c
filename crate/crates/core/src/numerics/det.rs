#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{DenseMatrix, ExactField, QuadRat, Sqrt3};

/// Fraction-free (Bareiss) determinant of an integer matrix.
///
/// Every intermediate division is exact, so entries stay integral and grow
/// only polynomially. A zero pivot triggers a row swap.
pub fn det_bareiss(m: &DenseMatrix<BigInt>) -> BigInt {
    let n = m.order();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.to_rows();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Exact determinant of a rational matrix.
///
/// Each row is scaled by the lcm of its denominators, the resulting integer
/// matrix goes through [`det_bareiss`], and the scale is divided back out.
pub fn det_exact(m: &DenseMatrix<BigRational>) -> BigRational {
    let mut scale = BigInt::one();
    let rows: Vec<Vec<BigInt>> = m
        .rows()
        .map(|row| {
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &l;
            row.iter()
                .map(|x| x.numer() * (&l / x.denom()))
                .collect()
        })
        .collect();
    let ints = DenseMatrix::from_rows(rows).expect("rows of a square matrix");
    BigRational::new(det_bareiss(&ints), scale)
}

/// Determinant over any exact field by Gaussian elimination with pivoting.
pub fn det_field<T: ExactField>(m: &DenseMatrix<T>) -> T {
    let n = m.order();
    let mut a = m.to_rows();
    let mut det = T::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return T::zero();
        };
        if p != k {
            a.swap(k, p);
            det = -det;
        }
        let pivot = a[k][k].clone();
        det = det * pivot.clone();
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let factor = a[i][k].clone() / pivot.clone();
            for j in k + 1..n {
                let v = a[i][j].clone() - factor.clone() * a[k][j].clone();
                a[i][j] = v;
            }
            a[i][k] = T::zero();
        }
    }
    det
}

/// Determinant in `Q(√3)`, returned as `(α, β)` meaning `α + β√3`.
pub fn det_quad_field(m: &DenseMatrix<QuadRat<Sqrt3>>) -> (BigRational, BigRational) {
    let d = det_field(m);
    (d.a, d.b)
}
