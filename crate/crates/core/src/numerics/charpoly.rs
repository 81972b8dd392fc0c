use num_rational::BigRational;

use super::{DenseMatrix, ExactField, QuadRat, Sqrt3};

/// Characteristic polynomial `det(yI - M)` by Faddeev–LeVerrier.
///
/// Returns `[1, c_1, ..., c_n]`. Uses `n` matrix products and divisions by
/// `1..=n`, so it needs a field of characteristic zero.
pub fn charpoly<T: ExactField>(m: &DenseMatrix<T>) -> Vec<T> {
    let n = m.order();
    let mut coeffs = Vec::with_capacity(n + 1);
    coeffs.push(T::one());
    // M_1 = I, then M_{k+1} = A M_k + c_k I
    let mut mk: DenseMatrix<T> = DenseMatrix::identity(n);
    for k in 1..=n {
        let am = m.matmul(&mk).expect("same order");
        let ck = -(am.trace() / T::from_i64(k as i64));
        if k < n {
            mk = am;
            for i in 0..n {
                let v = mk.get(i, i).clone() + ck.clone();
                mk.set(i, i, v);
            }
        }
        coeffs.push(ck);
    }
    coeffs
}

pub fn rational_charpoly(m: &DenseMatrix<BigRational>) -> Vec<BigRational> {
    charpoly(m)
}

pub fn quad_charpoly(m: &DenseMatrix<QuadRat<Sqrt3>>) -> Vec<QuadRat<Sqrt3>> {
    charpoly(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{det_exact, frac, rat};

    #[test]
    fn identity_order_two() {
        let id: DenseMatrix<BigRational> = DenseMatrix::identity(2);
        assert_eq!(rational_charpoly(&id), vec![rat(1), rat(-2), rat(1)]);
    }

    #[test]
    fn constant_term_sign_convention() {
        let m = DenseMatrix::from_rows(vec![
            vec![rat(2), frac(1, 2), rat(0)],
            vec![frac(1, 2), rat(3), rat(-1)],
            vec![rat(0), rat(-1), rat(5)],
        ])
        .unwrap();
        let p = rational_charpoly(&m);
        assert_eq!(p[3], -det_exact(&m));
        assert_eq!(p[1], rat(-10));
    }

    #[test]
    fn empty_matrix() {
        let m: DenseMatrix<BigRational> = DenseMatrix::identity(0);
        assert_eq!(rational_charpoly(&m), vec![rat(1)]);
    }
}
