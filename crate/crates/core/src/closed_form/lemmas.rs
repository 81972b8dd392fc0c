//! Determinant identities behind the closed forms.
//!
//! Every identity comes as a pair: a formula evaluator (`det_*`) and a
//! constructor (`*_matrix`) for the integer matrix it describes, so each one
//! can be checked against a fraction-free determinant. Positions passed to
//! the constructors are 1-based, as in the identities themselves.
//!
//! The basic building block is the tridiagonal matrix `R_n` with `-2` on the
//! diagonal and `1` beside it.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graphs::ChainFamily;
use crate::numerics::DenseMatrix;

use super::indices::surd_pair;

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn sign(n: usize) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn out_of_range(msg: String) -> Error {
    Error::OutOfRange(msg)
}

/// Tridiagonal `-2 / 1` matrix of the given order.
pub fn r_matrix(order: usize) -> DenseMatrix<BigInt> {
    DenseMatrix::from_fn(order, |r, c| match r.abs_diff(c) {
        0 => big(-2),
        1 => big(1),
        _ => big(0),
    })
}

/// `R_n` closed with corner entries `1` at `(1, n)` and `(n, 1)`.
fn cyclic_r_matrix(order: usize) -> DenseMatrix<BigInt> {
    let mut m = r_matrix(order);
    m[(0, order - 1)] = big(1);
    m[(order - 1, 0)] = big(1);
    m
}

/// `det(R_n) = (-1)^n (1 + n)`.
pub fn det_r(n: usize) -> BigInt {
    big(sign(n) * (1 + n as i64))
}

/// `R_n` with the `(m, m)` entry replaced by `-3`.
pub fn r_nm_matrix(n: usize, m: usize) -> Result<DenseMatrix<BigInt>> {
    if !(1..=n).contains(&m) {
        return Err(out_of_range(format!("R_(n,m) needs 1 <= m <= n (n={n}, m={m})")));
    }
    let mut r = r_matrix(n);
    r[(m - 1, m - 1)] = big(-3);
    Ok(r)
}

/// `det(R_{n,m}) = (-1)^n (1 + n + m + mn - m²)`.
pub fn det_r_nm(n: usize, m: usize) -> Result<BigInt> {
    if !(1..=n).contains(&m) {
        return Err(out_of_range(format!("R_(n,m) needs 1 <= m <= n (n={n}, m={m})")));
    }
    let (n, m, s) = (n as i64, m as i64, sign(n));
    Ok(big(s * (1 + n + m + m * n - m * m)))
}

/// `T_{p,s,t}`: `R_p` with `-3` at both `(s, s)` and `(t, t)`, `s < t`.
pub fn t_matrix(p: usize, s: usize, t: usize) -> Result<DenseMatrix<BigInt>> {
    if !(1 <= s && s < t && t <= p) {
        return Err(out_of_range(format!("T needs 1 <= s < t <= p (p={p}, s={s}, t={t})")));
    }
    let mut m = r_matrix(p);
    m[(s - 1, s - 1)] = big(-3);
    m[(t - 1, t - 1)] = big(-3);
    Ok(m)
}

/// `det(T_{p,s,t}) = (-1)^p [pt(s+1) + s(p+t) + (p+s+t+1) - s²(p+2-t) - t²(s+1)]`.
pub fn det_t(p: usize, s: usize, t: usize) -> Result<BigInt> {
    if !(1 <= s && s < t && t <= p) {
        return Err(out_of_range(format!("T needs 1 <= s < t <= p (p={p}, s={s}, t={t})")));
    }
    let sg = sign(p);
    let (p, s, t) = (p as i64, s as i64, t as i64);
    let v = p * t * (s + 1) + s * (p + t) + (p + s + t + 1) - s * s * (p + 2 - t) - t * t * (s + 1);
    Ok(big(sg * v))
}

/// Order `2n`: cyclic `R_{2n}` with `-3` at `(2i, 2i)`. This is also the
/// matrix `P` whose minors give the `W₃` identity.
pub fn r_marked_matrix(n: usize, i: usize) -> Result<DenseMatrix<BigInt>> {
    if n < 2 || !(1..=n).contains(&i) {
        return Err(out_of_range(format!("R needs n >= 2, 1 <= i <= n (n={n}, i={i})")));
    }
    let mut m = cyclic_r_matrix(2 * n);
    m[(2 * i - 1, 2 * i - 1)] = big(-3);
    Ok(m)
}

/// `det(R) = 2n`, independent of the marked position.
pub fn det_r_marked(n: usize, i: usize) -> Result<BigInt> {
    if n < 2 || !(1..=n).contains(&i) {
        return Err(out_of_range(format!("R needs n >= 2, 1 <= i <= n (n={n}, i={i})")));
    }
    Ok(big(2 * n as i64))
}

fn check_s(n: usize, i: usize) -> Result<()> {
    if n < 2 || !(n + 1..=3 * n).contains(&i) {
        return Err(out_of_range(format!("S needs n+1 <= i <= 3n (n={n}, i={i})")));
    }
    Ok(())
}

/// Order `2n-1`: diagonal blocks `R_a`, `R_c` with `a = i-n-1`, `c = 3n-i`,
/// joined by corner entries `1` when both blocks are present.
pub fn s_matrix(n: usize, i: usize) -> Result<DenseMatrix<BigInt>> {
    check_s(n, i)?;
    let (a, c) = (i - n - 1, 3 * n - i);
    let order = a + c;
    let mut m = DenseMatrix::from_fn(order, |r, col| {
        let same_block = (r < a) == (col < a);
        match r.abs_diff(col) {
            0 => big(-2),
            1 if same_block => big(1),
            _ => big(0),
        }
    });
    if a > 0 && c > 0 {
        m[(0, order - 1)] = big(1);
        m[(order - 1, 0)] = big(1);
    }
    Ok(m)
}

/// `det(S) = -2n`.
pub fn det_s(n: usize, i: usize) -> Result<BigInt> {
    check_s(n, i)?;
    Ok(big(-2 * n as i64))
}

fn check_w1(n: usize, i: usize, j: usize) -> Result<()> {
    if !(1 <= i && i < j && j <= n) {
        return Err(out_of_range(format!("W1 needs 1 <= i < j <= n (n={n}, i={i}, j={j})")));
    }
    Ok(())
}

/// Order `2n`: cyclic `R_{2n}` with `-3` at `(2i, 2i)` and `(2j, 2j)`.
pub fn w1_matrix(n: usize, i: usize, j: usize) -> Result<DenseMatrix<BigInt>> {
    check_w1(n, i, j)?;
    let mut m = cyclic_r_matrix(2 * n);
    m[(2 * i - 1, 2 * i - 1)] = big(-3);
    m[(2 * j - 1, 2 * j - 1)] = big(-3);
    Ok(m)
}

/// `det(W₁) = 4n + 8ij - 4n(i-j) - 4(i² + j²)`.
pub fn det_w1(n: usize, i: usize, j: usize) -> Result<BigInt> {
    check_w1(n, i, j)?;
    let (n, i, j) = (n as i64, i as i64, j as i64);
    Ok(big(4 * n + 8 * i * j - 4 * n * (i - j) - 4 * (i * i + j * j)))
}

fn check_w2(n: usize, i: usize, j: usize) -> Result<()> {
    if !(n < i && i < j && j <= 3 * n) {
        return Err(out_of_range(format!(
            "W2 needs n+1 <= i < j <= 3n (n={n}, i={i}, j={j})"
        )));
    }
    Ok(())
}

/// Order `2n-2`: diagonal blocks `R_a`, `R_b`, `R_c` with `a = i-n-1`,
/// `b = j-i-1`, `c = 3n-j`; the outer blocks are joined by a `1` between the
/// last row of `R_a` and the last row of `R_c` when both are present.
pub fn w2_matrix(n: usize, i: usize, j: usize) -> Result<DenseMatrix<BigInt>> {
    check_w2(n, i, j)?;
    let (a, b, c) = (i - n - 1, j - i - 1, 3 * n - j);
    let order = a + b + c;
    let block = |k: usize| usize::from(k >= a) + usize::from(k >= a + b);
    let mut m = DenseMatrix::from_fn(order, |r, col| match r.abs_diff(col) {
        0 => big(-2),
        1 if block(r) == block(col) => big(1),
        _ => big(0),
    });
    if a > 0 && c > 0 {
        m[(a - 1, order - 1)] = big(1);
        m[(order - 1, a - 1)] = big(1);
    }
    Ok(m)
}

/// `det(W₂) = 2ij + 2n(j-i) - (i² + j²)`.
pub fn det_w2(n: usize, i: usize, j: usize) -> Result<BigInt> {
    check_w2(n, i, j)?;
    let (n, i, j) = (n as i64, i as i64, j as i64);
    Ok(big(2 * i * j + 2 * n * (j - i) - (i * i + j * j)))
}

fn check_w3(n: usize, i: usize, j: usize) -> Result<()> {
    if n < 2 || !(1..=n).contains(&i) || !(n + 1..=3 * n).contains(&j) {
        return Err(out_of_range(format!(
            "W3 needs 1 <= i <= n < j <= 3n (n={n}, i={i}, j={j})"
        )));
    }
    Ok(())
}

/// `P` (see [`r_marked_matrix`]) with row and column `j-n` removed.
pub fn w3_matrix(n: usize, i: usize, j: usize) -> Result<DenseMatrix<BigInt>> {
    check_w3(n, i, j)?;
    Ok(r_marked_matrix(n, i)?.delete(&[j - n - 1]))
}

/// `det(W₃) = (j-n)² - 4(j-n)i + 4i² - 2n ∓ 2n(j-n-2i)`, with `-` when
/// `2i <= j-n` and `+` otherwise.
pub fn det_w3(n: usize, i: usize, j: usize) -> Result<BigInt> {
    check_w3(n, i, j)?;
    let (n, i, k) = (n as i64, i as i64, (j - n) as i64);
    let head = k * k - 4 * k * i + 4 * i * i - 2 * n;
    let tail = 2 * n * (k - 2 * i);
    Ok(big(if 2 * i <= k { head - tail } else { head + tail }))
}

/// `N` (cylinder) or `N'` (Möbius): order `2n`, diagonal `4, 3, 4, 3, …`,
/// `-1` beside the diagonal, corner `-1` (`N`) or `+1` (`N'`).
pub fn n_matrix(n: usize, family: ChainFamily) -> Result<DenseMatrix<BigInt>> {
    if n < 2 {
        return Err(Error::ChainTooShort(n));
    }
    let order = 2 * n;
    let mut m = DenseMatrix::from_fn(order, |r, c| match r.abs_diff(c) {
        0 if r % 2 == 0 => big(4),
        0 => big(3),
        1 => big(-1),
        _ => big(0),
    });
    let corner = match family {
        ChainFamily::Cylinder => big(-1),
        ChainFamily::Mobius => big(1),
    };
    m[(0, order - 1)] = corner.clone();
    m[(order - 1, 0)] = corner;
    Ok(m)
}

/// `det N = 2p - 2`, `det N' = 2p + 2` where `(5 + 2√6)^n = p + q√6`.
pub fn det_n(n: usize, family: ChainFamily) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::ChainTooShort(n));
    }
    let p = surd_pair(n).p;
    Ok(match family {
        ChainFamily::Cylinder => 2 * p - 2,
        ChainFamily::Mobius => 2 * p + 2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::det_bareiss;

    #[test]
    fn r_values() {
        assert_eq!(det_r(1), big(-2));
        assert_eq!(det_r(3), big(-4));
        assert_eq!(det_bareiss(&r_matrix(6)), big(7));
    }

    #[test]
    fn r_nm_values() {
        assert_eq!(det_r_nm(3, 1).unwrap(), big(-7));
        assert_eq!(det_bareiss(&r_nm_matrix(3, 1).unwrap()), big(-7));
        assert_eq!(det_r_nm(4, 2).unwrap(), big(11));
        assert_eq!(det_bareiss(&r_nm_matrix(2, 2).unwrap()), big(5));
        assert!(det_r_nm(2, 3).is_err());
    }

    #[test]
    fn r_marked_values() {
        assert_eq!(det_r_marked(2, 1).unwrap(), big(4));
        assert_eq!(det_bareiss(&r_marked_matrix(3, 2).unwrap()), big(6));
        assert_eq!(det_bareiss(&r_marked_matrix(4, 4).unwrap()), big(8));
    }

    #[test]
    fn s_values() {
        assert_eq!(det_bareiss(&s_matrix(2, 3).unwrap()), big(-4));
        assert_eq!(det_bareiss(&s_matrix(3, 9).unwrap()), big(-6));
        assert_eq!(det_bareiss(&s_matrix(2, 4).unwrap()), big(-4));
    }

    #[test]
    fn w1_values() {
        let m = w1_matrix(2, 1, 2).unwrap();
        let expected = [[-2, 1, 0, 1], [1, -3, 1, 0], [0, 1, -2, 1], [1, 0, 1, -3]];
        for (r, row) in expected.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                assert_eq!(m[(r, c)], big(v));
            }
        }
        assert_eq!(det_bareiss(&m), big(12));
        assert_eq!(det_w1(3, 1, 3).unwrap(), big(20));
        assert_eq!(det_bareiss(&w1_matrix(4, 2, 3).unwrap()), big(28));
        assert!(det_w1(3, 2, 2).is_err());
    }

    #[test]
    fn w2_values() {
        assert_eq!(det_w2(3, 4, 5).unwrap(), big(5));
        assert_eq!(det_bareiss(&w2_matrix(3, 4, 5).unwrap()), big(5));
        assert_eq!(det_bareiss(&w2_matrix(2, 3, 6).unwrap()), big(3));
        assert_eq!(det_bareiss(&w2_matrix(2, 3, 4).unwrap()), big(3));
        assert!(det_w2(2, 2, 4).is_err());
    }

    #[test]
    fn w3_values() {
        assert_eq!(det_w3(2, 1, 3).unwrap(), big(-7));
        assert_eq!(det_bareiss(&w3_matrix(2, 1, 3).unwrap()), big(-7));
        assert_eq!(det_w3(2, 2, 3).unwrap(), big(-7));
        assert_eq!(det_bareiss(&w3_matrix(2, 2, 3).unwrap()), big(-7));
        assert_eq!(det_w3(3, 1, 8).unwrap(), big(-15));
        assert_eq!(det_bareiss(&w3_matrix(3, 1, 8).unwrap()), big(-15));
    }

    #[test]
    fn t_values() {
        for p in 2..=8 {
            for t in 2..=p {
                for s in 1..t {
                    let m = t_matrix(p, s, t).unwrap();
                    assert_eq!(det_bareiss(&m), det_t(p, s, t).unwrap(), "T({p},{s},{t})");
                }
            }
        }
    }

    #[test]
    fn n_values() {
        assert_eq!(det_bareiss(&n_matrix(2, ChainFamily::Cylinder).unwrap()), big(96));
        assert_eq!(det_bareiss(&n_matrix(2, ChainFamily::Mobius).unwrap()), big(100));
        assert_eq!(det_n(3, ChainFamily::Cylinder).unwrap(), big(968));
        assert_eq!(det_bareiss(&n_matrix(3, ChainFamily::Cylinder).unwrap()), big(968));
    }
}
