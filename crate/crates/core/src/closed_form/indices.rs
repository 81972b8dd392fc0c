//! Closed forms for the degree-Kirchhoff index, Kemeny's constant, the
//! spanning-tree count, and the Gutman and Schultz indices.
//!
//! All surd expressions are reduced through `(√3 ± √2)² = 5 ± 2√6` to the
//! integer pair `(p, q)` with `(5 + 2√6)^n = p + q√6`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graphs::ChainFamily;
use crate::numerics::{frac, quad_pow, rat, QuadInt, QuadRat, Sqrt6};

/// `(5 + 2√6)^n = p + q√6`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurdPair {
    pub p: BigInt,
    pub q: BigInt,
}

impl SurdPair {
    /// `p² - 6q²`, which is always `1`.
    pub fn norm(&self) -> BigInt {
        &self.p * &self.p - 6 * &self.q * &self.q
    }
}

pub fn surd_pair(n: usize) -> SurdPair {
    let exp = u32::try_from(n).expect("chain length fits in u32");
    let v = quad_pow(&QuadInt::<Sqrt6>::new(5, 2), exp);
    SurdPair { p: v.a, q: v.b }
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::ChainTooShort(n));
    }
    Ok(())
}

fn big(n: usize) -> BigInt {
    BigInt::from(n)
}

/// `p - 1` (cylinder) or `p + 1` (Möbius).
fn shifted_p(pair: &SurdPair, family: ChainFamily) -> BigInt {
    match family {
        ChainFamily::Cylinder => &pair.p - 1,
        ChainFamily::Mobius => &pair.p + 1,
    }
}

/// Sum of the `2n` principal minors of order `2n-1` of `N` (equal for `N'`),
/// in reduced form `7nq/2`.
pub fn cofactor_sum_n(n: usize) -> Result<BigRational> {
    check_n(n)?;
    let q = surd_pair(n).q;
    Ok(BigRational::new(7 * big(n) * q, BigInt::from(2)))
}

/// The same cofactor sum evaluated from its unreduced surd expression
///
/// ```text
/// 7√6/192 · [(4 - 2√6)α^{2n-2} - (4 + 2√6)β^{2n-2}]
///   + 7√3/48 · [(4n - 2√6n + 1)α^{2n-1} + (4n + 2√6n + 1)β^{2n-1}]
/// ```
///
/// with `α = √3 - √2`, `β = √3 + √2`, carried out exactly in `Q(√6)` using
/// `β^{2n-2} = (5 + 2√6)^{n-1}` and `√3·β^{2n-1} = (3 + √6)(5 + 2√6)^{n-1}`.
pub fn cofactor_sum_surd(n: usize) -> Result<QuadRat<Sqrt6>> {
    check_n(n)?;
    let q6 = |a: i64, b: i64| QuadRat::<Sqrt6>::new(rat(a), rat(b));
    let prev = surd_pair(n - 1);
    let beta = QuadRat::<Sqrt6>::new(
        BigRational::from_integer(prev.p.clone()),
        BigRational::from_integer(prev.q.clone()),
    );
    let alpha = beta.conj();
    let ni = n as i64;

    let first = q6(0, 1)
        * (q6(4, -2) * alpha.clone() - q6(4, 2) * beta.clone())
        * QuadRat::rational(frac(7, 192));
    let second = (q6(4 * ni + 1, -2 * ni) * q6(3, -1) * alpha
        + q6(4 * ni + 1, 2 * ni) * q6(3, 1) * beta)
        * QuadRat::rational(frac(7, 48));
    Ok(first + second)
}

/// Sum of reciprocals of the nonzero eigenvalues of `𝓛_A`:
/// `(49n² + 42n - 19) / 42`.
pub fn vieta_a(n: usize) -> Result<BigRational> {
    check_n(n)?;
    let n = n as i64;
    Ok(frac(49 * n * n + 42 * n - 19, 42))
}

/// Sum of reciprocals of the eigenvalues of `𝓛_S` (cylinder) or `𝓛'_S`
/// (Möbius): `21nq / (4(p ∓ 1))`.
pub fn vieta_s(n: usize, family: ChainFamily) -> Result<BigRational> {
    check_n(n)?;
    let pair = surd_pair(n);
    Ok(BigRational::new(
        21 * big(n) * &pair.q,
        4 * shifted_p(&pair, family),
    ))
}

/// Degree-Kirchhoff index `Kf* = 14n (vieta_A + vieta_S)`.
pub fn kf_star(n: usize, family: ChainFamily) -> Result<BigRational> {
    let sum = vieta_a(n)? + vieta_s(n, family)?;
    Ok(sum * BigRational::from_integer(14 * big(n)))
}

/// Kemeny's constant `Kc = Kf* / 2|E| = Kf* / 14n`.
pub fn kemeny(n: usize, family: ChainFamily) -> Result<BigRational> {
    Ok(kf_star(n, family)? / BigRational::from_integer(14 * big(n)))
}

/// `τ = 2^{n+1} n (p ∓ 1)`.
pub fn spanning_trees(n: usize, family: ChainFamily) -> Result<BigInt> {
    check_n(n)?;
    let pair = surd_pair(n);
    Ok((BigInt::one() << (n + 1)) * big(n) * shifted_p(&pair, family))
}

/// Gutman index, split by family and parity of `n`.
pub fn gutman(n: usize, family: ChainFamily) -> Result<BigInt> {
    check_n(n)?;
    let m = big(n);
    let head = 49 * m.pow(3) + 64 * m.pow(2);
    let linear: i64 = match (family, n.is_multiple_of(2)) {
        (ChainFamily::Cylinder, true) => 5,
        (ChainFamily::Cylinder, false) => 4,
        (ChainFamily::Mobius, true) => -13,
        (ChainFamily::Mobius, false) => -14,
    };
    Ok(head + linear * m)
}

/// Schultz index, split by family and parity of `n`.
pub fn schultz(n: usize, family: ChainFamily) -> Result<BigInt> {
    check_n(n)?;
    let m = big(n);
    let head = 35 * m.pow(3) + 48 * m.pow(2);
    let linear: i64 = match (family, n.is_multiple_of(2)) {
        (ChainFamily::Cylinder, true) => 2,
        (ChainFamily::Cylinder, false) => 1,
        (ChainFamily::Mobius, true) => -10,
        (ChainFamily::Mobius, false) => -11,
    };
    Ok(head + linear * m)
}

/// `Gut / Kf*`, which tends to 3 from below.
pub fn ratio(n: usize, family: ChainFamily) -> Result<BigRational> {
    Ok(BigRational::from_integer(gutman(n, family)?) / kf_star(n, family)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn surd_pairs() {
        assert_eq!(surd_pair(0), SurdPair { p: b(1), q: b(0) });
        assert_eq!(surd_pair(2), SurdPair { p: b(49), q: b(20) });
        assert_eq!(surd_pair(5), SurdPair { p: b(47525), q: b(19402) });
        assert_eq!(surd_pair(3).p, b(485));
    }

    #[test]
    fn cofactor_sums() {
        assert_eq!(cofactor_sum_n(2).unwrap(), rat(140));
        assert_eq!(cofactor_sum_n(3).unwrap(), rat(2079));
        for n in 2..12 {
            let surd = cofactor_sum_surd(n).unwrap();
            assert_eq!(surd.to_rational(), Some(cofactor_sum_n(n).unwrap()), "n={n}");
        }
    }

    #[test]
    fn vieta_values() {
        assert_eq!(vieta_a(2).unwrap(), frac(87, 14));
        assert_eq!(vieta_a(3).unwrap(), frac(274, 21));
        assert_eq!(vieta_s(2, ChainFamily::Cylinder).unwrap(), frac(35, 8));
        assert_eq!(vieta_s(2, ChainFamily::Mobius).unwrap(), frac(21, 5));
        assert_eq!(vieta_s(3, ChainFamily::Cylinder).unwrap(), frac(6237, 968));
    }

    #[test]
    fn kf_star_values() {
        assert_eq!(kf_star(2, ChainFamily::Cylinder).unwrap(), frac(593, 2));
        assert_eq!(kf_star(2, ChainFamily::Mobius).unwrap(), frac(1458, 5));
        assert_eq!(kf_star(3, ChainFamily::Mobius).unwrap(), frac(1635, 2));
        assert_eq!(kemeny(2, ChainFamily::Cylinder).unwrap(), frac(593, 56));
        assert_eq!(kemeny(2, ChainFamily::Mobius).unwrap(), frac(729, 70));
    }

    #[test]
    fn tree_counts() {
        assert_eq!(spanning_trees(2, ChainFamily::Cylinder).unwrap(), b(768));
        assert_eq!(spanning_trees(2, ChainFamily::Mobius).unwrap(), b(800));
        assert_eq!(spanning_trees(3, ChainFamily::Cylinder).unwrap(), b(23232));
    }

    #[test]
    fn distance_indices() {
        assert_eq!(gutman(2, ChainFamily::Cylinder).unwrap(), b(658));
        assert_eq!(gutman(3, ChainFamily::Mobius).unwrap(), b(1857));
        assert_eq!(gutman(5, ChainFamily::Cylinder).unwrap(), b(7745));
        assert_eq!(schultz(2, ChainFamily::Cylinder).unwrap(), b(476));
        assert_eq!(schultz(3, ChainFamily::Cylinder).unwrap(), b(1380));
        assert_eq!(schultz(2, ChainFamily::Mobius).unwrap(), b(452));
    }

    #[test]
    fn rejects_short() {
        assert_eq!(kf_star(1, ChainFamily::Cylinder), Err(Error::ChainTooShort(1)));
        assert!(gutman(0, ChainFamily::Mobius).is_err());
    }
}
