//! Quadratic rings `Z[√d]` and fields `Q(√d)` for `d ∈ {3, 6}`.
//!
//! The radicand is a type parameter, so mixing `√3` and `√6` values is a
//! compile-time error rather than a runtime check.

use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{rational_to_f64, ExactField};

mod sealed {
    pub trait Sealed {}
}

/// Marker for the square-free radicand `d` of a quadratic extension.
pub trait Radicand:
    sealed::Sealed + Copy + Clone + fmt::Debug + PartialEq + Eq + std::hash::Hash + Send + Sync + 'static
{
    const D: i64;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Sqrt3;
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Sqrt6;

impl sealed::Sealed for Sqrt3 {}
impl sealed::Sealed for Sqrt6 {}
impl Radicand for Sqrt3 {
    const D: i64 = 3;
}
impl Radicand for Sqrt6 {
    const D: i64 = 6;
}

/// `a + b√d` with integer coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadInt<R: Radicand> {
    pub a: BigInt,
    pub b: BigInt,
    _radicand: PhantomData<R>,
}

impl<R: Radicand> QuadInt<R> {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        QuadInt {
            a: a.into(),
            b: b.into(),
            _radicand: PhantomData,
        }
    }

    pub fn radicand(&self) -> i64 {
        R::D
    }

    pub fn conj(&self) -> Self {
        QuadInt::new(self.a.clone(), -&self.b)
    }

    /// `a² - d b²`.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - BigInt::from(R::D) * &self.b * &self.b
    }

    pub fn pow(&self, k: u32) -> Self {
        quad_pow(self, k)
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&BigRational::from_integer(self.a.clone()))
            + rational_to_f64(&BigRational::from_integer(self.b.clone())) * (R::D as f64).sqrt()
    }
}

/// Exact `base^k` by binary exponentiation.
pub fn quad_pow<R: Radicand>(base: &QuadInt<R>, k: u32) -> QuadInt<R> {
    let mut acc = QuadInt::one();
    let mut sq = base.clone();
    let mut e = k;
    while e > 0 {
        if e & 1 == 1 {
            acc = &acc * &sq;
        }
        e >>= 1;
        if e > 0 {
            sq = &sq * &sq;
        }
    }
    acc
}

impl<R: Radicand> Zero for QuadInt<R> {
    fn zero() -> Self {
        QuadInt::new(0, 0)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl<R: Radicand> One for QuadInt<R> {
    fn one() -> Self {
        QuadInt::new(1, 0)
    }
}

impl<'a, R: Radicand> Mul<&'a QuadInt<R>> for &'a QuadInt<R> {
    type Output = QuadInt<R>;
    fn mul(self, rhs: &QuadInt<R>) -> QuadInt<R> {
        let d = BigInt::from(R::D);
        QuadInt::new(
            &self.a * &rhs.a + d * &self.b * &rhs.b,
            &self.a * &rhs.b + &rhs.a * &self.b,
        )
    }
}

impl<R: Radicand> Mul for QuadInt<R> {
    type Output = QuadInt<R>;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<R: Radicand> Add for QuadInt<R> {
    type Output = QuadInt<R>;
    fn add(self, rhs: Self) -> Self {
        QuadInt::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl<R: Radicand> Sub for QuadInt<R> {
    type Output = QuadInt<R>;
    fn sub(self, rhs: Self) -> Self {
        QuadInt::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl<R: Radicand> Neg for QuadInt<R> {
    type Output = QuadInt<R>;
    fn neg(self) -> Self {
        QuadInt::new(-self.a, -self.b)
    }
}

impl<R: Radicand> fmt::Display for QuadInt<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_negative() {
            write!(f, "{} - {}√{}", self.a, -&self.b, R::D)
        } else {
            write!(f, "{} + {}√{}", self.a, self.b, R::D)
        }
    }
}

/// `a + b√d` with rational coordinates; a field since `d` is not a square.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadRat<R: Radicand> {
    pub a: BigRational,
    pub b: BigRational,
    _radicand: PhantomData<R>,
}

impl<R: Radicand> QuadRat<R> {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QuadRat {
            a,
            b,
            _radicand: PhantomData,
        }
    }

    pub fn rational(a: BigRational) -> Self {
        QuadRat::new(a, BigRational::zero())
    }

    /// `c·√d`.
    pub fn surd(c: BigRational) -> Self {
        QuadRat::new(BigRational::zero(), c)
    }

    pub fn conj(&self) -> Self {
        QuadRat::new(self.a.clone(), -&self.b)
    }

    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(BigInt::from(R::D)) * &self.b * &self.b
    }

    /// `(a - b√d) / (a² - d b²)`; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(QuadRat::new(&self.a / &n, -(&self.b / &n)))
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The rational value, or `None` if the `√d` part is nonzero.
    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.a.clone())
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.a) + rational_to_f64(&self.b) * (R::D as f64).sqrt()
    }
}

impl<R: Radicand> From<QuadInt<R>> for QuadRat<R> {
    fn from(q: QuadInt<R>) -> Self {
        QuadRat::new(BigRational::from_integer(q.a), BigRational::from_integer(q.b))
    }
}

impl<R: Radicand> Zero for QuadRat<R> {
    fn zero() -> Self {
        QuadRat::rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl<R: Radicand> One for QuadRat<R> {
    fn one() -> Self {
        QuadRat::rational(BigRational::one())
    }
}

impl<R: Radicand> Add for QuadRat<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        QuadRat::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl<R: Radicand> Sub for QuadRat<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        QuadRat::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl<R: Radicand> Neg for QuadRat<R> {
    type Output = Self;
    fn neg(self) -> Self {
        QuadRat::new(-self.a, -self.b)
    }
}

impl<R: Radicand> Mul for QuadRat<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let d = BigRational::from_integer(BigInt::from(R::D));
        QuadRat::new(
            &self.a * &rhs.a + d * &self.b * &rhs.b,
            &self.a * &rhs.b + &rhs.a * &self.b,
        )
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl<R: Radicand> Div for QuadRat<R> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let inv = rhs.inv().expect("division by zero in Q(√d)");
        self * inv
    }
}

impl<R: Radicand> ExactField for QuadRat<R> {
    fn from_i64(v: i64) -> Self {
        QuadRat::rational(BigRational::from_integer(BigInt::from(v)))
    }
}

impl<R: Radicand> fmt::Display for QuadRat<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.b.is_negative() {
            write!(f, "{} - ({})√{}", self.a, -&self.b, R::D)
        } else {
            write!(f, "{} + ({})√{}", self.a, self.b, R::D)
        }
    }
}
