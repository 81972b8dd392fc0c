//! Exact and floating-point numeric kernels.
//!
//! Conventions fixed here and used everywhere else:
//!
//! * characteristic polynomials are those of `yI - M`, returned as the
//!   coefficient list `[1, c_1, ..., c_n]` of `y^n + c_1 y^{n-1} + ... + c_n`,
//!   so `c_n = (-1)^n det(M)`;
//! * eigenvalues are returned in ascending order.

mod charpoly;
mod decimal;
mod det;
mod eigen;
mod matrix;
mod quad;
mod solve;

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use charpoly::{charpoly, quad_charpoly, rational_charpoly};
pub use decimal::{render_fixed, render_table_value, truncate_fixed};
pub use det::{det_bareiss, det_exact, det_field, det_quad_field};
pub use eigen::symmetric_eigenvalues;
pub use matrix::DenseMatrix;
pub use quad::{quad_pow, QuadInt, QuadRat, Radicand, Sqrt3, Sqrt6};
pub use solve::{solve_linear_exact, solve_linear_f64, FloatLu, RationalLu};

/// A field with exact arithmetic: `BigRational` or `Q(√d)`.
pub trait ExactField:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    fn from_i64(v: i64) -> Self;
}

impl ExactField for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

/// Shorthand for an integer-valued rational.
pub fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Shorthand for `num / den`.
pub fn frac(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Lossy conversion used only for float diagnostics.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        // numerator or denominator overflowed f64: scale both down
        let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(1000);
        let n = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
        let d = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
        n / d
    })
}
