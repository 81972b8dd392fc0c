//! Decimal rendering of exact rationals.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

fn pow10(places: u32) -> BigInt {
    BigInt::from(10u32).pow(places)
}

fn digits(scaled: &BigInt, negative: bool, places: u32) -> String {
    let s = scaled.abs().to_string();
    let places = places as usize;
    let body = if places == 0 {
        s
    } else {
        let padded = format!("{s:0>width$}", width = places + 1);
        let (int, frac) = padded.split_at(padded.len() - places);
        format!("{int}.{frac}")
    };
    if negative && !scaled.is_zero() {
        format!("-{body}")
    } else {
        body
    }
}

/// `value` rounded half-to-even to exactly `places` decimals.
pub fn render_fixed(value: &BigRational, places: u32) -> String {
    let scaled = value * BigRational::from_integer(pow10(places));
    let (q, r) = scaled.numer().abs().div_rem(scaled.denom());
    let twice = &r * 2u32;
    let q = match twice.cmp(scaled.denom()) {
        std::cmp::Ordering::Greater => q + 1u32,
        std::cmp::Ordering::Equal if q.is_odd() => q + 1u32,
        _ => q,
    };
    digits(&q, value.numer().sign() == Sign::Minus, places)
}

/// `value` truncated toward zero to exactly `places` decimals.
pub fn truncate_fixed(value: &BigRational, places: u32) -> String {
    let scaled = value * BigRational::from_integer(pow10(places));
    let q = scaled.numer().abs() / scaled.denom();
    digits(&q, value.numer().sign() == Sign::Minus, places)
}

/// Table-style rendering: a value whose decimal expansion terminates within
/// `max_places` digits is printed exactly with trailing zeros dropped
/// (`296.5`, `1724`); anything else is rounded half-to-even to `max_places`
/// digits (`3110.1720`).
pub fn render_table_value(value: &BigRational, max_places: u32) -> String {
    let scaled = value * BigRational::from_integer(pow10(max_places));
    if !scaled.is_integer() {
        return render_fixed(value, max_places);
    }
    let mut places = max_places;
    let mut q = scaled.to_integer();
    while places > 0 && (&q % 10u32).is_zero() {
        q /= 10u32;
        places -= 1;
    }
    digits(&q, value.is_negative(), places)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::frac;

    #[test]
    fn half_even_ties() {
        assert_eq!(render_fixed(&frac(5, 2), 0), "2");
        assert_eq!(render_fixed(&frac(7, 2), 0), "4");
        assert_eq!(render_fixed(&frac(1, 8), 2), "0.12");
        assert_eq!(render_fixed(&frac(3, 8), 2), "0.38");
        assert_eq!(render_fixed(&frac(-3, 8), 2), "-0.38");
    }

    #[test]
    fn leading_zeros_kept() {
        assert_eq!(render_fixed(&frac(1, 1000), 4), "0.0010");
        assert_eq!(truncate_fixed(&frac(2, 3), 4), "0.6666");
        assert_eq!(render_fixed(&frac(2, 3), 4), "0.6667");
    }

    #[test]
    fn table_values() {
        assert_eq!(render_table_value(&frac(593, 2), 4), "296.5");
        assert_eq!(render_table_value(&frac(1724, 1), 4), "1724");
        assert_eq!(render_table_value(&frac(2, 3), 4), "0.6667");
    }
}
