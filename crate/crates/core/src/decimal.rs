//! Fixed-point decimal rendering of exact rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::scalar::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rounding {
    /// Toward negative infinity, for lower interval endpoints.
    Floor,
    /// Toward positive infinity, for upper interval endpoints.
    Ceil,
    HalfEven,
}

/// Renders `q` with exactly `digits` places after the decimal point.
pub fn to_decimal(q: &Rational, digits: usize, mode: Rounding) -> String {
    let scale = BigInt::from(10).pow(digits as u32);
    let scaled = q * Rational::from_integer(scale);
    let (floor, rem) = scaled.numer().div_mod_floor(scaled.denom());
    let int = match mode {
        Rounding::Floor => floor,
        Rounding::Ceil if rem.is_zero() => floor,
        Rounding::Ceil => floor + 1,
        Rounding::HalfEven => {
            let twice: BigInt = rem * 2;
            match twice.cmp(scaled.denom()) {
                std::cmp::Ordering::Less => floor,
                std::cmp::Ordering::Greater => floor + 1,
                std::cmp::Ordering::Equal if floor.is_even() => floor,
                std::cmp::Ordering::Equal => floor + 1,
            }
        }
    };
    format_scaled(&int, digits)
}

fn format_scaled(int: &BigInt, digits: usize) -> String {
    let sign = if int.is_negative() { "-" } else { "" };
    let mut body = int.abs().to_string();
    if body.len() <= digits {
        body = format!("{}{body}", "0".repeat(digits + 1 - body.len()));
    }
    let split = body.len() - digits;
    if digits == 0 {
        format!("{sign}{body}")
    } else {
        format!("{sign}{}.{}", &body[..split], &body[split..])
    }
}

/// Number of leading significant digits on which two decimal strings agree.
/// Leading zeros, signs and the decimal point are skipped; a leading `.` as in
/// `.6464` is accepted.
pub fn agreeing_significant_digits(a: &str, b: &str) -> usize {
    fn significant(s: &str) -> impl Iterator<Item = char> + '_ {
        s.chars()
            .filter(char::is_ascii_digit)
            .skip_while(|&c| c == '0')
    }
    significant(a)
        .zip(significant(b))
        .take_while(|(x, y)| x == y)
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational;

    #[test]
    fn directed() {
        let third = rational(1, 3);
        assert_eq!(to_decimal(&third, 4, Rounding::Floor), "0.3333");
        assert_eq!(to_decimal(&third, 4, Rounding::Ceil), "0.3334");
        assert_eq!(to_decimal(&-third.clone(), 4, Rounding::Floor), "-0.3334");
        assert_eq!(to_decimal(&-third, 4, Rounding::Ceil), "-0.3333");
        assert_eq!(to_decimal(&rational(1, 2), 3, Rounding::Ceil), "0.500");
        assert_eq!(to_decimal(&rational(7, 1), 0, Rounding::Floor), "7");
    }

    #[test]
    fn half_even() {
        assert_eq!(
            to_decimal(&rational(2, 3), 8, Rounding::HalfEven),
            "0.66666667"
        );
        assert_eq!(to_decimal(&rational(1, 8), 2, Rounding::HalfEven), "0.12");
        assert_eq!(to_decimal(&rational(3, 8), 2, Rounding::HalfEven), "0.38");
        assert_eq!(
            to_decimal(&rational(1, 1000), 2, Rounding::HalfEven),
            "0.00"
        );
        assert_eq!(to_decimal(&rational(-5, 2), 0, Rounding::HalfEven), "-2");
    }

    #[test]
    fn digit_agreement() {
        assert_eq!(agreeing_significant_digits("0.5683622597", ".56836226"), 7);
        assert_eq!(agreeing_significant_digits("0.0079920", ".007992060"), 5);
        assert_eq!(agreeing_significant_digits("1.5", "2.5"), 0);
    }
}
