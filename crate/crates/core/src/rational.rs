//! Helpers for exact rationals: parsing, rendering, and logarithms of
//! arbitrarily large integers.

use std::f64::consts::LN_2;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Parses `"p/q"` or a bare integer `"p"`. Decimal points and exponents are
/// rejected so exact paths never see a rounded float.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::InvalidArgument(format!("not a rational of the form p/q: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::InvalidArgument(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(num, den))
}

/// Renders as `"num/den"` in lowest terms, always with the denominator.
pub fn render(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn is_integer(q: &BigRational) -> bool {
    q.denom().is_one()
}

/// Natural log of `|n|`; `-inf` for zero. Accurate to a few ulps for any size.
pub fn ln_abs_bigint(n: &BigInt) -> f64 {
    if n.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = n.bits();
    if bits <= 1000 {
        return n.abs().to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 64;
    let top: BigInt = n.abs() >> shift;
    top.to_f64().unwrap_or(f64::INFINITY).ln() + shift as f64 * LN_2
}

/// Natural log of `|q|`; `-inf` for zero.
pub fn ln_abs(q: &BigRational) -> f64 {
    ln_abs_bigint(q.numer()) - ln_abs_bigint(q.denom())
}

/// Nearest double, or `None` when `|q|` is outside the finite range.
pub fn to_f64(q: &BigRational) -> Option<f64> {
    if q.is_zero() {
        return Some(0.0);
    }
    let l = ln_abs(q);
    if !(-708.0..=709.0).contains(&l) {
        return None;
    }
    let v = q.to_f64()?;
    v.is_finite().then_some(v)
}

pub fn sign(q: &BigRational) -> Sign {
    q.numer().sign()
}

pub fn from_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact integer square root test for a non-negative integer.
pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(
            parse_rational("3/2").unwrap(),
            BigRational::new(3.into(), 2.into())
        );
        assert_eq!(
            parse_rational("-6/4").unwrap(),
            BigRational::new((-3).into(), 2.into())
        );
        assert_eq!(parse_rational(" -1 ").unwrap(), from_int(-1));
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("1e3").is_err());
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn renders_with_denominator() {
        assert_eq!(render(&from_int(-2)), "-2/1");
        assert_eq!(render(&parse_rational("10/4").unwrap()), "5/2");
    }

    #[test]
    fn ln_of_huge_integers() {
        let n = BigInt::from(3).pow(5000);
        let expected = 5000.0 * 3f64.ln();
        assert!((ln_abs_bigint(&n) - expected).abs() < 1e-12 * expected);
        assert_eq!(ln_abs_bigint(&BigInt::from(-8)), 8f64.ln());
    }

    #[test]
    fn squares() {
        assert!(is_perfect_square(&BigInt::from(0)));
        assert!(is_perfect_square(&BigInt::from(144)));
        assert!(!is_perfect_square(&BigInt::from(2048)));
        assert!(!is_perfect_square(&BigInt::from(-4)));
    }
}
