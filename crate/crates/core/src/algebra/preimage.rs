use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::poly::{IntPolynomial, RatPolynomial};
use crate::rational::is_integer;
use crate::{Error, Result};

/// Coefficients grow doubly exponentially in the level and the degree is `2^n`.
pub const MAX_PREIMAGE_LEVEL: u32 = 20;

/// `numerator / denominator` with an integer polynomial numerator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledPolynomial {
    pub numerator: IntPolynomial,
    pub denominator: BigInt,
}

impl ScaledPolynomial {
    pub fn into_parts(self) -> (IntPolynomial, BigInt) {
        (self.numerator, self.denominator)
    }

    pub fn to_rational(&self) -> RatPolynomial {
        let d = BigRational::from_integer(self.denominator.clone());
        self.numerator.to_rational().map(|c| c / &d)
    }
}

impl fmt::Display for ScaledPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_one() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / {}", self.numerator, self.denominator)
        }
    }
}

/// Exact expansion of `phi^n(x) - alpha` for `phi = x^2 + c`.
pub fn preimage_polynomial(
    c: &BigRational,
    alpha: &BigRational,
    n: u32,
) -> Result<ScaledPolynomial> {
    if !(1..=MAX_PREIMAGE_LEVEL).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "level must lie in 1..={MAX_PREIMAGE_LEVEL}, got {n}"
        )));
    }
    if is_integer(c) {
        let shift = IntPolynomial::constant(c.numer().clone());
        let mut p = IntPolynomial::x();
        for _ in 0..n {
            p = &p.square() + &shift;
        }
        let den = alpha.denom().clone();
        let numerator = &p.scale(&den) - &IntPolynomial::constant(alpha.numer().clone());
        return Ok(ScaledPolynomial {
            numerator,
            denominator: den,
        });
    }
    let shift = RatPolynomial::constant(c.clone());
    let mut p = RatPolynomial::x();
    for _ in 0..n {
        p = &p.square() + &shift;
    }
    let (numerator, denominator) =
        (&p - &RatPolynomial::constant(alpha.clone())).clear_denominators();
    Ok(ScaledPolynomial {
        numerator,
        denominator,
    })
}
