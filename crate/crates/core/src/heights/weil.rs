use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use super::roots::polynomial_roots;
use crate::poly::IntPolynomial;
use crate::rational::ln_abs_bigint;
use crate::{Error, Result};

/// A height in natural-log units with an absolute error budget.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HeightValue {
    pub value: f64,
    pub budget: f64,
}

impl HeightValue {
    pub fn exact(value: f64) -> Self {
        Self { value, budget: 0.0 }
    }

    pub fn contains(&self, x: f64) -> bool {
        (self.value - x).abs() <= self.budget
    }
}

/// `h(p/q) = log max(|p|, q)` for a reduced fraction.
pub fn weil_height_rational(alpha: &BigRational) -> HeightValue {
    HeightValue::exact(ln_max_abs(alpha.numer(), alpha.denom()))
}

fn ln_max_abs(a: &BigInt, b: &BigInt) -> f64 {
    ln_abs_bigint(if a.abs() >= b.abs() { a } else { b })
}

/// Height of any root of the irreducible integer polynomial `f`,
/// `(log|lead f| + sum log+|root|) / deg f`.
///
/// Irreducibility is not checked; for reducible input the result is the
/// average height over all roots.
pub fn height_from_minpoly(f: &IntPolynomial) -> Result<HeightValue> {
    let deg = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => {
            return Err(Error::InvalidArgument(
                "polynomial must be nonconstant".into(),
            ))
        }
    };
    let lead = f.leading().expect("nonzero polynomial");
    if deg == 1 {
        return Ok(HeightValue::exact(ln_max_abs(&f.coeffs()[0], lead)));
    }
    let roots = polynomial_roots(f)?;
    let mut sum = ln_abs_bigint(lead);
    let mut budget = 0.0;
    for r in &roots {
        sum += r.root.norm().ln().max(0.0);
        budget += r.radius / (r.root.norm() - r.radius).max(1.0);
    }
    let n = deg as f64;
    // one rounding per accumulated term on top of the root uncertainty
    let rounding = 2.0 * n * f64::EPSILON * (sum.abs() + 1.0);
    Ok(HeightValue {
        value: (sum / n).max(0.0),
        budget: budget / n + rounding / n,
    })
}
