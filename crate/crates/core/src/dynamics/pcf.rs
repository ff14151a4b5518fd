use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::{Error, Result};

/// Exact iteration cap for [`classify_critical_orbit`].
pub const PCF_ITERATION_CAP: usize = 10_000;

/// Numerator/denominator size at which a non-escaping orbit is abandoned.
/// Non-integral `c` inside the Mandelbrot set has a critical orbit whose
/// denominators square at every step, so it never repeats and never escapes.
const MAX_ORBIT_BITS: u64 = 1 << 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CriticalOrbit {
    /// `phi^(preperiod + period)(0) = phi^preperiod(0)` with both minimal.
    Pcf { preperiod: usize, period: usize },
    /// `|phi^step(0)| > T`, after which the orbit provably tends to infinity.
    Escaping { step: usize },
}

impl CriticalOrbit {
    pub fn is_pcf(&self) -> bool {
        matches!(self, CriticalOrbit::Pcf { .. })
    }
}

/// `|z| > T` where `T^2 - T - |c| = 0`, decided exactly: for `t >= 0`,
/// `t > T` iff `t^2 - t - |c| > 0`.
fn beyond_escape_radius(z: &BigRational, abs_c: &BigRational) -> bool {
    let t = z.abs();
    (&t * &t - &t - abs_c).is_positive()
}

/// Classifies the critical orbit `0, c, c^2 + c, ...` of `x^2 + c` exactly.
pub fn classify_critical_orbit(c: &BigRational) -> Result<CriticalOrbit> {
    let abs_c = c.abs();
    let mut seen: HashMap<BigRational, usize> = HashMap::new();
    let mut z = BigRational::zero();
    for step in 0..=PCF_ITERATION_CAP {
        if let Some(&first) = seen.get(&z) {
            return Ok(CriticalOrbit::Pcf {
                preperiod: first,
                period: step - first,
            });
        }
        if beyond_escape_radius(&z, &abs_c) {
            return Ok(CriticalOrbit::Escaping { step });
        }
        if z.numer().bits() > MAX_ORBIT_BITS || z.denom().bits() > MAX_ORBIT_BITS {
            return Err(Error::IterationCapExceeded { steps: step });
        }
        let next = &z * &z + c;
        seen.insert(z, step);
        z = next;
    }
    Err(Error::IterationCapExceeded {
        steps: PCF_ITERATION_CAP,
    })
}

/// Convenience wrapper for integer parameters.
pub fn classify_integer(c: i64) -> Result<CriticalOrbit> {
    classify_critical_orbit(&BigRational::from_integer(BigInt::from(c)))
}
