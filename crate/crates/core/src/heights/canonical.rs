//! Certified canonical heights for `x^2 + c` with integer `c`.
//!
//! With `c` integral the finite places are exact: if `|a|_p <= 1` the orbit
//! stays in the unit disc and the local height is 0; if `|a|_p > 1` then
//! `|a^2 + c|_p = |a|_p^2` forever and the local height is `log |a|_p`.
//! Summed over primes that is `log den(a)`. Only the Archimedean place is
//! truncated, with error at most `B / 2^N`.

use num_complex::Complex64;
use num_rational::BigRational;

use super::weil::HeightValue;
use crate::dynamics::{scale_by_pow2, QuadraticMap, RescaledComplex};
use crate::rational::{self, ln_abs, ln_abs_bigint};
use crate::{Error, Result};

const MAX_DEPTH: u32 = 2000;

pub(crate) fn integer_parameter(c: &BigRational) -> Result<f64> {
    if !rational::is_integer(c) {
        return Err(Error::UnsupportedMap(format!(
            "c = {} is not an integer; no certified finite-place heights",
            rational::render(c)
        )));
    }
    rational::to_f64(c)
        .ok_or_else(|| Error::UnsupportedMap("c is outside the floating range".into()))
}

/// A rational point as a rescaled complex number, even when it would overflow.
pub(crate) fn rescaled_point(alpha: &BigRational) -> RescaledComplex {
    match rational::to_f64(alpha) {
        Some(v) => RescaledComplex::new(Complex64::new(v, 0.0)),
        None => {
            let sign = if rational::sign(alpha) == num_bigint::Sign::Minus {
                -1.0
            } else {
                1.0
            };
            RescaledComplex::from_parts(Complex64::new(sign, 0.0), ln_abs(alpha))
        }
    }
}

/// The Archimedean local height of `x^2 + c` at `x`, truncated at the first
/// depth whose telescoping error `B / 2^N` is at most `tol`.
pub fn archimedean_local_height(
    map: &QuadraticMap,
    x: RescaledComplex,
    tol: f64,
) -> Result<HeightValue> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let b = map.escape_constants().b;
    let mut depth = 0;
    while scale_by_pow2(b, depth) > tol {
        depth += 1;
        if depth > MAX_DEPTH {
            return Err(Error::InfeasibleTolerance { tol });
        }
    }
    let value = map.truncated_local_height_rescaled(x, depth);
    Ok(HeightValue {
        value,
        budget: scale_by_pow2(b, depth) + 16.0 * f64::EPSILON * (1.0 + value),
    })
}

/// `h^_phi(alpha)` for `phi = x^2 + c`, `c` an integer.
pub fn canonical_height(c: &BigRational, alpha: &BigRational, tol: f64) -> Result<HeightValue> {
    let c = integer_parameter(c)?;
    let map = QuadraticMap::real(c);
    let finite = ln_abs_bigint(alpha.denom());
    let arch = archimedean_local_height(&map, rescaled_point(alpha), tol)?;
    let value = finite + arch.value;
    Ok(HeightValue {
        value,
        budget: arch.budget + 4.0 * f64::EPSILON * value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heights::weil_height_rational;
    use crate::rational::{from_int, parse_rational};
    use num_bigint::BigInt;

    #[test]
    fn squaring_map_gives_weil_height() {
        let h = canonical_height(&from_int(0), &from_int(2), 1e-9).unwrap();
        assert!((h.value - 2f64.ln()).abs() <= 1e-9);
        let q = parse_rational("-5/3").unwrap();
        let h = canonical_height(&from_int(0), &q, 1e-9).unwrap();
        assert!((h.value - 5f64.ln()).abs() <= 1e-9);
    }

    #[test]
    fn periodic_point_has_height_zero() {
        let h = canonical_height(&from_int(-1), &from_int(0), 1e-9).unwrap();
        assert!(h.value <= 1e-9);
    }

    #[test]
    fn basilica_at_two_against_exact_orbit() {
        // oracle: h(phi^5(2)) / 2^5 on the exact integer orbit 2, 3, 8, 63, 3968, 15745023
        let mut z = BigInt::from(2);
        for _ in 0..5 {
            z = &z * &z - 1;
        }
        assert_eq!(z, BigInt::from(15_745_023));
        let oracle = weil_height_rational(&BigRational::from_integer(z)).value / 32.0;
        let tol = 1e-9;
        let h = canonical_height(&from_int(-1), &from_int(2), tol).unwrap();
        let b = 5f64.ln() / 2.0;
        assert!((h.value - oracle).abs() <= tol + b / 32.0);
    }

    #[test]
    fn huge_points_do_not_overflow() {
        let alpha = BigRational::from_integer(BigInt::from(10).pow(400));
        let h = canonical_height(&from_int(0), &alpha, 1e-9).unwrap();
        assert!((h.value - 400.0 * 10f64.ln()).abs() < 1e-9);
    }

    #[test]
    fn non_integer_parameter_is_unsupported() {
        let r = canonical_height(&parse_rational("1/2").unwrap(), &from_int(1), 1e-6);
        assert!(matches!(r, Err(Error::UnsupportedMap(_))));
    }
}
