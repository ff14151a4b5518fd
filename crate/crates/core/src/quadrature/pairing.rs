use num_complex::Complex64;
use num_rational::BigRational;

use super::estimate::{quadrature_estimate, CertifiedValue};
use super::plan::plan_parameters;
use crate::heights::BogomolovConstant;
use crate::rational;
use crate::{Error, Result};

/// Certified interval for `<x^2 + c, x^2>` with integer `c`.
///
/// For monic integral maps every finite place contributes nothing and the
/// canonical measure of `x^2` at infinity is Haar measure on the unit circle,
/// so the pairing is the circle average of the Archimedean local height.
pub fn pairing_with_power_map(c: &BigRational, tol: f64) -> Result<CertifiedValue> {
    if !rational::is_integer(c) {
        return Err(Error::UnsupportedMap(format!(
            "c = {} is not an integer; finite places would contribute",
            rational::render(c)
        )));
    }
    let c = rational::to_f64(c)
        .ok_or_else(|| Error::UnsupportedMap("c is outside the floating range".into()))?;
    let plan = plan_parameters(Complex64::new(c, 0.0), tol)?;
    quadrature_estimate(&plan)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    CertifiedBelow,
    CertifiedAbove,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::CertifiedBelow => "CertifiedBelow",
            Verdict::CertifiedAbove => "CertifiedAbove",
            Verdict::Inconclusive => "Inconclusive",
        }
    }
}

pub fn compare_to_bogomolov(value: &CertifiedValue, threshold: BogomolovConstant) -> Verdict {
    compare_to_threshold(value, threshold.value())
}

pub fn compare_to_threshold(value: &CertifiedValue, threshold: f64) -> Verdict {
    if value.upper() < threshold {
        Verdict::CertifiedBelow
    } else if value.lower() > threshold {
        Verdict::CertifiedAbove
    } else {
        Verdict::Inconclusive
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{from_int, parse_rational};

    #[test]
    fn squaring_map_pairs_to_zero() {
        let v = pairing_with_power_map(&from_int(0), 1e-3).unwrap();
        assert!(v.contains(0.0));
    }

    #[test]
    fn half_integer_is_unsupported() {
        assert!(matches!(
            pairing_with_power_map(&parse_rational("1/2").unwrap(), 1e-3),
            Err(Error::UnsupportedMap(_))
        ));
    }

    #[test]
    fn threshold_inside_interval_is_inconclusive() {
        let v = CertifiedValue::new(0.173, 0.003, 0.0);
        assert_eq!(
            compare_to_bogomolov(&v, BogomolovConstant::Ad2Power),
            Verdict::Inconclusive
        );
        assert_eq!(
            compare_to_bogomolov(&v, BogomolovConstant::AdQAb),
            Verdict::CertifiedAbove
        );
        assert_eq!(compare_to_threshold(&v, 0.2), Verdict::CertifiedBelow);
    }
}
