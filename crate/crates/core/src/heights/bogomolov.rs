use std::fmt;
use std::str::FromStr;

use crate::Error;

/// Lower bounds for heights of non-torsion points in abelian fields, plus the
/// pairing values `log p / (p - 1)` they are compared against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BogomolovConstant {
    /// `(log 5)/12`, valid on the maximal abelian extension of the rationals.
    AdQAb,
    /// `(log 2)/4`, valid on the field generated by all 2-power roots of unity.
    Ad2Power,
    /// `log p / (p - 1)`.
    Pst(u64),
}

impl BogomolovConstant {
    pub fn value(&self) -> f64 {
        match *self {
            BogomolovConstant::AdQAb => 5f64.ln() / 12.0,
            BogomolovConstant::Ad2Power => 2f64.ln() / 4.0,
            BogomolovConstant::Pst(p) => (p as f64).ln() / (p - 1) as f64,
        }
    }

    pub fn name(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for BogomolovConstant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BogomolovConstant::AdQAb => write!(f, "AD_Q_AB"),
            BogomolovConstant::Ad2Power => write!(f, "AD_2POWER"),
            BogomolovConstant::Pst(p) => write!(f, "PST({p})"),
        }
    }
}

impl FromStr for BogomolovConstant {
    type Err = Error;

    /// Accepts `AD_Q_AB`, `AD_2POWER`, `PST(p)` and `PSTp`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        match s.to_ascii_uppercase().as_str() {
            "AD_Q_AB" => return Ok(BogomolovConstant::AdQAb),
            "AD_2POWER" => return Ok(BogomolovConstant::Ad2Power),
            _ => {}
        }
        let bad = || Error::InvalidArgument(format!("unknown threshold {s:?}"));
        let rest = s
            .strip_prefix("PST")
            .or_else(|| s.strip_prefix("pst"))
            .ok_or_else(bad)?;
        let digits = rest.trim_start_matches('(').trim_end_matches(')');
        let p: u64 = digits.parse().map_err(|_| bad())?;
        if p < 2 {
            return Err(bad());
        }
        Ok(BogomolovConstant::Pst(p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        assert!((BogomolovConstant::AdQAb.value() - 0.134119826036175).abs() < 1e-15);
        assert!((BogomolovConstant::Ad2Power.value() - 0.173286795139986).abs() < 1e-15);
        let pst = BogomolovConstant::Pst(29).value();
        assert!((pst - 0.120260565356660).abs() < 1e-15);
        assert!(pst < BogomolovConstant::AdQAb.value());
        // 23 is the last prime where the inequality fails
        assert!(BogomolovConstant::Pst(23).value() > BogomolovConstant::AdQAb.value());
    }

    #[test]
    fn parses_names() {
        assert_eq!(
            "AD_2POWER".parse::<BogomolovConstant>().unwrap(),
            BogomolovConstant::Ad2Power
        );
        assert_eq!(
            "ad_q_ab".parse::<BogomolovConstant>().unwrap(),
            BogomolovConstant::AdQAb
        );
        assert_eq!(
            "PST(29)".parse::<BogomolovConstant>().unwrap(),
            BogomolovConstant::Pst(29)
        );
        assert_eq!(
            "PST7".parse::<BogomolovConstant>().unwrap(),
            BogomolovConstant::Pst(7)
        );
        assert!("PST(1)".parse::<BogomolovConstant>().is_err());
        assert!("AD".parse::<BogomolovConstant>().is_err());
        assert_eq!(BogomolovConstant::Pst(29).to_string(), "PST(29)");
    }
}
