//! Eisenstein criteria and the stability families they certify.
//!
//! A certificate is one-sided: `Unknown` never means unstable.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::poly::IntPolynomial;

/// `p` does not divide the leading coefficient, divides every other one, and
/// `p^2` does not divide the constant term.
pub fn eisenstein_check(f: &IntPolynomial, p: &BigInt) -> bool {
    let Some(d) = f.degree() else { return false };
    if d == 0 || p.abs() < BigInt::from(2) {
        return false;
    }
    let coeffs = f.coeffs();
    let p2 = p * p;
    !coeffs[d].is_multiple_of(p)
        && coeffs[..d].iter().all(|c| c.is_multiple_of(p))
        && !coeffs[0].is_multiple_of(&p2)
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin; these bases are exact for all of `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StabilityFamily {
    /// `(x^2 + p, 0)` with `p` prime.
    PrimeShift,
    /// `c = 0`, `alpha = 2, 3 mod 4`, via `phi(x + alpha) - alpha`.
    Squaring,
    /// `c = -2`, `alpha = 0, 1 mod 4`, via `phi(x + alpha) - alpha`.
    Chebyshev,
    /// `c = -1`, `alpha = 1, 2 mod 4`, via `phi^2(x + alpha) - alpha`.
    Basilica,
}

impl StabilityFamily {
    pub fn label(&self) -> &'static str {
        match self {
            StabilityFamily::PrimeShift => "x^2+p at alpha=0",
            StabilityFamily::Squaring => "x^2 at alpha=2,3 mod 4",
            StabilityFamily::Chebyshev => "x^2-2 at alpha=0,1 mod 4",
            StabilityFamily::Basilica => "x^2-1 at alpha=1,2 mod 4",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub family: StabilityFamily,
    pub prime: BigInt,
    /// The Eisenstein polynomial whose iterates witness stability.
    pub witness: IntPolynomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StabilityVerdict {
    CertifiedStable(Certificate),
    Unknown,
}

impl StabilityVerdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, StabilityVerdict::CertifiedStable(_))
    }
}

impl fmt::Display for StabilityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StabilityVerdict::CertifiedStable(c) => write!(
                f,
                "CertifiedStable({}-Eisenstein: {}; family {})",
                c.prime,
                c.witness,
                c.family.label()
            ),
            StabilityVerdict::Unknown => write!(f, "Unknown"),
        }
    }
}

/// `phi^k(x + alpha) - alpha` for `phi = x^2 + c`.
fn conjugated_iterate(c: &BigInt, alpha: &BigInt, k: u32) -> IntPolynomial {
    let shift = IntPolynomial::constant(c.clone());
    let mut p = IntPolynomial::new(vec![alpha.clone(), BigInt::from(1)]);
    for _ in 0..k {
        p = &p.square() + &shift;
    }
    &p - &IntPolynomial::constant(alpha.clone())
}

/// Looks for an Eisenstein certificate for the pair `(x^2 + c, alpha)`.
pub fn stability_certificate(c: &BigInt, alpha: &BigInt) -> StabilityVerdict {
    let residue = alpha
        .mod_floor(&BigInt::from(4))
        .to_u8()
        .expect("residue mod 4");
    let two = BigInt::from(2);
    let candidate = match c.to_i64() {
        Some(0) if matches!(residue, 2 | 3) => Some((StabilityFamily::Squaring, two, 1)),
        Some(-2) if matches!(residue, 0 | 1) => Some((StabilityFamily::Chebyshev, two, 1)),
        Some(-1) if matches!(residue, 1 | 2) => Some((StabilityFamily::Basilica, two, 2)),
        _ if alpha.is_zero() && c.is_positive() && c.to_u64().is_some_and(is_prime_u64) => {
            Some((StabilityFamily::PrimeShift, c.clone(), 1))
        }
        _ => None,
    };
    let Some((family, prime, k)) = candidate else {
        return StabilityVerdict::Unknown;
    };
    let witness = conjugated_iterate(c, alpha, k);
    if eisenstein_check(&witness, &prime) {
        StabilityVerdict::CertifiedStable(Certificate {
            family,
            prime,
            witness,
        })
    } else {
        StabilityVerdict::Unknown
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn eisenstein_examples() {
        assert!(eisenstein_check(
            &IntPolynomial::from_i64s(&[3, 0, 1]),
            &b(3)
        ));
        assert!(eisenstein_check(
            &IntPolynomial::from_i64s(&[6, 6, 1]),
            &b(2)
        ));
        assert!(!eisenstein_check(
            &IntPolynomial::from_i64s(&[1, 0, 1]),
            &b(2)
        ));
        assert!(!eisenstein_check(
            &IntPolynomial::from_i64s(&[4, 0, 1]),
            &b(2)
        ));
    }

    #[test]
    fn certified_examples() {
        let v = stability_certificate(&b(3), &b(0));
        let StabilityVerdict::CertifiedStable(cert) = v else {
            panic!("expected certificate")
        };
        assert_eq!(cert.prime, b(3));
        assert_eq!(cert.witness, IntPolynomial::from_i64s(&[3, 0, 1]));

        let StabilityVerdict::CertifiedStable(cert) = stability_certificate(&b(-1), &b(1)) else {
            panic!("expected certificate")
        };
        assert_eq!(cert.witness, IntPolynomial::from_i64s(&[-2, 0, 4, 4, 1]));
        assert_eq!(cert.witness.to_string(), "x^4 + 4x^3 + 4x^2 - 2");

        let StabilityVerdict::CertifiedStable(cert) = stability_certificate(&b(-2), &b(4)) else {
            panic!("expected certificate")
        };
        assert_eq!(cert.witness, IntPolynomial::from_i64s(&[10, 8, 1]));
    }

    #[test]
    fn outside_the_families_is_unknown() {
        assert_eq!(
            stability_certificate(&b(0), &b(1)),
            StabilityVerdict::Unknown
        );
        assert_eq!(
            stability_certificate(&b(-1), &b(3)),
            StabilityVerdict::Unknown
        );
        assert_eq!(
            stability_certificate(&b(4), &b(0)),
            StabilityVerdict::Unknown
        );
        assert_eq!(
            stability_certificate(&b(5), &b(1)),
            StabilityVerdict::Unknown
        );
        assert!(stability_certificate(&b(7), &b(0)).is_certified());
    }

    #[test]
    fn residue_classes_for_small_alpha() {
        for a in -50i64..=50 {
            let r = a.rem_euclid(4);
            assert_eq!(
                stability_certificate(&b(0), &b(a)).is_certified(),
                r == 2 || r == 3,
                "c=0 a={a}"
            );
            assert_eq!(
                stability_certificate(&b(-2), &b(a)).is_certified(),
                r == 0 || r == 1,
                "c=-2 a={a}"
            );
            assert_eq!(
                stability_certificate(&b(-1), &b(a)).is_certified(),
                r == 1 || r == 2,
                "c=-1 a={a}"
            );
        }
    }

    #[test]
    fn miller_rabin_against_trial_division() {
        let trial = |n: u64| {
            n >= 2
                && (2..)
                    .take_while(|d| d * d <= n)
                    .all(|d| !n.is_multiple_of(d))
        };
        for n in 0..5000u64 {
            assert_eq!(is_prime_u64(n), trial(n), "n={n}");
        }
        assert!(is_prime_u64(18_446_744_073_709_551_557));
        assert!(!is_prime_u64(3_215_031_751));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]

        #[test]
        fn iterates_of_eisenstein_quadratics_stay_eisenstein(
            p in prop::sample::select(vec![2i64, 3, 5, 7, 11, 13]),
            lin in -20i64..=20,
            unit in 1i64..=20,
        ) {
            prop_assume!(unit % p != 0);
            let f = IntPolynomial::from_i64s(&[p * unit, p * lin, 1]);
            prop_assert!(eisenstein_check(&f, &b(p)));
            prop_assert!(eisenstein_check(&f.compose(&f), &b(p)));
        }
    }
}
