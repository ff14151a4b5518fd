use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::poly::RatPolynomial;
use crate::{Error, Result};

/// The affine change of variable `gamma(x) = a x + b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Affine {
    pub a: BigRational,
    pub b: BigRational,
}

impl Affine {
    pub fn identity() -> Self {
        Self {
            a: BigRational::one(),
            b: BigRational::zero(),
        }
    }

    pub fn apply(&self, x: &BigRational) -> BigRational {
        &self.a * x + &self.b
    }

    pub fn as_polynomial(&self) -> RatPolynomial {
        RatPolynomial::new(vec![self.b.clone(), self.a.clone()])
    }

    pub fn inverse(&self) -> Affine {
        let inv = self.a.recip();
        Affine {
            b: -(&self.b * &inv),
            a: inv,
        }
    }

    /// `gamma o f o gamma^-1`.
    pub fn conjugate(&self, f: &RatPolynomial) -> RatPolynomial {
        self.as_polynomial()
            .compose(&f.compose(&self.inverse().as_polynomial()))
    }
}

/// The normal form of `A x^2 + B x + C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalization {
    pub c: BigRational,
    pub conjugacy: Affine,
}

/// Finds `c` and `gamma(x) = A x + B/2` with `gamma o f o gamma^-1 = x^2 + c`.
pub fn normalize_quadratic(
    a: &BigRational,
    b: &BigRational,
    c: &BigRational,
) -> Result<Normalization> {
    if a.is_zero() {
        return Err(Error::DegenerateMap);
    }
    let half_b = b / BigRational::from_integer(2.into());
    let quarter = BigRational::new(1.into(), 4.into());
    let normal_c = a * c + &half_b - b * b * quarter;
    let gamma = Affine {
        a: a.clone(),
        b: half_b,
    };

    let f = RatPolynomial::new(vec![c.clone(), b.clone(), a.clone()]);
    let target = RatPolynomial::new(vec![
        normal_c.clone(),
        BigRational::zero(),
        BigRational::one(),
    ]);
    assert_eq!(
        gamma.conjugate(&f),
        target,
        "conjugacy identity failed for {a}x^2 + {b}x + {c}"
    );
    Ok(Normalization {
        c: normal_c,
        conjugacy: gamma,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::from_int;

    #[test]
    fn monic_without_linear_term_is_fixed() {
        let n = normalize_quadratic(&from_int(1), &from_int(0), &from_int(7)).unwrap();
        assert_eq!(n.c, from_int(7));
        assert_eq!(n.conjugacy, Affine::identity());
    }

    #[test]
    fn shifted_basilica() {
        // phi(x + a) - a for phi = x^2 - 1 and a = 5
        let alpha = 5;
        let n = normalize_quadratic(
            &from_int(1),
            &from_int(2 * alpha),
            &from_int(alpha * alpha - alpha - 1),
        )
        .unwrap();
        assert_eq!(n.c, from_int(-1));
    }

    #[test]
    fn scaled_square() {
        let n = normalize_quadratic(&from_int(2), &from_int(0), &from_int(0)).unwrap();
        assert_eq!(n.c, from_int(0));
        assert_eq!(n.conjugacy.a, from_int(2));
    }

    #[test]
    fn degenerate_is_rejected() {
        assert_eq!(
            normalize_quadratic(&from_int(0), &from_int(1), &from_int(1)),
            Err(Error::DegenerateMap)
        );
    }
}
