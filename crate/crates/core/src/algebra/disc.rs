//! Discriminants of iterates of a quadratic, and an independent resultant oracle.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::IntPolynomial;
use crate::rational::is_perfect_square;
use crate::{Error, Result};

/// The `A` exponent is `2^(2n-1) - 1`; beyond this level the exact answer
/// has billions of bits whenever `|A| > 1`.
pub const MAX_DISC_LEVEL: u32 = 12;

/// `disc(f^n)` for `f = A x^2 + B x + C` via
/// `disc(f^n) = (-1)^(2^(n-1)) 2^(2^n) A^(2^(2n-1)-1) disc(f^(n-1))^2 f^n(crit)`.
pub fn disc_iterate(
    a: &BigRational,
    b: &BigRational,
    c: &BigRational,
    n: u32,
) -> Result<BigRational> {
    if a.is_zero() {
        return Err(Error::DegenerateMap);
    }
    if !(1..=MAX_DISC_LEVEL).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "iterate level must lie in 1..={MAX_DISC_LEVEL}, got {n}"
        )));
    }
    let two = BigRational::from_integer(BigInt::from(2));
    let crit = -b / (&two * a);
    let f = |x: &BigRational| a * x * x + b * x + c;

    let mut disc = BigRational::one();
    let mut orbit = crit;
    for k in 1..=n {
        orbit = f(&orbit);
        // (-1)^(2^(k-1)) is -1 only for k = 1
        let sign = if k == 1 {
            -BigRational::one()
        } else {
            BigRational::one()
        };
        let pow2 = BigRational::from_integer(BigInt::one() << (1usize << k));
        let a_pow = num_traits::pow(a.clone(), (1usize << (2 * k - 1)) - 1);
        disc = sign * pow2 * a_pow * &disc * &disc * &orbit;
    }
    Ok(disc)
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// `Res(f, g)` as the determinant of the Sylvester matrix.
pub fn resultant(f: &IntPolynomial, g: &IntPolynomial) -> BigInt {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return BigInt::zero();
    };
    let size = m + n;
    if size == 0 {
        return BigInt::one();
    }
    let desc = |p: &IntPolynomial| -> Vec<BigInt> { p.coeffs().iter().rev().cloned().collect() };
    let (fd, gd) = (desc(f), desc(g));
    let mut rows = vec![vec![BigInt::zero(); size]; size];
    for (i, row) in rows.iter_mut().enumerate().take(n) {
        for (j, v) in fd.iter().enumerate() {
            row[i + j] = v.clone();
        }
    }
    for i in 0..m {
        for (j, v) in gd.iter().enumerate() {
            rows[n + i][i + j] = v.clone();
        }
    }
    bareiss_det(rows)
}

/// `disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lead(f)`.
pub fn disc_oracle(f: &IntPolynomial) -> Result<BigRational> {
    let d = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => {
            return Err(Error::InvalidArgument(
                "discriminant needs degree >= 1".into(),
            ))
        }
    };
    let res = resultant(f, &f.derivative());
    let lead = f.leading().expect("nonzero").clone();
    let signed = if (d * (d - 1) / 2) % 2 == 1 {
        -res
    } else {
        res
    };
    Ok(BigRational::new(signed, lead))
}

/// Whether `q` is the square of a rational.
pub fn is_rational_square(q: &BigRational) -> bool {
    !q.is_negative() && is_perfect_square(q.numer()) && is_perfect_square(q.denom())
}
