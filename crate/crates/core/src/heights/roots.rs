//! Numeric roots of integer polynomials via companion-matrix eigenvalues.
//!
//! Each root is polished by one Newton step and reported with an inclusion
//! radius `deg * (|p(z)| + e(z)) / |p'(z)|`, where `e(z)` bounds the rounding
//! in evaluating `p`. A disc of that radius around `z` contains a true root.

use nalgebra::{DMatrix, Schur};
use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::poly::IntPolynomial;
use crate::{Error, Result};

const SCHUR_MAX_ITER: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RootEstimate {
    pub root: Complex64,
    pub radius: f64,
}

/// Monic `f64` image of `f`, lowest degree first, without the leading 1.
fn monic_coeffs(f: &IntPolynomial) -> Result<Vec<f64>> {
    let lead = f
        .leading()
        .and_then(|l| l.to_f64())
        .filter(|l| l.is_finite())
        .ok_or_else(|| Error::RootFindingFailure("leading coefficient out of range".into()))?;
    let n = f.degree().unwrap_or(0);
    f.coeffs()[..n]
        .iter()
        .map(|c| {
            c.to_f64()
                .filter(|v| v.is_finite())
                .map(|v| v / lead)
                .ok_or_else(|| Error::RootFindingFailure("coefficient out of range".into()))
        })
        .collect()
}

/// Value, derivative, and a rounding bound for the monic polynomial at `z`.
fn eval_monic(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64, f64) {
    let n = coeffs.len();
    let mut p = Complex64::new(1.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    let mut magnitude = 1.0;
    let az = z.norm();
    for &a in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
        magnitude = magnitude * az + a.abs();
    }
    // Horner error gamma_{2n} plus one rounding per coefficient from the division by lead.
    let u = f64::EPSILON / 2.0;
    let k = (4 * n + 2) as f64 * u;
    let err = (k / (1.0 - k) + u) * magnitude;
    (p, dp, err)
}

/// Parlett-Reinsch balancing by powers of two.
fn balance(m: &mut DMatrix<f64>) {
    let n = m.nrows();
    loop {
        let mut done = true;
        for i in 0..n {
            let mut col = 0.0;
            let mut row = 0.0;
            for j in 0..n {
                if j != i {
                    col += m[(j, i)].abs();
                    row += m[(i, j)].abs();
                }
            }
            if col == 0.0 || row == 0.0 {
                continue;
            }
            let sum = col + row;
            let mut f = 1.0;
            let mut g = row / 2.0;
            while col < g {
                f *= 2.0;
                col *= 4.0;
            }
            g = row * 2.0;
            while col > g {
                f /= 2.0;
                col /= 4.0;
            }
            if (col + row) / f < 0.95 * sum {
                done = false;
                for j in 0..n {
                    m[(i, j)] /= f;
                    m[(j, i)] *= f;
                }
            }
        }
        if done {
            return;
        }
    }
}

/// `S m S^-1` with `S = I + J/2`, `J` the upper shift; `S^-1` has entries
/// `(-1/2)^k`, all exact. Francis steps can stall on orthogonal
/// companions such as that of `x^n - 1`; the similarity breaks that structure.
fn unstructured_similar(m: &DMatrix<f64>) -> DMatrix<f64> {
    let n = m.nrows();
    let s = DMatrix::from_fn(n, n, |i, j| match j.checked_sub(i) {
        Some(0) => 1.0,
        Some(1) => 0.5,
        _ => 0.0,
    });
    let s_inv = DMatrix::from_fn(n, n, |i, j| match j.checked_sub(i) {
        Some(k) => (-0.5f64).powi(k as i32),
        None => 0.0,
    });
    &s * m * &s_inv
}

pub fn polynomial_roots(f: &IntPolynomial) -> Result<Vec<RootEstimate>> {
    let n = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => {
            return Err(Error::InvalidArgument(
                "polynomial must be nonconstant".into(),
            ))
        }
    };
    let coeffs = monic_coeffs(f)?;

    let eigen: Vec<Complex64> = if n == 1 {
        vec![Complex64::new(-coeffs[0], 0.0)]
    } else {
        let mut m = DMatrix::<f64>::zeros(n, n);
        for j in 0..n {
            m[(0, j)] = -coeffs[n - 1 - j];
        }
        for i in 1..n {
            m[(i, i - 1)] = 1.0;
        }
        balance(&mut m);
        let schur = Schur::try_new(m.clone(), f64::EPSILON, SCHUR_MAX_ITER)
            .or_else(|| Schur::try_new(unstructured_similar(&m), f64::EPSILON, SCHUR_MAX_ITER))
            .ok_or_else(|| {
                Error::RootFindingFailure(format!(
                    "eigenvalue iteration did not converge (degree {n})"
                ))
            })?;
        schur.complex_eigenvalues().iter().copied().collect()
    };

    eigen
        .into_iter()
        .map(|z0| {
            let (p0, dp0, _) = eval_monic(&coeffs, z0);
            let mut z = z0;
            if dp0.norm() > 0.0 {
                let z1 = z0 - p0 / dp0;
                if z1.is_finite() && eval_monic(&coeffs, z1).0.norm() <= p0.norm() {
                    z = z1;
                }
            }
            let (p, dp, err) = eval_monic(&coeffs, z);
            let radius = n as f64 * (p.norm() + err) / dp.norm();
            if !z.is_finite() || !radius.is_finite() {
                return Err(Error::RootFindingFailure(format!(
                    "no isolating radius at {z} (repeated root?)"
                )));
            }
            Ok(RootEstimate { root: z, radius })
        })
        .collect()
}
