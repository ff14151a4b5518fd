//! Mean heights over the backward orbit of a rational point.
//!
//! The roots of `phi^k(x) - alpha` are found down the preimage tree
//! `x -> +-sqrt(x - c)`, which stays well conditioned at degree 1024 where a
//! companion matrix does not, and each is polished by Newton on the iterate.
//! By Gauss's lemma the mean height over all roots is
//! `(log|lead| + sum log+|root|) / 2^k` for the primitive integer form of
//! `phi^k(x) - alpha`, whether or not it factors.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;

use super::canonical::integer_parameter;
use crate::algebra::preimage_polynomial;
use crate::rational::{self, ln_abs_bigint};
use crate::{Error, Result};

pub const MAX_DEMO_LEVEL: u32 = 10;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LevelMean {
    pub level: u32,
    pub mean_height: f64,
    /// Largest `|phi^k(x) - alpha|` over the computed roots.
    pub max_residual: f64,
}

/// `phi^k(x) - alpha` and its derivative.
fn residual(c: f64, alpha: f64, k: u32, x: Complex64) -> (Complex64, Complex64) {
    let mut z = x;
    let mut dz = Complex64::new(1.0, 0.0);
    for _ in 0..k {
        dz = 2.0 * z * dz;
        z = z * z + c;
    }
    (z - alpha, dz)
}

fn polish(c: f64, alpha: f64, k: u32, x: Complex64) -> (Complex64, f64) {
    let (g, dg) = residual(c, alpha, k, x);
    if dg.norm() > 0.0 {
        let y = x - g / dg;
        if y.is_finite() {
            let gy = residual(c, alpha, k, y).0.norm();
            if gy < g.norm() {
                return (y, gy);
            }
        }
    }
    (x, g.norm())
}

/// For each level `k = 1..=n`, the mean Weil height of the `2^k` roots of
/// `phi^k(x) = alpha` with `phi = x^2 + c`.
pub fn preimage_height_demo(
    c: &BigRational,
    alpha: &BigRational,
    n: u32,
) -> Result<Vec<LevelMean>> {
    let cf = integer_parameter(c)?;
    if !(1..=MAX_DEMO_LEVEL).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "level must lie in 1..={MAX_DEMO_LEVEL}, got {n}"
        )));
    }
    if c.is_zero() && alpha.is_zero() {
        return Err(Error::InvalidArgument("0 is exceptional for x^2".into()));
    }
    let af = rational::to_f64(alpha)
        .ok_or_else(|| Error::InvalidArgument("alpha is outside the floating range".into()))?;
    let shift = Complex64::new(cf, 0.0);

    let mut tree = vec![Complex64::new(af, 0.0)];
    let mut out = Vec::with_capacity(n as usize);
    for k in 1..=n {
        let mut next = Vec::with_capacity(tree.len() * 2);
        for &beta in &tree {
            let s = (beta - shift).sqrt();
            next.push(s);
            next.push(-s);
        }
        let mut max_residual: f64 = 0.0;
        for x in next.iter_mut() {
            let (y, r) = polish(cf, af, k, *x);
            *x = y;
            max_residual = max_residual.max(r);
        }
        if next.iter().any(|x| !x.is_finite()) {
            return Err(Error::RootFindingFailure(format!(
                "non-finite preimage at level {k}"
            )));
        }

        let (numerator, _) = preimage_polynomial(c, alpha, k)?.into_parts();
        let lead = numerator
            .primitive_part()
            .leading()
            .cloned()
            .expect("nonzero");
        let sum: f64 = next.iter().map(|x| x.norm().ln().max(0.0)).sum();
        out.push(LevelMean {
            level: k,
            mean_height: (ln_abs_bigint(&lead) + sum) / (1u64 << k) as f64,
            max_residual,
        });
        tree = next;
    }
    Ok(out)
}
