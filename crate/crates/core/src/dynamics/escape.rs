//! Escape radius `T` and the distortion constant `B` of `x^2 + c`.
//!
//! `B` bounds `| ln(1+|phi(x)|^2)^(1/2) - 2 ln(1+|x|^2)^(1/2) |` over the whole
//! plane. For `|x| = r` the modulus `|x^2 + c|` sweeps `[|r^2 - |c||, r^2 + |c|]`
//! and the expression is monotone in it, so the supremum reduces to two real
//! branches in `r`. Those are maximized numerically and then padded.

use std::f64::consts::LN_2;

use super::map::QuadraticMap;

const GRID_POINTS: usize = 20_001;
const GOLDEN_ITERS: usize = 200;
const SAFETY_FACTOR: f64 = 1.01;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EscapeConstants {
    /// Positive root of `T^2 - T - |c| = 0`.
    pub t: f64,
    /// Upper bound on the one-step distortion (exact when `b_is_exact`).
    pub b: f64,
    pub b_is_exact: bool,
}

impl EscapeConstants {
    pub fn for_map(map: &QuadraticMap) -> Self {
        let a = map.c().norm();
        let t = escape_radius(a);
        let c = map.c();
        if c.im == 0.0 && c.re == -1.0 {
            return Self {
                t,
                b: 5f64.ln() / 2.0,
                b_is_exact: true,
            };
        }
        if a == 0.0 {
            // attained at |x| = 1
            return Self {
                t,
                b: LN_2 / 2.0,
                b_is_exact: true,
            };
        }
        Self {
            t,
            b: distortion_upper_bound(a, t),
            b_is_exact: false,
        }
    }
}

pub fn escape_radius(abs_c: f64) -> f64 {
    (1.0 + (1.0 + 4.0 * abs_c).sqrt()) / 2.0
}

/// `ln(1+s^2)/2 - ln(1+r^2)` for the larger modulus `s = r^2 + a`.
fn upper_branch(r: f64, a: f64) -> f64 {
    let r2 = r * r;
    let s = r2 + a;
    0.5 * (s * s).ln_1p() - r2.ln_1p()
}

/// `ln(1+r^2) - ln(1+s^2)/2` for the smaller modulus `s = |r^2 - a|`.
fn lower_branch(r: f64, a: f64) -> f64 {
    let r2 = r * r;
    let s = r2 - a;
    r2.ln_1p() - 0.5 * (s * s).ln_1p()
}

/// Closed bound `ln(4(1+|c|^2))/2` from the triangle inequality.
pub fn coarse_distortion_bound(a: f64) -> f64 {
    0.5 * (4.0 * (1.0 + a * a)).ln()
}

/// Bound on either branch for every `r >= radius`.
fn tail_bound(a: f64, radius: f64) -> f64 {
    let r2 = radius * radius;
    let upper = 0.5 * ((2.0 * a * r2 + a * a) / ((1.0 + r2) * (1.0 + r2))).ln_1p();
    let lower = if r2 > a {
        ((1.0 + a) / (r2 - a)).ln_1p()
    } else {
        f64::INFINITY
    };
    upper.max(lower)
}

fn distortion_upper_bound(a: f64, t: f64) -> f64 {
    let radius = (3.0 * t).max(4.0);
    let sup =
        branch_sup(|r| upper_branch(r, a), radius).max(branch_sup(|r| lower_branch(r, a), radius));
    let padded = (sup * SAFETY_FACTOR).max(tail_bound(a, radius));
    padded.min(coarse_distortion_bound(a))
}

/// Dense grid on `[0, radius]`, then golden-section refinement around the best cell.
fn branch_sup(f: impl Fn(f64) -> f64, radius: f64) -> f64 {
    let h = radius / (GRID_POINTS - 1) as f64;
    let (mut best_i, mut best) = (0, f(0.0));
    for i in 1..GRID_POINTS {
        let v = f(i as f64 * h);
        if v > best {
            best = v;
            best_i = i;
        }
    }
    let mut lo = (best_i as f64 - 1.0).max(0.0) * h;
    let mut hi = ((best_i + 1) as f64 * h).min(radius);
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..GOLDEN_ITERS {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        }
        if hi - lo < 1e-15 * radius {
            break;
        }
    }
    best.max(f1).max(f2)
}
