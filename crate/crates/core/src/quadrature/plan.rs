use std::f64::consts::TAU;

use num_complex::Complex64;

use super::estimate::QuadraturePlan;
use crate::dynamics::{scale_by_pow2, QuadraticMap};
use crate::{Error, Result};

/// Largest node count a plan may ask for.
pub const MAX_PLAN_NODES: u64 = 1 << 36;

/// Depths examined beyond the smallest admissible one.
const DEPTH_SEARCH: u32 = 64;

/// Cheapest plan (by `M * N`) with `B/2^N <= tol/2` and `pi T^N / M <= tol/2`,
/// `M` a power of two. The analytic budget of the result is at most `tol`.
pub fn plan_parameters(c: Complex64, tol: f64) -> Result<QuadraturePlan> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    if !c.is_finite() {
        return Err(Error::InvalidArgument(
            "map parameter must be finite".into(),
        ));
    }
    let constants = QuadraticMap::new(c).escape_constants();
    let half = tol / 2.0;

    let mut min_depth = 1u32;
    while scale_by_pow2(constants.b, min_depth) > half {
        min_depth += 1;
        if min_depth > 2000 {
            return Err(Error::InfeasibleTolerance { tol });
        }
    }

    let mut best: Option<(u128, QuadraturePlan)> = None;
    for depth in min_depth..min_depth + DEPTH_SEARCH {
        let t_pow = constants.t.powi(depth as i32);
        if !t_pow.is_finite() {
            break;
        }
        let needed = (TAU * t_pow / tol).ceil();
        if needed.is_nan() || needed > MAX_PLAN_NODES as f64 {
            // T^N only grows with N
            break;
        }
        let mut nodes = (needed as u64).max(1).next_power_of_two();
        let mut plan = QuadraturePlan::new(c, depth, nodes)?;
        while plan.riemann_budget() > half && nodes < MAX_PLAN_NODES {
            nodes *= 2;
            plan = QuadraturePlan::new(c, depth, nodes)?;
        }
        if plan.riemann_budget() > half || plan.truncation_budget() > half {
            continue;
        }
        let cost = nodes as u128 * depth as u128;
        if best.as_ref().is_none_or(|(b, _)| cost < *b) {
            best = Some((cost, plan));
        }
    }
    best.map(|(_, p)| p)
        .ok_or(Error::InfeasibleTolerance { tol })
}
