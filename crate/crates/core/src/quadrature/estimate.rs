use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use super::summation::chunked_sum;
use crate::dynamics::{scale_by_pow2, EscapeConstants, QuadraticMap};
use crate::{Error, Result};

/// A floating estimate with a rigorous two-part error budget.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CertifiedValue {
    pub estimate: f64,
    /// Truncation plus Riemann-sum error.
    pub analytic_budget: f64,
    /// Floating-point accumulation error.
    pub rounding_budget: f64,
}

impl CertifiedValue {
    pub fn new(estimate: f64, analytic_budget: f64, rounding_budget: f64) -> Self {
        assert!(
            analytic_budget >= 0.0 && rounding_budget >= 0.0,
            "budgets must be nonnegative"
        );
        Self {
            estimate,
            analytic_budget,
            rounding_budget,
        }
    }

    pub fn total_budget(&self) -> f64 {
        self.analytic_budget + self.rounding_budget
    }

    pub fn lower(&self) -> f64 {
        self.estimate - self.total_budget()
    }

    pub fn upper(&self) -> f64 {
        self.estimate + self.total_budget()
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lower() <= x && x <= self.upper()
    }
}

/// Parameters of the roots-of-unity Riemann sum for `x^2 + c`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadraturePlan {
    map: QuadraticMap,
    depth: u32,
    nodes: u64,
    constants: EscapeConstants,
}

impl QuadraturePlan {
    /// `depth` is the truncation level `N`, `nodes` the number `M` of roots of unity.
    pub fn new(c: Complex64, depth: u32, nodes: u64) -> Result<Self> {
        if depth < 1 || nodes < 1 {
            return Err(Error::InvalidArgument(format!(
                "quadrature needs N >= 1 and M >= 1 (got N={depth}, M={nodes})"
            )));
        }
        if !c.is_finite() {
            return Err(Error::InvalidArgument(
                "map parameter must be finite".into(),
            ));
        }
        let map = QuadraticMap::new(c);
        let plan = Self {
            map,
            depth,
            nodes,
            constants: map.escape_constants(),
        };
        if !plan.riemann_budget().is_finite() || !plan.truncation_budget().is_finite() {
            return Err(Error::BudgetOverflow);
        }
        Ok(plan)
    }

    pub fn c(&self) -> Complex64 {
        self.map.c()
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    pub fn constants(&self) -> EscapeConstants {
        self.constants
    }

    /// `B / 2^N`.
    pub fn truncation_budget(&self) -> f64 {
        scale_by_pow2(self.constants.b, self.depth)
    }

    /// `pi T^N / M`.
    pub fn riemann_budget(&self) -> f64 {
        PI * self.constants.t.powi(self.depth as i32) / self.nodes as f64
    }

    pub fn analytic_budget(&self) -> f64 {
        self.truncation_budget() + self.riemann_budget()
    }

    /// `M * 8 eps * (B + ln(1 + T^2))`, a coarse cap on accumulated rounding.
    pub fn rounding_budget(&self) -> f64 {
        let t = self.constants.t;
        let max_term = self.constants.b + (t * t).ln_1p();
        self.nodes as f64 * 8.0 * f64::EPSILON * max_term
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct QuadratureOptions {
    /// Use nodes `e^(2 pi i (m + offset)/M)`; the node set is unchanged.
    pub node_offset: u64,
    /// For real `c`, sum only `m = 0..=M/2` using `f(conj z) = f(z)`.
    pub conjugate_symmetry: bool,
}

/// The `m`-th of `m_total` roots of unity, from its angle.
#[inline]
pub fn root_of_unity(m: u64, m_total: u64) -> Complex64 {
    let mut t = (m % m_total) as f64 / m_total as f64;
    if t > 0.5 {
        t -= 1.0;
    }
    let (s, c) = (TAU * t).sin_cos();
    Complex64::new(c, s)
}

/// `(1/M) sum_{zeta^M = 1} f_N(zeta)` with budget `B/2^N + pi T^N / M`.
pub fn quadrature_estimate(plan: &QuadraturePlan) -> Result<CertifiedValue> {
    quadrature_estimate_with(plan, QuadratureOptions::default())
}

pub fn quadrature_estimate_with(
    plan: &QuadraturePlan,
    options: QuadratureOptions,
) -> Result<CertifiedValue> {
    let analytic = plan.analytic_budget();
    if !analytic.is_finite() {
        return Err(Error::BudgetOverflow);
    }
    let map = plan.map;
    let depth = plan.depth;
    let m_total = plan.nodes;
    let term = |m: u64| {
        let z = root_of_unity(m + options.node_offset, m_total);
        map.iterate(z, depth).ln_hypot1()
    };

    let raw = if options.conjugate_symmetry {
        if !map.is_real() {
            return Err(Error::InvalidArgument(
                "conjugate symmetry requires a real parameter".into(),
            ));
        }
        if options.node_offset != 0 {
            return Err(Error::InvalidArgument(
                "conjugate symmetry is only defined for the unrotated node set".into(),
            ));
        }
        let half = m_total / 2;
        let even = m_total.is_multiple_of(2);
        chunked_sum(half + 1, |m| {
            let v = term(m);
            if m == 0 || (even && m == half) {
                v
            } else {
                2.0 * v
            }
        })
    } else {
        chunked_sum(m_total, term)
    };

    let estimate = scale_by_pow2(raw, depth) / m_total as f64;
    Ok(CertifiedValue::new(
        estimate,
        analytic,
        plan.rounding_budget(),
    ))
}
