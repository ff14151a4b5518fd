//! Certified roots-of-unity quadrature for the Archimedean Arakelov-Zhang
//! integral `int_0^1 lambda(e^(2 pi i t)) dt` of `x^2 + c`.

mod estimate;
mod pairing;
mod plan;
pub mod summation;

pub use estimate::{
    quadrature_estimate, quadrature_estimate_with, root_of_unity, CertifiedValue,
    QuadratureOptions, QuadraturePlan,
};
pub use pairing::{compare_to_bogomolov, compare_to_threshold, pairing_with_power_map, Verdict};
pub use plan::{plan_parameters, MAX_PLAN_NODES};
