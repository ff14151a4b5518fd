//! Heights over the rationals and their dynamical refinements.

mod bogomolov;
mod canonical;
mod demo;
mod roots;
mod weil;

pub use bogomolov::BogomolovConstant;
pub use canonical::{archimedean_local_height, canonical_height};
pub use demo::{preimage_height_demo, LevelMean, MAX_DEMO_LEVEL};
pub use roots::{polynomial_roots, RootEstimate};
pub use weil::{height_from_minpoly, weil_height_rational, HeightValue};
