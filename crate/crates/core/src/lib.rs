//! Certified numerics and exact algebra for the quadratic family `x^2 + c`.
//!
//! The crate is split along four lines:
//!
//! * [`dynamics`]: overflow-safe orbits, smoothed truncated local heights,
//!   escape constants, critical-orbit classification, quadratic normal forms
//!   and Chebyshev polynomials.
//! * [`quadrature`]: the roots-of-unity Riemann sum for the Archimedean
//!   Arakelov-Zhang integral against the squaring map, with a rigorous error
//!   budget and a deterministic parallel reduction.
//! * [`heights`]: Weil heights over the rationals, Mahler-measure heights,
//!   certified canonical heights for integer `c`, and Bogomolov constants.
//! * [`algebra`]: discriminants of iterates, Eisenstein stability
//!   certificates, Galois order bounds and permutation-group checks.

pub mod algebra;
pub mod dynamics;
mod error;
pub mod heights;
pub mod poly;
pub mod quadrature;
pub mod rational;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use poly::{IntPolynomial, Polynomial, RatPolynomial};
