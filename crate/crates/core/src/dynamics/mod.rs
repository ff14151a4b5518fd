//! Dynamics of `x^2 + c`: overflow-safe orbits, truncated local heights,
//! escape constants, critical-orbit classification and normal forms.

mod chebyshev;
mod escape;
mod map;
mod normalize;
mod pcf;
mod rescaled;

pub use chebyshev::chebyshev;
pub use escape::{coarse_distortion_bound, escape_radius, EscapeConstants};
pub(crate) use map::scale_by_pow2;
pub use map::{ComplexPoint, QuadraticMap};
pub use normalize::{normalize_quadratic, Affine, Normalization};
pub use pcf::{classify_critical_orbit, classify_integer, CriticalOrbit, PCF_ITERATION_CAP};
pub use rescaled::RescaledComplex;
