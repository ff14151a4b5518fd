use num_complex::Complex64;

use super::escape::EscapeConstants;
use super::rescaled::RescaledComplex;

pub type ComplexPoint = Complex64;

/// The monic quadratic `x^2 + c` over the complex numbers.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadraticMap {
    c: Complex64,
}

impl QuadraticMap {
    pub fn new(c: Complex64) -> Self {
        assert!(c.is_finite(), "map parameter must be finite");
        Self { c }
    }

    pub fn real(c: f64) -> Self {
        Self::new(Complex64::new(c, 0.0))
    }

    pub fn c(&self) -> Complex64 {
        self.c
    }

    pub fn is_real(&self) -> bool {
        self.c.im == 0.0
    }

    pub fn apply(&self, x: Complex64) -> Complex64 {
        x * x + self.c
    }

    /// `phi^n(x)` in rescaled form; finite for every `n`.
    pub fn iterate(&self, x: ComplexPoint, n: u32) -> RescaledComplex {
        self.iterate_rescaled(RescaledComplex::new(x), n)
    }

    pub fn iterate_rescaled(&self, mut z: RescaledComplex, n: u32) -> RescaledComplex {
        for _ in 0..n {
            z = z.square_add(self.c);
        }
        z
    }

    /// `f_N(x) = 2^-N ln (1 + |phi^N(x)|^2)^(1/2)`.
    pub fn truncated_local_height(&self, x: ComplexPoint, depth: u32) -> f64 {
        self.truncated_local_height_rescaled(RescaledComplex::new(x), depth)
    }

    /// As [`truncated_local_height`](Self::truncated_local_height) for a
    /// starting point that may itself be outside the float range.
    pub fn truncated_local_height_rescaled(&self, x: RescaledComplex, depth: u32) -> f64 {
        scale_by_pow2(self.iterate_rescaled(x, depth).ln_hypot1(), depth)
    }

    pub fn escape_constants(&self) -> EscapeConstants {
        EscapeConstants::for_map(self)
    }
}

/// `v * 2^-depth`, exact for any depth the quadrature can use.
#[inline]
pub(crate) fn scale_by_pow2(v: f64, depth: u32) -> f64 {
    let mut v = v;
    let mut d = depth;
    while d > 1000 {
        v *= 2f64.powi(-1000);
        d -= 1000;
    }
    v * 2f64.powi(-(d as i32))
}
