use std::f64::consts::LN_2;

use num_complex::Complex64;

/// A complex number `unit * exp(logscale)` that never overflows.
///
/// While the value stays within modulus 2 the scale is zero and `unit` holds
/// the value itself. Beyond that the magnitude is moved into `logscale` and
/// `unit` is kept in the annulus `0.5 <= |unit| <= 2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RescaledComplex {
    unit: Complex64,
    logscale: f64,
}

impl RescaledComplex {
    pub const ZERO: Self = Self {
        unit: Complex64::new(0.0, 0.0),
        logscale: 0.0,
    };

    pub fn new(z: Complex64) -> Self {
        Self::from_parts(z, 0.0)
    }

    /// Normalizes `unit * exp(logscale)`. Panics on non-finite input.
    pub fn from_parts(unit: Complex64, logscale: f64) -> Self {
        assert!(
            unit.is_finite() && logscale.is_finite(),
            "rescaled value needs finite parts"
        );
        normalize(unit, logscale)
    }

    pub fn unit(&self) -> Complex64 {
        self.unit
    }

    pub fn logscale(&self) -> f64 {
        self.logscale
    }

    /// The represented value; infinite components once it leaves the float range.
    pub fn to_complex(&self) -> Complex64 {
        if self.logscale == 0.0 {
            self.unit
        } else {
            self.unit * self.logscale.exp()
        }
    }

    /// `ln |value|`, `-inf` at zero.
    pub fn ln_abs(&self) -> f64 {
        self.logscale + self.unit.norm().ln()
    }

    /// `ln (1 + |value|^2)^(1/2)` without forming `|value|^2`.
    pub fn ln_hypot1(&self) -> f64 {
        let n2 = self.unit.norm_sqr();
        if self.logscale == 0.0 {
            0.5 * n2.ln_1p()
        } else {
            self.logscale + 0.5 * ((-2.0 * self.logscale).exp() + n2).ln()
        }
    }

    /// One step of `z -> z^2 + c`.
    #[inline]
    pub fn square_add(self, c: Complex64) -> Self {
        let Complex64 { re, im } = self.unit;
        let sq = Complex64::new(re * re - im * im, 2.0 * re * im);
        if self.logscale == 0.0 {
            let z = sq + c;
            if z.norm_sqr() <= 4.0 {
                return Self {
                    unit: z,
                    logscale: 0.0,
                };
            }
            return normalize(z, 0.0);
        }
        let scale = 2.0 * self.logscale;
        // exp(-scale) underflows to zero long before c could matter.
        let z = if scale < 745.0 {
            sq + c * (-scale).exp()
        } else {
            sq
        };
        normalize(z, scale)
    }

    pub fn conj(&self) -> Self {
        Self {
            unit: self.unit.conj(),
            logscale: self.logscale,
        }
    }
}

impl From<Complex64> for RescaledComplex {
    fn from(z: Complex64) -> Self {
        Self::new(z)
    }
}

#[inline]
fn normalize(unit: Complex64, logscale: f64) -> RescaledComplex {
    let n2 = unit.norm_sqr();
    if logscale == 0.0 && n2 <= 4.0 {
        return RescaledComplex { unit, logscale };
    }
    if logscale > 0.0 && (0.25..=4.0).contains(&n2) {
        return RescaledComplex { unit, logscale };
    }
    if unit == Complex64::new(0.0, 0.0) {
        return RescaledComplex::ZERO;
    }
    let n = if n2.is_finite() && n2 > 0.0 {
        n2.sqrt()
    } else {
        // |unit|^2 over/underflowed; fall back to the scaled hypot.
        unit.norm()
    };
    let total = logscale + n.ln();
    if total <= LN_2 {
        let value = unit / n * total.exp();
        return RescaledComplex {
            unit: value,
            logscale: 0.0,
        };
    }
    RescaledComplex {
        unit: unit / n,
        logscale: total,
    }
}
