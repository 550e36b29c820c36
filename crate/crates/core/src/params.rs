use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use crate::{complex::principal_power, Error, Result};

/// The value `c = r·e^{it}` of the dominant at the origin, `Re c > 0`.
///
/// Modulus and argument are computed once here and read everywhere else.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InitialPoint {
    c: Complex64,
    r: f64,
    t: f64,
}

impl InitialPoint {
    pub fn new(c: Complex64) -> Result<Self> {
        if !(c.re.is_finite() && c.im.is_finite()) {
            return Err(Error::domain(
                "initial point",
                format!("c = {c} is not finite"),
            ));
        }
        if c.re <= 0.0 {
            return Err(Error::domain(
                "initial point",
                format!("Re c must be positive, got c = {c}"),
            ));
        }
        Ok(Self {
            c,
            r: c.norm(),
            t: c.im.atan2(c.re),
        })
    }

    pub fn c(&self) -> Complex64 {
        self.c
    }

    /// `|c|`
    pub fn r(&self) -> f64 {
        self.r
    }

    /// `arg c ∈ (−π/2, π/2)`
    pub fn t(&self) -> f64 {
        self.t
    }

    /// The mirrored point `c̄`.
    pub fn conj(&self) -> Self {
        Self {
            c: self.c.conj(),
            r: self.r,
            t: -self.t,
        }
    }
}

/// The triple `(α, c, n)` together with the derived constants
/// `a = cos(πα/2)`, `b = sin(πα/2)` and `A = (2/n)·r^α·b·cos t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OpenDoorParams {
    alpha: f64,
    initial: InitialPoint,
    n: u32,
    a: f64,
    b: f64,
    root_coeff: f64,
}

impl OpenDoorParams {
    pub fn new(alpha: f64, initial: InitialPoint, n: u32) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::domain(
                "alpha",
                format!("expected 0 < alpha <= 1, got {alpha}"),
            ));
        }
        if n == 0 {
            return Err(Error::domain("n", "expected a positive integer, got 0"));
        }
        let half_angle = FRAC_PI_2 * alpha;
        // cos(π/2) is 6e-17 in floating point; the right half-plane case needs a = 0.
        let (a, b) = if alpha == 1.0 {
            (0.0, 1.0)
        } else {
            (half_angle.cos(), half_angle.sin())
        };
        let root_coeff = 2.0 / f64::from(n) * initial.r().powf(alpha) * b * initial.t().cos();
        Ok(Self {
            alpha,
            initial,
            n,
            a,
            b,
            root_coeff,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn initial(&self) -> &InitialPoint {
        &self.initial
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn n_f64(&self) -> f64 {
        f64::from(self.n)
    }

    /// `cos(πα/2)`, exactly zero when `α = 1`.
    pub fn a(&self) -> f64 {
        self.a
    }

    /// `sin(πα/2)`
    pub fn b(&self) -> f64 {
        self.b
    }

    /// The coefficient `A` of `x² + A·x^{1+α} − 1 = 0`, whose positive root
    /// locates the extrema of the boundary branches.
    pub fn root_coeff(&self) -> f64 {
        self.root_coeff
    }

    /// `πα/2`, the half-angle of the sector `g_c^α` maps the disk onto.
    pub fn half_angle(&self) -> f64 {
        FRAC_PI_2 * self.alpha
    }

    /// `c^α = R(0)`.
    pub fn c_pow_alpha(&self) -> Complex64 {
        principal_power(self.initial.c(), self.alpha).expect("Re c > 0 keeps c off the branch cut")
    }
}
