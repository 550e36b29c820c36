//! Geometry of the boundary curve `R(∂𝔻)`.
//!
//! Write `c = r·e^{it}` and `z = e^{iθ}`. With
//! `x = cot(θ/2)·cos t + sin t` the boundary splits into two branches, both
//! graphs over the real part `u`:
//!
//! ```text
//! upper (x > 0):  u = a(rx)^α,  v₊(x) =  b(rx)^α + (nα/2cos t)(x − 2 sin t + 1/x)
//! lower (y = −x): u = a(ry)^α,  v₋(y) = −b(ry)^α − (nα/2cos t)(y + 2 sin t + 1/y)
//! ```
//!
//! where `a = cos(πα/2)`, `b = sin(πα/2)`. `v₊` has its minimum and `v₋` its
//! maximum at the root `ξ(A, α)` of `x² + A·x^{1+α} − 1`, which gives the
//! widest horizontal strip inside the image; a cruder but explicit strip
//! follows from the bracket `ξ ≤ (1+A)^{−1/2}`. For `α < 1` the ratio
//! `v/u` along each branch is extremal at the positive roots `ξ±` of
//! `(1−α)x² ± 2αx·sin t − (1+α) = 0`, which yields the opening angles
//! `Θ±` of a sector inside the image.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use serde::Serialize;

use crate::{
    roots::{solve_xi, DEFAULT_TOL},
    Error, OpenDoorParams, Result,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    Upper,
    Lower,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::Upper => "upper",
            Branch::Lower => "lower",
        }
    }
}

/// A point `u + iv` of the boundary curve on one branch, with its branch
/// parameter (`x` for the upper branch, `y = −x` for the lower).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundaryPoint {
    pub branch: Branch,
    pub x: f64,
    pub u: f64,
    pub v: f64,
}

impl BoundaryPoint {
    pub fn w(&self) -> Complex64 {
        Complex64::new(self.u, self.v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StripKind {
    /// Bounded by the actual extrema of the boundary branches.
    Exact,
    /// Bounded by the explicit estimate using `ξ ≤ (1+A)^{−1/2}`.
    Certified,
}

/// The horizontal strip `lower < Im w < upper`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StripBounds {
    pub lower: f64,
    pub upper: f64,
    pub kind: StripKind,
}

impl StripBounds {
    pub fn contains_im(&self, im: f64) -> bool {
        self.lower < im && im < self.upper
    }

    pub fn center(&self) -> f64 {
        0.5 * (self.lower + self.upper)
    }

    pub fn half_width(&self) -> f64 {
        0.5 * (self.upper - self.lower)
    }
}

/// Opening angles of the sector `−Θ₋ < arg w < Θ₊` inside the image.
///
/// `t_plus = tan Θ₊` is the minimum of `v₊/u₊` (attained at `ξ₊`) and
/// `t_minus = −tan Θ₋` the maximum of `v₋/u₋` (attained at `ξ₋`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SectorAngles {
    pub theta_plus: f64,
    pub theta_minus: f64,
    pub xi_plus: f64,
    pub xi_minus: f64,
    pub t_plus: f64,
    pub t_minus: f64,
}

/// Branch parameter `x = cot(θ/2)·cos t + sin t` of the boundary point
/// `R(e^{iθ})`.
pub fn theta_to_x(theta: f64, t: f64) -> Result<f64> {
    if !(theta > 0.0 && theta < 2.0 * PI) {
        return Err(Error::domain(
            "theta",
            format!("expected 0 < theta < 2π, got {theta}"),
        ));
    }
    let half = 0.5 * theta;
    Ok(half.cos() / half.sin() * t.cos() + t.sin())
}

pub fn upper_branch(params: &OpenDoorParams, x: f64) -> Result<BoundaryPoint> {
    check_parameter(x)?;
    let (u, power) = real_part_and_power(params, x);
    let v = params.b() * power
        + pole_coefficient(params) * (x - 2.0 * params.initial().t().sin() + x.recip());
    Ok(BoundaryPoint {
        branch: Branch::Upper,
        x,
        u,
        v,
    })
}

pub fn lower_branch(params: &OpenDoorParams, y: f64) -> Result<BoundaryPoint> {
    check_parameter(y)?;
    let (u, power) = real_part_and_power(params, y);
    let v = -params.b() * power
        - pole_coefficient(params) * (y + 2.0 * params.initial().t().sin() + y.recip());
    Ok(BoundaryPoint {
        branch: Branch::Lower,
        x: y,
        u,
        v,
    })
}

/// The boundary point `R(e^{iθ})`; `θ` must avoid the two angles where the
/// curve escapes to infinity (`θ = 0` and `x(θ) = 0`).
pub fn boundary_point(params: &OpenDoorParams, theta: f64) -> Result<BoundaryPoint> {
    let x = theta_to_x(theta, params.initial().t())?;
    if x > 0.0 {
        upper_branch(params, x)
    } else {
        lower_branch(params, -x)
    }
}

/// Real part `a(rξ)^α` of the boundary at the parameter `ξ(A, α)` where
/// both branches reach their vertical extremes.
pub fn u_cap(params: &OpenDoorParams) -> Result<f64> {
    let xi = solve_xi(params.root_coeff(), params.alpha(), DEFAULT_TOL)?.xi;
    Ok(real_part_and_power(params, xi).0)
}

/// `U(x) = (n/2cos t)·((α−1)x + (α+1)/x) − nα·tan t`, which equals `v₊(ξ)`
/// at the root `x = ξ(A, α)`.
pub fn u_form(params: &OpenDoorParams, x: f64) -> f64 {
    let (alpha, n, t) = (params.alpha(), params.n_f64(), params.initial().t());
    n / (2.0 * t.cos()) * ((alpha - 1.0) * x + (alpha + 1.0) / x) - n * alpha * t.tan()
}

/// The exact strip `max v₋ < Im w < min v₊`.
///
/// Both extremes come from the closed form `U(ξ)`; they are cross-checked
/// against direct branch evaluation at `ξ`.
pub fn v_extrema(params: &OpenDoorParams) -> Result<StripBounds> {
    let xi = solve_xi(params.root_coeff(), params.alpha(), DEFAULT_TOL)?.xi;
    let shift = params.n_f64() * params.alpha() * params.initial().t().tan();
    let upper = u_form(params, xi);
    // U(ξ) + nα·tan t is the symmetric part; the lower extreme mirrors it.
    let lower = -(upper + shift) - shift;

    for (what, closed, direct) in [
        ("min v₊", upper, upper_branch(params, xi)?.v),
        ("max v₋", lower, lower_branch(params, xi)?.v),
    ] {
        if (closed - direct).abs() > 1e-9 * closed.abs().max(1.0) {
            return Err(Error::Inconsistent {
                what,
                first: closed,
                second: direct,
            });
        }
    }
    Ok(StripBounds {
        lower,
        upper,
        kind: StripKind::Exact,
    })
}

/// The explicit strip
/// `|Im w + nα·tan t| < (n/2cos t)·((α−1)/√(1+A) + (α+1)·√(1+A))`.
pub fn certified_strip(params: &OpenDoorParams) -> StripBounds {
    let (alpha, n, t) = (params.alpha(), params.n_f64(), params.initial().t());
    let root = (1.0 + params.root_coeff()).sqrt();
    let half_width = n / (2.0 * t.cos()) * ((alpha - 1.0) / root + (alpha + 1.0) * root);
    let center = -n * alpha * t.tan();
    StripBounds {
        lower: center - half_width,
        upper: center + half_width,
        kind: StripKind::Certified,
    }
}

/// Angles `Θ±` of the sector `−Θ₋ < arg w < Θ₊` contained in the image.
/// Only defined for `α < 1`.
pub fn sector_angles(params: &OpenDoorParams) -> Result<SectorAngles> {
    let alpha = params.alpha();
    if alpha >= 1.0 {
        return Err(Error::domain(
            "sector angles",
            "defined only for alpha < 1 (at alpha = 1 the boundary lies on the imaginary axis)",
        ));
    }
    let sin_t = params.initial().t().sin();
    let xi_plus = quadratic_root(alpha, sin_t);
    let xi_minus = quadratic_root(alpha, -sin_t);
    let tan_plus = tangent_bound(params, xi_plus);
    let tan_minus = tangent_bound(params, xi_minus);
    Ok(SectorAngles {
        theta_plus: tan_plus.atan(),
        theta_minus: tan_minus.atan(),
        xi_plus,
        xi_minus,
        t_plus: tan_plus,
        t_minus: -tan_minus,
    })
}

/// Sector angle for `c = 1`, `n = 1`:
/// `πα/2 + arctan[α·cos(πα/2) / ((1−α)^{(1−α)/2}(1+α)^{(1+α)/2} + α·sin(πα/2))]`.
pub fn mocanu_theta(alpha: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::domain(
            "alpha",
            format!("expected 0 < alpha < 1, got {alpha}"),
        ));
    }
    let half = FRAC_PI_2 * alpha;
    let denom = (1.0 - alpha).powf(0.5 * (1.0 - alpha)) * (1.0 + alpha).powf(0.5 * (1.0 + alpha))
        + alpha * half.sin();
    Ok(half + (alpha * half.cos() / denom).atan())
}

/// Both branches sampled log-uniformly in the parameter over
/// `[x_min, x_max]`, upper branch first.
pub fn sample_branches(
    params: &OpenDoorParams,
    x_min: f64,
    x_max: f64,
    samples: usize,
) -> Result<Vec<BoundaryPoint>> {
    if !(x_min > 0.0 && x_min < x_max && x_max.is_finite()) || samples < 2 {
        return Err(Error::domain(
            "branch sampling",
            format!(
                "need 0 < x_min < x_max and samples >= 2, got [{x_min}, {x_max}] with {samples}"
            ),
        ));
    }
    let (lo, hi) = (x_min.ln(), x_max.ln());
    let step = (hi - lo) / (samples - 1) as f64;
    let xs: Vec<f64> = (0..samples)
        .map(|k| match k {
            0 => x_min,
            k if k == samples - 1 => x_max,
            k => (lo + step * k as f64).exp(),
        })
        .collect();
    let mut points = Vec::with_capacity(2 * samples);
    for &x in &xs {
        points.push(upper_branch(params, x)?);
    }
    for &x in &xs {
        points.push(lower_branch(params, x)?);
    }
    Ok(points)
}

fn check_parameter(x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(
            "branch parameter",
            format!("must be positive and finite, got {x}"),
        ))
    }
}

/// `(a(rx)^α, (rx)^α)`
fn real_part_and_power(params: &OpenDoorParams, x: f64) -> (f64, f64) {
    let power = (params.alpha() * (params.initial().r() * x).ln()).exp();
    (params.a() * power, power)
}

/// `nα / (2 cos t)`
fn pole_coefficient(params: &OpenDoorParams) -> f64 {
    params.n_f64() * params.alpha() / (2.0 * params.initial().t().cos())
}

/// Positive root of `(1−α)x² + 2αx·s − (1+α) = 0`, avoiding cancellation.
fn quadratic_root(alpha: f64, s: f64) -> f64 {
    let beta = alpha * s;
    let disc = (beta * beta + (1.0 - alpha) * (1.0 + alpha)).sqrt();
    if beta > 0.0 {
        (1.0 + alpha) / (beta + disc)
    } else {
        (disc - beta) / (1.0 - alpha)
    }
}

/// `tan(πα/2) + n(ξ − 1/ξ) / (2a·r^α·ξ^α·cos t)`
fn tangent_bound(params: &OpenDoorParams, xi: f64) -> f64 {
    let (alpha, n) = (params.alpha(), params.n_f64());
    let (r, t) = (params.initial().r(), params.initial().t());
    (FRAC_PI_2 * alpha).tan()
        + n * (xi - xi.recip()) / (2.0 * params.a() * r.powf(alpha) * xi.powf(alpha) * t.cos())
}
