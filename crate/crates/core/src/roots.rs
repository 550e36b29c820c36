//! The positive root `ξ(A, α)` of `F(x) = x² + A·x^{1+α} − 1`.
//!
//! `F` is strictly increasing on `x > 0` with `F(0) = −1`, so the root is
//! unique, and it is bracketed by
//!
//! ```text
//! (1 + A)^{−1/(1+α)} ≤ ξ(A, α) ≤ (1 + A)^{−1/2} < 1,
//! ```
//!
//! with equality at `α = 1` and strict inequalities otherwise. The solver
//! bisects on that bracket and finishes with Newton steps, which converge
//! monotonically because `F' > 0` and `F'' > 0` on `x > 0`.

use serde::Serialize;

use crate::{Error, Result};

/// Default residual tolerance of [`solve_xi`].
pub const DEFAULT_TOL: f64 = 1e-14;

const MAX_ITERATIONS: usize = 200;
const BISECTION_WIDTH: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RootResult {
    pub xi: f64,
    pub bracket_lo: f64,
    pub bracket_hi: f64,
    /// `F(xi)`; its magnitude is at most the requested tolerance.
    pub residual: f64,
    pub iterations: usize,
}

/// `F(x) = x² + A·x^{1+α} − 1` for `x ≥ 0`.
pub fn f_poly(x: f64, a: f64, alpha: f64) -> Result<f64> {
    if !(x >= 0.0) {
        return Err(Error::domain(
            "F(x)",
            format!("x must be non-negative, got {x}"),
        ));
    }
    check_coefficients(a, alpha)?;
    Ok(eval(x, a, alpha))
}

/// The certified bracket `((1+A)^{−1/(1+α)}, (1+A)^{−1/2})`.
pub fn bracket(a: f64, alpha: f64) -> Result<(f64, f64)> {
    check_coefficients(a, alpha)?;
    let base = 1.0 + a;
    let lo = base.powf(-1.0 / (1.0 + alpha));
    let hi = base.powf(-0.5);
    Ok((lo, hi))
}

/// Solves `F(x) = 0` for its unique positive root to `|F(ξ)| ≤ tol`.
pub fn solve_xi(a: f64, alpha: f64, tol: f64) -> Result<RootResult> {
    if !(tol > 0.0) {
        return Err(Error::domain(
            "tolerance",
            format!("must be positive, got {tol}"),
        ));
    }
    let (lo, hi) = bracket(a, alpha)?;

    let (mut left, mut right) = (lo, hi);
    let mut iterations = 0;
    while right - left > BISECTION_WIDTH && iterations < MAX_ITERATIONS {
        let mid = 0.5 * (left + right);
        if eval(mid, a, alpha) < 0.0 {
            left = mid;
        } else {
            right = mid;
        }
        iterations += 1;
    }

    let mut x = 0.5 * (left + right);
    let mut best = (eval(x, a, alpha).abs(), x);
    while iterations < MAX_ITERATIONS {
        let fx = eval(x, a, alpha);
        if fx.abs() < best.0 {
            best = (fx.abs(), x);
        }
        let step = fx / derivative(x, a, alpha);
        let next = (x - step).clamp(lo, hi);
        iterations += 1;
        if next == x || (step.abs() <= f64::EPSILON * x && fx.abs() <= tol) {
            break;
        }
        x = next;
    }
    let fx = eval(x, a, alpha);
    if fx.abs() < best.0 {
        best = (fx.abs(), x);
    }

    let xi = best.1;
    let residual = eval(xi, a, alpha);
    if residual.abs() > tol {
        return Err(Error::NoConvergence {
            tol,
            iterations,
            residual: residual.abs(),
        });
    }
    Ok(RootResult {
        xi,
        bracket_lo: lo,
        bracket_hi: hi,
        residual,
        iterations,
    })
}

fn check_coefficients(a: f64, alpha: f64) -> Result<()> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::domain(
            "A",
            format!("must be positive and finite, got {a}"),
        ));
    }
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::domain(
            "alpha",
            format!("expected 0 < alpha <= 1, got {alpha}"),
        ));
    }
    Ok(())
}

fn eval(x: f64, a: f64, alpha: f64) -> f64 {
    if x == 0.0 {
        return -1.0;
    }
    x * x + a * ((1.0 + alpha) * x.ln()).exp() - 1.0
}

fn derivative(x: f64, a: f64, alpha: f64) -> f64 {
    2.0 * x + (1.0 + alpha) * a * (alpha * x.ln()).exp()
}
