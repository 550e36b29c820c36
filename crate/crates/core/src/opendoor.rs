//! Evaluation of the generalized open-door function
//! `R(z) = g_c(z)^α + 2nα(Re c)·z / ((1 − z)(c + c̄z))`, its closed forms at
//! `α = 1`, the extremal function `q(z) = g_c(zⁿ)^α` and the transform
//! `q ↦ q + zq'/q` on truncated power series.

use num_complex::Complex64;

use crate::{
    complex::{check_disk, mobius_g, pow_n, principal_power},
    Error, InitialPoint, OpenDoorParams, Result,
};

pub const DEFAULT_SERIES_DEGREE: usize = 64;

/// Below this modulus `q(z)` is treated as a zero of `q`.
pub const POLE_THRESHOLD: f64 = 1e-13;

/// `R_{α,c,n}(z)` for `|z| < 1`.
pub fn eval_r(params: &OpenDoorParams, z: Complex64) -> Result<Complex64> {
    check_disk(z)?;
    let g = mobius_g(params.initial(), z)?;
    let power = principal_power(g, params.alpha())?;
    let c = params.initial().c();
    let scale = 2.0 * params.n_f64() * params.alpha() * c.re;
    Ok(power + scale * z / ((1.0 - z) * (c + c.conj() * z)))
}

/// `R_{1,c,n}` in partial fractions: `(2Re c + n)/(1 − z) − n/(1 + c̄z/c) − c̄`.
pub fn eval_r_alpha1_closed(initial: &InitialPoint, n: u32, z: Complex64) -> Result<Complex64> {
    check_disk(z)?;
    let c = initial.c();
    let n = f64::from(n);
    Ok((2.0 * c.re + n) / (1.0 - z) - n / (1.0 + c.conj() * z / c) - c.conj())
}

/// `(2Re c + n)/(1 + cz/c̄) − n/(1 − z) − c̄`, which is `R_{1,c,n}(−cz/c̄)`.
///
/// This is the form with the two poles placed at `z = −c̄/c` and `z = 1`
/// the other way round; it is a rotation of the open-door function, not the
/// function itself.
pub fn eval_r_alpha1_rotated(initial: &InitialPoint, n: u32, z: Complex64) -> Result<Complex64> {
    check_disk(z)?;
    let c = initial.c();
    let n = f64::from(n);
    Ok((2.0 * c.re + n) / (1.0 + c * z / c.conj()) - n / (1.0 - z) - c.conj())
}

/// The unimodular factor `−ω/ω̄` with `ω = (c/|c|)·√(2Re c/n + 1) + 1`.
pub fn kuroki_owa_rotation(initial: &InitialPoint, n: u32) -> Complex64 {
    let omega = kuroki_owa_omega(initial, n);
    -omega / omega.conj()
}

/// The rotated open-door function
///
/// ```text
/// R(z) = (2n|c|/Re c)·√(2Re c/n + 1)·(ζ − z)(1 − ζ̄z) / ((1 − ζ̄z)² − (ζ − z)²) − n·(Im c/Re c)·i
/// ```
///
/// with `ζ = 1 − 2/ω`. It satisfies `R(z) = R_{1,c,n}(−ωz/ω̄)`.
pub fn kuroki_owa_r(initial: &InitialPoint, n: u32, z: Complex64) -> Result<Complex64> {
    check_disk(z)?;
    let c = initial.c();
    let nf = f64::from(n);
    let root = (2.0 * c.re / nf + 1.0).sqrt();
    let omega = kuroki_owa_omega(initial, n);
    let zeta = 1.0 - 2.0 / omega;
    let left = zeta - z;
    let right = 1.0 - zeta.conj() * z;
    let scale = 2.0 * nf * initial.r() / c.re * root;
    let shift = Complex64::new(0.0, nf * c.im / c.re);
    Ok(scale * left * right / (right * right - left * left) - shift)
}

fn kuroki_owa_omega(initial: &InitialPoint, n: u32) -> Complex64 {
    let c = initial.c();
    let root = (2.0 * c.re / f64::from(n) + 1.0).sqrt();
    c / initial.r() * root + 1.0
}

/// The extremal function `q(z) = g_c(zⁿ)^α`.
pub fn extremal_q(params: &OpenDoorParams, z: Complex64) -> Result<Complex64> {
    check_disk(z)?;
    let g = mobius_g(params.initial(), pow_n(z, params.n()))?;
    principal_power(g, params.alpha())
}

/// `q(z) + zq'(z)/q(z)` for the extremal function, from `q` and its
/// closed-form derivative `q'(z) = α·q(z)·g_c'(zⁿ)/g_c(zⁿ)·n·z^{n−1}`.
///
/// Equals `R(zⁿ)`.
pub fn extremal_transform(params: &OpenDoorParams, z: Complex64) -> Result<Complex64> {
    check_disk(z)?;
    let n = params.n();
    let zeta = pow_n(z, n);
    let g = mobius_g(params.initial(), zeta)?;
    let q = principal_power(g, params.alpha())?;
    let g_prime = 2.0 * params.initial().c().re / ((1.0 - zeta) * (1.0 - zeta));
    let q_prime = params.alpha() * q / g * g_prime * f64::from(n) * pow_n(z, n - 1);
    Ok(q + z * q_prime / q)
}

/// A polynomial `c₀ + c₁z + ⋯ + c_M z^M` standing in for an analytic
/// function on the disk.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries {
    coefficients: Vec<Complex64>,
}

impl TruncatedSeries {
    pub fn new(coefficients: Vec<Complex64>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::domain("series", "needs at least one coefficient"));
        }
        if coefficients
            .iter()
            .any(|c| !(c.re.is_finite() && c.im.is_finite()))
        {
            return Err(Error::domain("series", "coefficients must be finite"));
        }
        Ok(Self { coefficients })
    }

    /// The constant function `q ≡ value`.
    pub fn constant(value: Complex64) -> Self {
        Self {
            coefficients: vec![value],
        }
    }

    /// Taylor coefficients of `g_c(z)^α` up to `z^degree`.
    ///
    /// `g_c(z) = c + 2Re c·(z + z² + ⋯)`, and the coefficients `h_k` of
    /// `h = g^α` follow from `g·h' = α·g'·h`:
    /// `k·g₀·h_k = Σ_{j=1..k} ((α+1)j − k)·g_j·h_{k−j}`.
    pub fn dominant(initial: &InitialPoint, alpha: f64, degree: usize) -> Result<Self> {
        let c = initial.c();
        let tail = 2.0 * c.re;
        let mut h = Vec::with_capacity(degree + 1);
        h.push(principal_power(c, alpha)?);
        for k in 1..=degree {
            let kf = k as f64;
            let sum: Complex64 = (1..=k)
                .map(|j| ((alpha + 1.0) * j as f64 - kf) * h[k - j])
                .sum();
            h.push(tail * sum / (kf * c));
        }
        Self::new(h)
    }

    /// Taylor coefficients of the extremal function `g_c(zⁿ)^α` up to
    /// `z^degree`.
    pub fn extremal(params: &OpenDoorParams, degree: usize) -> Result<Self> {
        let n = params.n() as usize;
        let dominant = Self::dominant(params.initial(), params.alpha(), degree / n)?;
        let mut coefficients = vec![Complex64::new(0.0, 0.0); degree + 1];
        for (k, &h) in dominant.coefficients.iter().enumerate() {
            coefficients[k * n] = h;
        }
        Self::new(coefficients)
    }

    pub fn coefficients(&self) -> &[Complex64] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Whether the series has the form `value + c_n zⁿ + ⋯`, i.e. belongs to
    /// the class `H[value, n]` up to `tol` in the constant term.
    pub fn is_in_class(&self, value: Complex64, n: u32, tol: f64) -> bool {
        let head_ok = (self.coefficients[0] - value).norm() <= tol;
        let gap_ok = self
            .coefficients
            .iter()
            .skip(1)
            .take(n as usize - 1)
            .all(|c| *c == Complex64::new(0.0, 0.0));
        head_ok && gap_ok
    }

    /// `(q(z), q'(z))` by Horner's scheme.
    pub fn eval_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        let mut iter = self.coefficients.iter().rev();
        let mut value = *iter.next().expect("series is never empty");
        let mut derivative = Complex64::new(0.0, 0.0);
        for &c in iter {
            derivative = derivative * z + value;
            value = value * z + c;
        }
        (value, derivative)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coefficients
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// Rough size of the discarded tail at radius `radius`:
    /// `|c_M|·radius^M / (1 − radius)`, with `c_M` the last nonzero
    /// coefficient.
    pub fn tail_bound(&self, radius: f64) -> f64 {
        let (m, last) = self
            .coefficients
            .iter()
            .enumerate()
            .rev()
            .find(|(_, c)| c.norm() > 0.0)
            .map(|(m, c)| (m, c.norm()))
            .unwrap_or((0, 0.0));
        if m == 0 {
            return 0.0;
        }
        last * radius.powi(m as i32) / (1.0 - radius)
    }
}

/// Smallest truncation degree `M` (at least [`DEFAULT_SERIES_DEGREE`]) with
/// `M·radius^M / (1 − radius)² < 1e−16`, enough for both `q` and `q'` of a
/// series with bounded coefficients at that radius.
pub fn degree_for_radius(radius: f64) -> usize {
    assert!(radius > 0.0 && radius < 1.0, "radius must lie in (0, 1)");
    let denom = (1.0 - radius) * (1.0 - radius);
    let mut m = DEFAULT_SERIES_DEGREE;
    while (m as f64) * radius.powi(m as i32) / denom >= 1e-16 {
        m += 16;
    }
    m
}

/// `q(z) + z·q'(z)/q(z)` for a truncated series.
pub fn logderiv_transform(q: &TruncatedSeries, z: Complex64) -> Result<Complex64> {
    check_disk(z)?;
    let (value, derivative) = q.eval_with_derivative(z);
    let modulus = value.norm();
    if !(modulus >= POLE_THRESHOLD) {
        return Err(Error::LogDerivativePole { z, modulus });
    }
    Ok(value + z * derivative / value)
}
