//! Complex-scalar primitives shared by every other module.

use num_complex::Complex64;

use crate::{Error, InitialPoint, Result};

pub type ComplexValue = Complex64;

/// Principal power `w^α = exp(α·(ln|w| + i·Arg w))`, `Arg w ∈ (−π, π)`.
///
/// Undefined at the origin and on the negative real axis.
pub fn principal_power(w: Complex64, alpha: f64) -> Result<Complex64> {
    if !(w.re.is_finite() && w.im.is_finite() && alpha.is_finite()) {
        return Err(Error::domain(
            "principal power",
            format!("non-finite input w = {w}, alpha = {alpha}"),
        ));
    }
    if w.im == 0.0 && w.re <= 0.0 {
        return Err(Error::domain(
            "principal power",
            format!("w = {w} lies on the branch cut (−∞, 0]"),
        ));
    }
    if alpha == 1.0 {
        return Ok(w);
    }
    let modulus = w.norm().powf(alpha);
    let angle = alpha * w.im.atan2(w.re);
    Ok(Complex64::new(modulus * angle.cos(), modulus * angle.sin()))
}

/// The Möbius map `g_c(z) = (c + c̄z)/(1 − z)` of the disk onto the right
/// half-plane with `g_c(0) = c`.
pub fn mobius_g(initial: &InitialPoint, z: Complex64) -> Result<Complex64> {
    check_disk(z)?;
    let c = initial.c();
    Ok((c + c.conj() * z) / (1.0 - z))
}

/// `C_n(c) = (n/Re c)·(|c|·√(2·Re c/n + 1) + Im c)`, the upper window
/// endpoint of the classical open-door region is `C_n(c̄)`.
pub fn c_n_constant(initial: &InitialPoint, n: u32) -> f64 {
    let n = f64::from(n);
    let c = initial.c();
    n / c.re * (initial.r() * (2.0 * c.re / n + 1.0).sqrt() + c.im)
}

pub(crate) fn check_disk(z: Complex64) -> Result<()> {
    // NaN fails the comparison and is rejected too.
    if z.norm_sqr() < 1.0 {
        Ok(())
    } else {
        Err(Error::OutsideDisk(z))
    }
}

/// `z^n` by repeated squaring.
pub(crate) fn pow_n(z: Complex64, n: u32) -> Complex64 {
    let mut base = z;
    let mut exp = n;
    let mut acc = Complex64::new(1.0, 0.0);
    while exp > 0 {
        if exp & 1 == 1 {
            acc *= base;
        }
        base *= base;
        exp >>= 1;
    }
    acc
}
