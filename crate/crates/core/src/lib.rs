//! Generalized open-door functions.
//!
//! For an initial point `c` with positive real part, an exponent
//! `0 < α ≤ 1` and an order `n ≥ 1`, the generalized open-door function is
//!
//! ```text
//! R(z) = g_c(z)^α + n·α·z·g_c'(z)/g_c(z),     g_c(z) = (c + c̄z)/(1 − z).
//! ```
//!
//! If `q(0) = c^α` (with vanishing coefficients up to order `n`) and
//! `q + zq'/q` takes values in `R(𝔻)`, then `|arg q| < πα/2` on the disk.
//! This crate evaluates `R`, describes the boundary of `R(𝔻)`, gives
//! closed-form membership tests for the image and for the simpler regions
//! known to lie inside it, and ships a numeric harness that corroborates
//! the implication on concrete functions.
//!
//! ```
//! use num_complex::Complex64;
//! use opendoor::{InitialPoint, OpenDoorParams, boundary, regions};
//!
//! let params = OpenDoorParams::new(0.5, InitialPoint::new(Complex64::new(4.0, 3.0))?, 2)?;
//! let strip = boundary::certified_strip(&params);
//! assert!((strip.lower + 3.15651).abs() < 1e-4);
//! assert!(regions::in_image(&params, Complex64::new(-1.0, 7.0)));
//! # Ok::<(), opendoor::Error>(())
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod boundary;
pub mod complex;
mod error;
pub mod opendoor;
mod params;
pub mod regions;
pub mod roots;
pub mod verify;

pub use complex::{c_n_constant, mobius_g, principal_power, ComplexValue};
pub use error::{Error, Result};
pub use params::{InitialPoint, OpenDoorParams};
