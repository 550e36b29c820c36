use num_complex::Complex64;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter or argument lies outside the set where the operation is
    /// defined.
    #[error("{what}: {detail}")]
    Domain { what: &'static str, detail: String },

    /// An evaluation point is not in the open unit disk.
    #[error("z = {0} is not in the open unit disk")]
    OutsideDisk(Complex64),

    #[error("root solver stopped after {iterations} iterations with residual {residual:e} (tolerance {tol:e})")]
    NoConvergence {
        tol: f64,
        iterations: usize,
        residual: f64,
    },

    /// `q(z)` vanishes (numerically), so `zq'/q` has a pole.
    #[error("log-derivative pole at z = {z}: |q(z)| = {modulus:e}")]
    LogDerivativePole { z: Complex64, modulus: f64 },

    /// The query point is too close to the sampled boundary curve for the
    /// winding number to be trusted.
    #[error(
        "winding number indeterminate: w = {w} lies within {distance:e} of the boundary polyline"
    )]
    Indeterminate { w: Complex64, distance: f64 },

    /// Two closed forms for the same quantity disagree.
    #[error("closed forms disagree for {what}: {first} vs {second}")]
    Inconsistent {
        what: &'static str,
        first: f64,
        second: f64,
    },
}

impl Error {
    pub(crate) fn domain(what: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            what,
            detail: detail.into(),
        }
    }
}
