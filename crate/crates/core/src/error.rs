//! Error type shared by every module in the crate.

use num_complex::Complex64;
use std::fmt;

/// Everything that can go wrong while evaluating a function in this crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A Gamma-function argument (or an equivalent parameter) hit a pole.
    Pole { location: Complex64 },
    /// The request is outside the guaranteed evaluation domain.
    Domain { message: String },
    /// The argument lies on the branch cut (-inf, 1].
    Cut { z: Complex64 },
    /// The hypergeometric series did not meet the stopping rule within `max_terms`.
    NoConvergence { terms_used: usize, last_term: f64 },
    /// The quadrature engine exhausted its budget before reaching the tolerance.
    QuadratureFailure {
        evaluations: usize,
        err_estimate: f64,
    },
    /// A declared endpoint exponent violates the integrability condition.
    NonIntegrable { exponent: Complex64 },
    /// An identity name that is not in the verifier registry.
    UnknownIdentity { name: String },
    /// A NaN or infinite component was passed where a finite value is required.
    NonFinite { what: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(message: impl Into<String>) -> Self {
        Error::Domain {
            message: message.into(),
        }
    }

    /// Stable machine-readable tag, used by the CLI error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Pole { .. } => "PoleError",
            Error::Domain { .. } => "DomainError",
            Error::Cut { .. } => "CutError",
            Error::NoConvergence { .. } => "NoConvergence",
            Error::QuadratureFailure { .. } => "QuadratureFailure",
            Error::NonIntegrable { .. } => "NonIntegrable",
            Error::UnknownIdentity { .. } => "UnknownIdentity",
            Error::NonFinite { .. } => "NonFinite",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Pole { location } => write!(f, "pole at {location}"),
            Error::Domain { message } => write!(f, "{message}"),
            Error::Cut { z } => write!(f, "argument {z} lies on the cut (-inf, 1]"),
            Error::NoConvergence {
                terms_used,
                last_term,
            } => write!(
                f,
                "series did not converge after {terms_used} terms (last term {last_term:.3e})"
            ),
            Error::QuadratureFailure {
                evaluations,
                err_estimate,
            } => write!(
                f,
                "quadrature failed to converge ({evaluations} evaluations, err ~ {err_estimate:.3e})"
            ),
            Error::NonIntegrable { exponent } => {
                write!(f, "declared endpoint exponent {exponent} is not integrable")
            }
            Error::UnknownIdentity { name } => write!(f, "unknown identity '{name}'"),
            Error::NonFinite { what } => write!(f, "non-finite value in {what}"),
        }
    }
}

impl std::error::Error for Error {}
