//! Exact arithmetic in cyclotomic fields Q(ζ_N).
//!
//! Elements are stored in the power basis modulo Φ_N, so equality is a plain
//! coefficient comparison after lifting both sides to a common conductor.
//! Integrality is decided from the characteristic polynomial of the
//! multiplication map, which avoids factoring over number fields.

mod cyclotomic;
mod poly;

pub use cyclotomic::{euler_phi, CycNum, Rational};
pub use poly::{IntPoly, RatPoly};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor {from} does not divide {to}")]
    ConductorNotDivisible { from: u32, to: u32 },
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("conductor {conductor} needs {expected} coefficients, found {found}")]
    CoefficientLength { conductor: u32, expected: usize, found: usize },
    #[error("malformed number: {0}")]
    Malformed(String),
}
