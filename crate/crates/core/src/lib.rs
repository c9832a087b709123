//! Exact verification of fusion-ring, character-table, coset and S-matrix
//! identities over cyclotomic fields.

// index loops mirror the subscripted formulas
#![allow(clippy::needless_range_loop)]

pub mod catalog;
pub mod chartab;
pub mod cosets;
pub mod exactnum;
pub mod fusion;
pub mod linalg;
pub mod premod;
pub mod report;
pub mod scalar;
pub mod schema;
pub mod suite;

pub use exactnum::{CycNum, Rational};
pub use fusion::{FusionRing, KElement, Subcategory};
pub use scalar::Scalar;

/// Exact elements of K(C) ⊗ Q(ζ_N).
pub type ExactKElement = KElement<CycNum>;
/// Floating-point elements of K(C) ⊗ C.
pub type NumericKElement = KElement<num::complex::Complex64>;
