//! Scalar abstraction shared by the exact and floating-point code paths.
//!
//! Everything that is plain linear algebra over the fusion tensor (ring
//! products, algebra-map checks, elimination, characteristic polynomials) is
//! written against [`Scalar`], so the same routine serves [`CycNum`],
//! [`BigRational`] and the `f64`/`Complex64` numeric cross-checks.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::complex::Complex;
use num::{BigRational, Signed, ToPrimitive, Zero};
use num::traits::One;

use crate::exactnum::CycNum;

/// A field element usable by the generic routines.
///
/// Exact implementors ignore the tolerance passed to [`Scalar::is_negligible`]
/// and answer with an exact zero test.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    /// Whether equality tests on this type are exact.
    const EXACT: bool;

    fn from_int(n: i64) -> Self;

    /// Absolute value of the complex embedding; used to choose pivots.
    fn magnitude(&self) -> f64;

    fn is_negligible(&self, tol: f64) -> bool;

    fn near(&self, other: &Self, tol: f64) -> bool {
        if Self::EXACT {
            self == other
        } else {
            (self.clone() - other.clone()).is_negligible(tol)
        }
    }
}

macro_rules! float_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            const EXACT: bool = false;
            fn from_int(n: i64) -> Self {
                n as $t
            }
            fn magnitude(&self) -> f64 {
                self.abs() as f64
            }
            fn is_negligible(&self, tol: f64) -> bool {
                (self.abs() as f64) <= tol
            }
        }

        impl Scalar for Complex<$t> {
            const EXACT: bool = false;
            fn from_int(n: i64) -> Self {
                Complex::new(n as $t, 0.0)
            }
            fn magnitude(&self) -> f64 {
                self.norm() as f64
            }
            fn is_negligible(&self, tol: f64) -> bool {
                (self.norm() as f64) <= tol
            }
        }
    )*};
}

float_scalar!(f32, f64);

impl Scalar for BigRational {
    const EXACT: bool = true;
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(n.into())
    }
    fn magnitude(&self) -> f64 {
        self.abs().to_f64().unwrap_or(f64::INFINITY)
    }
    fn is_negligible(&self, _tol: f64) -> bool {
        self.is_zero()
    }
}

impl Scalar for CycNum {
    const EXACT: bool = true;
    fn from_int(n: i64) -> Self {
        CycNum::from_int(n)
    }
    fn magnitude(&self) -> f64 {
        self.embed_complex().norm()
    }
    fn is_negligible(&self, _tol: f64) -> bool {
        self.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn near_is_exact_for_exact_types() {
        let a = CycNum::from_ratio(1, 3);
        let b = CycNum::from_ratio(1, 3) + CycNum::from_ratio(1, 1_000_000_000);
        assert!(!a.near(&b, 1.0));
        assert!(0.1f64.near(&(0.1 + 1e-12), 1e-9));
        assert!(!0.1f64.near(&0.2, 1e-9));
    }
}
