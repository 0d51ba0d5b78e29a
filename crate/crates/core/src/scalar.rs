//! Field scalars for the generic linear algebra.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, ToPrimitive};

/// A field element usable by [`crate::linalg`] and polynomial evaluation.
///
/// Exact types treat only zero as negligible; floating types use a relative
/// tolerance.
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> + FromPrimitive + Send + Sync {
    /// Whether elimination should treat the value as zero.
    fn is_negligible(&self) -> bool;

    /// Rough absolute size, used only to rank pivot candidates.
    fn magnitude(&self) -> f64;

    /// True when arithmetic is exact (no rounding).
    fn is_exact() -> bool;
}

impl Scalar for Ratio<BigInt> {
    fn is_negligible(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }

    fn magnitude(&self) -> f64 {
        self.to_f64().map_or(f64::INFINITY, f64::abs)
    }

    fn is_exact() -> bool {
        true
    }
}

impl Scalar for Ratio<i64> {
    fn is_negligible(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }

    fn magnitude(&self) -> f64 {
        (*self.numer() as f64 / *self.denom() as f64).abs()
    }

    fn is_exact() -> bool {
        true
    }
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn is_negligible(&self) -> bool {
                self.abs() <= <$t>::EPSILON * 64.0
            }

            fn magnitude(&self) -> f64 {
                self.abs() as f64
            }

            fn is_exact() -> bool {
                false
            }
        }
    };
}

float_scalar!(f32);
float_scalar!(f64);
