use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed};

/// An exact, signed integer type usable by the elimination kernel.
///
/// Implemented for every type that satisfies the bounds, so `i32`, `i64`,
/// `i128` and `num_bigint::BigInt` all qualify.
pub trait ExactScalar:
    Integer + Signed + Clone + Debug + Display + FromPrimitive + Send + Sync + 'static
{
    fn from_i64_exact(v: i64) -> Self {
        Self::from_i64(v).expect("scalar type cannot represent an i64 coordinate")
    }
}

impl<T> ExactScalar for T where
    T: Integer + Signed + Clone + Debug + Display + FromPrimitive + Send + Sync + 'static
{
}
