//! The exact scalar abstraction shared by every table and polytope routine.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_traits::{FromPrimitive, Num, Signed};

use crate::error::{Error, Result};

/// An exact ordered field element.
///
/// Anything that behaves like `Ratio<_>` qualifies. Floating point types are
/// excluded by the `Ord` bound: the alternating sums computed here cancel
/// heavily and are only meaningful in exact arithmetic.
pub trait Scalar:
    Clone + Ord + Debug + Display + FromStr + Num + Signed + FromPrimitive + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Clone
        + Ord
        + Debug
        + Display
        + FromStr
        + Num
        + Signed
        + FromPrimitive
        + Send
        + Sync
        + 'static
{
}

/// Converts a small integer into the scalar type.
pub fn int<T: Scalar>(k: i64) -> T {
    T::from_i64(k).expect("scalar type cannot represent a small integer")
}

/// `k / d` as a scalar.
pub fn frac<T: Scalar>(k: i64, d: i64) -> T {
    int::<T>(k) / int::<T>(d)
}

/// `(-1)^k`
pub fn sign<T: Scalar>(k: usize) -> T {
    if k.is_multiple_of(2) {
        T::one()
    } else {
        -T::one()
    }
}

/// Renders a scalar as a reduced `p/q` string with a positive denominator.
/// Integers keep the explicit `/1` so every value has the same shape.
pub fn to_canonical_string<T: Scalar>(x: &T) -> String {
    let s = x.to_string();
    if s.contains('/') {
        s
    } else {
        format!("{s}/1")
    }
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_scalar<T: Scalar>(s: &str) -> Result<T> {
    let trimmed = s.trim();
    trimmed
        .parse::<T>()
        .map_err(|_| Error::Parse(format!("not an exact rational: {trimmed:?}")))
}
