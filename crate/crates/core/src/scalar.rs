//! Weight scalars.
//!
//! Every solver and reduction is generic over [`Weight`]. Floating types compare
//! with an absolute tolerance; integer types compare exactly.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::str::FromStr;

use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// A per-direction arc weight.
pub trait Weight:
    Copy
    + Debug
    + Display
    + FromStr
    + PartialOrd
    + Signed
    + FromPrimitive
    + ToPrimitive
    + Sum
    + Send
    + Sync
    + 'static
{
    /// Absolute tolerance used by [`Weight::approx_eq`]. Zero for exact types.
    fn tolerance() -> Self;

    /// False for NaN and infinities.
    fn is_finite_weight(self) -> bool;

    fn approx_eq(self, other: Self) -> bool {
        (self - other).abs() <= Self::tolerance()
    }

    /// `self >= other` up to tolerance.
    fn approx_ge(self, other: Self) -> bool {
        self >= other - Self::tolerance()
    }

    /// `self > other` by more than the tolerance.
    fn definitely_gt(self, other: Self) -> bool {
        self > other + Self::tolerance()
    }

    /// Strictly positive beyond tolerance; only such arcs can improve a matching.
    fn is_profitable(self) -> bool {
        self.definitely_gt(Self::zero())
    }

    fn from_count(count: usize) -> Self {
        Self::from_usize(count).expect("count representable in weight type")
    }

    fn max_of(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }
}

impl Weight for f64 {
    fn tolerance() -> Self {
        1e-9
    }

    fn is_finite_weight(self) -> bool {
        self.is_finite()
    }
}

impl Weight for f32 {
    fn tolerance() -> Self {
        1e-4
    }

    fn is_finite_weight(self) -> bool {
        self.is_finite()
    }
}

impl Weight for i64 {
    fn tolerance() -> Self {
        0
    }

    fn is_finite_weight(self) -> bool {
        true
    }
}

impl Weight for i32 {
    fn tolerance() -> Self {
        0
    }

    fn is_finite_weight(self) -> bool {
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_tolerance() {
        assert!(1.0f64.approx_eq(1.0 + 1e-12));
        assert!(!1.0f64.approx_eq(1.0 + 1e-6));
        assert!(!1e-12f64.is_profitable());
        assert!(!f64::NAN.is_finite_weight());
    }

    #[test]
    fn integers_are_exact() {
        assert!(!3i64.approx_eq(4));
        assert!(3i64.approx_ge(3));
        assert!(1i64.is_profitable());
        assert!(!0i64.is_profitable());
        assert_eq!(i64::from_count(7), 7);
    }
}
