//! Scalar domains that semirings operate over.

use std::cmp::Ordering;
use std::fmt::Debug;

/// A value type usable as a matrix entry.
///
/// `bit_eq` is the equality the explicit-null policy is defined against:
/// floating-point domains compare bit patterns (so `-0.0` is not the null
/// element `0.0`, and no epsilon is involved), integer and boolean domains
/// compare values. `total_order` gives a total order used to canonicalize
/// accumulation order when combining duplicate coordinates, which makes
/// construction permutation-invariant bit for bit.
pub trait Scalar: Copy + PartialEq + Debug + Send + Sync + 'static {
    fn bit_eq(self, other: Self) -> bool;
    fn total_order(self, other: Self) -> Ordering;
}

impl Scalar for f64 {
    fn bit_eq(self, other: Self) -> bool {
        self.to_bits() == other.to_bits()
    }
    fn total_order(self, other: Self) -> Ordering {
        self.total_cmp(&other)
    }
}

impl Scalar for i64 {
    fn bit_eq(self, other: Self) -> bool {
        self == other
    }
    fn total_order(self, other: Self) -> Ordering {
        self.cmp(&other)
    }
}

impl Scalar for bool {
    fn bit_eq(self, other: Self) -> bool {
        self == other
    }
    fn total_order(self, other: Self) -> Ordering {
        self.cmp(&other)
    }
}
