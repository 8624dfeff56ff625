//! Filtered exact arithmetic for polynomial sign tests.
//!
//! Predicates are written once, generically over [`Real`], and evaluated
//! twice at most: first with outward-rounded interval arithmetic, and only if
//! the resulting interval straddles zero, again with arbitrary precision
//! rationals built exactly from the `f64` inputs.

use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Arithmetic able to report the sign of a value, or `None` when the sign is
/// not certified.
pub(crate) trait Real:
    Clone + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn from_f64(x: f64) -> Self;
    fn zero() -> Self;
    fn sign(&self) -> Option<Ordering>;
}

/// Closed interval `[lo, hi]` that is guaranteed to contain the exact value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    #[inline]
    fn widened(lo: f64, hi: f64) -> Self {
        // Round-to-nearest is off by at most half an ulp, so one ulp outward
        // in each direction encloses the exact result.
        Interval { lo: lo.next_down(), hi: hi.next_up() }
    }
}

impl Add for Interval {
    type Output = Interval;
    #[inline]
    fn add(self, rhs: Interval) -> Interval {
        Interval::widened(self.lo + rhs.lo, self.hi + rhs.hi)
    }
}

impl Sub for Interval {
    type Output = Interval;
    #[inline]
    fn sub(self, rhs: Interval) -> Interval {
        Interval::widened(self.lo - rhs.hi, self.hi - rhs.lo)
    }
}

impl Mul for Interval {
    type Output = Interval;
    #[inline]
    fn mul(self, rhs: Interval) -> Interval {
        let a = self.lo * rhs.lo;
        let b = self.lo * rhs.hi;
        let c = self.hi * rhs.lo;
        let d = self.hi * rhs.hi;
        Interval::widened(a.min(b).min(c).min(d), a.max(b).max(c).max(d))
    }
}

impl Neg for Interval {
    type Output = Interval;
    #[inline]
    fn neg(self) -> Interval {
        Interval { lo: -self.hi, hi: -self.lo }
    }
}

impl Real for Interval {
    #[inline]
    fn from_f64(x: f64) -> Self {
        Interval { lo: x, hi: x }
    }

    #[inline]
    fn zero() -> Self {
        Interval { lo: 0.0, hi: 0.0 }
    }

    #[inline]
    fn sign(&self) -> Option<Ordering> {
        // NaN (from inf * 0 after overflow) fails every comparison below.
        if self.lo > 0.0 {
            Some(Ordering::Greater)
        } else if self.hi < 0.0 {
            Some(Ordering::Less)
        } else if self.lo == 0.0 && self.hi == 0.0 {
            Some(Ordering::Equal)
        } else {
            None
        }
    }
}

/// Exact rational, wrapped so the generic predicates can consume it by value.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Exact(BigRational);

impl Add for Exact {
    type Output = Exact;
    fn add(self, rhs: Exact) -> Exact {
        Exact(self.0 + rhs.0)
    }
}

impl Sub for Exact {
    type Output = Exact;
    fn sub(self, rhs: Exact) -> Exact {
        Exact(self.0 - rhs.0)
    }
}

impl Mul for Exact {
    type Output = Exact;
    fn mul(self, rhs: Exact) -> Exact {
        Exact(self.0 * rhs.0)
    }
}

impl Neg for Exact {
    type Output = Exact;
    fn neg(self) -> Exact {
        Exact(-self.0)
    }
}

impl Real for Exact {
    fn from_f64(x: f64) -> Self {
        // Finite inputs are enforced at the Point2 boundary.
        Exact(BigRational::from_float(x).expect("finite coordinate"))
    }

    fn zero() -> Self {
        Exact(BigRational::from_integer(BigInt::zero()))
    }

    fn sign(&self) -> Option<Ordering> {
        Some(if self.0.is_positive() {
            Ordering::Greater
        } else if self.0.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        })
    }
}
