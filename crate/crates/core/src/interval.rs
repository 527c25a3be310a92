//! Closed subintervals of the standard unit interval `[0, 1]`.
//!
//! Every truth component in the engine is a [`UnitInterval`]. A crisp value
//! `x` is the degenerate interval `[x, x]`.

use std::fmt;

use crate::error::ValueError;
use crate::text::format_number;

/// A closed interval `[lo, hi]` with `0 <= lo <= hi <= 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitInterval {
    lo: f64,
    hi: f64,
}

impl UnitInterval {
    pub const ZERO: UnitInterval = UnitInterval { lo: 0.0, hi: 0.0 };
    pub const ONE: UnitInterval = UnitInterval { lo: 1.0, hi: 1.0 };
    pub const FULL: UnitInterval = UnitInterval { lo: 0.0, hi: 1.0 };

    pub fn new(lo: f64, hi: f64) -> Result<Self, ValueError> {
        if !(0.0..=1.0).contains(&lo) || !(0.0..=1.0).contains(&hi) || lo > hi {
            return Err(ValueError::OutOfRange { lo, hi });
        }
        Ok(UnitInterval { lo, hi })
    }

    pub fn scalar(x: f64) -> Result<Self, ValueError> {
        Self::new(x, x)
    }

    /// Builds an interval from endpoints that are known to lie in `[0, 1]` up
    /// to floating point rounding. Endpoints are clamped into range.
    pub(crate) fn clamped(lo: f64, hi: f64) -> Self {
        let lo = lo.clamp(0.0, 1.0);
        let hi = hi.clamp(0.0, 1.0);
        debug_assert!(lo <= hi, "inverted interval [{lo}, {hi}]");
        UnitInterval { lo, hi: hi.max(lo) }
    }

    #[inline]
    pub fn lo(&self) -> f64 {
        self.lo
    }

    #[inline]
    pub fn hi(&self) -> f64 {
        self.hi
    }

    #[inline]
    pub fn is_scalar(&self) -> bool {
        self.lo == self.hi
    }

    /// The crisp value, if the interval is degenerate.
    pub fn as_scalar(&self) -> Option<f64> {
        self.is_scalar().then_some(self.lo)
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    /// Applies a function that is nondecreasing in both arguments endpoint-wise.
    pub(crate) fn lift_monotone(self, other: Self, op: impl Fn(f64, f64) -> f64) -> Self {
        Self::clamped(op(self.lo, other.lo), op(self.hi, other.hi))
    }
}

impl Default for UnitInterval {
    fn default() -> Self {
        Self::ZERO
    }
}

impl TryFrom<f64> for UnitInterval {
    type Error = ValueError;

    fn try_from(x: f64) -> Result<Self, Self::Error> {
        Self::scalar(x)
    }
}

impl fmt::Display for UnitInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_scalar() {
            f.write_str(&format_number(self.lo))
        } else {
            write!(f, "{}..{}", format_number(self.lo), format_number(self.hi))
        }
    }
}

/// An interval `[lo, hi]` of non-negative reals, used for sums of components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitSum {
    pub lo: f64,
    pub hi: f64,
}

impl UnitSum {
    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }
}

impl fmt::Display for UnitSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            f.write_str(&format_number(self.lo))
        } else {
            write!(f, "{}..{}", format_number(self.lo), format_number(self.hi))
        }
    }
}
