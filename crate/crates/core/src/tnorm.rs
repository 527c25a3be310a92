//! Paired t-norm / t-conorm families lifted to unit intervals.
//!
//! Each [`NormFamily`] binds one t-norm to its dual t-conorm:
//!
//! | family           | t-norm              | t-conorm          |
//! |------------------|---------------------|-------------------|
//! | `MinMax`         | `min(x, y)`         | `max(x, y)`       |
//! | `ProductProbSum` | `x * y`             | `x + y - x * y`   |
//! | `Lukasiewicz`    | `max(0, x + y - 1)` | `min(x + y, 1)`   |
//!
//! All six operations are nondecreasing in each argument, so applying them to
//! lower endpoints and upper endpoints separately yields the exact image of
//! two intervals.

use std::fmt;
use std::str::FromStr;

use crate::interval::UnitInterval;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NormFamily {
    MinMax,
    ProductProbSum,
    Lukasiewicz,
}

impl NormFamily {
    pub const ALL: [NormFamily; 3] = [
        NormFamily::MinMax,
        NormFamily::ProductProbSum,
        NormFamily::Lukasiewicz,
    ];

    /// Scalar t-norm.
    pub fn t_norm_scalar(self, x: f64, y: f64) -> f64 {
        let raw = match self {
            NormFamily::MinMax => x.min(y),
            NormFamily::ProductProbSum => x * y,
            NormFamily::Lukasiewicz => (x + y - 1.0).max(0.0),
        };
        // rounding must not lift a t-norm above min(x, y)
        raw.min(x.min(y))
    }

    /// Scalar t-conorm.
    pub fn t_conorm_scalar(self, x: f64, y: f64) -> f64 {
        let raw = match self {
            NormFamily::MinMax => x.max(y),
            // x + y - xy, written so every rounding step stays monotone
            NormFamily::ProductProbSum => 1.0 - (1.0 - x) * (1.0 - y),
            NormFamily::Lukasiewicz => (x + y).min(1.0),
        };
        raw.max(x.max(y))
    }

    pub fn t_norm(self, x: UnitInterval, y: UnitInterval) -> UnitInterval {
        x.lift_monotone(y, |a, b| self.t_norm_scalar(a, b))
    }

    pub fn t_conorm(self, x: UnitInterval, y: UnitInterval) -> UnitInterval {
        x.lift_monotone(y, |a, b| self.t_conorm_scalar(a, b))
    }

    pub fn name(self) -> &'static str {
        match self {
            NormFamily::MinMax => "minmax",
            NormFamily::ProductProbSum => "product",
            NormFamily::Lukasiewicz => "lukasiewicz",
        }
    }
}

/// Standard negation `1 - x`, which reverses interval endpoints.
pub fn complement(x: UnitInterval) -> UnitInterval {
    UnitInterval::clamped(1.0 - x.hi(), 1.0 - x.lo())
}

impl fmt::Display for NormFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownFamily(pub String);

impl fmt::Display for UnknownFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown norm family `{}` (expected minmax, product or lukasiewicz)",
            self.0
        )
    }
}

impl std::error::Error for UnknownFamily {}

impl FromStr for NormFamily {
    type Err = UnknownFamily;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "minmax" => Ok(NormFamily::MinMax),
            "product" => Ok(NormFamily::ProductProbSum),
            "lukasiewicz" => Ok(NormFamily::Lukasiewicz),
            _ => Err(UnknownFamily(s.to_string())),
        }
    }
}
