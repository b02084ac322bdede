use std::fmt;

use crate::error::{Error, Result};

/// Floating-point comparison policy.
///
/// Equality is hybrid: `|a - b| <= eps * max(1, a, b)`. Orderings are
/// absolute: `a <= b + eps`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    epsilon: f64,
}

impl Tolerance {
    pub const DEFAULT_EPSILON: f64 = 1e-9;

    pub fn new(epsilon: f64) -> Result<Self> {
        if !(epsilon.is_finite() && epsilon >= 0.0) {
            return Err(Error::validation(format!(
                "tolerance must be finite and nonnegative, got {epsilon}"
            )));
        }
        Ok(Tolerance { epsilon })
    }

    /// Zero tolerance: every comparison is exact.
    pub const fn exact() -> Self {
        Tolerance { epsilon: 0.0 }
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn approx_eq(&self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.epsilon * 1f64.max(a.abs()).max(b.abs())
    }

    pub fn leq(&self, a: f64, b: f64) -> bool {
        a <= b + self.epsilon
    }

    pub fn geq(&self, a: f64, b: f64) -> bool {
        a >= b - self.epsilon
    }

    pub fn is_zero(&self, a: f64) -> bool {
        a.abs() <= self.epsilon
    }

    pub fn is_one(&self, a: f64) -> bool {
        (a - 1.0).abs() <= self.epsilon
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            epsilon: Self::DEFAULT_EPSILON,
        }
    }
}

/// An element of the max-times semiring: a finite nonnegative real.
///
/// `a ⊕ b = max(a, b)` and `a ⊗ b = a·b`; `0` and `1` are the respective
/// identities.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Scalar(f64);

impl Scalar {
    pub const ZERO: Scalar = Scalar(0.0);
    pub const ONE: Scalar = Scalar(1.0);

    pub fn new(value: f64) -> Result<Self> {
        check_entry(value, || "scalar".to_string())?;
        Ok(Scalar(value))
    }

    pub fn get(self) -> f64 {
        self.0
    }

    pub fn oplus(self, other: Scalar) -> Scalar {
        Scalar(self.0.max(other.0))
    }

    pub fn otimes(self, other: Scalar) -> Scalar {
        Scalar(self.0 * other.0)
    }

    /// Builds a scalar from a value already known to satisfy the invariant.
    pub(crate) fn from_valid(value: f64) -> Scalar {
        debug_assert!(value.is_finite() && value >= 0.0);
        Scalar(value)
    }
}

impl From<Scalar> for f64 {
    fn from(s: Scalar) -> f64 {
        s.0
    }
}

impl TryFrom<f64> for Scalar {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Scalar::new(value)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub(crate) fn check_entry(value: f64, context: impl FnOnce() -> String) -> Result<()> {
    if value.is_finite() && value >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidValue {
            value,
            context: context(),
        })
    }
}
