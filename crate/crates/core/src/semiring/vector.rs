use std::fmt;

use super::scalar::{check_entry, Scalar, Tolerance};
use super::MaxSemimodule;
use crate::error::{Error, Result};

/// A dense vector over the max-times semiring.
#[derive(Debug, Clone, PartialEq)]
pub struct MaxVector {
    entries: Vec<f64>,
}

impl MaxVector {
    pub fn new(entries: Vec<f64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::validation("vector must have at least one entry"));
        }
        for (i, &v) in entries.iter().enumerate() {
            check_entry(v, || format!("vector entry {}", i + 1))?;
        }
        Ok(MaxVector { entries })
    }

    pub(crate) fn from_valid(entries: Vec<f64>) -> Self {
        debug_assert!(!entries.is_empty());
        MaxVector { entries }
    }

    /// The all-ones vector `𝟙`.
    pub fn ones(n: usize) -> Result<Self> {
        Self::filled(n, 1.0)
    }

    /// The all-zeros vector `𝕆`.
    pub fn zeros(n: usize) -> Result<Self> {
        Self::filled(n, 0.0)
    }

    /// The standard vector `e_i` (0-based `i`).
    pub fn unit(n: usize, i: usize) -> Result<Self> {
        if i >= n {
            return Err(Error::validation(format!(
                "unit index {} out of range for dimension {n}",
                i + 1
            )));
        }
        let mut v = Self::filled(n, 0.0)?;
        v.entries[i] = 1.0;
        Ok(v)
    }

    fn filled(n: usize, value: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::validation("dimension must be positive"));
        }
        Ok(MaxVector {
            entries: vec![value; n],
        })
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize) -> f64 {
        self.entries[i]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.entries
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.entries
    }

    pub fn max(&self) -> f64 {
        self.entries.iter().copied().fold(0.0, f64::max)
    }

    pub fn min(&self) -> f64 {
        self.entries.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// Smallest index attaining the maximum entry.
    pub fn argmax(&self) -> usize {
        let mut best = 0;
        for (i, &v) in self.entries.iter().enumerate() {
            if v > self.entries[best] {
                best = i;
            }
        }
        best
    }

    /// Smallest index attaining the minimum entry.
    pub fn argmin(&self) -> usize {
        let mut best = 0;
        for (i, &v) in self.entries.iter().enumerate() {
            if v < self.entries[best] {
                best = i;
            }
        }
        best
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&v| v == 0.0)
    }

    /// Concatenates two vectors, `(x, y)`.
    pub fn concat(&self, other: &MaxVector) -> MaxVector {
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        MaxVector { entries }
    }

    fn check_same(&self, other: &MaxVector, op: &'static str) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::Dimension {
                op,
                left: (self.dim(), 1),
                right: (other.dim(), 1),
            });
        }
        Ok(())
    }
}

impl MaxSemimodule for MaxVector {
    fn shape(&self) -> (usize, usize) {
        (self.dim(), 1)
    }

    fn oplus(&self, other: &Self) -> Result<Self> {
        self.check_same(other, "oplus")?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.max(*b))
            .collect();
        Ok(MaxVector { entries })
    }

    fn scale(&self, alpha: Scalar) -> Self {
        let a = alpha.get();
        MaxVector {
            entries: self.entries.iter().map(|v| a * v).collect(),
        }
    }

    fn le(&self, other: &Self, tol: Tolerance) -> Result<bool> {
        self.check_same(other, "le")?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .all(|(a, b)| tol.leq(*a, *b)))
    }

    fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool {
        self.dim() == other.dim()
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| tol.approx_eq(*a, *b))
    }
}

impl fmt::Display for MaxVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// The vectors `𝟙`, `𝕆` and `e_1..e_n` of a given dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct StandardVectors {
    pub ones: MaxVector,
    pub zeros: MaxVector,
    pub units: Vec<MaxVector>,
}

pub fn standard_vectors(n: usize) -> Result<StandardVectors> {
    Ok(StandardVectors {
        ones: MaxVector::ones(n)?,
        zeros: MaxVector::zeros(n)?,
        units: (0..n)
            .map(|i| MaxVector::unit(n, i))
            .collect::<Result<_>>()?,
    })
}
