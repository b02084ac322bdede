//! Max-row, max-column and max-doubly stochastic matrices.
//!
//! `D` is max-row stochastic when `D ⊗ 𝟙 = 𝟙` (every row maximum is 1) and
//! max-column stochastic when `𝟙ᵀ ⊗ D = 𝟙ᵀ`. Both together make `D`
//! max-doubly stochastic (MDS).

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::semiring::{MaxMatrix, MaxVector, Permutation, Scalar, Tolerance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    Row,
    Column,
}

impl Axis {
    pub fn name(self) -> &'static str {
        match self {
            Axis::Row => "row",
            Axis::Column => "column",
        }
    }
}

/// A row or column whose maximum is not 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Violation {
    pub axis: Axis,
    /// 0-based row or column index.
    pub index: usize,
    pub max_value: Scalar,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StochasticClass {
    pub row: bool,
    pub column: bool,
    pub doubly: bool,
    pub violations: Vec<Violation>,
}

pub fn classify(d: &MaxMatrix, tol: Tolerance) -> Result<StochasticClass> {
    d.require_square("classify")?;
    let mut violations = Vec::new();
    for (axis, maxima) in [
        (Axis::Row, d.row_maxima()),
        (Axis::Column, d.column_maxima()),
    ] {
        for (index, m) in maxima.into_iter().enumerate() {
            if !tol.is_one(m) {
                violations.push(Violation {
                    axis,
                    index,
                    max_value: Scalar::from_valid(m),
                });
            }
        }
    }
    let row = !violations.iter().any(|v| v.axis == Axis::Row);
    let column = !violations.iter().any(|v| v.axis == Axis::Column);
    Ok(StochasticClass {
        row,
        column,
        doubly: row && column,
        violations,
    })
}

/// Shorthand for `classify(d, tol)?.doubly`.
pub fn is_mds(d: &MaxMatrix, tol: Tolerance) -> Result<bool> {
    Ok(classify(d, tol)?.doubly)
}

/// `tr(x) = max_i x_i`.
pub fn trace(x: &MaxVector) -> Scalar {
    Scalar::from_valid(x.max())
}

/// `tr(A ⊗ x) = tr(x)` for all `x`, checked on the columns: `tr(A ⊗ e_i)` is
/// the `i`-th column maximum.
pub fn is_trace_preserving(a: &MaxMatrix, tol: Tolerance) -> Result<bool> {
    a.require_square("is_trace_preserving")?;
    Ok(a.column_maxima().into_iter().all(|m| tol.is_one(m)))
}

/// `A ⊗ 𝟙 = 𝟙`.
pub fn is_unital_preserving(a: &MaxMatrix, tol: Tolerance) -> Result<bool> {
    let n = a.require_square("is_unital_preserving")?;
    let image = a.otimes_vec(&MaxVector::ones(n)?)?;
    Ok(image.as_slice().iter().all(|&v| tol.is_one(v)))
}

/// A random MDS matrix: a permutation backbone of ones, with every other
/// entry drawn from `[0, 1)` with probability `fill_density` (zero otherwise).
pub fn random_mds(n: usize, seed: u64, fill_density: f64) -> Result<MaxMatrix> {
    if n == 0 {
        return Err(Error::validation("dimension must be positive"));
    }
    if !(0.0..=1.0).contains(&fill_density) {
        return Err(Error::validation(format!(
            "fill density must lie in [0, 1], got {fill_density}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mapping: Vec<usize> = (0..n).collect();
    mapping.shuffle(&mut rng);
    let backbone = Permutation::new(mapping)?;
    let mut data = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            data[i * n + j] = if backbone.image(i) == j {
                1.0
            } else if rng.gen_bool(fill_density) {
                rng.gen_range(0.0..1.0)
            } else {
                0.0
            };
        }
    }
    MaxMatrix::new(n, n, data)
}
