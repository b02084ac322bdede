use std::fmt;

use super::permutation::Permutation;
use super::scalar::{check_entry, Scalar, Tolerance};
use super::vector::MaxVector;
use super::MaxSemimodule;
use crate::error::{Error, Result};

/// A dense row-major matrix over the max-times semiring.
///
/// Both dimensions are positive, except for the 0×0 matrix returned by
/// [`MaxMatrix::empty`], which exists only as the neutral element of
/// [`MaxMatrix::direct_sum`].
#[derive(Debug, Clone, PartialEq)]
pub struct MaxMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl MaxMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::validation("matrix dimensions must be positive"));
        }
        if data.len() != rows * cols {
            return Err(Error::validation(format!(
                "expected {} entries for a {rows}×{cols} matrix, got {}",
                rows * cols,
                data.len()
            )));
        }
        for (k, &v) in data.iter().enumerate() {
            check_entry(v, || format!("entry ({}, {})", k / cols + 1, k % cols + 1))?;
        }
        Ok(MaxMatrix { rows, cols, data })
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.as_ref().len());
        let mut data = Vec::with_capacity(r * c);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != c {
                return Err(Error::validation(format!(
                    "row {} has {} entries, expected {c}",
                    i + 1,
                    row.len()
                )));
            }
            data.extend_from_slice(row);
        }
        Self::new(r, c, data)
    }

    pub(crate) fn from_valid(rows: usize, cols: usize, data: Vec<f64>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        MaxMatrix { rows, cols, data }
    }

    /// The 0×0 matrix.
    pub fn empty() -> Self {
        MaxMatrix {
            rows: 0,
            cols: 0,
            data: Vec::new(),
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        Self::new(rows, cols, vec![0.0; rows * cols])
    }

    /// The all-ones matrix; `ones(m, 1)` is `𝟙_m` and `ones(1, n)` is `𝟙_nᵀ`.
    pub fn ones(rows: usize, cols: usize) -> Result<Self> {
        Self::new(rows, cols, vec![1.0; rows * cols])
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::zeros(n, n)?;
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> impl Iterator<Item = f64> + '_ {
        (0..self.rows).map(move |i| self.get(i, j))
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Returns a copy with entry `(i, j)` replaced.
    pub fn with_entry(&self, i: usize, j: usize, value: f64) -> Result<Self> {
        check_entry(value, || format!("entry ({}, {})", i + 1, j + 1))?;
        if i >= self.rows || j >= self.cols {
            return Err(Error::validation(format!(
                "entry ({}, {}) outside a {}×{} matrix",
                i + 1,
                j + 1,
                self.rows,
                self.cols
            )));
        }
        let mut m = self.clone();
        m.data[i * self.cols + j] = value;
        Ok(m)
    }

    pub(crate) fn require_square(&self, op: &'static str) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::Dimension {
                op,
                left: self.shape(),
                right: (self.cols, self.rows),
            })
        }
    }

    /// Max-times product: `(A ⊗ B)_{ij} = max_k a_{ik} b_{kj}`.
    pub fn otimes(&self, other: &MaxMatrix) -> Result<MaxMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension {
                op: "otimes",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut data = vec![0.0f64; self.rows * other.cols];
        for i in 0..self.rows {
            let out = &mut data[i * other.cols..(i + 1) * other.cols];
            for (k, &a) in self.row(i).iter().enumerate() {
                if a == 0.0 {
                    continue;
                }
                for (o, &b) in out.iter_mut().zip(other.row(k)) {
                    *o = o.max(a * b);
                }
            }
        }
        Ok(MaxMatrix::from_valid(self.rows, other.cols, data))
    }

    /// Matrix-vector product `A ⊗ x`.
    pub fn otimes_vec(&self, x: &MaxVector) -> Result<MaxVector> {
        if self.cols != x.dim() {
            return Err(Error::Dimension {
                op: "otimes",
                left: self.shape(),
                right: (x.dim(), 1),
            });
        }
        let entries = (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x.as_slice())
                    .fold(0.0f64, |acc, (a, b)| acc.max(a * b))
            })
            .collect();
        Ok(MaxVector::from_valid(entries))
    }

    /// Row-vector product `xᵀ ⊗ A`, returned as a column vector.
    pub fn vec_otimes(&self, x: &MaxVector) -> Result<MaxVector> {
        self.transpose()
            .otimes_vec(x)
            .map_err(|_| Error::Dimension {
                op: "otimes",
                left: (1, x.dim()),
                right: self.shape(),
            })
    }

    /// `A ⊗ A ⊗ … ⊗ A` (`k` factors); `k = 0` gives the identity.
    pub fn power(&self, k: usize) -> Result<MaxMatrix> {
        let n = self.require_square("power")?;
        let mut acc = MaxMatrix::identity(n)?;
        for _ in 0..k {
            acc = acc.otimes(self)?;
        }
        Ok(acc)
    }

    pub fn transpose(&self) -> MaxMatrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            data.extend(self.column(j));
        }
        MaxMatrix::from_valid(self.cols, self.rows, data)
    }

    /// Block-diagonal assembly `A ⊞ B`.
    pub fn direct_sum(&self, other: &MaxMatrix) -> MaxMatrix {
        let rows = self.rows + other.rows;
        let cols = self.cols + other.cols;
        let mut data = vec![0.0; rows * cols];
        for i in 0..self.rows {
            data[i * cols..i * cols + self.cols].copy_from_slice(self.row(i));
        }
        for i in 0..other.rows {
            let start = (self.rows + i) * cols + self.cols;
            data[start..start + other.cols].copy_from_slice(other.row(i));
        }
        MaxMatrix::from_valid(rows, cols, data)
    }

    /// `P_left ⊗ A ⊗ P_right`, computed by index relabelling.
    ///
    /// Row `i` of the result is row `left(i)` of `A`; column `right(b)` of
    /// the result is column `b` of `A`.
    pub fn permuted(&self, left: &Permutation, right: &Permutation) -> Result<MaxMatrix> {
        if left.size() != self.rows || right.size() != self.cols {
            return Err(Error::Dimension {
                op: "permuted",
                left: (left.size(), right.size()),
                right: self.shape(),
            });
        }
        let mut data = vec![0.0; self.data.len()];
        for i in 0..self.rows {
            let src = self.row(left.image(i));
            for (b, &v) in src.iter().enumerate() {
                data[i * self.cols + right.image(b)] = v;
            }
        }
        Ok(MaxMatrix::from_valid(self.rows, self.cols, data))
    }

    /// Principal submatrix on the given (sorted or unsorted) index set.
    pub fn principal_submatrix(&self, indices: &[usize]) -> MaxMatrix {
        let k = indices.len();
        let mut data = Vec::with_capacity(k * k);
        for &i in indices {
            for &j in indices {
                data.push(self.get(i, j));
            }
        }
        MaxMatrix::from_valid(k, k, data)
    }

    pub fn row_maxima(&self) -> Vec<f64> {
        (0..self.rows)
            .map(|i| self.row(i).iter().copied().fold(0.0, f64::max))
            .collect()
    }

    pub fn column_maxima(&self) -> Vec<f64> {
        let mut out = vec![0.0f64; self.cols];
        for i in 0..self.rows {
            for (o, &v) in out.iter_mut().zip(self.row(i)) {
                *o = o.max(v);
            }
        }
        out
    }

    pub fn max_entry(&self) -> f64 {
        self.data.iter().copied().fold(0.0, f64::max)
    }

    /// Checks that every entry is within `tol` of 0 or 1, returning the
    /// first offending entry otherwise.
    pub fn check_zero_one(&self, tol: Tolerance) -> Result<()> {
        for (k, &v) in self.data.iter().enumerate() {
            if !(tol.is_zero(v) || tol.is_one(v)) {
                return Err(Error::NotZeroOne {
                    row: k / self.cols,
                    col: k % self.cols,
                    value: v,
                });
            }
        }
        Ok(())
    }

    /// Rounds a (0,1)-matrix within `tol` to an exact 0/1 pattern.
    pub fn to_pattern(&self, tol: Tolerance) -> Result<Vec<bool>> {
        self.check_zero_one(tol)?;
        Ok(self.data.iter().map(|&v| tol.is_one(v)).collect())
    }

    fn check_same(&self, other: &MaxMatrix, op: &'static str) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::Dimension {
                op,
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(())
    }
}

impl MaxSemimodule for MaxMatrix {
    fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    fn oplus(&self, other: &Self) -> Result<Self> {
        self.check_same(other, "oplus")?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.max(*b))
            .collect();
        Ok(MaxMatrix::from_valid(self.rows, self.cols, data))
    }

    fn scale(&self, alpha: Scalar) -> Self {
        let a = alpha.get();
        MaxMatrix::from_valid(
            self.rows,
            self.cols,
            self.data.iter().map(|v| a * v).collect(),
        )
    }

    fn le(&self, other: &Self, tol: Tolerance) -> Result<bool> {
        self.check_same(other, "le")?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .all(|(a, b)| tol.leq(*a, *b)))
    }

    fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool {
        self.shape() == other.shape()
            && self
                .data
                .iter()
                .zip(&other.data)
                .all(|(a, b)| tol.approx_eq(*a, *b))
    }
}

impl fmt::Display for MaxMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| format!("{v}")).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}
