use std::fmt;

use super::matrix::MaxMatrix;
use crate::error::{Error, Result};

/// A bijection on `{0, …, n-1}` (shown 1-based).
///
/// Its matrix `P` has `P[i][σ(i)] = 1`, so `P ⊗ A` takes row `σ(i)` of `A`
/// as its row `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    mapping: Vec<usize>,
}

impl Permutation {
    pub fn new(mapping: Vec<usize>) -> Result<Self> {
        if mapping.is_empty() {
            return Err(Error::validation("permutation must have positive size"));
        }
        let mut seen = vec![false; mapping.len()];
        for &m in &mapping {
            if m >= mapping.len() || seen[m] {
                return Err(Error::validation(format!(
                    "mapping {:?} is not a bijection on 1..{}",
                    mapping.iter().map(|m| m + 1).collect::<Vec<_>>(),
                    mapping.len()
                )));
            }
            seen[m] = true;
        }
        Ok(Permutation { mapping })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            mapping: (0..n).collect(),
        }
    }

    /// The transposition of `i` and `j` on `n` points.
    pub fn swap(n: usize, i: usize, j: usize) -> Result<Self> {
        if i >= n || j >= n {
            return Err(Error::validation("transposition index out of range"));
        }
        let mut mapping: Vec<usize> = (0..n).collect();
        mapping.swap(i, j);
        Ok(Permutation { mapping })
    }

    pub fn size(&self) -> usize {
        self.mapping.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.mapping[i]
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn is_identity(&self) -> bool {
        self.mapping.iter().enumerate().all(|(i, &m)| i == m)
    }

    pub fn inverse(&self) -> Self {
        let mut mapping = vec![0; self.size()];
        for (i, &m) in self.mapping.iter().enumerate() {
            mapping[m] = i;
        }
        Permutation { mapping }
    }

    /// The permutation whose matrix is `self.to_matrix() ⊗ other.to_matrix()`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.size() != other.size() {
            return Err(Error::Dimension {
                op: "compose",
                left: (self.size(), self.size()),
                right: (other.size(), other.size()),
            });
        }
        Ok(Permutation {
            mapping: self.mapping.iter().map(|&m| other.mapping[m]).collect(),
        })
    }

    pub fn to_matrix(&self) -> MaxMatrix {
        let n = self.size();
        let mut data = vec![0.0; n * n];
        for (i, &m) in self.mapping.iter().enumerate() {
            data[i * n + m] = 1.0;
        }
        MaxMatrix::from_valid(n, n, data)
    }

    /// All permutations of `n` points in lexicographic order of their mappings.
    pub fn all(n: usize) -> Lexicographic {
        Lexicographic {
            next: Some((0..n).collect()),
        }
    }
}

/// Matrix form of a permutation.
pub fn permutation_matrix(sigma: &Permutation) -> MaxMatrix {
    sigma.to_matrix()
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, m) in self.mapping.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", m + 1)?;
        }
        write!(f, "]")
    }
}

/// Iterator over permutations in lexicographic order.
#[derive(Debug, Clone)]
pub struct Lexicographic {
    next: Option<Vec<usize>>,
}

impl Iterator for Lexicographic {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { mapping: current })
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_swap_matrices() {
        assert_eq!(
            Permutation::identity(3).to_matrix(),
            MaxMatrix::identity(3).unwrap()
        );
        let p = Permutation::swap(3, 0, 1).unwrap().to_matrix();
        let expected =
            MaxMatrix::from_rows(&[[0.0, 1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0]]).unwrap();
        assert_eq!(p, expected);
    }

    #[test]
    fn composition_is_matrix_product() {
        for a in Permutation::all(4) {
            for b in Permutation::all(4).step_by(5) {
                let product = a.to_matrix().otimes(&b.to_matrix()).unwrap();
                assert_eq!(a.compose(&b).unwrap().to_matrix(), product);
            }
            assert!(a.compose(&a.inverse()).unwrap().is_identity());
        }
    }

    #[test]
    fn left_multiplication_permutes_rows() {
        let a = MaxMatrix::from_rows(&[[1.0, 0.0], [2.0, 0.5], [3.0, 0.25]]).unwrap();
        let sigma = Permutation::new(vec![2, 0, 1]).unwrap();
        let pa = sigma.to_matrix().otimes(&a).unwrap();
        for i in 0..3 {
            assert_eq!(pa.row(i), a.row(sigma.image(i)));
        }
    }

    #[test]
    fn enumeration_is_lexicographic_and_complete() {
        let all: Vec<_> = Permutation::all(4).collect();
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(Permutation::all(1).count(), 1);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
        assert!(Permutation::new(vec![]).is_err());
    }
}
