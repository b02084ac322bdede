//! Spectral quantities of max-times matrices.
//!
//! The spectral radius is the maximum cycle geometric mean of the weighted
//! digraph with an edge `u → v` whenever `a_{uv} > 0`. It is computed from
//! the diagonals of the max-plus powers of the entrywise logarithm, with
//! `-∞` standing for an absent edge.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::semiring::{MaxMatrix, MaxSemimodule, MaxVector, Scalar, Tolerance};

/// Spectral summary of a square matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralReport {
    pub radius: Scalar,
    /// `r_{e_i}(A)` for `i = 1..n`.
    pub local_radii: Vec<Scalar>,
    pub norm: Scalar,
    pub irreducible: bool,
}

pub fn analyze(a: &MaxMatrix) -> Result<SpectralReport> {
    Ok(SpectralReport {
        radius: spectral_radius(a)?,
        local_radii: local_radii(a)?,
        norm: norm(a),
        irreducible: is_irreducible(a)?,
    })
}

fn log_weights(a: &MaxMatrix) -> Vec<f64> {
    a.as_slice()
        .iter()
        .map(|&v| if v > 0.0 { v.ln() } else { f64::NEG_INFINITY })
        .collect()
}

fn max_plus_product(x: &[f64], y: &[f64], n: usize) -> Vec<f64> {
    let mut out = vec![f64::NEG_INFINITY; n * n];
    for i in 0..n {
        for k in 0..n {
            let a = x[i * n + k];
            if a == f64::NEG_INFINITY {
                continue;
            }
            for j in 0..n {
                let s = a + y[k * n + j];
                if s > out[i * n + j] {
                    out[i * n + j] = s;
                }
            }
        }
    }
    out
}

/// `r(A) = max_{1≤k≤n} max_i ((A^k)_{ii})^{1/k}`; zero for acyclic `A`.
///
/// Loops are read off the diagonal exactly. Longer walks only replace the
/// loop maximum when they beat it by more than log-domain rounding, so a
/// radius attained by a loop is returned without `exp(ln a)` error.
pub fn spectral_radius(a: &MaxMatrix) -> Result<Scalar> {
    let n = a.require_square("spectral_radius")?;
    let logs = log_weights(a);
    let loop_max = (0..n).map(|i| a.get(i, i)).fold(0.0f64, f64::max);
    let mut best = if loop_max > 0.0 {
        loop_max.ln()
    } else {
        f64::NEG_INFINITY
    };
    let mut from_walk = false;
    let mut power = logs.clone();
    for k in 2..=n {
        power = max_plus_product(&power, &logs, n);
        for i in 0..n {
            let mean = power[i * n + i] / k as f64;
            let beats = if best.is_finite() {
                mean > best + 1e-14 * best.abs().max(1.0)
            } else {
                mean > best
            };
            if beats {
                best = mean;
                from_walk = true;
            }
        }
    }
    Ok(if from_walk {
        Scalar::from_valid(best.exp())
    } else {
        Scalar::from_valid(loop_max)
    })
}

/// `‖A‖ = max_{ij} a_{ij}`.
pub fn norm(a: &MaxMatrix) -> Scalar {
    Scalar::from_valid(a.max_entry())
}

/// Whether `A ⊗ x = λ x` up to `tol`.
pub fn is_eigenpair(a: &MaxMatrix, x: &MaxVector, lambda: Scalar, tol: Tolerance) -> Result<bool> {
    if x.is_zero() {
        return Err(Error::validation("eigenvector candidate must be nonzero"));
    }
    let ax = a.otimes_vec(x)?;
    Ok(ax.approx_eq(&x.scale(lambda), tol))
}

/// Nodes `u` with a directed path (possibly empty) `u → … → target`.
fn reaching(a: &MaxMatrix, target: usize) -> Vec<usize> {
    let n = a.rows();
    let mut seen = vec![false; n];
    seen[target] = true;
    let mut queue = VecDeque::from([target]);
    while let Some(v) = queue.pop_front() {
        for (u, flag) in seen.iter_mut().enumerate() {
            if !*flag && a.get(u, v) > 0.0 {
                *flag = true;
                queue.push_back(u);
            }
        }
    }
    (0..n).filter(|&u| seen[u]).collect()
}

/// `r_{e_i}(A)` for every coordinate `i`.
///
/// `(A^k ⊗ e_i)_j` collects paths `j → … → i`, so the growth rate is set by
/// the best cycle among the nodes that can reach `i`.
pub fn local_radii(a: &MaxMatrix) -> Result<Vec<Scalar>> {
    let n = a.require_square("local_spectral_radius")?;
    (0..n)
        .map(|i| spectral_radius(&a.principal_submatrix(&reaching(a, i))))
        .collect()
}

/// `r_x(A) = max { r_{e_i}(A) : x_i ≠ 0 }`.
pub fn local_spectral_radius(a: &MaxMatrix, x: &MaxVector) -> Result<Scalar> {
    let n = a.require_square("local_spectral_radius")?;
    if x.dim() != n {
        return Err(Error::Dimension {
            op: "local_spectral_radius",
            left: a.shape(),
            right: (x.dim(), 1),
        });
    }
    if x.is_zero() {
        return Err(Error::validation(
            "local spectral radius needs a nonzero vector",
        ));
    }
    let mut best = Scalar::ZERO;
    for i in (0..n).filter(|&i| x.get(i) > 0.0) {
        best = best.oplus(spectral_radius(&a.principal_submatrix(&reaching(a, i)))?);
    }
    Ok(best)
}

/// Strong connectivity of the positive-entry digraph.
pub fn is_irreducible(a: &MaxMatrix) -> Result<bool> {
    let n = a.require_square("is_irreducible")?;
    if reaching(a, 0).len() != n {
        return Ok(false);
    }
    Ok(reaching(&a.transpose(), 0).len() == n)
}
