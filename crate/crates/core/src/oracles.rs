//! Slow, direct reference implementations used to cross-check the primary
//! routines. Nothing here calls into `spectral`, `stochastic`, `extreme` or
//! `majorization`; only the semiring containers are shared.

use crate::error::{Error, Result};
use crate::semiring::{MaxMatrix, MaxVector, Scalar, Tolerance};

/// Hard limits checked before any exponential search starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_dim: usize,
    pub max_candidates: usize,
}

impl OracleBudget {
    /// Exhaustive (0,1)-pattern search: `n ≤ 4`, i.e. at most 2^16 patterns.
    pub const PATTERNS: OracleBudget = OracleBudget {
        max_dim: 4,
        max_candidates: 1 << 16,
    };

    /// Simple-cycle enumeration: `n ≤ 6`.
    pub const CYCLES: OracleBudget = OracleBudget {
        max_dim: 6,
        max_candidates: 100_000,
    };

    /// Majorization witness search: `n ≤ 3`.
    pub const MAJORIZATION: OracleBudget = OracleBudget {
        max_dim: 3,
        max_candidates: 1 << 20,
    };

    fn check_dim(&self, what: &'static str, n: usize) -> Result<()> {
        if n > self.max_dim {
            return Err(Error::Capacity {
                what,
                requested: n,
                limit: self.max_dim,
            });
        }
        Ok(())
    }

    fn check_candidates(&self, what: &'static str, count: usize) -> Result<()> {
        if count > self.max_candidates {
            return Err(Error::Capacity {
                what,
                requested: count,
                limit: self.max_candidates,
            });
        }
        Ok(())
    }
}

/// Maximum geometric mean over every simple cycle `i_1 → … → i_k → i_1`
/// with distinct indices, enumerating each cycle from its smallest node.
pub fn brute_cycle_radius(a: &MaxMatrix, budget: OracleBudget) -> Result<Scalar> {
    if !a.is_square() {
        return Err(Error::validation("cycle oracle needs a square matrix"));
    }
    let n = a.rows();
    budget.check_dim("cycle oracle dimension", n)?;

    fn extend(
        a: &MaxMatrix,
        start: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        product: f64,
        best: &mut f64,
    ) {
        let last = *path.last().unwrap();
        let back = a.get(last, start);
        if back > 0.0 {
            let mean = (product * back).powf(1.0 / path.len() as f64);
            if mean > *best {
                *best = mean;
            }
        }
        for next in start + 1..a.rows() {
            let w = a.get(last, next);
            if w > 0.0 && !on_path[next] {
                on_path[next] = true;
                path.push(next);
                extend(a, start, path, on_path, product * w, best);
                path.pop();
                on_path[next] = false;
            }
        }
    }

    let mut best = 0.0f64;
    for start in 0..n {
        let mut on_path = vec![false; n];
        on_path[start] = true;
        extend(a, start, &mut vec![start], &mut on_path, 1.0, &mut best);
    }
    Scalar::new(best)
}

fn pattern_entry(n: usize, bits: u64, i: usize, j: usize) -> bool {
    bits >> (n * n - 1 - (i * n + j)) & 1 == 1
}

fn pattern_is_mds(n: usize, bits: u64) -> bool {
    (0..n).all(|i| (0..n).any(|j| pattern_entry(n, bits, i, j)))
        && (0..n).all(|j| (0..n).any(|i| pattern_entry(n, bits, i, j)))
}

/// Every MDS (0,1)-pattern in which at most one 1-entry can be lowered
/// below 1 without leaving `MDS_n`. Lowering to 0 is the strongest such
/// change, so that is the one tried. Sorted by row-major pattern.
pub fn brute_extreme_points(n: usize, budget: OracleBudget) -> Result<Vec<MaxMatrix>> {
    if n == 0 {
        return Err(Error::validation("dimension must be positive"));
    }
    budget.check_dim("extreme-point oracle dimension", n)?;
    let cells = n * n;
    budget.check_candidates("extreme-point oracle patterns", 1usize << cells)?;
    let mut out = Vec::new();
    for bits in 0u64..(1u64 << cells) {
        if !pattern_is_mds(n, bits) {
            continue;
        }
        let lowerable = (0..cells)
            .map(|k| 1u64 << (cells - 1 - k))
            .filter(|&mask| bits & mask != 0 && pattern_is_mds(n, bits & !mask))
            .count();
        if lowerable <= 1 {
            let data = (0..cells)
                .map(|k| {
                    if bits >> (cells - 1 - k) & 1 == 1 {
                        1.0
                    } else {
                        0.0
                    }
                })
                .collect();
            out.push(MaxMatrix::new(n, n, data)?);
        }
    }
    Ok(out)
}

/// Exhaustive search for an MDS `D` with `D ⊗ y = x`.
///
/// Entry `d_ij` is drawn from `{0, 1} ∪ {x_i / y_j : x_i ≤ y_j, y_j > 0}`.
/// Any solution `D` can be normalized into this set: each entry may be
/// lowered to the largest candidate below it without changing `(D ⊗ y)_i`
/// (the row maximum is attained at some `d_ij y_j = x_i`), and ones are
/// kept. Column stochasticity only depends on which entries equal 1, so
/// valid rows are grouped by their set of 1-columns before the rows are
/// combined.
pub fn brute_majorization_witness(
    x: &MaxVector,
    y: &MaxVector,
    budget: OracleBudget,
) -> Result<Option<MaxMatrix>> {
    if x.dim() != y.dim() {
        return Err(Error::Dimension {
            op: "brute_majorization_witness",
            left: (x.dim(), 1),
            right: (y.dim(), 1),
        });
    }
    let n = x.dim();
    budget.check_dim("majorization oracle dimension", n)?;
    let tol = Tolerance::default();

    let candidates: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            let xi = x.get(i);
            let mut c = vec![0.0, 1.0];
            for j in 0..n {
                let yj = y.get(j);
                if yj > 0.0 && xi <= yj {
                    c.push(xi / yj);
                }
            }
            c.sort_by(f64::total_cmp);
            c.dedup();
            c
        })
        .collect();
    let total = candidates.iter().try_fold(1usize, |acc, c| {
        acc.checked_mul(c.len().checked_pow(n as u32)?)
    });
    budget.check_candidates(
        "majorization oracle candidates",
        total.unwrap_or(usize::MAX),
    )?;

    // rows[i]: (mask of 1-columns, representative row) for every valid row i.
    let mut rows: Vec<Vec<(u32, Vec<f64>)>> = Vec::with_capacity(n);
    for (i, cand) in candidates.iter().enumerate() {
        let mut valid: Vec<(u32, Vec<f64>)> = Vec::new();
        let mut choice = vec![0usize; n];
        loop {
            let row: Vec<f64> = choice.iter().map(|&c| cand[c]).collect();
            let value = row
                .iter()
                .zip(y.as_slice())
                .fold(0.0f64, |acc, (d, yj)| acc.max(d * yj));
            let mask = row
                .iter()
                .enumerate()
                .filter(|(_, &d)| d == 1.0)
                .fold(0u32, |acc, (j, _)| acc | 1 << j);
            if mask != 0 && tol.approx_eq(value, x.get(i)) && !valid.iter().any(|(m, _)| *m == mask)
            {
                valid.push((mask, row));
            }
            let mut d = 0;
            loop {
                if d == n {
                    break;
                }
                choice[d] += 1;
                if choice[d] < cand.len() {
                    break;
                }
                choice[d] = 0;
                d += 1;
            }
            if d == n {
                break;
            }
        }
        if valid.is_empty() {
            return Ok(None);
        }
        rows.push(valid);
    }

    fn pick(
        rows: &[Vec<(u32, Vec<f64>)>],
        depth: usize,
        covered: u32,
        full: u32,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if depth == rows.len() {
            return covered == full;
        }
        for (k, (mask, _)) in rows[depth].iter().enumerate() {
            chosen.push(k);
            if pick(rows, depth + 1, covered | mask, full, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    let full = (1u32 << n) - 1;
    let mut chosen = Vec::with_capacity(n);
    if !pick(&rows, 0, 0, full, &mut chosen) {
        return Ok(None);
    }
    let data = chosen
        .iter()
        .enumerate()
        .flat_map(|(i, &k)| rows[i][k].1.iter().copied())
        .collect();
    Ok(Some(MaxMatrix::new(n, n, data)?))
}

/// `(‖A^K ⊗ x‖ / ‖x‖)^{1/K}` with `K = steps`, iterated in the log domain.
/// Dividing by `‖x‖` does not change the limit. Exactly zero once the
/// iterate vanishes.
pub fn iterative_local_radius(a: &MaxMatrix, x: &MaxVector, steps: usize) -> Result<Scalar> {
    if !a.is_square() || a.cols() != x.dim() {
        return Err(Error::validation(
            "iterative radius needs square A matching x",
        ));
    }
    if x.is_zero() {
        return Err(Error::validation("iterative radius needs a nonzero vector"));
    }
    if steps == 0 {
        return Err(Error::validation("steps must be positive"));
    }
    let n = a.rows();
    let ln = |v: f64| if v > 0.0 { v.ln() } else { f64::NEG_INFINITY };
    let mut current: Vec<f64> = x.as_slice().iter().map(|&v| ln(v)).collect();
    let mut log_norm = -x.max().ln();
    for _ in 0..steps {
        let next: Vec<f64> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| ln(a.get(i, j)) + current[j])
                    .fold(f64::NEG_INFINITY, f64::max)
            })
            .collect();
        let top = next.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        if top == f64::NEG_INFINITY {
            return Ok(Scalar::ZERO);
        }
        log_norm += top;
        current = next.into_iter().map(|v| v - top).collect();
    }
    Scalar::new((log_norm / steps as f64).exp())
}
