//! Max-extreme points of the max-doubly stochastic matrices.
//!
//! An MDS matrix is max-extreme exactly when it is a (0,1)-matrix with at
//! most one non-singleton 1-entry. Such matrices are `P₁ ⊗ E ⊗ P₂` where `E`
//! is a direct sum of all-ones columns `𝟙_m`, all-ones rows `𝟙_nᵀ` and at
//! most one leading hook block.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::semiring::{MaxMatrix, Permutation, Scalar, Tolerance};
use crate::stochastic::is_mds;

/// Largest `n` accepted by [`enumerate_extreme`].
pub const DEFAULT_ENUMERATION_BOUND: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EntryClass {
    /// Only nonzero entry of its row.
    RowSingleton,
    /// Only nonzero entry of its column.
    ColumnSingleton,
    BothSingleton,
    /// Shares both its row and its column with other 1-entries.
    NonSingleton,
}

/// Classifies every 1-entry of a (0,1)-matrix, keyed by 0-based position.
pub fn singleton_profile(
    e: &MaxMatrix,
    tol: Tolerance,
) -> Result<BTreeMap<(usize, usize), EntryClass>> {
    let pattern = Pattern::from_matrix(e, tol)?;
    let mut out = BTreeMap::new();
    for (i, j) in pattern.ones() {
        let (row_alone, col_alone) = (pattern.row_count[i] == 1, pattern.col_count[j] == 1);
        let class = match (row_alone, col_alone) {
            (true, true) => EntryClass::BothSingleton,
            (true, false) => EntryClass::RowSingleton,
            (false, true) => EntryClass::ColumnSingleton,
            (false, false) => EntryClass::NonSingleton,
        };
        out.insert((i, j), class);
    }
    Ok(out)
}

/// Support pattern of a (0,1)-matrix with its line counts.
struct Pattern {
    rows: usize,
    cols: usize,
    bits: Vec<bool>,
    row_count: Vec<usize>,
    col_count: Vec<usize>,
}

impl Pattern {
    fn from_matrix(e: &MaxMatrix, tol: Tolerance) -> Result<Self> {
        let bits = e.to_pattern(tol)?;
        let (rows, cols) = e.shape();
        let mut row_count = vec![0; rows];
        let mut col_count = vec![0; cols];
        for i in 0..rows {
            for j in 0..cols {
                if bits[i * cols + j] {
                    row_count[i] += 1;
                    col_count[j] += 1;
                }
            }
        }
        Ok(Pattern {
            rows,
            cols,
            bits,
            row_count,
            col_count,
        })
    }

    fn at(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.cols + j]
    }

    fn ones(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.rows * self.cols)
            .filter(|&k| self.bits[k])
            .map(|k| (k / self.cols, k % self.cols))
    }

    fn non_singletons(&self) -> Vec<(usize, usize)> {
        self.ones()
            .filter(|&(i, j)| self.row_count[i] > 1 && self.col_count[j] > 1)
            .collect()
    }
}

pub fn is_max_extreme(e: &MaxMatrix, tol: Tolerance) -> Result<bool> {
    e.require_square("is_max_extreme")?;
    if !is_mds(e, tol)? {
        return Ok(false);
    }
    match Pattern::from_matrix(e, tol) {
        Ok(p) => Ok(p.non_singletons().len() <= 1),
        Err(Error::NotZeroOne { .. }) => Ok(false),
        Err(err) => Err(err),
    }
}

/// A block of an extreme-point canonical form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockSpec {
    /// `𝟙_m`, an m×1 column of ones.
    Column(usize),
    /// `𝟙_nᵀ`, a 1×n row of ones.
    Row(usize),
    /// q×r matrix with all-ones first row and first column, zeros elsewhere.
    Hook { rows: usize, cols: usize },
}

impl BlockSpec {
    pub fn shape(self) -> (usize, usize) {
        match self {
            BlockSpec::Column(m) => (m, 1),
            BlockSpec::Row(n) => (1, n),
            BlockSpec::Hook { rows, cols } => (rows, cols),
        }
    }

    fn validate(self) -> Result<()> {
        match self {
            BlockSpec::Column(0) | BlockSpec::Row(0) => {
                Err(Error::validation("block sizes must be positive"))
            }
            BlockSpec::Hook { rows, cols } if rows < 2 || cols < 2 => Err(Error::validation(
                format!("hook block needs both sides > 1, got {rows}×{cols}"),
            )),
            _ => Ok(()),
        }
    }

    pub fn to_matrix(self) -> Result<MaxMatrix> {
        self.validate()?;
        match self {
            BlockSpec::Column(m) => MaxMatrix::ones(m, 1),
            BlockSpec::Row(n) => MaxMatrix::ones(1, n),
            BlockSpec::Hook { rows, cols } => {
                let mut data = vec![0.0; rows * cols];
                data[..cols].fill(1.0);
                for i in 0..rows {
                    data[i * cols] = 1.0;
                }
                MaxMatrix::new(rows, cols, data)
            }
        }
    }

    fn order_key(self) -> (u8, Reverse<usize>) {
        match self {
            BlockSpec::Hook { .. } => (0, Reverse(0)),
            BlockSpec::Column(m) => (1, Reverse(m)),
            BlockSpec::Row(n) => (2, Reverse(n)),
        }
    }
}

impl fmt::Display for BlockSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockSpec::Column(m) => write!(f, "Column({m})"),
            BlockSpec::Row(n) => write!(f, "Row({n})"),
            BlockSpec::Hook { rows, cols } => write!(f, "Hook({rows},{cols})"),
        }
    }
}

/// Direct sum of the realized blocks, in order.
pub fn realize(blocks: &[BlockSpec]) -> Result<MaxMatrix> {
    if blocks.is_empty() {
        return Err(Error::validation("block list must not be empty"));
    }
    if let Some(pos) = blocks
        .iter()
        .position(|b| matches!(b, BlockSpec::Hook { .. }))
    {
        if pos != 0 {
            return Err(Error::validation("a hook block must come first"));
        }
        if blocks[1..]
            .iter()
            .any(|b| matches!(b, BlockSpec::Hook { .. }))
        {
            return Err(Error::validation("at most one hook block is allowed"));
        }
    }
    blocks.iter().try_fold(MaxMatrix::empty(), |acc, b| {
        Ok(acc.direct_sum(&b.to_matrix()?))
    })
}

/// `P₁ ⊗ realize(blocks) ⊗ P₂`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtremeDecomposition {
    pub p_left: Permutation,
    pub blocks: Vec<BlockSpec>,
    pub p_right: Permutation,
}

impl ExtremeDecomposition {
    pub fn reconstruct(&self) -> Result<MaxMatrix> {
        let core = realize(&self.blocks)?;
        self.p_left
            .to_matrix()
            .otimes(&core)?
            .otimes(&self.p_right.to_matrix())
    }

    pub fn has_hook(&self) -> bool {
        self.blocks
            .iter()
            .any(|b| matches!(b, BlockSpec::Hook { .. }))
    }
}

/// Peels an extreme point into canonical blocks.
///
/// The non-singleton entry, if any, anchors a hook. The remaining entries
/// are taken lowest-index first: a row singleton gathers its whole column
/// into `Column(m)`, a column singleton gathers its whole row into
/// `Row(n)`, and a double singleton is `Column(1)`. Blocks are then
/// ordered hook first, columns by descending size, rows by descending size.
pub fn decompose_extreme(e: &MaxMatrix, tol: Tolerance) -> Result<ExtremeDecomposition> {
    let n = e.require_square("decompose_extreme")?;
    if !is_max_extreme(e, tol)? {
        return Err(Error::validation(
            "matrix is not a max-extreme point of MDS_n",
        ));
    }
    let p = Pattern::from_matrix(e, tol)?;
    let mut used_row = vec![false; n];
    let mut used_col = vec![false; n];
    let mut pieces: Vec<(BlockSpec, Vec<usize>, Vec<usize>)> = Vec::new();

    let mut take = |spec: BlockSpec,
                    rows: Vec<usize>,
                    cols: Vec<usize>,
                    used_row: &mut [bool],
                    used_col: &mut [bool]| {
        rows.iter().for_each(|&i| used_row[i] = true);
        cols.iter().for_each(|&j| used_col[j] = true);
        pieces.push((spec, rows, cols));
    };

    if let Some(&(i0, j0)) = p.non_singletons().first() {
        let rows: Vec<usize> = std::iter::once(i0)
            .chain((0..n).filter(|&i| i != i0 && p.at(i, j0)))
            .collect();
        let cols: Vec<usize> = std::iter::once(j0)
            .chain((0..n).filter(|&j| j != j0 && p.at(i0, j)))
            .collect();
        let spec = BlockSpec::Hook {
            rows: rows.len(),
            cols: cols.len(),
        };
        take(spec, rows, cols, &mut used_row, &mut used_col);
    }

    while let Some((i, j)) = p.ones().find(|&(i, j)| !used_row[i] && !used_col[j]) {
        let (piece_rows, piece_cols) = match (p.row_count[i], p.col_count[j]) {
            (1, _) => ((0..n).filter(|&r| p.at(r, j)).collect::<Vec<_>>(), vec![j]),
            (_, 1) => (vec![i], (0..n).filter(|&c| p.at(i, c)).collect()),
            _ => {
                return Err(Error::validation(format!(
                    "unexpected second non-singleton entry ({}, {})",
                    i + 1,
                    j + 1
                )))
            }
        };
        let spec = if piece_cols.len() == 1 {
            BlockSpec::Column(piece_rows.len())
        } else {
            BlockSpec::Row(piece_cols.len())
        };
        take(spec, piece_rows, piece_cols, &mut used_row, &mut used_col);
    }

    pieces.sort_by_key(|(spec, _, _)| spec.order_key());
    let row_order: Vec<usize> = pieces
        .iter()
        .flat_map(|(_, r, _)| r.iter().copied())
        .collect();
    let col_order: Vec<usize> = pieces
        .iter()
        .flat_map(|(_, _, c)| c.iter().copied())
        .collect();
    let p_left = Permutation::new(row_order)?.inverse();
    let p_right = Permutation::new(col_order)?;
    Ok(ExtremeDecomposition {
        p_left,
        blocks: pieces.into_iter().map(|(spec, _, _)| spec).collect(),
        p_right,
    })
}

/// Every canonical block list of total size n×n.
///
/// Row blocks start at size 2 since `Row(1)` and `Column(1)` coincide.
pub fn canonical_block_lists(n: usize) -> Vec<Vec<BlockSpec>> {
    let mut out = Vec::new();
    let mut hooks = vec![None];
    for q in 2..=n {
        for r in 2..=n {
            hooks.push(Some((q, r)));
        }
    }
    for hook in hooks {
        let (hr, hc) = hook.unwrap_or((0, 0));
        let (rows_left, cols_left) = (n - hr, n - hc);
        for columns in partitions_up_to(rows_left, 1) {
            let (col_rows, k) = (columns.iter().sum::<usize>(), columns.len());
            if k > cols_left {
                continue;
            }
            let t = rows_left - col_rows;
            for row_blocks in partitions_up_to(cols_left - k, 2) {
                if row_blocks.len() != t || row_blocks.iter().sum::<usize>() != cols_left - k {
                    continue;
                }
                let mut blocks: Vec<BlockSpec> = hook
                    .map(|(rows, cols)| BlockSpec::Hook { rows, cols })
                    .into_iter()
                    .collect();
                blocks.extend(columns.iter().map(|&m| BlockSpec::Column(m)));
                blocks.extend(row_blocks.iter().map(|&s| BlockSpec::Row(s)));
                if !blocks.is_empty() {
                    out.push(blocks);
                }
            }
        }
    }
    out
}

/// Non-increasing sequences with parts `>= min_part` and sum `<= total`.
fn partitions_up_to(total: usize, min_part: usize) -> Vec<Vec<usize>> {
    fn go(
        remaining: usize,
        cap: usize,
        min_part: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        out.push(cur.clone());
        for part in (min_part..=cap.min(remaining)).rev() {
            cur.push(part);
            go(remaining - part, part, min_part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, total, min_part, &mut Vec::new(), &mut out);
    out
}

/// All max-extreme points of `MDS_n`, sorted by row-major 0/1 pattern.
pub fn enumerate_extreme(n: usize) -> Result<Vec<MaxMatrix>> {
    enumerate_extreme_bounded(n, DEFAULT_ENUMERATION_BOUND)
}

pub fn enumerate_extreme_bounded(n: usize, bound: usize) -> Result<Vec<MaxMatrix>> {
    if n == 0 {
        return Err(Error::validation("dimension must be positive"));
    }
    if n > bound || n * n > 64 {
        return Err(Error::Capacity {
            what: "extreme-point enumeration dimension",
            requested: n,
            limit: bound.min(8),
        });
    }
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let mut seen = BTreeSet::new();
    for blocks in canonical_block_lists(n) {
        let core = realize(&blocks)?;
        for left in &perms {
            for right in &perms {
                let mut bits = 0u64;
                for i in 0..n {
                    let src = core.row(left.image(i));
                    for (b, &v) in src.iter().enumerate() {
                        if v == 1.0 {
                            bits |= 1 << (n * n - 1 - (i * n + right.image(b)));
                        }
                    }
                }
                seen.insert(bits);
            }
        }
    }
    Ok(seen
        .into_iter()
        .map(|bits| matrix_from_bits(n, bits))
        .collect())
}

/// Row-major 0/1 pattern with entry (0,0) in the most significant bit.
pub(crate) fn matrix_from_bits(n: usize, bits: u64) -> MaxMatrix {
    let data = (0..n * n)
        .map(|k| {
            if bits >> (n * n - 1 - k) & 1 == 1 {
                1.0
            } else {
                0.0
            }
        })
        .collect();
    MaxMatrix::from_valid(n, n, data)
}

/// `E = α₁ D₁ ⊕ α₂ D₂` with `D₁, D₂ ∈ MDS_n` both different from `E`.
#[derive(Debug, Clone, PartialEq)]
pub struct NonExtremalityWitness {
    pub d1: MaxMatrix,
    pub d2: MaxMatrix,
    pub alpha1: Scalar,
    pub alpha2: Scalar,
}

impl NonExtremalityWitness {
    pub fn combine(&self) -> Result<MaxMatrix> {
        crate::semiring::max_convex_combination(
            &[(self.alpha1, &self.d1), (self.alpha2, &self.d2)],
            Tolerance::default(),
        )
    }
}

/// Splits a non-extreme MDS matrix into two other MDS matrices.
///
/// A fractional entry `e` gives `E = D₁ ⊕ e·D₂` with the entry set to 0 in
/// `D₁` and to 1 in `D₂`. Otherwise two non-singleton entries are lowered to
/// 0.5 one at a time (the first and the last in row-major order), giving `E = D₁ ⊕ D₂`. Returns `None` for extreme points.
pub fn non_extremality_witness(
    e: &MaxMatrix,
    tol: Tolerance,
) -> Result<Option<NonExtremalityWitness>> {
    e.require_square("non_extremality_witness")?;
    if !is_mds(e, tol)? {
        return Err(Error::validation("matrix is not max-doubly stochastic"));
    }
    let p = match Pattern::from_matrix(e, tol) {
        Ok(p) => p,
        Err(Error::NotZeroOne { row, col, value }) => {
            return Ok(Some(NonExtremalityWitness {
                d1: e.with_entry(row, col, 0.0)?,
                d2: e.with_entry(row, col, 1.0)?,
                alpha1: Scalar::ONE,
                alpha2: Scalar::new(value)?,
            }))
        }
        Err(err) => return Err(err),
    };
    match p.non_singletons()[..] {
        [(i1, j1), .., (i2, j2)] => Ok(Some(NonExtremalityWitness {
            d1: e.with_entry(i1, j1, 0.5)?,
            d2: e.with_entry(i2, j2, 0.5)?,
            alpha1: Scalar::ONE,
            alpha2: Scalar::ONE,
        })),
        _ => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::MaxSemimodule;

    fn m(rows: &[&[f64]]) -> MaxMatrix {
        MaxMatrix::from_rows(rows).unwrap()
    }

    fn hook2() -> MaxMatrix {
        m(&[&[1.0, 1.0], &[1.0, 0.0]])
    }

    pub(crate) fn p1_set() -> Vec<MaxMatrix> {
        vec![
            MaxMatrix::identity(3).unwrap(),
            m(&[&[1.0, 1.0, 0.0], &[1.0, 0.0, 0.0], &[0.0, 0.0, 1.0]]),
            m(&[&[0.0, 1.0, 1.0], &[1.0, 0.0, 0.0], &[1.0, 0.0, 0.0]]),
            m(&[&[1.0, 1.0, 1.0], &[1.0, 0.0, 0.0], &[1.0, 0.0, 0.0]]),
        ]
    }

    #[test]
    fn profile_examples() {
        let tol = Tolerance::default();
        let prof = singleton_profile(&MaxMatrix::identity(3).unwrap(), tol).unwrap();
        assert_eq!(prof.len(), 3);
        assert!(prof.values().all(|&c| c == EntryClass::BothSingleton));

        let prof = singleton_profile(&hook2(), tol).unwrap();
        assert_eq!(prof[&(0, 0)], EntryClass::NonSingleton);
        assert_eq!(prof[&(0, 1)], EntryClass::ColumnSingleton);
        assert_eq!(prof[&(1, 0)], EntryClass::RowSingleton);

        let prof = singleton_profile(&MaxMatrix::ones(2, 2).unwrap(), tol).unwrap();
        assert!(prof.values().all(|&c| c == EntryClass::NonSingleton));

        let err = singleton_profile(&m(&[&[1.0, 0.4]]), tol).unwrap_err();
        assert_eq!(
            err,
            Error::NotZeroOne {
                row: 0,
                col: 1,
                value: 0.4
            }
        );
    }

    #[test]
    fn extreme_examples() {
        let tol = Tolerance::default();
        for e in p1_set() {
            assert!(is_max_extreme(&e, tol).unwrap(), "{e}");
        }
        assert!(is_max_extreme(&hook2(), tol).unwrap());
        assert!(!is_max_extreme(&MaxMatrix::ones(2, 2).unwrap(), tol).unwrap());
        assert!(!is_max_extreme(&m(&[&[1.0, 0.5], &[0.0, 1.0]]), tol).unwrap());
        assert!(!is_max_extreme(&m(&[&[1.0, 0.0], &[1.0, 0.0]]), tol).unwrap());
        assert!(is_max_extreme(&m(&[&[1.0, 1.0]]), tol).is_err());
    }

    #[test]
    fn realize_examples() {
        assert_eq!(
            realize(&[BlockSpec::Column(1)]).unwrap(),
            MaxMatrix::identity(1).unwrap()
        );
        assert_eq!(
            realize(&[BlockSpec::Hook { rows: 2, cols: 2 }]).unwrap(),
            hook2()
        );
        assert_eq!(
            realize(&[BlockSpec::Column(2), BlockSpec::Row(2)]).unwrap(),
            m(&[&[1.0, 0.0, 0.0], &[1.0, 0.0, 0.0], &[0.0, 1.0, 1.0]])
        );
        let hook = BlockSpec::Hook { rows: 2, cols: 3 };
        assert!(realize(&[]).is_err());
        assert!(realize(&[BlockSpec::Column(1), hook]).is_err());
        assert!(realize(&[hook, hook]).is_err());
        assert!(realize(&[BlockSpec::Hook { rows: 1, cols: 3 }]).is_err());
        assert!(realize(&[BlockSpec::Row(0)]).is_err());
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(
            enumerate_extreme(1).unwrap(),
            vec![MaxMatrix::identity(1).unwrap()]
        );
        let two = enumerate_extreme(2).unwrap();
        assert_eq!(two.len(), 6);
        assert!(two.contains(&MaxMatrix::identity(2).unwrap()));
        assert!(two.contains(&hook2()));
        let three = enumerate_extreme(3).unwrap();
        for e in p1_set() {
            assert!(three.contains(&e));
        }
        assert!(matches!(enumerate_extreme(6), Err(Error::Capacity { .. })));
        assert!(enumerate_extreme(0).is_err());
    }

    #[test]
    fn decompose_examples() {
        let tol = Tolerance::default();
        let d = decompose_extreme(&MaxMatrix::identity(3).unwrap(), tol).unwrap();
        assert_eq!(d.blocks, vec![BlockSpec::Column(1); 3]);
        assert!(d.p_left.is_identity() && d.p_right.is_identity());

        let e = m(&[&[0.0, 1.0, 1.0], &[1.0, 0.0, 0.0], &[1.0, 0.0, 0.0]]);
        let d = decompose_extreme(&e, tol).unwrap();
        assert_eq!(d.blocks, vec![BlockSpec::Column(2), BlockSpec::Row(2)]);
        assert_eq!(d.reconstruct().unwrap(), e);

        let hook3 = p1_set().pop().unwrap();
        let d = decompose_extreme(&hook3, tol).unwrap();
        assert_eq!(d.blocks, vec![BlockSpec::Hook { rows: 3, cols: 3 }]);
        assert!(d.p_left.is_identity() && d.p_right.is_identity());

        assert!(decompose_extreme(&MaxMatrix::ones(2, 2).unwrap(), tol).is_err());
    }

    #[test]
    fn witness_examples() {
        let tol = Tolerance::default();
        let e = m(&[&[0.7, 1.0], &[1.0, 0.0]]);
        let w = non_extremality_witness(&e, tol).unwrap().unwrap();
        assert_eq!(w.d1.get(0, 0), 0.0);
        assert_eq!(w.d2.get(0, 0), 1.0);
        assert_eq!(w.alpha2.get(), 0.7);
        assert_eq!(w.combine().unwrap(), e);

        let ones = MaxMatrix::ones(2, 2).unwrap();
        let w = non_extremality_witness(&ones, tol).unwrap().unwrap();
        assert_eq!(w.d1, m(&[&[0.5, 1.0], &[1.0, 1.0]]));
        assert_eq!(w.d2, m(&[&[1.0, 1.0], &[1.0, 0.5]]));
        assert_eq!(w.d1.oplus(&w.d2).unwrap(), ones);
        assert!(is_mds(&w.d1, tol).unwrap() && is_mds(&w.d2, tol).unwrap());

        assert_eq!(non_extremality_witness(&hook2(), tol).unwrap(), None);
        assert!(non_extremality_witness(&m(&[&[0.5, 0.0], &[0.0, 1.0]]), tol).is_err());
    }

    #[test]
    fn block_lists_are_square_and_canonical() {
        for n in 1..=5 {
            for blocks in canonical_block_lists(n) {
                let rows: usize = blocks.iter().map(|b| b.shape().0).sum();
                let cols: usize = blocks.iter().map(|b| b.shape().1).sum();
                assert_eq!((rows, cols), (n, n), "{blocks:?}");
                let keys: Vec<_> = blocks.iter().map(|b| b.order_key()).collect();
                assert!(keys.windows(2).all(|w| w[0] <= w[1]));
            }
        }
    }
}
