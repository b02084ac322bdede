//! Max-majorization: `x ≺ y` iff `x = D ⊗ y` for some MDS matrix `D`.
//!
//! Equivalently `max x = max y` and `min x ≥ min y`; the set of such `x` is
//! the max-convex hull of the vectors `y^(i)` carrying `y_max` at position
//! `i` and `y_min` elsewhere.

use crate::error::{Error, Result};
use crate::semiring::{MaxMatrix, MaxSemimodule, MaxVector, Scalar, Tolerance};
use crate::stochastic::is_mds;

fn check_dims(x: &MaxVector, y: &MaxVector, op: &'static str) -> Result<()> {
    if x.dim() != y.dim() {
        return Err(Error::Dimension {
            op,
            left: (x.dim(), 1),
            right: (y.dim(), 1),
        });
    }
    Ok(())
}

pub fn majorizes_check(x: &MaxVector, y: &MaxVector, tol: Tolerance) -> Result<bool> {
    check_dims(x, y, "majorizes_check")?;
    Ok(tol.approx_eq(x.max(), y.max()) && tol.geq(x.min(), y.min()))
}

/// An MDS matrix with `matrix ⊗ y = x`.
#[derive(Debug, Clone, PartialEq)]
pub struct MajorizationWitness {
    pub matrix: MaxMatrix,
    /// `(k, l, m)`: 0-based argmax of `x`, argmax of `y`, argmin of `y`.
    pub pivot_indices: (usize, usize, usize),
}

/// Builds `D` with row `k` all ones, column `m` all ones and column `l`
/// equal to `x / y_l`, zeros elsewhere. Ties pick the smallest index. For
/// `y = 𝕆` (hence `x = 𝕆`) the witness is the identity.
pub fn witness(x: &MaxVector, y: &MaxVector, tol: Tolerance) -> Result<MajorizationWitness> {
    if !majorizes_check(x, y, tol)? {
        return Err(Error::NotMajorized);
    }
    let n = x.dim();
    let (k, l, m) = (x.argmax(), y.argmax(), y.argmin());
    if y.is_zero() {
        if !x.is_zero() {
            return Err(Error::NotMajorized);
        }
        return Ok(MajorizationWitness {
            matrix: MaxMatrix::identity(n)?,
            pivot_indices: (k, l, m),
        });
    }
    let y_l = y.get(l);
    let mut data = vec![0.0; n * n];
    for i in 0..n {
        data[i * n + l] = (x.get(i) / y_l).min(1.0);
        data[i * n + m] = 1.0;
    }
    data[k * n..(k + 1) * n].fill(1.0);
    Ok(MajorizationWitness {
        matrix: MaxMatrix::new(n, n, data)?,
        pivot_indices: (k, l, m),
    })
}

impl MajorizationWitness {
    /// Checks `D ∈ MDS` and `D ⊗ y = x`.
    pub fn verify(&self, x: &MaxVector, y: &MaxVector, tol: Tolerance) -> Result<bool> {
        Ok(is_mds(&self.matrix, tol)? && self.matrix.otimes_vec(y)?.approx_eq(x, tol))
    }
}

/// The generators `y^(i)` of `{x : x ≺ y}` and matrices `D^(i)` with
/// `D^(i) ⊗ y = y^(i)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HullDescription {
    pub y_min: Scalar,
    pub y_max: Scalar,
    pub generators: Vec<MaxVector>,
    pub generator_matrices: Vec<MaxMatrix>,
}

pub fn hull(y: &MaxVector) -> Result<HullDescription> {
    let n = y.dim();
    let (y_min, y_max) = (y.min(), y.max());
    let k = y.argmin();
    let mut generators = Vec::with_capacity(n);
    let mut generator_matrices = Vec::with_capacity(n);
    for i in 0..n {
        let mut g = vec![y_min; n];
        g[i] = y_max;
        generators.push(MaxVector::new(g)?);
        let mut data = vec![0.0; n * n];
        data[i * n..(i + 1) * n].fill(1.0);
        for r in 0..n {
            data[r * n + k] = 1.0;
        }
        generator_matrices.push(MaxMatrix::new(n, n, data)?);
    }
    Ok(HullDescription {
        y_min: Scalar::new(y_min)?,
        y_max: Scalar::new(y_max)?,
        generators,
        generator_matrices,
    })
}

/// Coefficients `α_i = x_i / y_max` with `⊕ α_i y^(i) = x`, if they work.
///
/// For `y = 𝕆` only `x = 𝕆` is in the hull, with coefficients `e_1`.
pub fn hull_membership(
    x: &MaxVector,
    y: &MaxVector,
    tol: Tolerance,
) -> Result<Option<Vec<Scalar>>> {
    check_dims(x, y, "hull_membership")?;
    let h = hull(y)?;
    let y_max = h.y_max.get();
    let alphas: Vec<Scalar> = if y_max == 0.0 {
        (0..x.dim())
            .map(|i| if i == 0 { Scalar::ONE } else { Scalar::ZERO })
            .collect()
    } else {
        x.as_slice()
            .iter()
            .map(|&xi| Scalar::new(xi / y_max))
            .collect::<Result<_>>()?
    };
    let top = alphas.iter().fold(Scalar::ZERO, |acc, a| acc.oplus(*a));
    if !tol.is_one(top.get()) {
        return Ok(None);
    }
    let terms: Vec<(Scalar, &MaxVector)> = alphas.iter().copied().zip(&h.generators).collect();
    let z = crate::semiring::max_convex_combination(&terms, tol)?;
    Ok(z.approx_eq(x, tol).then_some(alphas))
}

/// Grid points labelled by `majorizes_check(point, y)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RegionSample {
    pub grid_points: Vec<MaxVector>,
    pub labels: Vec<bool>,
    pub step: Scalar,
    pub bounds: Vec<(f64, f64)>,
}

impl RegionSample {
    pub fn inside(&self) -> impl Iterator<Item = &MaxVector> {
        self.grid_points
            .iter()
            .zip(&self.labels)
            .filter_map(|(p, &l)| l.then_some(p))
    }
}

/// Axis coordinates `lo + i·step`, always ending at `hi`.
fn axis_values(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let span = (hi - lo) / step;
    let mut steps = span.round();
    if (span - steps).abs() > 1e-9 * span.max(1.0) {
        steps = span.floor();
    }
    let mut values: Vec<f64> = (0..=steps as usize).map(|i| lo + i as f64 * step).collect();
    if let Some(last) = values.last_mut() {
        if (*last - hi).abs() <= 1e-9 * hi.abs().max(1.0) {
            *last = hi;
        } else if *last < hi {
            values.push(hi);
        }
    }
    values
}

/// Samples the grid `∏ [lo_i, hi_i]` in row-major order (last axis fastest).
pub fn region_sample(
    y: &MaxVector,
    step: f64,
    bounds: &[(f64, f64)],
    tol: Tolerance,
) -> Result<RegionSample> {
    if !(step.is_finite() && step > 0.0) {
        return Err(Error::validation(format!(
            "step must be positive, got {step}"
        )));
    }
    if bounds.len() != y.dim() {
        return Err(Error::Dimension {
            op: "region_sample",
            left: (bounds.len(), 2),
            right: (y.dim(), 1),
        });
    }
    for &(lo, hi) in bounds {
        if !(lo.is_finite() && hi.is_finite() && lo >= 0.0 && lo <= hi) {
            return Err(Error::validation(format!(
                "bounds must be finite with 0 <= lo <= hi, got [{lo}, {hi}]"
            )));
        }
    }
    let axes: Vec<Vec<f64>> = bounds
        .iter()
        .map(|&(lo, hi)| axis_values(lo, hi, step))
        .collect();
    let total: usize = axes.iter().map(Vec::len).product();
    let mut grid_points = Vec::with_capacity(total);
    let mut labels = Vec::with_capacity(total);
    let mut idx = vec![0usize; axes.len()];
    for _ in 0..total {
        let point = MaxVector::new(idx.iter().zip(&axes).map(|(&i, a)| a[i]).collect())?;
        labels.push(majorizes_check(&point, y, tol)?);
        grid_points.push(point);
        for d in (0..idx.len()).rev() {
            idx[d] += 1;
            if idx[d] < axes[d].len() {
                break;
            }
            idx[d] = 0;
        }
    }
    Ok(RegionSample {
        grid_points,
        labels,
        step: Scalar::new(step)?,
        bounds: bounds.to_vec(),
    })
}

/// `A ⊗ x ≺ x` for every `x`, tested on `x ∈ {𝟙, e_1, …, e_n}`.
pub fn is_mds_via_majorization(a: &MaxMatrix, tol: Tolerance) -> Result<bool> {
    let n = a.require_square("is_mds_via_majorization")?;
    let ones = MaxVector::ones(n)?;
    if !majorizes_check(&a.otimes_vec(&ones)?, &ones, tol)? {
        return Ok(false);
    }
    for i in 0..n {
        let e = MaxVector::unit(n, i)?;
        if !majorizes_check(&a.otimes_vec(&e)?, &e, tol)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[f64]) -> MaxVector {
        MaxVector::new(x.to_vec()).unwrap()
    }

    #[test]
    fn check_examples() {
        let tol = Tolerance::default();
        assert!(majorizes_check(&v(&[2.0, 2.0]), &v(&[2.0, 1.0]), tol).unwrap());
        assert!(!majorizes_check(&v(&[2.0, 0.5]), &v(&[2.0, 1.0]), tol).unwrap());
        let y = v(&[0.3, 4.0, 1.0]);
        assert!(majorizes_check(&y, &y, tol).unwrap());
        assert!(majorizes_check(&v(&[1.0]), &v(&[1.0, 2.0]), tol).is_err());
    }

    #[test]
    fn witness_examples() {
        let tol = Tolerance::default();
        let (x, y) = (v(&[2.0, 2.0]), v(&[2.0, 1.0]));
        let w = witness(&x, &y, tol).unwrap();
        assert_eq!(w.pivot_indices, (0, 0, 1));
        assert_eq!(w.matrix, MaxMatrix::ones(2, 2).unwrap());
        assert_eq!(w.matrix.otimes_vec(&y).unwrap(), x);

        let z = MaxVector::zeros(3).unwrap();
        assert_eq!(
            witness(&z, &z, tol).unwrap().matrix,
            MaxMatrix::identity(3).unwrap()
        );

        let (x, y) = (v(&[3.0, 1.0, 1.0]), v(&[1.0, 2.0, 3.0]));
        let w = witness(&x, &y, tol).unwrap();
        assert_eq!(w.pivot_indices, (0, 2, 0));
        let expected = MaxMatrix::from_rows(&[
            [1.0, 1.0, 1.0],
            [1.0, 0.0, 1.0 / 3.0],
            [1.0, 0.0, 1.0 / 3.0],
        ])
        .unwrap();
        assert_eq!(w.matrix, expected);
        assert!(w.verify(&x, &y, tol).unwrap());

        assert_eq!(
            witness(&v(&[2.0, 0.5]), &v(&[2.0, 1.0]), tol),
            Err(Error::NotMajorized)
        );
    }

    #[test]
    fn hull_examples() {
        let h = hull(&v(&[1.0, 2.0, 3.0])).unwrap();
        assert_eq!(
            h.generators,
            vec![
                v(&[3.0, 1.0, 1.0]),
                v(&[1.0, 3.0, 1.0]),
                v(&[1.0, 1.0, 3.0])
            ]
        );
        for (d, g) in h.generator_matrices.iter().zip(&h.generators) {
            assert_eq!(&d.otimes_vec(&v(&[1.0, 2.0, 3.0])).unwrap(), g);
        }
        let c = v(&[0.7, 0.7, 0.7]);
        assert!(hull(&c).unwrap().generators.iter().all(|g| g == &c));
        assert_eq!(
            hull(&v(&[2.0, 1.0])).unwrap().generators,
            vec![v(&[2.0, 1.0]), v(&[1.0, 2.0])]
        );
    }

    #[test]
    fn membership_examples() {
        let tol = Tolerance::default();
        let alphas = hull_membership(&v(&[3.0, 2.0, 1.0]), &v(&[1.0, 2.0, 3.0]), tol)
            .unwrap()
            .unwrap();
        let got: Vec<f64> = alphas.iter().map(|a| a.get()).collect();
        assert_eq!(got, vec![1.0, 2.0 / 3.0, 1.0 / 3.0]);

        let y = v(&[1.0, 2.0, 3.0]);
        let g1 = v(&[3.0, 1.0, 1.0]);
        let alphas = hull_membership(&g1, &y, tol).unwrap().unwrap();
        assert_eq!(alphas[0], Scalar::ONE);
        assert_eq!(alphas[1].get(), 1.0 / 3.0);

        assert_eq!(
            hull_membership(&v(&[2.0, 0.5]), &v(&[2.0, 1.0]), tol).unwrap(),
            None
        );
        let z = MaxVector::zeros(2).unwrap();
        assert!(hull_membership(&z, &z, tol).unwrap().is_some());
        assert_eq!(hull_membership(&v(&[1.0, 0.0]), &z, tol).unwrap(), None);
    }

    #[test]
    fn region_examples() {
        let tol = Tolerance::default();
        let r = region_sample(&v(&[2.0, 1.0]), 1.0, &[(0.0, 3.0); 2], tol).unwrap();
        assert_eq!(r.grid_points.len(), 16);
        let inside: Vec<_> = r.inside().cloned().collect();
        assert_eq!(inside, vec![v(&[1.0, 2.0]), v(&[2.0, 1.0]), v(&[2.0, 2.0])]);

        let c = v(&[1.0, 1.0]);
        let r = region_sample(&c, 0.5, &[(0.0, 2.0); 2], tol).unwrap();
        assert_eq!(r.inside().cloned().collect::<Vec<_>>(), vec![c.clone()]);

        assert!(region_sample(&c, 0.0, &[(0.0, 2.0); 2], tol).is_err());
        assert!(region_sample(&c, 1.0, &[(0.0, 2.0)], tol).is_err());
    }

    #[test]
    fn axis_includes_endpoints() {
        assert_eq!(axis_values(0.0, 1.0, 0.25), vec![0.0, 0.25, 0.5, 0.75, 1.0]);
        assert_eq!(axis_values(0.0, 1.0, 0.4), vec![0.0, 0.4, 0.8, 1.0]);
        assert_eq!(axis_values(0.0, 3.0, 0.1).last(), Some(&3.0));
        assert_eq!(axis_values(2.0, 2.0, 0.5), vec![2.0]);
    }

    #[test]
    fn mds_via_majorization_examples() {
        let tol = Tolerance::default();
        let d1 = MaxMatrix::from_rows(&[
            [0.5, 0.25, 1.0],
            [0.8, 1.0, 2.0 / 3.0],
            [1.0, 2.0 / 3.0, 6.0 / 7.0],
        ])
        .unwrap();
        assert!(is_mds_via_majorization(&d1, tol).unwrap());
        let a = MaxMatrix::from_rows(&[[1.0, 0.0], [0.0, 0.5]]).unwrap();
        assert!(!is_mds_via_majorization(&a, tol).unwrap());
        for p in crate::semiring::Permutation::all(3) {
            assert!(is_mds_via_majorization(&p.to_matrix(), tol).unwrap());
        }
    }
}
