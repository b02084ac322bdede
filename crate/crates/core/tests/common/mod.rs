#![allow(dead_code)]

use maxalg::{MaxMatrix, MaxVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn m(rows: &[&[f64]]) -> MaxMatrix {
    MaxMatrix::from_rows(rows).unwrap()
}

pub fn v(x: &[f64]) -> MaxVector {
    MaxVector::new(x.to_vec()).unwrap()
}

pub fn sample_d1() -> MaxMatrix {
    m(&[
        &[0.5, 0.25, 1.0],
        &[0.8, 1.0, 2.0 / 3.0],
        &[1.0, 2.0 / 3.0, 6.0 / 7.0],
    ])
}

pub fn sample_d2() -> MaxMatrix {
    m(&[&[1.0, 1.0, 0.0], &[0.0, 1.0, 1.0], &[0.0, 0.0, 1.0]])
}

pub fn sample_p() -> MaxMatrix {
    m(&[&[0.0, 1.0, 0.0], &[1.0, 0.0, 0.0], &[0.0, 0.0, 1.0]])
}

/// The four canonical 3×3 extreme points.
pub fn canonical_extremes_3() -> Vec<MaxMatrix> {
    vec![
        MaxMatrix::identity(3).unwrap(),
        m(&[&[1.0, 1.0, 0.0], &[1.0, 0.0, 0.0], &[0.0, 0.0, 1.0]]),
        m(&[&[0.0, 1.0, 1.0], &[1.0, 0.0, 0.0], &[1.0, 0.0, 0.0]]),
        m(&[&[1.0, 1.0, 1.0], &[1.0, 0.0, 0.0], &[1.0, 0.0, 0.0]]),
    ]
}

/// Each entry is zero with probability `zero_density`, else uniform in `[lo, hi)`.
pub fn random_matrix(
    rng: &mut ChaCha8Rng,
    n: usize,
    zero_density: f64,
    lo: f64,
    hi: f64,
) -> MaxMatrix {
    let data = (0..n * n)
        .map(|_| {
            if rng.gen_bool(zero_density) {
                0.0
            } else {
                rng.gen_range(lo..hi)
            }
        })
        .collect();
    MaxMatrix::new(n, n, data).unwrap()
}

pub fn random_vector(rng: &mut ChaCha8Rng, n: usize, lo: f64, hi: f64) -> MaxVector {
    MaxVector::new((0..n).map(|_| rng.gen_range(lo..hi)).collect()).unwrap()
}

/// A pair `(x, y)` that is majorized about half the time. Positive cases
/// copy `y_max` into `x` exactly; negative cases break either condition.
pub fn random_pair(rng: &mut ChaCha8Rng, n: usize) -> (MaxVector, MaxVector) {
    let mut y: Vec<f64> = (0..n).map(|_| rng.gen_range(0.1..5.0)).collect();
    if n > 1 && rng.gen_bool(0.1) {
        let k = rng.gen_range(0..n);
        y[k] = 0.0;
    }
    let y_max = y.iter().copied().fold(0.0, f64::max);
    let y_min = y.iter().copied().fold(f64::INFINITY, f64::min);
    let mut x: Vec<f64> = (0..n)
        .map(|_| {
            if y_max > y_min {
                rng.gen_range(y_min..y_max)
            } else {
                y_min
            }
        })
        .collect();
    let k = rng.gen_range(0..n);
    x[k] = y_max;
    match rng.gen_range(0..4) {
        0 => x[k] = y_max * 1.25,
        1 => {
            for xi in x.iter_mut() {
                *xi = xi.min(y_max * 0.8);
            }
        }
        2 if y_min > 0.0 && n > 1 => {
            let j = (k + 1) % n;
            x[j] = y_min * 0.5;
        }
        _ => {}
    }
    (MaxVector::new(x).unwrap(), MaxVector::new(y).unwrap())
}

/// Every n×n (0,1)-matrix, indexed by bit pattern.
pub fn all_zero_one(n: usize) -> impl Iterator<Item = MaxMatrix> {
    let cells = n * n;
    (0u64..1 << cells).map(move |bits| {
        let data = (0..cells).map(|k| ((bits >> k) & 1) as f64).collect();
        MaxMatrix::new(n, n, data).unwrap()
    })
}

/// Grid vectors with entries drawn from `values`.
pub fn grid_vectors(n: usize, values: &[f64]) -> Vec<MaxVector> {
    let mut out = Vec::new();
    let total = values.len().pow(n as u32);
    for mut code in 0..total {
        let mut x = Vec::with_capacity(n);
        for _ in 0..n {
            x.push(values[code % values.len()]);
            code /= values.len();
        }
        out.push(MaxVector::new(x).unwrap());
    }
    out
}
