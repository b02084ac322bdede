mod common;

use common::*;
use maxalg::oracles::{brute_cycle_radius, OracleBudget};
use maxalg::semiring::permutation_matrix;
use maxalg::spectral::{analyze, is_eigenpair, is_irreducible, local_radii, spectral_radius};
use maxalg::{MaxMatrix, MaxSemimodule, MaxVector, Permutation, Scalar, Tolerance};
use proptest::prelude::*;

fn square() -> impl Strategy<Value = MaxMatrix> {
    (1usize..6).prop_flat_map(|n| {
        prop::collection::vec(prop_oneof![1 => Just(0.0), 1 => 0.05..4.0f64], n * n)
            .prop_map(move |d| MaxMatrix::new(n, n, d).unwrap())
    })
}

fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs()).max(1.0)
}

/// `I ⊕ B ⊕ … ⊕ B^{n-1}`, by max-times Floyd–Warshall.
fn kleene_star(b: &MaxMatrix) -> MaxMatrix {
    let n = b.rows();
    let mut s: Vec<f64> = b.as_slice().to_vec();
    for i in 0..n {
        s[i * n + i] = s[i * n + i].max(1.0);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = s[i * n + k] * s[k * n + j];
                if via > s[i * n + j] {
                    s[i * n + j] = via;
                }
            }
        }
    }
    MaxMatrix::new(n, n, s).unwrap()
}

proptest! {
    #[test]
    fn transpose_invariance(a in square()) {
        let (r, rt) = (spectral_radius(&a).unwrap().get(), spectral_radius(&a.transpose()).unwrap().get());
        prop_assert!(close(r, rt, 1e-12));
    }

    #[test]
    fn scaling(a in square(), alpha in 0.1..5.0f64) {
        let r = spectral_radius(&a).unwrap().get();
        let rs = spectral_radius(&a.scale(Scalar::new(alpha).unwrap())).unwrap().get();
        prop_assert!(close(rs, alpha * r, 1e-9));
    }

    #[test]
    fn permutation_conjugation(a in square(), seed in any::<u64>()) {
        let n = a.rows();
        let mut mapping: Vec<usize> = (0..n).collect();
        use rand::seq::SliceRandom;
        mapping.shuffle(&mut rng(seed));
        let p = permutation_matrix(&Permutation::new(mapping).unwrap());
        let conj = p.otimes(&a).unwrap().otimes(&p.transpose()).unwrap();
        prop_assert!(close(spectral_radius(&conj).unwrap().get(), spectral_radius(&a).unwrap().get(), 1e-12));
    }

    #[test]
    fn monotone(a in square(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let b = a.oplus(&random_matrix(&mut r, a.rows(), 0.7, 0.0, 4.0)).unwrap();
        prop_assert!(a.le(&b, Tolerance::exact()).unwrap());
        prop_assert!(spectral_radius(&a).unwrap().get() <= spectral_radius(&b).unwrap().get() + 1e-9);
    }

    #[test]
    fn matches_cycle_oracle(a in square()) {
        let r = spectral_radius(&a).unwrap().get();
        let b = brute_cycle_radius(&a, OracleBudget::CYCLES).unwrap().get();
        prop_assert!((r - b).abs() <= 1e-12 * r.max(b));
    }

    #[test]
    fn no_eigenvalue_above_radius(a in square(), seed in any::<u64>(), bump in 1.01..3.0f64) {
        let mut g = rng(seed);
        let r = spectral_radius(&a).unwrap().get();
        let lambda = Scalar::new(r.max(0.01) * bump).unwrap();
        let x = random_vector(&mut g, a.rows(), 0.0, 2.0);
        if !x.is_zero() {
            prop_assert!(!is_eigenpair(&a, &x, lambda, Tolerance::default()).unwrap());
        }
        // The same holds for a vector that is an eigenvector of the radius.
        if r > 0.0 && is_irreducible(&a).unwrap() {
            let star = kleene_star(&a.scale(Scalar::new(1.0 / r).unwrap()));
            for j in 0..a.rows() {
                let col = MaxVector::new(star.column(j).collect()).unwrap();
                prop_assert!(!is_eigenpair(&a, &col, lambda, Tolerance::default()).unwrap());
            }
        }
    }

    #[test]
    fn irreducible_spectrum_is_the_radius(a in square(), alpha in 0.1..10.0f64, off in 0.0..1.0f64) {
        prop_assume!(is_irreducible(&a).unwrap());
        let tol = Tolerance::default();
        let r = spectral_radius(&a).unwrap();
        prop_assume!(r.get() > 0.0);
        let star = kleene_star(&a.scale(Scalar::new(1.0 / r.get()).unwrap()));
        let mut found = 0;
        for j in 0..a.rows() {
            let x = MaxVector::new(star.column(j).collect()).unwrap().scale(Scalar::new(alpha).unwrap());
            if is_eigenpair(&a, &x, r, tol).unwrap() {
                found += 1;
                // Any other λ fails on this eigenvector.
                for other in [r.get() * (0.5 + 0.49 * off), r.get() * (1.01 + off)] {
                    prop_assert!(!is_eigenpair(&a, &x, Scalar::new(other).unwrap(), tol).unwrap());
                }
            }
        }
        prop_assert!(found > 0, "no critical column among Kleene star columns");
    }
}

#[test]
fn report_for_known_matrices() {
    let a = m(&[&[0.0, 2.0, 0.0], &[0.5, 0.0, 0.0], &[0.0, 0.0, 3.0]]);
    let report = analyze(&a).unwrap();
    assert!((report.radius.get() - 3.0).abs() < 1e-12);
    assert!(!report.irreducible);
    assert_eq!(report.norm.get(), 3.0);
    let radii: Vec<f64> = report.local_radii.iter().map(|s| s.get()).collect();
    assert!((radii[0] - 1.0).abs() < 1e-12 && (radii[1] - 1.0).abs() < 1e-12);
    assert!((radii[2] - 3.0).abs() < 1e-12);

    let nilpotent = m(&[&[0.0, 5.0], &[0.0, 0.0]]);
    assert_eq!(spectral_radius(&nilpotent).unwrap(), Scalar::ZERO);
    assert_eq!(local_radii(&nilpotent).unwrap(), vec![Scalar::ZERO; 2]);
}

#[test]
fn eigenpair_examples() {
    let tol = Tolerance::default();
    let d2 = sample_d2();
    let ones = MaxVector::ones(3).unwrap();
    assert!(is_eigenpair(&d2, &ones, Scalar::ONE, tol).unwrap());
    assert!(!is_eigenpair(&d2, &ones, Scalar::new(2.0).unwrap(), tol).unwrap());
    assert!(is_eigenpair(&d2, &MaxVector::zeros(3).unwrap(), Scalar::ONE, tol).is_err());
}
