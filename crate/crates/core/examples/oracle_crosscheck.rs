//! Comparing the fast routines with the brute-force oracles.

use maxalg::extreme::enumerate_extreme;
use maxalg::majorization::majorizes_check;
use maxalg::oracles::{
    brute_cycle_radius, brute_extreme_points, brute_majorization_witness, iterative_local_radius,
    OracleBudget,
};
use maxalg::spectral::{local_spectral_radius, spectral_radius};
use maxalg::{MaxMatrix, MaxVector, Tolerance};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> maxalg::Result<()> {
    let tol = Tolerance::default();
    let mut rng = ChaCha8Rng::seed_from_u64(1);

    let mut worst = 0.0f64;
    let mut shown = 0;
    for _ in 0..100 {
        let n = rng.gen_range(1..=6);
        let data = (0..n * n)
            .map(|_| {
                if rng.gen_bool(0.5) {
                    0.0
                } else {
                    rng.gen_range(0.5..2.0)
                }
            })
            .collect();
        let a = MaxMatrix::new(n, n, data)?;
        let (fast, slow) = (
            spectral_radius(&a)?.get(),
            brute_cycle_radius(&a, OracleBudget::CYCLES)?.get(),
        );
        if fast > 0.0 {
            worst = worst.max((fast - slow).abs() / fast);
        }
        let x = MaxVector::ones(n)?;
        let (closed, iterated) = (
            local_spectral_radius(&a, &x)?,
            iterative_local_radius(&a, &x, 300)?,
        );
        if n == 6 && closed.get() > 0.0 && shown < 3 {
            shown += 1;
            println!("n = 6: r_1(A) = {closed}, 300-step estimate {iterated}");
        }
    }
    println!("spectral radius vs cycle enumeration: worst relative gap {worst:e}");

    for n in 1..=4 {
        let same = enumerate_extreme(n)? == brute_extreme_points(n, OracleBudget::PATTERNS)?;
        println!("n = {n}: extreme points agree with exhaustive filter: {same}");
    }

    let grid = [0.0, 0.5, 1.0, 2.0];
    let mut agree = 0;
    let mut total = 0;
    for &a in &grid {
        for &b in &grid {
            for &c in &grid {
                for &d in &grid {
                    let (x, y) = (MaxVector::new(vec![a, b])?, MaxVector::new(vec![c, d])?);
                    let brute = brute_majorization_witness(&x, &y, OracleBudget::MAJORIZATION)?;
                    agree += (brute.is_some() == majorizes_check(&x, &y, tol)?) as usize;
                    total += 1;
                }
            }
        }
    }
    println!("majorization oracle agrees on {agree}/{total} grid pairs");
    Ok(())
}
