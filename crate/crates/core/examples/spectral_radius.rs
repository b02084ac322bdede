//! Spectral radius, local radii and eigenpairs.

use maxalg::spectral::{analyze, is_eigenpair, local_spectral_radius};
use maxalg::{MaxMatrix, MaxVector, Scalar, Tolerance};

fn main() -> maxalg::Result<()> {
    // Two strongly connected parts: {1, 2} with cycle mean √(2·0.5) = 1 and
    // {3} with a loop of weight 3; node 3 feeds node 1.
    let a = MaxMatrix::from_rows(&[[0.0, 2.0, 0.0], [0.5, 0.0, 0.0], [0.0, 0.0, 3.0]])?;
    let report = analyze(&a)?;
    println!("A =\n{a}");
    println!("r(A) = {}", report.radius);
    println!("‖A‖ = {}", report.norm);
    println!("irreducible: {}", report.irreducible);
    for (i, r) in report.local_radii.iter().enumerate() {
        println!("r_e{}(A) = {r}", i + 1);
    }

    let x = MaxVector::new(vec![1.0, 1.0, 0.0])?;
    println!("r_x(A) for x = {x}: {}", local_spectral_radius(&a, &x)?);

    let tol = Tolerance::default();
    let e3 = MaxVector::unit(3, 2)?;
    println!(
        "(3, e3) eigenpair: {}",
        is_eigenpair(&a, &e3, Scalar::new(3.0)?, tol)?
    );
    let cyc = MaxVector::new(vec![2.0, 1.0, 0.0])?;
    println!(
        "(1, {cyc}) eigenpair: {}",
        is_eigenpair(&a, &cyc, Scalar::ONE, tol)?
    );
    Ok(())
}
