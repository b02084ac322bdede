//! Max-times arithmetic on scalars, vectors and matrices.

use maxalg::semiring::{max_convex_combination, permutation_matrix};
use maxalg::{MaxMatrix, MaxSemimodule, MaxVector, Permutation, Scalar, Tolerance};

fn main() -> maxalg::Result<()> {
    let a = Scalar::new(0.5)?;
    let b = Scalar::new(3.0)?;
    println!("{a} ⊕ {b} = {}", a.oplus(b));
    println!("{a} ⊗ {b} = {}", a.otimes(b));

    let m = MaxMatrix::from_rows(&[[1.0, 2.0], [0.5, 0.0]])?;
    let x = MaxVector::new(vec![1.0, 4.0])?;
    println!("A =\n{m}");
    println!("A ⊗ x = {}", m.otimes_vec(&x)?);
    println!("A ⊗ A =\n{}", m.power(2)?);
    println!(
        "A ⊞ [7] =\n{}",
        m.direct_sum(&MaxMatrix::from_rows(&[[7.0]])?)
    );

    let sigma = Permutation::new(vec![1, 2, 0])?;
    println!(
        "P(σ) for σ = {:?}:\n{}",
        sigma.mapping(),
        permutation_matrix(&sigma)
    );

    let tol = Tolerance::default();
    let id = MaxMatrix::identity(2)?;
    let swap = permutation_matrix(&Permutation::swap(2, 0, 1)?);
    let c = max_convex_combination(&[(Scalar::ONE, &id), (Scalar::new(0.3)?, &swap)], tol)?;
    println!("I ⊕ 0.3·P =\n{c}");
    println!("I ≤ I ⊕ 0.3·P: {}", id.le(&c, tol)?);
    Ok(())
}
