//! Classifying max-stochastic matrices and checking closure.

use maxalg::spectral::{norm, spectral_radius};
use maxalg::stochastic::{classify, is_trace_preserving, is_unital_preserving, random_mds};
use maxalg::{MaxMatrix, MaxSemimodule, Tolerance};

fn main() -> maxalg::Result<()> {
    let tol = Tolerance::default();
    let d1 = MaxMatrix::from_rows(&[
        [0.5, 0.25, 1.0],
        [0.8, 1.0, 2.0 / 3.0],
        [1.0, 2.0 / 3.0, 6.0 / 7.0],
    ])?;
    let d2 = MaxMatrix::from_rows(&[[1.0, 1.0, 0.0], [0.0, 1.0, 1.0], [0.0, 0.0, 1.0]])?;

    for (name, d) in [("D1", &d1), ("D2", &d2)] {
        let c = classify(d, tol)?;
        println!(
            "{name}: row {} column {} doubly {} | unital {} trace {} | r = {} ‖·‖ = {}",
            c.row,
            c.column,
            c.doubly,
            is_unital_preserving(d, tol)?,
            is_trace_preserving(d, tol)?,
            spectral_radius(d)?,
            norm(d),
        );
    }
    println!("D1 ⊕ D2 doubly: {}", classify(&d1.oplus(&d2)?, tol)?.doubly);
    println!(
        "D1 ⊗ D2 doubly: {}",
        classify(&d1.otimes(&d2)?, tol)?.doubly
    );

    let row_only = MaxMatrix::from_rows(&[[1.0, 0.2], [1.0, 0.5]])?;
    let c = classify(&row_only, tol)?;
    println!("row-stochastic only: doubly {}", c.doubly);
    for v in &c.violations {
        println!(
            "  {} {} has maximum {}",
            v.axis.name(),
            v.index + 1,
            v.max_value
        );
    }

    let g = random_mds(4, 2024, 0.5)?;
    println!("random MDS (seed 2024):\n{g}");
    Ok(())
}
