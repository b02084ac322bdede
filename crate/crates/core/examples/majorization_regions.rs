//! Majorization witnesses and the sampled regions {x : x ≺ y}.
//!
//! `cargo run --example majorization_regions -- out/` also writes the two
//! regions as CSV files for plotting.

use maxalg::cli::region_csv;
use maxalg::majorization::{hull, hull_membership, majorizes_check, region_sample, witness};
use maxalg::{MaxVector, Tolerance};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let tol = Tolerance::default();
    let x = MaxVector::new(vec![1.0, 3.0, 2.5])?;
    let y = MaxVector::new(vec![3.0, 1.0, 2.0])?;
    println!("x = {x}, y = {y}, x ≺ y: {}", majorizes_check(&x, &y, tol)?);
    let w = witness(&x, &y, tol)?;
    println!(
        "witness D =\n{}D ⊗ y = {}",
        w.matrix,
        w.matrix.otimes_vec(&y)?
    );

    let h = hull(&y)?;
    for (i, g) in h.generators.iter().enumerate() {
        println!("y^({}) = {g}", i + 1);
    }
    let alphas = hull_membership(&x, &y, tol)?.expect("x is in the hull");
    let shown: Vec<String> = alphas.iter().map(ToString::to_string).collect();
    println!("x = ⊕ α_i y^(i) with α = ({})", shown.join(", "));

    let plane = region_sample(
        &MaxVector::new(vec![2.0, 1.0])?,
        0.25,
        &[(0.0, 3.0); 2],
        tol,
    )?;
    let space = region_sample(
        &MaxVector::new(vec![1.0, 2.0, 3.0])?,
        0.5,
        &[(0.0, 4.0); 3],
        tol,
    )?;
    println!(
        "\ny = (2, 1): {} of {} grid points inside",
        plane.inside().count(),
        plane.grid_points.len()
    );
    for p in plane.inside() {
        println!("  {p}");
    }
    println!(
        "y = (1, 2, 3): {} of {} grid points inside",
        space.inside().count(),
        space.grid_points.len()
    );

    if let Some(dir) = std::env::args().nth(1) {
        std::fs::create_dir_all(&dir)?;
        std::fs::write(format!("{dir}/region_2d.csv"), region_csv(&plane))?;
        std::fs::write(format!("{dir}/region_3d.csv"), region_csv(&space))?;
        println!("wrote {dir}/region_2d.csv and {dir}/region_3d.csv");
    }
    Ok(())
}
