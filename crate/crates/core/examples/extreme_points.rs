//! Enumerating and decomposing the max-extreme points of the MDS matrices.

use maxalg::extreme::{
    decompose_extreme, enumerate_extreme, is_max_extreme, non_extremality_witness,
};
use maxalg::{MaxMatrix, Tolerance};

fn main() -> maxalg::Result<()> {
    let tol = Tolerance::default();
    for n in 1..=4 {
        println!("n = {n}: {} extreme points", enumerate_extreme(n)?.len());
    }

    let hooked = MaxMatrix::from_rows(&[[0.0, 1.0, 1.0], [1.0, 0.0, 0.0], [1.0, 0.0, 0.0]])?;
    println!("\nE =\n{hooked}extreme: {}", is_max_extreme(&hooked, tol)?);
    let d = decompose_extreme(&hooked, tol)?;
    let blocks: Vec<String> = d.blocks.iter().map(ToString::to_string).collect();
    println!(
        "P_L = {:?}, blocks = [{}], P_R = {:?}",
        d.p_left.mapping(),
        blocks.join(", "),
        d.p_right.mapping()
    );
    println!("reconstructs: {}", d.reconstruct()? == hooked);

    let full = MaxMatrix::ones(2, 2)?;
    println!("\nJ =\n{full}extreme: {}", is_max_extreme(&full, tol)?);
    if let Some(w) = non_extremality_witness(&full, tol)? {
        println!(
            "J = {}·D1 ⊕ {}·D2 with\nD1 =\n{}D2 =\n{}",
            w.alpha1, w.alpha2, w.d1, w.d2
        );
    }
    Ok(())
}
