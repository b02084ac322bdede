//! Linear algebra over the max-times semiring `(ℝ≥0, max, ·)`.
//!
//! * [`semiring`]: scalars, vectors, matrices, permutations, `⊕`/`⊗`,
//!   direct sums and max-convex combinations.
//! * [`spectral`]: spectral radius as maximum cycle geometric mean, local
//!   radii, eigenpair checks, irreducibility.
//! * [`stochastic`]: max-row/column/doubly stochastic predicates.
//! * [`extreme`]: max-extreme points of the MDS matrices, their enumeration
//!   and `P₁ ⊗ E ⊗ P₂` decomposition.
//! * [`majorization`]: the relation `x ≺ y`, constructive witnesses, hull
//!   generators and region sampling.
//! * [`oracles`]: brute-force references for cross-checking.
//! * [`cli`]: the command-line front end behind the `maxalg` binary.
//!
//! Indices are 0-based in the API and 1-based in CLI output.

pub mod cli;
pub mod error;
pub mod extreme;
pub mod majorization;
pub mod oracles;
pub mod semiring;
pub mod spectral;
pub mod stochastic;

pub use error::{Error, Result};
pub use semiring::{MaxMatrix, MaxSemimodule, MaxVector, Permutation, Scalar, Tolerance};
