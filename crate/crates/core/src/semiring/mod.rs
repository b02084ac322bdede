//! The max-times semiring `(ℝ≥0, max, ·)` and its vectors and matrices.
//!
//! `MaxVector` and `MaxMatrix` share the [`MaxSemimodule`] operations
//! (`⊕`, scaling, the induced order); the matrix-specific products live on
//! `MaxMatrix` itself.

mod matrix;
mod permutation;
mod scalar;
mod vector;

pub use matrix::MaxMatrix;
pub use permutation::{permutation_matrix, Lexicographic, Permutation};
pub use scalar::{Scalar, Tolerance};
pub use vector::{standard_vectors, MaxVector, StandardVectors};

use crate::error::{Error, Result};

/// Shapes that support `⊕`, scaling by a scalar and the max-order.
pub trait MaxSemimodule: Clone + Sized {
    fn shape(&self) -> (usize, usize);

    /// Elementwise maximum.
    fn oplus(&self, other: &Self) -> Result<Self>;

    /// Multiplies every entry by `alpha`.
    fn scale(&self, alpha: Scalar) -> Self;

    /// `self ≤ other` entrywise, i.e. `self ⊕ other = other` up to `tol`.
    fn le(&self, other: &Self, tol: Tolerance) -> Result<bool>;

    fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool;
}

impl MaxSemimodule for Scalar {
    fn shape(&self) -> (usize, usize) {
        (1, 1)
    }

    fn oplus(&self, other: &Self) -> Result<Self> {
        Ok(Scalar::oplus(*self, *other))
    }

    fn scale(&self, alpha: Scalar) -> Self {
        self.otimes(alpha)
    }

    fn le(&self, other: &Self, tol: Tolerance) -> Result<bool> {
        Ok(tol.leq(self.get(), other.get()))
    }

    fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool {
        tol.approx_eq(self.get(), other.get())
    }
}

/// Free-function form of [`MaxSemimodule::oplus`].
pub fn oplus<T: MaxSemimodule>(a: &T, b: &T) -> Result<T> {
    a.oplus(b)
}

/// Free-function form of [`MaxSemimodule::scale`].
pub fn scale<T: MaxSemimodule>(alpha: Scalar, a: &T) -> T {
    a.scale(alpha)
}

/// Free-function form of [`MaxSemimodule::le`].
pub fn le<T: MaxSemimodule>(a: &T, b: &T, tol: Tolerance) -> Result<bool> {
    a.le(b, tol)
}

/// `⊕_i α_i v_i`, requiring `⊕_i α_i = 1` up to `tol`.
pub fn max_convex_combination<T: MaxSemimodule>(
    terms: &[(Scalar, &T)],
    tol: Tolerance,
) -> Result<T> {
    let (first, rest) = terms
        .split_first()
        .ok_or_else(|| Error::validation("a max-convex combination needs at least one term"))?;
    let total = terms
        .iter()
        .fold(Scalar::ZERO, |acc, (alpha, _)| acc.oplus(*alpha));
    if !tol.is_one(total.get()) {
        return Err(Error::validation(format!(
            "coefficients must have maximum 1, got {total}"
        )));
    }
    let mut acc = first.1.scale(first.0);
    for (alpha, v) in rest {
        acc = acc.oplus(&v.scale(*alpha))?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_identities() {
        let three = Scalar::new(3.0).unwrap();
        assert_eq!(three.oplus(Scalar::ZERO), three);
        assert_eq!(three.otimes(Scalar::ONE), three);
        assert_eq!(three.otimes(Scalar::ZERO), Scalar::ZERO);
        assert!(Scalar::new(-1.0).is_err());
        assert!(Scalar::new(f64::INFINITY).is_err());
    }

    #[test]
    fn convex_combination_rules() {
        let tol = Tolerance::default();
        let x = MaxVector::new(vec![0.2, 1.0]).unwrap();
        let y = MaxVector::new(vec![1.0, 0.4]).unwrap();
        assert_eq!(
            max_convex_combination(&[(Scalar::ONE, &x)], tol).unwrap(),
            x
        );

        let half = Scalar::new(0.5).unwrap();
        let z = max_convex_combination(&[(Scalar::ONE, &x), (half, &y)], tol).unwrap();
        assert_eq!(z.as_slice(), &[0.5, 1.0]);

        let bad = [(half, &x), (Scalar::new(0.4).unwrap(), &y)];
        assert!(matches!(
            max_convex_combination(&bad, tol),
            Err(Error::Validation(_))
        ));
        assert!(max_convex_combination::<MaxVector>(&[], tol).is_err());

        let short = MaxVector::new(vec![1.0]).unwrap();
        assert!(max_convex_combination(&[(Scalar::ONE, &x), (half, &short)], tol).is_err());
    }
}
