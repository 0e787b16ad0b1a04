//! Tolerance bundle threaded through every numeric predicate.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// The three tolerances used throughout the crate.
///
/// `eq_tol` drives structural predicates (equality, projection tests),
/// `cluster_tol` drives eigenvalue grouping, and `report_tol` is the
/// slack allowed in verification-suite comparisons.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance<T: Scalar> {
    pub eq_tol: T,
    pub cluster_tol: T,
    pub report_tol: T,
}

impl<T: Scalar> Default for Tolerance<T> {
    fn default() -> Self {
        Tolerance {
            eq_tol: T::of(1e-9),
            cluster_tol: T::of(1e-8),
            report_tol: T::of(1e-8),
        }
    }
}

impl<T: Scalar> Tolerance<T> {
    /// Builds a tolerance bundle, enforcing positivity and `cluster_tol >= eq_tol`.
    pub fn new(eq_tol: T, cluster_tol: T, report_tol: T) -> Result<Self> {
        if !(eq_tol > T::zero() && cluster_tol > T::zero() && report_tol > T::zero()) {
            return Err(Error::InvalidTolerance("all tolerances must be strictly positive".into()));
        }
        if cluster_tol < eq_tol {
            return Err(Error::InvalidTolerance("cluster_tol must be >= eq_tol".into()));
        }
        Ok(Tolerance { eq_tol, cluster_tol, report_tol })
    }

    /// All three tolerances set to the same value (CLI `--tol` override).
    pub fn uniform(t: T) -> Result<Self> {
        Self::new(t, t, t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_is_valid() {
        let t = Tolerance::<f64>::default();
        assert!(Tolerance::new(t.eq_tol, t.cluster_tol, t.report_tol).is_ok());
    }

    #[test]
    fn rejects_nonpositive_and_inverted() {
        assert!(Tolerance::new(0.0, 1e-8, 1e-8).is_err());
        assert!(Tolerance::new(1e-6, 1e-8, 1e-8).is_err());
        assert!(Tolerance::<f64>::uniform(1e-30).is_ok());
    }
}
