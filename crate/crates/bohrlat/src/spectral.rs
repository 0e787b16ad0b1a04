//! Spectral decomposition with eigenvalue clustering.

use crate::eigen::hermitian_eigen;
use crate::error::{Error, Result};
use crate::mat::Mat;
use crate::scalar::{Scalar, C};
use crate::tolerance::Tolerance;

/// `a = sum_j lambda_j f_j` with strictly increasing eigenvalues and
/// mutually orthogonal projections summing to the identity.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition<T: Scalar> {
    pub eigenvalues: Vec<T>,
    pub projections: Vec<Mat<T>>,
}

impl<T: Scalar> SpectralDecomposition<T> {
    /// Rebuilds `sum_j lambda_j f_j`.
    pub fn reconstruct(&self) -> Mat<T> {
        let n = self.projections[0].dim();
        let mut acc = Mat::zeros(n);
        for (l, f) in self.eigenvalues.iter().zip(&self.projections) {
            acc = acc + f.scale_re(*l);
        }
        acc
    }

    /// Structural validation: projections orthogonal, summing to one,
    /// eigenvalues strictly increasing.
    pub fn validate(&self, tol: &Tolerance<T>) -> Result<()> {
        if self.eigenvalues.len() != self.projections.len() || self.eigenvalues.is_empty() {
            return Err(Error::InvalidInput("eigenvalue/projection count mismatch".into()));
        }
        for w in self.eigenvalues.windows(2) {
            if w[1] <= w[0] {
                return Err(Error::InvalidInput("eigenvalues not strictly increasing".into()));
            }
        }
        let n = self.projections[0].dim();
        let mut sum = Mat::zeros(n);
        for (i, f) in self.projections.iter().enumerate() {
            if !crate::mat::is_projection(f, tol) {
                return Err(Error::NotAProjection(format!("spectral projection {i}")));
            }
            for g in &self.projections[i + 1..] {
                let prod = f.matmul(g)?;
                let d = prod.op_norm();
                if d > tol.eq_tol * T::of(10.0) {
                    return Err(Error::NotOrthogonal(d.to_f64_lossy()));
                }
            }
            sum = sum + f.clone();
        }
        if !sum.approx_eq(&Mat::identity(n), tol.eq_tol * T::of(10.0)) {
            return Err(Error::InvalidInput("spectral projections do not sum to 1".into()));
        }
        Ok(())
    }
}

/// Greedy merge of sorted eigenvalues: values within `cluster_tol` of their
/// predecessor share a cluster. Returns half-open index ranges.
fn cluster_ranges<T: Scalar>(sorted: &[T], cluster_tol: T) -> Vec<(usize, usize)> {
    let mut ranges = Vec::new();
    let mut start = 0;
    for i in 1..=sorted.len() {
        if i == sorted.len() || sorted[i] - sorted[i - 1] >= cluster_tol {
            ranges.push((start, i));
            start = i;
        }
    }
    ranges
}

/// Spectral decomposition of a self-adjoint matrix with degenerate
/// eigenvalues grouped into shared projections.
pub fn spectral<T: Scalar>(a: &Mat<T>, tol: &Tolerance<T>) -> Result<SpectralDecomposition<T>> {
    let defect = a.hermiticity_defect();
    if defect > tol.eq_tol {
        return Err(Error::NotSelfAdjoint(defect.to_f64_lossy()));
    }
    let (vals, vecs) = hermitian_eigen(a);
    let mut eigenvalues = Vec::new();
    let mut projections = Vec::new();
    for (lo, hi) in cluster_ranges(&vals, tol.cluster_tol) {
        let mut f = Mat::zeros(a.dim());
        let mut mean = T::zero();
        for k in lo..hi {
            f = f + Mat::outer_self(&vecs[k]);
            mean = mean + vals[k];
        }
        mean = mean / T::of((hi - lo) as f64);
        eigenvalues.push(mean);
        projections.push(f);
    }
    Ok(SpectralDecomposition { eigenvalues, projections })
}

/// Raw rank-one expansion `a = sum_i lambda_i v_i v_i*` using one
/// deterministic orthonormal eigenbasis (no clustering). This is the
/// refinement used when a map is only defined on rank-one projections.
pub fn rank1_expansion<T: Scalar>(a: &Mat<T>, tol: &Tolerance<T>) -> Result<Vec<(T, Mat<T>)>> {
    let defect = a.hermiticity_defect();
    if defect > tol.eq_tol {
        return Err(Error::NotSelfAdjoint(defect.to_f64_lossy()));
    }
    let (vals, vecs) = hermitian_eigen(a);
    Ok(vals
        .into_iter()
        .zip(vecs)
        .map(|(l, v)| (l, Mat::outer_self(&v)))
        .collect())
}

/// Effect predicate: self-adjoint with spectrum in `[-eq_tol, 1 + eq_tol]`.
pub fn is_effect<T: Scalar>(a: &Mat<T>, tol: &Tolerance<T>) -> bool {
    if !a.is_finite() || a.hermiticity_defect() > tol.eq_tol {
        return false;
    }
    let (vals, _) = hermitian_eigen(a);
    vals.iter()
        .all(|&l| l >= -tol.eq_tol && l <= T::one() + tol.eq_tol)
}

/// Rank of a projection read off its trace.
pub fn projection_rank<T: Scalar>(p: &Mat<T>) -> usize {
    let t = p.trace().re.to_f64_lossy();
    t.round().max(0.0) as usize
}

/// True when `p` is a projection of rank exactly one.
pub fn is_rank1_projection<T: Scalar>(p: &Mat<T>, tol: &Tolerance<T>) -> bool {
    crate::mat::is_projection(p, tol) && projection_rank(p) == 1
}

/// A unit vector spanning the range of a rank-one projection.
pub fn range_vector<T: Scalar>(p: &Mat<T>) -> Vec<C<T>> {
    // The column of largest norm of v v* is a multiple of v.
    let n = p.dim();
    let mut best = 0;
    let mut best_norm = T::zero();
    for j in 0..n {
        let norm: T = (0..n).map(|i| p[(i, j)].norm_sqr()).sum();
        if norm > best_norm {
            best_norm = norm;
            best = j;
        }
    }
    let norm = best_norm.sqrt();
    (0..n).map(|i| p[(i, best)] / num_complex::Complex::new(norm, T::zero())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    type M = Mat<f64>;

    fn tol() -> Tolerance<f64> {
        Tolerance::default()
    }

    #[test]
    fn diag_spectral_is_rank1_units() {
        let a = M::from_real(&[&[1.0, 0.0, 0.0], &[0.0, 2.0, 0.0], &[0.0, 0.0, 3.0]]);
        let sd = spectral(&a, &tol()).unwrap();
        assert_eq!(sd.eigenvalues, vec![1.0, 2.0, 3.0]);
        for (k, f) in sd.projections.iter().enumerate() {
            let mut expect = M::zeros(3);
            expect[(k, k)] = num_complex::Complex::new(1.0, 0.0);
            assert!(f.approx_eq(&expect, 1e-12));
        }
        sd.validate(&tol()).unwrap();
    }

    #[test]
    fn identity_clusters_to_single_projection() {
        let sd = spectral(&M::identity(4), &tol()).unwrap();
        assert_eq!(sd.eigenvalues.len(), 1);
        assert!((sd.eigenvalues[0] - 1.0).abs() < 1e-14);
        assert!(sd.projections[0].approx_eq(&M::identity(4), 1e-12));
    }

    #[test]
    fn sigma_x_projections_by_hand() {
        // Hand 2x2 eigenproblem: lambda = -1, 1 with projections (1 -+ sigma_x)/2.
        let a = M::from_real(&[&[0.0, 1.0], &[1.0, 0.0]]);
        let sd = spectral(&a, &tol()).unwrap();
        assert!((sd.eigenvalues[0] + 1.0).abs() < 1e-13);
        assert!((sd.eigenvalues[1] - 1.0).abs() < 1e-13);
        let minus = M::from_real(&[&[0.5, -0.5], &[-0.5, 0.5]]);
        let plus = M::from_real(&[&[0.5, 0.5], &[0.5, 0.5]]);
        assert!(sd.projections[0].approx_eq(&minus, 1e-12));
        assert!(sd.projections[1].approx_eq(&plus, 1e-12));
    }

    #[test]
    fn rejects_non_selfadjoint() {
        let a = M::from_real(&[&[0.0, 1.0], &[0.0, 0.0]]);
        assert!(matches!(spectral(&a, &tol()), Err(Error::NotSelfAdjoint(_))));
    }

    #[test]
    fn effect_predicate() {
        let t = tol();
        assert!(is_effect(&M::identity(2), &t));
        assert!(is_effect(&M::identity(2).scale_re(0.5), &t));
        assert!(!is_effect(&M::identity(2).scale_re(2.0), &t));
        let h = M::from_real(&[&[0.5, 0.5], &[0.5, 0.5]]);
        assert!(is_effect(&h, &t));
    }

    #[test]
    fn clustering_merges_near_degenerate() {
        let a = M::from_real(&[
            &[1.0, 0.0, 0.0],
            &[0.0, 1.0 + 1e-12, 0.0],
            &[0.0, 0.0, 5.0],
        ]);
        let sd = spectral(&a, &tol()).unwrap();
        assert_eq!(sd.eigenvalues.len(), 2);
        assert_eq!(projection_rank(&sd.projections[0]), 2);
    }
}
