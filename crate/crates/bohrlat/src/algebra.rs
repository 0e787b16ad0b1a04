//! Direct sums of matrix blocks: the shape of a finite-dimensional
//! C*-algebra and its block-diagonal elements.

use crate::error::{Error, Result};
use crate::mat::Mat;
use crate::scalar::{Scalar, C};

/// Block structure of a finite-dimensional C*-algebra `M_{n_1} (+) ... (+) M_{n_k}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraShape {
    blocks: Vec<usize>,
}

impl AlgebraShape {
    pub fn new(blocks: Vec<usize>) -> Result<Self> {
        if blocks.is_empty() || blocks.iter().any(|&b| b == 0) {
            return Err(Error::ShapeMismatch("blocks must be a nonempty list of positive sizes".into()));
        }
        Ok(AlgebraShape { blocks })
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    /// Total Hilbert-space dimension `N = sum n_i`.
    pub fn total_dim(&self) -> usize {
        self.blocks.iter().sum()
    }

    /// Linear dimension of the algebra, `sum n_i^2`.
    pub fn algebra_dim(&self) -> usize {
        self.blocks.iter().map(|b| b * b).sum()
    }

    /// The two exceptional algebras of the reconstruction theory.
    pub fn is_exceptional(&self) -> bool {
        self.blocks == [2] || self.blocks == [1, 1]
    }

    /// Row/column offset of each block inside the full `N x N` embedding.
    pub fn offsets(&self) -> Vec<usize> {
        let mut offs = Vec::with_capacity(self.blocks.len());
        let mut acc = 0;
        for &b in &self.blocks {
            offs.push(acc);
            acc += b;
        }
        offs
    }
}

/// Block-diagonal element of a direct-sum algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraElement<T: Scalar> {
    shape: AlgebraShape,
    blocks: Vec<Mat<T>>,
}

/// Builds an element from its blocks, validating sizes against the shape.
pub fn embed<T: Scalar>(shape: &AlgebraShape, blocks: Vec<Mat<T>>) -> Result<AlgebraElement<T>> {
    if blocks.len() != shape.blocks().len() {
        return Err(Error::ShapeMismatch(format!(
            "expected {} blocks, got {}",
            shape.blocks().len(),
            blocks.len()
        )));
    }
    for (b, (&size, m)) in shape.blocks().iter().zip(&blocks).enumerate() {
        if m.dim() != size {
            return Err(Error::ShapeMismatch(format!(
                "block {b}: expected size {size}, got {}",
                m.dim()
            )));
        }
    }
    Ok(AlgebraElement { shape: shape.clone(), blocks })
}

impl<T: Scalar> AlgebraElement<T> {
    pub fn zero(shape: &AlgebraShape) -> Self {
        let blocks = shape.blocks().iter().map(|&b| Mat::zeros(b)).collect();
        AlgebraElement { shape: shape.clone(), blocks }
    }

    /// The unit `1_A`: identity on every block.
    pub fn one(shape: &AlgebraShape) -> Self {
        let blocks = shape.blocks().iter().map(|&b| Mat::identity(b)).collect();
        AlgebraElement { shape: shape.clone(), blocks }
    }

    /// Wraps a bare matrix as an element of the single-block algebra `M_n`.
    pub fn from_single(m: Mat<T>) -> Self {
        let shape = AlgebraShape::new(vec![m.dim()]).expect("positive size");
        AlgebraElement { shape, blocks: vec![m] }
    }

    pub fn shape(&self) -> &AlgebraShape {
        &self.shape
    }

    pub fn blocks(&self) -> &[Mat<T>] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &Mat<T> {
        &self.blocks[i]
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch(format!(
                "{:?} vs {:?}",
                self.shape.blocks(),
                other.shape.blocks()
            )));
        }
        Ok(())
    }

    fn zip_blocks(&self, other: &Self, f: impl Fn(&Mat<T>, &Mat<T>) -> Mat<T>) -> Result<Self> {
        self.check_shape(other)?;
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| f(a, b)).collect();
        Ok(AlgebraElement { shape: self.shape.clone(), blocks })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_blocks(other, |a, b| a.clone() + b.clone())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_blocks(other, |a, b| a.clone() - b.clone())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.zip_blocks(other, |a, b| a * b)
    }

    pub fn scale(&self, s: C<T>) -> Self {
        AlgebraElement {
            shape: self.shape.clone(),
            blocks: self.blocks.iter().map(|m| m.scale(s)).collect(),
        }
    }

    pub fn scale_re(&self, s: T) -> Self {
        AlgebraElement {
            shape: self.shape.clone(),
            blocks: self.blocks.iter().map(|m| m.scale_re(s)).collect(),
        }
    }

    pub fn adjoint(&self) -> Self {
        AlgebraElement {
            shape: self.shape.clone(),
            blocks: self.blocks.iter().map(Mat::adjoint).collect(),
        }
    }

    pub fn trace(&self) -> C<T> {
        let mut t = crate::scalar::c_zero();
        for b in &self.blocks {
            t = t + b.trace();
        }
        t
    }

    /// Operator norm of the direct sum = max over blocks.
    pub fn op_norm(&self) -> T {
        self.blocks
            .iter()
            .map(Mat::op_norm)
            .fold(T::zero(), |a, b| a.max(b))
    }

    pub fn dist(&self, other: &Self) -> T {
        self.sub(other).map(|d| d.op_norm()).unwrap_or_else(|_| T::infinity())
    }

    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        self.shape == other.shape && self.dist(other) <= tol
    }

    pub fn is_zero(&self, tol: T) -> bool {
        self.op_norm() <= tol
    }

    pub fn hermiticity_defect(&self) -> T {
        self.blocks
            .iter()
            .map(Mat::hermiticity_defect)
            .fold(T::zero(), |a, b| a.max(b))
    }

    /// Deviation from normality, `max_b |b b* - b* b|`.
    pub fn normality_defect(&self) -> T {
        self.blocks
            .iter()
            .map(|b| {
                let x = b.matmul(&b.adjoint()).expect("square");
                let y = b.adjoint().matmul(b).expect("square");
                (x - y).op_norm()
            })
            .fold(T::zero(), |a, b| a.max(b))
    }

    pub fn is_projection(&self, tol: &crate::tolerance::Tolerance<T>) -> bool {
        self.blocks.iter().all(|b| {
            b.hermiticity_defect() <= tol.eq_tol
                && (b.matmul(b).expect("square") - b.clone()).op_norm() <= tol.eq_tol
        })
    }

    /// Per-block ranks of a projection, read off block traces.
    pub fn block_ranks(&self) -> Vec<usize> {
        self.blocks.iter().map(crate::spectral::projection_rank).collect()
    }

    /// Total rank of a projection.
    pub fn rank(&self) -> usize {
        self.block_ranks().iter().sum()
    }

    /// Full `N x N` block-diagonal embedding.
    pub fn to_full(&self) -> Mat<T> {
        let n = self.shape.total_dim();
        let offs = self.shape.offsets();
        let mut out = Mat::zeros(n);
        for (b, m) in self.blocks.iter().enumerate() {
            let o = offs[b];
            for i in 0..m.dim() {
                for j in 0..m.dim() {
                    out[(o + i, o + j)] = m[(i, j)];
                }
            }
        }
        out
    }

    /// Extracts blocks from a full matrix, requiring off-block entries to
    /// vanish within `tol`.
    pub fn from_full(shape: &AlgebraShape, m: &Mat<T>, tol: T) -> Result<Self> {
        let n = shape.total_dim();
        if m.dim() != n {
            return Err(Error::DimensionMismatch(n, m.dim()));
        }
        let offs = shape.offsets();
        let mut blocks = Vec::with_capacity(shape.blocks().len());
        for (b, &size) in shape.blocks().iter().enumerate() {
            let o = offs[b];
            blocks.push(Mat::from_fn(size, |i, j| m[(o + i, o + j)]));
        }
        let candidate = AlgebraElement { shape: shape.clone(), blocks };
        if (candidate.to_full() - m.clone()).op_norm() > tol {
            return Err(Error::ShapeMismatch("matrix has entries outside the block diagonal".into()));
        }
        Ok(candidate)
    }
}

/// Corner compression `e a e`, computed blockwise.
pub fn corner<T: Scalar>(e: &AlgebraElement<T>, a: &AlgebraElement<T>) -> Result<AlgebraElement<T>> {
    e.mul(a)?.mul(e)
}

/// Jordan product on algebra elements.
pub fn jordan_product<T: Scalar>(
    a: &AlgebraElement<T>,
    b: &AlgebraElement<T>,
) -> Result<AlgebraElement<T>> {
    let ab = a.mul(b)?;
    let ba = b.mul(a)?;
    Ok(ab.add(&ba)?.scale_re(T::of(0.5)))
}

#[cfg(test)]
mod tests {
    use super::*;

    type E = AlgebraElement<f64>;

    #[test]
    fn shape_invariants() {
        assert!(AlgebraShape::new(vec![]).is_err());
        assert!(AlgebraShape::new(vec![2, 0]).is_err());
        let s = AlgebraShape::new(vec![2, 1]).unwrap();
        assert_eq!(s.total_dim(), 3);
        assert_eq!(s.algebra_dim(), 5);
        assert!(AlgebraShape::new(vec![2]).unwrap().is_exceptional());
        assert!(AlgebraShape::new(vec![1, 1]).unwrap().is_exceptional());
        assert!(!s.is_exceptional());
    }

    #[test]
    fn embed_validates_block_sizes() {
        let s = AlgebraShape::new(vec![2, 1]).unwrap();
        assert!(embed::<f64>(&s, vec![Mat::identity(2)]).is_err());
        assert!(embed::<f64>(&s, vec![Mat::identity(2), Mat::identity(2)]).is_err());
        assert!(embed::<f64>(&s, vec![Mat::identity(2), Mat::identity(1)]).is_ok());
    }

    #[test]
    fn corner_examples() {
        let s = AlgebraShape::new(vec![2]).unwrap();
        let a = embed(&s, vec![Mat::from_real(&[&[1.0, 2.0], &[3.0, 4.0]])]).unwrap();
        let one = E::one(&s);
        assert!(corner(&one, &a).unwrap().approx_eq(&a, 1e-12));

        let e = embed(&s, vec![Mat::from_real(&[&[1.0, 0.0], &[0.0, 0.0]])]).unwrap();
        assert!(corner(&e, &e).unwrap().approx_eq(&e, 1e-12));
        let expect = embed(&s, vec![Mat::from_real(&[&[1.0, 0.0], &[0.0, 0.0]])]).unwrap();
        assert!(corner(&e, &a).unwrap().approx_eq(&expect, 1e-12));
    }

    #[test]
    fn full_roundtrip_and_offblock_rejection() {
        let s = AlgebraShape::new(vec![2, 1]).unwrap();
        let a = embed(
            &s,
            vec![Mat::from_real(&[&[1.0, 2.0], &[3.0, 4.0]]), Mat::from_real(&[&[7.0]])],
        )
        .unwrap();
        let full = a.to_full();
        assert_eq!(full.dim(), 3);
        let back = E::from_full(&s, &full, 1e-12).unwrap();
        assert!(back.approx_eq(&a, 1e-12));

        let mut bad = full.clone();
        bad[(0, 2)] = num_complex::Complex::new(1.0, 0.0);
        assert!(E::from_full(&s, &bad, 1e-12).is_err());
    }

    #[test]
    fn norm_is_max_over_blocks() {
        let s = AlgebraShape::new(vec![2, 1]).unwrap();
        let a: E = embed(
            &s,
            vec![Mat::from_real(&[&[3.0, 0.0], &[0.0, 1.0]]), Mat::from_real(&[&[-5.0]])],
        )
        .unwrap();
        assert!((a.op_norm() - 5.0).abs() < 1e-12);
    }
}
