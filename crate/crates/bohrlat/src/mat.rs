//! Dense square complex matrices: the universal carrier for operators,
//! projections, and states.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;

use crate::eigen;
use crate::error::{Error, Result};
use crate::scalar::{c_zero, re, Scalar, C};
use crate::tolerance::Tolerance;

/// Dense `n x n` complex matrix, row-major storage.
#[derive(Clone, PartialEq)]
pub struct Mat<T: Scalar> {
    n: usize,
    data: Vec<C<T>>,
}

impl<T: Scalar> fmt::Debug for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.n, self.n)?;
        for i in 0..self.n {
            write!(f, "  ")?;
            for j in 0..self.n {
                let z = self[(i, j)];
                write!(f, "{:+.4}{:+.4}i  ", z.re.to_f64_lossy(), z.im.to_f64_lossy())?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl<T: Scalar> Mat<T> {
    pub fn zeros(n: usize) -> Self {
        Mat { n, data: vec![c_zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n);
        for i in 0..n {
            m[(i, i)] = re(T::one());
        }
        m
    }

    /// Matrix unit `E_{ij}`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Mat::zeros(n);
        m[(i, j)] = re(T::one());
        m
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> C<T>) -> Self {
        let mut m = Mat::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Builds from rows of `(re, im)` pairs; rows must form a square.
    pub fn from_rows(rows: &[Vec<(T, T)>]) -> Result<Self> {
        let n = rows.len();
        for r in rows {
            if r.len() != n {
                return Err(Error::DimensionMismatch(n, r.len()));
            }
        }
        let mut m = Mat::zeros(n);
        for (i, r) in rows.iter().enumerate() {
            for (j, &(x, y)) in r.iter().enumerate() {
                m[(i, j)] = Complex::new(x, y);
            }
        }
        Ok(m)
    }

    /// Real matrix shorthand for tests and fixtures.
    pub fn from_real(rows: &[&[f64]]) -> Self {
        let n = rows.len();
        let mut m = Mat::zeros(n);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), n, "square matrix expected");
            for (j, &x) in r.iter().enumerate() {
                m[(i, j)] = re(T::of(x));
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn data(&self) -> &[C<T>] {
        &self.data
    }

    /// Rank-one projection `v v*` onto the (normalized) vector `v`.
    pub fn outer_self(v: &[C<T>]) -> Self {
        let n = v.len();
        Mat::from_fn(n, |i, j| v[i] * v[j].conj())
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn adjoint(&self) -> Self {
        Mat::from_fn(self.n, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.n, |i, j| self[(j, i)])
    }

    /// Entrywise complex conjugate (the antiunitary companion of transpose).
    pub fn conj(&self) -> Self {
        Mat::from_fn(self.n, |i, j| self[(i, j)].conj())
    }

    pub fn scale(&self, s: C<T>) -> Self {
        Mat { n: self.n, data: self.data.iter().map(|&z| z * s).collect() }
    }

    pub fn scale_re(&self, s: T) -> Self {
        self.scale(re(s))
    }

    pub fn trace(&self) -> C<T> {
        let mut t = c_zero();
        for i in 0..self.n {
            t = t + self[(i, i)];
        }
        t
    }

    /// Applies the matrix to a vector.
    pub fn apply_vec(&self, v: &[C<T>]) -> Vec<C<T>> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|i| {
                let mut acc = c_zero();
                for j in 0..self.n {
                    acc = acc + self[(i, j)] * v[j];
                }
                acc
            })
            .collect()
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let n = self.n;
        let mut out = Mat::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a.re == T::zero() && a.im == T::zero() {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] = out[(i, j)] + a * other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    /// Frobenius norm; cheap bound used for convergence checks.
    pub fn frobenius_norm(&self) -> T {
        self.data.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt()
    }

    /// Operator norm = largest singular value, computed from `a* a`
    /// with the same Hermitian eigenroutine used everywhere else.
    pub fn op_norm(&self) -> T {
        if self.n == 0 {
            return T::zero();
        }
        let gram = self.adjoint().matmul(self).expect("same dim");
        let (vals, _) = eigen::hermitian_eigen(&gram);
        let top = *vals.last().expect("nonempty spectrum");
        top.max(T::zero()).sqrt()
    }

    /// Trace norm = sum of singular values.
    pub fn trace_norm(&self) -> T {
        if self.n == 0 {
            return T::zero();
        }
        let gram = self.adjoint().matmul(self).expect("same dim");
        let (vals, _) = eigen::hermitian_eigen(&gram);
        vals.iter().map(|&v| v.max(T::zero()).sqrt()).sum()
    }

    /// Operator-norm distance, the uniform equality gauge of the crate.
    pub fn dist(&self, other: &Self) -> T {
        (self.clone() - other.clone()).op_norm()
    }

    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        self.n == other.n && self.dist(other) <= tol
    }

    pub fn is_zero(&self, tol: T) -> bool {
        self.op_norm() <= tol
    }

    /// Deviation from self-adjointness in operator norm.
    pub fn hermiticity_defect(&self) -> T {
        (self.clone() - self.adjoint()).op_norm()
    }

    pub fn is_hermitian(&self, tol: T) -> bool {
        self.hermiticity_defect() <= tol
    }

    /// Hermitian part `(a + a*)/2`.
    pub fn herm_part(&self) -> Self {
        (self.clone() + self.adjoint()).scale_re(T::of(0.5))
    }

    /// Anti-Hermitian part divided by i: `c = -i/2 (a - a*)`, so `a = b + ic`.
    pub fn skew_part(&self) -> Self {
        let half_mi = Complex::new(T::zero(), -T::of(0.5));
        (self.clone() - self.adjoint()).scale(half_mi)
    }
}

impl<T: Scalar> std::ops::Index<(usize, usize)> for Mat<T> {
    type Output = C<T>;
    fn index(&self, (i, j): (usize, usize)) -> &C<T> {
        &self.data[i * self.n + j]
    }
}

impl<T: Scalar> std::ops::IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C<T> {
        &mut self.data[i * self.n + j]
    }
}

impl<T: Scalar> Add for Mat<T> {
    type Output = Mat<T>;
    fn add(self, rhs: Mat<T>) -> Mat<T> {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        Mat {
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| a + b).collect(),
        }
    }
}

impl<T: Scalar> Sub for Mat<T> {
    type Output = Mat<T>;
    fn sub(self, rhs: Mat<T>) -> Mat<T> {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        Mat {
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| a - b).collect(),
        }
    }
}

impl<T: Scalar> Neg for Mat<T> {
    type Output = Mat<T>;
    fn neg(self) -> Mat<T> {
        Mat { n: self.n, data: self.data.iter().map(|&a| -a).collect() }
    }
}

impl<T: Scalar> Mul for &Mat<T> {
    type Output = Mat<T>;
    fn mul(self, rhs: &Mat<T>) -> Mat<T> {
        self.matmul(rhs).expect("dimension mismatch")
    }
}

/// Jordan product `a o b = (ab + ba)/2`.
pub fn jordan_product<T: Scalar>(a: &Mat<T>, b: &Mat<T>) -> Result<Mat<T>> {
    let ab = a.matmul(b)?;
    let ba = b.matmul(a)?;
    Ok((ab + ba).scale_re(T::of(0.5)))
}

/// Trace norm as a free function mirroring the operation table.
pub fn trace_norm<T: Scalar>(a: &Mat<T>) -> T {
    a.trace_norm()
}

/// Projection predicate: `p^2 = p = p*` up to `eq_tol` in operator norm.
pub fn is_projection<T: Scalar>(p: &Mat<T>, tol: &Tolerance<T>) -> bool {
    if !p.is_finite() {
        return false;
    }
    if p.hermiticity_defect() > tol.eq_tol {
        return false;
    }
    let p2 = p.matmul(p).expect("square");
    (p2 - p.clone()).op_norm() <= tol.eq_tol
}

#[cfg(test)]
mod tests {
    use super::*;

    type M = Mat<f64>;

    #[test]
    fn jordan_unit_is_identity_and_projections_idempotent() {
        let b = M::from_real(&[&[1.0, 2.0], &[3.0, 4.0]]);
        let one = M::identity(2);
        let j = jordan_product(&one, &b).unwrap();
        assert!(j.approx_eq(&b, 1e-12));

        let e = M::from_real(&[&[1.0, 0.0], &[0.0, 0.0]]);
        let ee = jordan_product(&e, &e).unwrap();
        assert!(ee.approx_eq(&e, 1e-12));
    }

    #[test]
    fn jordan_of_anticommuting_pair_is_zero() {
        // ab = -ba for sigma_x, sigma_z.
        let a = M::from_real(&[&[0.0, 1.0], &[1.0, 0.0]]);
        let b = M::from_real(&[&[1.0, 0.0], &[0.0, -1.0]]);
        let j = jordan_product(&a, &b).unwrap();
        assert!(j.is_zero(1e-12));
    }

    #[test]
    fn jordan_dimension_mismatch_errors() {
        let a = M::identity(2);
        let b = M::identity(3);
        assert!(jordan_product(&a, &b).is_err());
    }

    #[test]
    fn projection_predicate() {
        let tol = Tolerance::default();
        assert!(is_projection(&M::identity(3), &tol));
        let h = M::from_real(&[&[0.5, 0.5], &[0.5, 0.5]]);
        assert!(is_projection(&h, &tol));
        let nilpotent = M::from_real(&[&[0.0, 1.0], &[0.0, 0.0]]);
        assert!(!is_projection(&nilpotent, &tol));
    }

    #[test]
    fn trace_norm_of_rank_r_projection_is_r() {
        let p = M::from_real(&[&[1.0, 0.0, 0.0], &[0.0, 1.0, 0.0], &[0.0, 0.0, 0.0]]);
        assert!((trace_norm(&p) - 2.0).abs() < 1e-12);
        assert!(trace_norm(&M::zeros(3)) < 1e-15);
    }

    #[test]
    fn trace_norm_e11_minus_h_is_sqrt2() {
        // Eigenvalues of E11 - h are +-1/sqrt(2).
        let e11 = M::from_real(&[&[1.0, 0.0], &[0.0, 0.0]]);
        let h = M::from_real(&[&[0.5, 0.5], &[0.5, 0.5]]);
        let d = e11 - h;
        assert!((trace_norm(&d) - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn op_norm_matches_known_values() {
        let m = M::from_real(&[&[3.0, 0.0], &[0.0, -4.0]]);
        assert!((m.op_norm() - 4.0).abs() < 1e-12);
        assert!(M::zeros(4).op_norm() < 1e-15);
    }

    #[test]
    fn herm_skew_split_reconstructs() {
        let a = Mat::<f64>::from_fn(3, |i, j| Complex::new((i + 2 * j) as f64, (i as f64) - 1.5));
        let b = a.herm_part();
        let c = a.skew_part();
        let ic = c.scale(Complex::new(0.0, 1.0));
        assert!((b + ic).approx_eq(&a, 1e-12));
    }
}
