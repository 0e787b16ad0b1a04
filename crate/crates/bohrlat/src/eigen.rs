//! Cyclic Jacobi eigensolver for complex Hermitian matrices.
//!
//! This is the crate's only numerical kernel: spectral decompositions,
//! operator norms, and trace norms all reduce to it. Jacobi is a good fit
//! for desk-scale dimensions (n <= 12): deterministic, simple, and accurate
//! to a few ulps even on degenerate spectra.

use num_complex::Complex;

use crate::mat::Mat;
use crate::scalar::{Scalar, C};

const MAX_SWEEPS: usize = 80;

/// Eigendecomposition of the Hermitian part of `a`.
///
/// Returns eigenvalues in ascending order together with an orthonormal
/// basis of eigenvectors, `vecs[k]` belonging to `vals[k]`. The input is
/// symmetrized first, so callers are responsible for checking Hermiticity
/// to whatever tolerance they care about.
pub fn hermitian_eigen<T: Scalar>(a: &Mat<T>) -> (Vec<T>, Vec<Vec<C<T>>>) {
    let n = a.dim();
    if n == 0 {
        return (vec![], vec![]);
    }
    let mut m = a.herm_part();
    let mut v = Mat::<T>::identity(n);

    let scale = m.frobenius_norm().max(T::one());
    let stop = T::epsilon() * scale * T::of(n as f64);

    for _ in 0..MAX_SWEEPS {
        let mut off = T::zero();
        for p in 0..n {
            for q in (p + 1)..n {
                off = off + m[(p, q)].norm_sqr();
            }
        }
        if off.sqrt() <= stop {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut m, &mut v, p, q, stop);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<T> = (0..n).map(|i| m[(i, i)].re).collect();
    order.sort_by(|&i, &j| diag[i].partial_cmp(&diag[j]).unwrap().then(i.cmp(&j)));

    let vals = order.iter().map(|&i| diag[i]).collect();
    let vecs = order
        .iter()
        .map(|&k| (0..n).map(|i| v[(i, k)]).collect())
        .collect();
    (vals, vecs)
}

/// One complex Jacobi rotation annihilating `m[(p, q)]`.
fn rotate<T: Scalar>(m: &mut Mat<T>, v: &mut Mat<T>, p: usize, q: usize, skip: T) {
    let gamma = m[(p, q)];
    let g = gamma.norm();
    if g <= skip * T::of(1e-3) || g == T::zero() {
        return;
    }
    let alpha = m[(p, p)].re;
    let beta = m[(q, q)].re;

    let tau = (beta - alpha) / (g + g);
    let t = if tau >= T::zero() {
        T::one() / (tau + (T::one() + tau * tau).sqrt())
    } else {
        -T::one() / (-tau + (T::one() + tau * tau).sqrt())
    };
    let c = T::one() / (T::one() + t * t).sqrt();
    let sigma = t * c;
    let phase = gamma / Complex::new(g, T::zero());
    let s = phase * Complex::new(sigma, T::zero());
    let cc = Complex::new(c, T::zero());

    let n = m.dim();
    // m <- m R : columns p and q.
    for i in 0..n {
        let mip = m[(i, p)];
        let miq = m[(i, q)];
        m[(i, p)] = mip * cc - miq * s.conj();
        m[(i, q)] = mip * s + miq * cc;
    }
    // m <- R* m : rows p and q.
    for j in 0..n {
        let mpj = m[(p, j)];
        let mqj = m[(q, j)];
        m[(p, j)] = mpj * cc - mqj * s;
        m[(q, j)] = mpj * s.conj() + mqj * cc;
    }
    // Pin exact values on the pivot; roundoff there feeds later sweeps.
    m[(p, q)] = Complex::new(T::zero(), T::zero());
    m[(q, p)] = Complex::new(T::zero(), T::zero());
    let app = m[(p, p)].re;
    let aqq = m[(q, q)].re;
    m[(p, p)] = Complex::new(app, T::zero());
    m[(q, q)] = Complex::new(aqq, T::zero());

    // v <- v R.
    for i in 0..n {
        let vip = v[(i, p)];
        let viq = v[(i, q)];
        v[(i, p)] = vip * cc - viq * s.conj();
        v[(i, q)] = vip * s + viq * cc;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::re;

    fn reconstruct(vals: &[f64], vecs: &[Vec<C<f64>>]) -> Mat<f64> {
        let n = vecs[0].len();
        let mut acc = Mat::<f64>::zeros(n);
        for (l, v) in vals.iter().zip(vecs) {
            acc = acc + Mat::outer_self(v).scale_re(*l);
        }
        acc
    }

    #[test]
    fn diagonal_matrix_is_fixed_point() {
        let a = Mat::<f64>::from_real(&[&[1.0, 0.0, 0.0], &[0.0, 2.0, 0.0], &[0.0, 0.0, 3.0]]);
        let (vals, vecs) = hermitian_eigen(&a);
        assert_eq!(vals.len(), 3);
        assert!((vals[0] - 1.0).abs() < 1e-14);
        assert!((vals[2] - 3.0).abs() < 1e-14);
        assert!(reconstruct(&vals, &vecs).approx_eq(&a, 1e-13));
    }

    #[test]
    fn two_by_two_hand_oracle() {
        // sigma_x has eigenvalues -1, +1.
        let a = Mat::<f64>::from_real(&[&[0.0, 1.0], &[1.0, 0.0]]);
        let (vals, vecs) = hermitian_eigen(&a);
        assert!((vals[0] + 1.0).abs() < 1e-14);
        assert!((vals[1] - 1.0).abs() < 1e-14);
        assert!(reconstruct(&vals, &vecs).approx_eq(&a, 1e-13));
    }

    #[test]
    fn complex_hermitian_roundtrip() {
        // Deterministic pseudo-random Hermitian fill.
        let n = 7;
        let mut a = Mat::<f64>::zeros(n);
        let mut x = 0.1f64;
        for i in 0..n {
            for j in i..n {
                x = (x * 997.0 + 0.137).sin();
                let y = (x * 31.0).cos();
                if i == j {
                    a[(i, j)] = re(x);
                } else {
                    a[(i, j)] = Complex::new(x, y);
                    a[(j, i)] = Complex::new(x, -y);
                }
            }
        }
        let (vals, vecs) = hermitian_eigen(&a);
        assert!(reconstruct(&vals, &vecs).approx_eq(&a, 1e-12));
        // Orthonormality of the returned basis.
        for i in 0..n {
            for j in 0..n {
                let mut dot = Complex::new(0.0, 0.0);
                for k in 0..n {
                    dot += vecs[i][k].conj() * vecs[j][k];
                }
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((dot.re - expect).abs() < 1e-12 && dot.im.abs() < 1e-12);
            }
        }
    }

    #[test]
    fn zero_matrix() {
        let (vals, _) = hermitian_eigen(&Mat::<f64>::zeros(4));
        assert!(vals.iter().all(|v| v.abs() < 1e-15));
    }
}
