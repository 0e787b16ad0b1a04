//! Desk-scale laboratory for finite-dimensional C*-algebras.
//!
//! The crate models a finite-dimensional C*-algebra as a direct sum of
//! complex matrix blocks and provides, on top of that:
//!
//! * dense complex matrix arithmetic with a single Hermitian eigenroutine
//!   behind spectral decompositions and norms ([`mat`], [`eigen`],
//!   [`spectral`], [`algebra`]);
//! * finite partition lattices with the order-theoretic machinery used to
//!   recover point bijections from lattice data ([`partitions`]);
//! * the poset of unital commutative subalgebras, with elements encoded as
//!   orthogonal resolutions of the identity ([`csub`]);
//! * the orthomodular poset of projections and its Boolean subalgebras
//!   ([`omp`]);
//! * the six classical symmetry representations (Wigner, Kadison, Jordan,
//!   Ludwig, von Neumann, Bohr) and all pairwise conversions ([`symmetry`]);
//! * reconstruction of Jordan maps and (anti)unitary generators from order
//!   isomorphism data ([`reconstruct`]).
//!
//! All numerics are generic over the real scalar via [`scalar::Scalar`];
//! the aliases at the crate root fix `f64`, which is what the CLI and the
//! verification suites use.

pub mod algebra;
pub mod certificate;
pub mod csub;
pub mod eigen;
pub mod error;
pub mod mat;
pub mod omp;
pub mod partitions;
pub mod reconstruct;
pub mod sample;
pub mod scalar;
pub mod schema;
pub mod spectral;
pub mod symmetry;
pub mod tolerance;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Double-precision matrix, the working type of the CLI and test suites.
pub type Matrix = mat::Mat<f64>;
/// Single-precision matrix.
pub type Matrix32 = mat::Mat<f32>;
/// Double-precision algebra element.
pub type Element = algebra::AlgebraElement<f64>;
/// Double-precision resolution of the identity.
// pub type Res = csub::Resolution<f64>;
/// Double-precision tolerance bundle.
pub type Tol = tolerance::Tolerance<f64>;
