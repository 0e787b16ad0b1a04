//! Real scalar abstraction backing all complex matrix arithmetic.

use std::fmt;
use std::iter::Sum;

use num_complex::Complex;
use num_traits::{Float, FromPrimitive, NumAssign, ToPrimitive};

/// Real floating-point scalar: f32 or f64.
///
/// Every numerical kernel in this crate is generic over `Scalar`; the
/// crate root exports `f64`-backed aliases, which is what the CLI and
/// the verification suites use.
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + NumAssign + Sum<Self> + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    /// Lossless-enough conversion from an `f64` literal (tolerances, constants).
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("f64 constant representable in scalar type")
    }

    /// Conversion to `f64` for reporting.
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Complex scalar over the real type `T`.
pub type C<T> = Complex<T>;

/// Complex zero.
pub fn c_zero<T: Scalar>() -> C<T> {
    Complex::new(T::zero(), T::zero())
}

/// Complex one.
pub fn c_one<T: Scalar>() -> C<T> {
    Complex::new(T::one(), T::zero())
}

/// Real value as a complex scalar.
pub fn re<T: Scalar>(x: T) -> C<T> {
    Complex::new(x, T::zero())
}

/// Imaginary unit.
pub fn im_unit<T: Scalar>() -> C<T> {
    Complex::new(T::zero(), T::one())
}
