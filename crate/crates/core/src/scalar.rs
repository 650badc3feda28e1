//! Scalar traits shared by every numeric routine in the crate.
//!
//! [`Real`] is the floating-point field (`f32` or `f64`); [`Coefficient`]
//! covers both a real field and its complexification so that polynomial code
//! is written once.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, Num, NumAssign, ToPrimitive};

/// Real floating point scalar: `f32` or `f64`.
pub trait Real:
    Coefficient<Real = Self>
    + Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + 'static
{
    /// Converts an `f64` literal. Lossy for `f32`, exact for `f64`.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    fn from_usize_lossy(n: usize) -> Self {
        Self::from_usize(n).expect("usize representable")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// Tolerance floor: a tolerance requested in `f64` units never drops
    /// below a small multiple of this type's machine epsilon.
    fn tol(requested: f64, eps_multiple: f64) -> Self {
        let floor = Self::epsilon() * Self::lit(eps_multiple);
        Self::lit(requested).max(floor)
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// A polynomial coefficient: either a [`Real`] or a [`Complex`] over one.
pub trait Coefficient:
    Copy + PartialEq + Debug + Send + Sync + Num + NumAssign + Neg<Output = Self> + 'static
{
    type Real: Real;

    fn from_real(r: Self::Real) -> Self;

    /// `None` when the value has a non-zero imaginary part and `Self` is real.
    fn from_complex(z: Complex<Self::Real>) -> Option<Self>;

    fn to_complex(self) -> Complex<Self::Real>;

    /// Absolute value (modulus for complex numbers).
    fn magnitude(self) -> Self::Real;

    fn scale(self, r: Self::Real) -> Self {
        self * Self::from_real(r)
    }

    fn all_finite(self) -> bool;
}

macro_rules! impl_real_coefficient {
    ($t:ty) => {
        impl Coefficient for $t {
            type Real = $t;

            fn from_real(r: $t) -> Self {
                r
            }

            fn from_complex(z: Complex<$t>) -> Option<Self> {
                (z.im == 0.0).then_some(z.re)
            }

            fn to_complex(self) -> Complex<$t> {
                Complex::new(self, 0.0)
            }

            fn magnitude(self) -> $t {
                self.abs()
            }

            fn all_finite(self) -> bool {
                <$t>::is_finite(self)
            }
        }
    };
}

impl_real_coefficient!(f32);
impl_real_coefficient!(f64);

impl<T: Real> Coefficient for Complex<T> {
    type Real = T;

    fn from_real(r: T) -> Self {
        Complex::new(r, T::zero())
    }

    fn from_complex(z: Complex<T>) -> Option<Self> {
        Some(z)
    }

    fn to_complex(self) -> Complex<T> {
        self
    }

    fn magnitude(self) -> T {
        self.norm()
    }

    fn all_finite(self) -> bool {
        Float::is_finite(self.re) && Float::is_finite(self.im)
    }
}
