//! Numerical laboratory for the spectral (majorization) order on zeros of
//! polynomials under the differential operators
//! `D_t = (1 - t d/dx) exp(t d/dx)`.
//!
//! The numeric core is generic over the scalar field ([`Real`] is `f32` or
//! `f64`; polynomial coefficients may also be complex). The aliases below fix
//! the scalar to `f64`, which is what the experiment suites and the CLI use.

pub mod contractions;
pub mod error;
pub mod experiments;
pub mod io;
pub mod order;
pub mod polynomials;
pub mod rootfinding;
pub mod scalar;

pub use num_complex::Complex;

pub use error::{Error, Result};
pub use scalar::{Coefficient, Real};

pub type Complex64 = Complex<f64>;

pub type RealPolynomial = polynomials::Monic<f64>;
pub type ComplexPolynomial = polynomials::Monic<Complex64>;
pub type OperatorWord = polynomials::OperatorWord<f64>;
pub type OperatorFactor = polynomials::OperatorFactor<f64>;

pub type RootMultiset = rootfinding::SortedRoots<f64>;
pub type PointSet2D = rootfinding::PlanarPoints<f64>;
pub type Trajectory = rootfinding::Trajectory<f64>;

pub type DoublyStochasticMatrix = order::DoublyStochastic<f64>;
pub type ComparisonVerdict = order::Verdict<f64>;
pub type ContractionStep = contractions::Contraction<f64>;
pub type ContractionChain = contractions::Chain<f64>;

/// Single-precision aliases.
pub mod f32 {
    pub type RealPolynomial = crate::polynomials::Monic<f32>;
    pub type ComplexPolynomial = crate::polynomials::Monic<crate::Complex<f32>>;
    pub type RootMultiset = crate::rootfinding::SortedRoots<f32>;
    pub type DoublyStochasticMatrix = crate::order::DoublyStochastic<f32>;
}
