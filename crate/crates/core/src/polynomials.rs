//! Dense univariate polynomials and the operators generating the semigroups
//! `S = <1 - t d/dx>` and `S~ = <(1 - t d/dx) exp(t d/dx)>`.
//!
//! Coefficients are stored in ascending degree order.

use std::ops::Deref;

use num_complex::Complex;
use num_traits::{Float, One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Coefficient, Real};

/// Largest degree accepted by the constructors.
pub const DEFAULT_MAX_DEGREE: usize = 64;

/// A polynomial with arbitrary leading coefficient.
///
/// Trailing zero coefficients are trimmed; the zero polynomial has an empty
/// coefficient vector.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> Poly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> C {
        self.coeffs.last().copied().unwrap_or_else(C::zero)
    }

    /// Horner evaluation.
    pub fn evaluate(&self, z: C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, &c| acc * z + c)
    }

    /// Horner evaluation at a complex point.
    pub fn evaluate_complex(&self, z: Complex<C::Real>) -> Complex<C::Real> {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex::zero(), |acc, &c| acc * z + c.to_complex())
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| c.scale(C::Real::from_usize_lossy(i)))
            .collect();
        Self::new(coeffs)
    }

    /// `q(x) = p(x + a)` by repeated synthetic division.
    pub fn taylor_shift(&self, a: C) -> Self {
        let mut c = self.coeffs.clone();
        let n = c.len();
        if a.is_zero() {
            return self.clone();
        }
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let next = c[j + 1];
                c[j] += a * next;
            }
        }
        Self::new(c)
    }

    pub fn scale(&self, s: C) -> Self {
        Self::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or_else(C::zero);
                let b = other.coeffs.get(i).copied().unwrap_or_else(C::zero);
                a + b
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-C::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Largest coefficient magnitude.
    pub fn max_coeff_magnitude(&self) -> C::Real {
        self.coeffs
            .iter()
            .map(|c| c.magnitude())
            .fold(C::Real::zero(), Float::max)
    }

    /// Divides through by the leading coefficient.
    pub fn to_monic(&self) -> Result<Monic<C>> {
        if self.degree().unwrap_or(0) == 0 {
            return Err(Error::Degree("cannot normalize a constant polynomial".into()));
        }
        let lead = self.leading();
        let mut coeffs: Vec<C> = self.coeffs.iter().map(|&c| c / lead).collect();
        *coeffs.last_mut().unwrap() = C::one();
        Monic::from_coeffs(coeffs)
    }

    /// Maximum relative coefficient discrepancy against `other`, normalized by
    /// the larger of the two coefficient magnitudes (or 1).
    pub fn relative_distance(&self, other: &Self) -> C::Real {
        let scale = Float::max(
            Float::max(self.max_coeff_magnitude(), other.max_coeff_magnitude()),
            C::Real::one(),
        );
        let diff = self.sub(other).max_coeff_magnitude();
        diff / scale
    }
}

/// A monic polynomial of degree at least one.
#[derive(Debug, Clone, PartialEq)]
pub struct Monic<C> {
    poly: Poly<C>,
}

impl<C: Coefficient> Deref for Monic<C> {
    type Target = Poly<C>;

    fn deref(&self) -> &Poly<C> {
        &self.poly
    }
}

impl<C: Coefficient> Monic<C> {
    /// Wraps an ascending coefficient sequence whose last entry is exactly one.
    pub fn from_coeffs(coeffs: Vec<C>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::Degree(format!(
                "need degree >= 1, got {} coefficient(s)",
                coeffs.len()
            )));
        }
        if coeffs.len() - 1 > DEFAULT_MAX_DEGREE {
            return Err(Error::Degree(format!(
                "degree {} exceeds cap {DEFAULT_MAX_DEGREE}",
                coeffs.len() - 1
            )));
        }
        if *coeffs.last().unwrap() != C::one() {
            return Err(Error::Degree("leading coefficient must be exactly 1".into()));
        }
        if coeffs.iter().any(|c| !c.all_finite()) {
            return Err(Error::ParameterDomain("non-finite coefficient".into()));
        }
        Ok(Self {
            poly: Poly { coeffs },
        })
    }

    /// Product of the linear factors `(x - r)`.
    pub fn from_roots(roots: &[C]) -> Result<Self> {
        if roots.is_empty() {
            return Err(Error::Degree("from_roots needs at least one root".into()));
        }
        let mut coeffs = Vec::with_capacity(roots.len() + 1);
        coeffs.push(C::one());
        for &r in roots {
            // multiply by (x - r)
            coeffs.push(C::zero());
            for j in (1..coeffs.len()).rev() {
                coeffs[j] = coeffs[j - 1] - r * coeffs[j];
            }
            coeffs[0] = -r * coeffs[0];
        }
        Self::from_coeffs(coeffs)
    }

    pub fn degree(&self) -> usize {
        self.poly.coeffs.len() - 1
    }

    pub fn as_poly(&self) -> &Poly<C> {
        &self.poly
    }

    pub fn into_poly(self) -> Poly<C> {
        self.poly
    }

    /// `n^{-1} p'`, monic of degree `n - 1`.
    pub fn normalized_derivative(&self) -> Result<Self> {
        if self.degree() < 2 {
            return Err(Error::Degree(
                "normalized derivative needs degree >= 2".into(),
            ));
        }
        self.derivative().to_monic()
    }

    pub fn taylor_shift(&self, a: C) -> Self {
        let mut poly = self.poly.taylor_shift(a);
        // Synthetic division leaves the leading coefficient untouched.
        debug_assert!(poly.leading() == C::one());
        *poly.coeffs.last_mut().unwrap() = C::one();
        Self { poly }
    }

    /// `p - t p'`: the generator `1 - t d/dx` of `S`.
    pub fn one_minus_lambda_d(&self, t: C) -> Self {
        let poly = self.poly.sub(&self.poly.derivative().scale(t));
        Self { poly }
    }

    /// `D_t p (x) = p(x + t) - t p'(x + t)`.
    pub fn apply_d_lambda(&self, t: C) -> Self {
        self.one_minus_lambda_d(t).taylor_shift(t)
    }

    pub fn apply_word(&self, word: &OperatorWord<C::Real>) -> Result<Self> {
        word.apply(self)
    }

    /// Sum of the zeros, read off the subleading coefficient.
    pub fn root_sum(&self) -> C {
        -self.poly.coeffs[self.degree() - 1]
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(C) -> D) -> Monic<D> {
        Monic {
            poly: Poly::new(self.poly.coeffs.iter().map(|&c| f(c)).collect()),
        }
    }
}

impl<T: Real> Monic<T> {
    pub fn to_complex(&self) -> Monic<Complex<T>> {
        self.map_coeffs(|c| Complex::new(c, T::zero()))
    }
}

impl<T: Real> Monic<Complex<T>> {
    /// The real polynomial when every coefficient has zero imaginary part.
    pub fn to_real(&self) -> Option<Monic<T>> {
        let coeffs: Option<Vec<T>> = self.coeffs().iter().map(|&c| T::from_complex(c)).collect();
        coeffs.map(|coeffs| Monic {
            poly: Poly::new(coeffs),
        })
    }
}

/// A generator of `S` or `S~`, or a pure shift.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OperatorFactor<T> {
    /// `exp(mu d/dx)`, i.e. `p(x) -> p(x + mu)`.
    Shift(T),
    /// `1 - t d/dx`.
    OneMinusLambdaD(T),
    /// `(1 - t d/dx) exp(t d/dx)`; the only factor accepting a complex parameter.
    DLambda(Complex<T>),
}

/// An ordered product of operator factors, applied left factor first.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct OperatorWord<T> {
    pub factors: Vec<OperatorFactor<T>>,
}

impl<T: Real> OperatorWord<T> {
    pub fn new(factors: Vec<OperatorFactor<T>>) -> Self {
        Self { factors }
    }

    pub fn apply<C: Coefficient<Real = T>>(&self, p: &Monic<C>) -> Result<Monic<C>> {
        let mut out = p.clone();
        for factor in &self.factors {
            out = match *factor {
                OperatorFactor::Shift(mu) => out.taylor_shift(C::from_real(mu)),
                OperatorFactor::OneMinusLambdaD(t) => out.one_minus_lambda_d(C::from_real(t)),
                OperatorFactor::DLambda(t) => {
                    let t = C::from_complex(t).ok_or_else(|| {
                        Error::ParameterDomain(format!(
                            "complex parameter {t} applied to a real polynomial"
                        ))
                    })?;
                    out.apply_d_lambda(t)
                }
            };
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn real(c: &[f64]) -> Monic<f64> {
        Monic::from_coeffs(c.to_vec()).unwrap()
    }

    #[test]
    fn from_roots_examples() {
        assert_eq!(Monic::from_roots(&[-1.0, 1.0]).unwrap().coeffs(), &[-1.0, 0.0, 1.0]);
        assert_eq!(Monic::from_roots(&[0.0, 0.0, 0.0]).unwrap().coeffs(), &[0.0, 0.0, 0.0, 1.0]);
        assert_eq!(Monic::from_roots(&[1.0, 2.0]).unwrap().coeffs(), &[2.0, -3.0, 1.0]);
        assert!(matches!(Monic::<f64>::from_roots(&[]), Err(Error::Degree(_))));
    }

    #[test]
    fn from_coeffs_rejects_non_monic() {
        assert!(Monic::from_coeffs(vec![1.0, 2.0]).is_err());
        assert!(Monic::from_coeffs(vec![1.0]).is_err());
        assert!(Monic::from_coeffs(vec![0.0; DEFAULT_MAX_DEGREE + 2]).is_err());
    }

    #[test]
    fn evaluate_examples() {
        let p = real(&[-1.0, 0.0, 1.0]);
        assert_eq!(p.evaluate(0.0), -1.0);
        assert_eq!(p.evaluate(1.0), 0.0);
        let q = real(&[0.0, 2.0, -3.0, 1.0]);
        assert_eq!(q.evaluate(-1.0), -6.0);
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(real(&[-1.0, 0.0, 1.0]).derivative().coeffs(), &[0.0, 2.0]);
        assert_eq!(real(&[0.0, 0.0, 0.0, 1.0]).derivative().coeffs(), &[0.0, 0.0, 3.0]);
        assert_eq!(real(&[2.0, -3.0, 1.0]).derivative().coeffs(), &[-3.0, 2.0]);
    }

    #[test]
    fn normalized_derivative_examples() {
        assert_eq!(real(&[-1.0, 0.0, 1.0]).normalized_derivative().unwrap().coeffs(), &[0.0, 1.0]);
        assert_eq!(
            real(&[0.0, 0.0, 0.0, 1.0]).normalized_derivative().unwrap().coeffs(),
            &[0.0, 0.0, 1.0]
        );
        let d = real(&[-6.0, 11.0, -6.0, 1.0]).normalized_derivative().unwrap();
        assert_relative_eq!(d.coeffs()[0], 11.0 / 3.0, epsilon = 1e-15);
        assert_eq!(d.coeffs()[1], -4.0);
        assert_eq!(d.coeffs()[2], 1.0);
        assert!(matches!(real(&[1.0, 1.0]).normalized_derivative(), Err(Error::Degree(_))));
    }

    #[test]
    fn taylor_shift_examples() {
        assert_eq!(real(&[0.0, 0.0, 1.0]).taylor_shift(1.0).coeffs(), &[1.0, 2.0, 1.0]);
        let p = real(&[3.0, -1.0, 0.5, 1.0]);
        assert_eq!(p.taylor_shift(0.0), p);
        assert_eq!(real(&[0.0, -1.0, 0.0, 1.0]).taylor_shift(-1.0).coeffs(), &[0.0, 2.0, -3.0, 1.0]);
    }

    #[test]
    fn d_lambda_examples() {
        let p = real(&[-1.0, 0.0, 1.0]);
        assert_eq!(p.apply_d_lambda(0.0), p);
        assert_eq!(p.apply_d_lambda(1.0).coeffs(), &[-2.0, 0.0, 1.0]);
        assert_eq!(real(&[0.0, 0.0, 1.0]).apply_d_lambda(2.0).coeffs(), &[-4.0, 0.0, 1.0]);
    }

    #[test]
    fn operator_word_examples() {
        let p = real(&[-1.0, 0.0, 1.0]);
        assert_eq!(OperatorWord::new(vec![]).apply(&p).unwrap(), p);
        let w = OperatorWord::new(vec![OperatorFactor::OneMinusLambdaD(1.0)]);
        assert_eq!(w.apply(&p).unwrap().coeffs(), &[-1.0, -2.0, 1.0]);
        let w = OperatorWord::new(vec![
            OperatorFactor::DLambda(Complex::new(1.0, 0.0)),
            OperatorFactor::DLambda(Complex::new(-1.0, 0.0)),
        ]);
        assert_eq!(w.apply(&p).unwrap().coeffs(), &[-3.0, 0.0, 1.0]);
    }

    #[test]
    fn complex_d_lambda_on_real_polynomial_is_rejected() {
        let p = real(&[-1.0, 0.0, 1.0]);
        let w = OperatorWord::new(vec![OperatorFactor::DLambda(Complex::new(0.0, 0.1))]);
        assert!(matches!(w.apply(&p), Err(Error::ParameterDomain(_))));
        // fine once the polynomial is complex
        let q = w.apply(&p.to_complex()).unwrap();
        assert_eq!(q.degree(), 2);
    }

    #[test]
    fn f32_instantiation() {
        let p = Monic::<f32>::from_roots(&[1.0, 2.0]).unwrap();
        assert_eq!(p.coeffs(), &[2.0f32, -3.0, 1.0]);
        assert_eq!(p.apply_d_lambda(0.0), p);
    }

    #[test]
    fn to_real_round_trip() {
        let p = real(&[2.0, -3.0, 1.0]);
        assert_eq!(p.to_complex().to_real().unwrap(), p);
        let z = Monic::from_coeffs(vec![Complex::new(1.0, 1.0), Complex::new(1.0, 0.0)]).unwrap();
        assert!(z.to_real().is_none());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn roots() -> impl Strategy<Value = Vec<f64>> {
            prop::collection::vec(-3.0f64..3.0, 1..7)
        }

        proptest! {
            #[test]
            fn d_lambda_keeps_the_root_sum(z in roots(), t in -2.0f64..2.0) {
                let p = Monic::from_roots(&z).unwrap();
                let q = p.apply_d_lambda(t);
                let scale = p.coeffs().iter().map(|c| c.abs()).fold(1.0, f64::max);
                prop_assert!((q.root_sum() - p.root_sum()).abs() < 1e-10 * scale);
            }

            #[test]
            fn shifts_compose(z in roots(), a in -2.0f64..2.0, b in -2.0f64..2.0) {
                let p = Monic::from_roots(&z).unwrap();
                let two = p.taylor_shift(a).taylor_shift(b);
                let one = p.taylor_shift(a + b);
                prop_assert!(two.as_poly().relative_distance(one.as_poly()) < 1e-10);
            }

            #[test]
            fn generator_factors_commute(z in roots(), s in -2.0f64..2.0, t in -2.0f64..2.0) {
                let p = Monic::from_roots(&z).unwrap();
                let st = p.one_minus_lambda_d(s).one_minus_lambda_d(t);
                let ts = p.one_minus_lambda_d(t).one_minus_lambda_d(s);
                prop_assert!(st.as_poly().relative_distance(ts.as_poly()) < 1e-12);
            }
        }
    }
}
