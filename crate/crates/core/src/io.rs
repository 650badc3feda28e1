//! JSON text format for polynomials:
//! `{"coeffs": [c0, c1, ..., 1]}` (ascending, monic) or `{"roots": [r1, ..., rn]}`,
//! with complex scalars written as `[re, im]`.

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::polynomials::Monic;
use crate::Complex64;

/// A parsed polynomial; complex as soon as any entry is written as a pair.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyPolynomial {
    Real(Monic<f64>),
    Complex(Monic<Complex64>),
}

impl AnyPolynomial {
    pub fn degree(&self) -> usize {
        match self {
            AnyPolynomial::Real(p) => p.degree(),
            AnyPolynomial::Complex(p) => p.degree(),
        }
    }

    pub fn to_complex(&self) -> Monic<Complex64> {
        match self {
            AnyPolynomial::Real(p) => p.to_complex(),
            AnyPolynomial::Complex(p) => p.clone(),
        }
    }

    /// The real polynomial, also when a complex one has zero imaginary parts.
    pub fn to_real(&self) -> Option<Monic<f64>> {
        match self {
            AnyPolynomial::Real(p) => Some(p.clone()),
            AnyPolynomial::Complex(p) => p.to_real(),
        }
    }
}

impl Serialize for AnyPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(1))?;
        match self {
            AnyPolynomial::Real(p) => map.serialize_entry("coeffs", p.coeffs())?,
            AnyPolynomial::Complex(p) => {
                let pairs: Vec<[f64; 2]> = p.coeffs().iter().map(|c| [c.re, c.im]).collect();
                map.serialize_entry("coeffs", &pairs)?
            }
        }
        map.end()
    }
}

enum Scalar {
    Real(f64),
    Complex(Complex64),
}

impl Scalar {
    fn complex(&self) -> Complex64 {
        match *self {
            Scalar::Real(x) => Complex64::new(x, 0.0),
            Scalar::Complex(z) => z,
        }
    }
}

fn parse_scalar(v: &Value) -> Result<Scalar> {
    let number = |v: &Value| {
        v.as_f64()
            .ok_or_else(|| Error::Parse(format!("expected a number, found {v}")))
    };
    match v {
        Value::Number(_) => Ok(Scalar::Real(number(v)?)),
        Value::Array(pair) if pair.len() == 2 => Ok(Scalar::Complex(Complex64::new(number(&pair[0])?, number(&pair[1])?))),
        other => Err(Error::Parse(format!("expected a number or [re, im], found {other}"))),
    }
}

/// Parses the polynomial JSON format.
pub fn parse_polynomial(text: &str) -> Result<AnyPolynomial> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    polynomial_from_value(&value)
}

pub fn polynomial_from_value(value: &Value) -> Result<AnyPolynomial> {
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Parse("expected an object with \"coeffs\" or \"roots\"".into()))?;
    let (key, list) = match (obj.get("coeffs"), obj.get("roots")) {
        (Some(c), None) => ("coeffs", c),
        (None, Some(r)) => ("roots", r),
        _ => return Err(Error::Parse("expected exactly one of \"coeffs\" and \"roots\"".into())),
    };
    if obj.len() != 1 {
        return Err(Error::Parse(format!("unexpected fields besides \"{key}\"")));
    }
    let entries = list
        .as_array()
        .ok_or_else(|| Error::Parse(format!("\"{key}\" must be an array")))?
        .iter()
        .map(parse_scalar)
        .collect::<Result<Vec<_>>>()?;
    let complex = entries.iter().any(|s| matches!(s, Scalar::Complex(_)));
    if complex {
        let values: Vec<Complex64> = entries.iter().map(Scalar::complex).collect();
        let p = if key == "coeffs" { Monic::from_coeffs(values) } else { Monic::from_roots(&values) };
        Ok(AnyPolynomial::Complex(p?))
    } else {
        let values: Vec<f64> = entries.iter().map(|s| s.complex().re).collect();
        let p = if key == "coeffs" { Monic::from_coeffs(values) } else { Monic::from_roots(&values) };
        Ok(AnyPolynomial::Real(p?))
    }
}

/// Compact `{"coeffs": [...]}` with shortest round-trip number formatting.
pub fn format_polynomial(p: &AnyPolynomial) -> String {
    serde_json::to_string(p).expect("finite coefficients serialize")
}

pub fn real_polynomial_value(p: &Monic<f64>) -> Value {
    serde_json::to_value(AnyPolynomial::Real(p.clone())).expect("finite coefficients serialize")
}

pub fn complex_polynomial_value(p: &Monic<Complex64>) -> Value {
    serde_json::to_value(AnyPolynomial::Complex(p.clone())).expect("finite coefficients serialize")
}

/// A `[re, im]` pair or a plain number.
pub fn parse_complex(text: &str) -> Result<Complex64> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(parse_scalar(&value)?.complex())
}
