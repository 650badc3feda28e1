use horder::io::{format_polynomial, parse_polynomial, AnyPolynomial};
use horder::Error;
use proptest::prelude::*;

proptest! {
    #[test]
    fn real_coefficients_round_trip(c in prop::collection::vec(-1e6f64..1e6, 1..9)) {
        let mut coeffs = c;
        coeffs.push(1.0);
        let text = serde_json::json!({ "coeffs": coeffs }).to_string();
        let p = parse_polynomial(&text).unwrap();
        let again = parse_polynomial(&format_polynomial(&p)).unwrap();
        prop_assert_eq!(&p, &again);
        match p {
            AnyPolynomial::Real(m) => prop_assert_eq!(m.coeffs(), &coeffs[..]),
            AnyPolynomial::Complex(_) => prop_assert!(false, "real input parsed as complex"),
        }
    }

    #[test]
    fn complex_roots_round_trip(z in prop::collection::vec((-3.0f64..3.0, -3.0f64..3.0), 1..6)) {
        let roots: Vec<[f64; 2]> = z.iter().map(|&(a, b)| [a, b]).collect();
        let text = serde_json::json!({ "roots": roots }).to_string();
        let p = parse_polynomial(&text).unwrap();
        prop_assert_eq!(p.degree(), z.len());
        prop_assert_eq!(parse_polynomial(&format_polynomial(&p)).unwrap(), p);
    }
}

#[test]
fn rejects_ambiguous_objects() {
    for text in [r#"{"coeffs": [1, 1], "roots": [1]}"#, r#"{}"#, r#"{"coeffs": [1, 1], "x": 2}"#, "[1, 2]"] {
        assert!(matches!(parse_polynomial(text), Err(Error::Parse(_))), "{text}");
    }
}

#[test]
fn roots_build_monic_coefficients() {
    let p = parse_polynomial(r#"{"roots": [1, -1]}"#).unwrap();
    assert_eq!(format_polynomial(&p), r#"{"coeffs":[-1.0,0.0,1.0]}"#);
}
