//! JSON encodings of combinations and tensors.

use serde_json::{json, Value};

use crate::combinatorics::{parse_element, Basis, BasisKind, Tensor};
use crate::linear::{parse_scalar, scalar_to_string, LinComb};

pub const SCHEMA: &str = "operad-forge/report/v1";

/// Terms sorted by the encoding of their basis element.
pub fn lincomb_json(x: &LinComb<Basis>) -> Value {
    let mut terms: Vec<(String, String)> = x.iter().map(|(b, c)| (b.to_string(), scalar_to_string(c))).collect();
    terms.sort();
    Value::Array(terms.into_iter().map(|(b, c)| json!({"coeff": c, "basis": b})).collect())
}

pub fn tensor_json(x: &LinComb<Tensor>) -> Value {
    let mut terms: Vec<(Vec<String>, String)> =
        x.iter().map(|(t, c)| (t.0.iter().map(|b| b.to_string()).collect(), scalar_to_string(c))).collect();
    terms.sort();
    Value::Array(terms.into_iter().map(|(b, c)| json!({"coeff": c, "basis": b})).collect())
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum DecodeError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("expected an array of {{\"coeff\", \"basis\"}} terms")]
    Shape,
    #[error("bad coefficient '{0}'")]
    Coeff(String),
    #[error(transparent)]
    Parse(#[from] crate::combinatorics::ParseError),
}

/// Reads the encoding produced by [`lincomb_json`]; a bare leaf is ambiguous, so the kind is given.
pub fn decode_lincomb(kind: BasisKind, text: &str) -> Result<LinComb<Basis>, DecodeError> {
    let v: Value = serde_json::from_str(text).map_err(|e| DecodeError::Json(e.to_string()))?;
    let terms = v.as_array().ok_or(DecodeError::Shape)?;
    let mut out = LinComb::zero();
    for t in terms {
        let c = t.get("coeff").and_then(Value::as_str).ok_or(DecodeError::Shape)?;
        let b = t.get("basis").and_then(Value::as_str).ok_or(DecodeError::Shape)?;
        let coeff = parse_scalar(c).ok_or_else(|| DecodeError::Coeff(c.to_string()))?;
        out.add_term(parse_element(kind, b)?, coeff);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::parse_any;
    use crate::linear::frac;

    #[test]
    fn round_trip() {
        let mut x = LinComb::zero();
        x.add_term(parse_any("1(2)").unwrap(), frac(-1, 2));
        x.add_term(parse_any("[1,2]").unwrap(), frac(3, 1));
        let text = lincomb_json(&x).to_string();
        assert_eq!(text, r#"[{"basis":"1(2)","coeff":"-1/2"},{"basis":"[1,2]","coeff":"3"}]"#);
        assert_eq!(decode_lincomb(BasisKind::Tree, &text), Err(DecodeError::Parse(parse_element(BasisKind::Tree, "[1,2]").unwrap_err())));
        let mut t = LinComb::zero();
        t.add_term(parse_any("1(2)").unwrap(), frac(-1, 2));
        assert_eq!(decode_lincomb(BasisKind::Tree, &lincomb_json(&t).to_string()).unwrap(), t);
        assert!(decode_lincomb(BasisKind::Tree, "{}").is_err());
        assert!(decode_lincomb(BasisKind::Tree, r#"[{"coeff":"1/0","basis":"1"}]"#).is_err());
    }
}
