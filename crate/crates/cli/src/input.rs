//! Configuration file parsing.
//!
//! ```json
//! { "field": "Q", "lines": [["1", "0", "0"], ["0", "1", "-1/2"], ...] }
//! { "field": { "cyclotomic": 3 }, "lines": [[["1"], ["0", "1"], ["0"]], ...] }
//! ```
//!
//! Rational coefficients are strings "p/q" (or bare integers); cyclotomic
//! coefficients are arrays of rational strings, one entry per power of the
//! root of unity.

use lineal_core::config::{Configuration, ProjLine};
use lineal_core::scalar::{cyclotomic_degree, FieldSpec, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::Value;
use std::str::FromStr;

pub fn parse_rational(text: &str) -> Result<BigRational, String> {
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        let n = BigInt::from_str(num.trim()).map_err(|e| format!("bad numerator: {e}"))?;
        let d = BigInt::from_str(den.trim()).map_err(|e| format!("bad denominator: {e}"))?;
        if d == BigInt::from(0) {
            return Err("zero denominator".into());
        }
        Ok(BigRational::new(n, d))
    } else {
        let n = BigInt::from_str(text).map_err(|e| format!("bad integer: {e}"))?;
        Ok(BigRational::from(n))
    }
}

fn rational_value(v: &Value) -> Result<BigRational, String> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => {
            let i = n
                .as_i64()
                .ok_or_else(|| format!("non-integer numeric coefficient {n}"))?;
            Ok(BigRational::from(BigInt::from(i)))
        }
        other => Err(format!("expected a rational string, got {other}")),
    }
}

fn coefficient(v: &Value, field: &FieldSpec) -> Result<Scalar, String> {
    match (v, field) {
        (Value::Array(items), FieldSpec::Cyclotomic(k)) => {
            let deg = cyclotomic_degree(*k);
            if items.len() > deg {
                return Err(format!(
                    "cyclotomic coefficient vector longer than {deg} entries"
                ));
            }
            let mut coeffs = vec![BigRational::from(BigInt::from(0)); deg];
            for (i, item) in items.iter().enumerate() {
                coeffs[i] = rational_value(item)?;
            }
            Ok(Scalar::Cyclotomic { order: *k, coeffs })
        }
        (v, FieldSpec::Cyclotomic(_)) => {
            let r = rational_value(v)?;
            Scalar::Rational(r)
                .promote(field)
                .map_err(|e| e.to_string())
        }
        (v, FieldSpec::Q) => Ok(Scalar::Rational(rational_value(v)?)),
        (_, FieldSpec::PrimeField(_)) => Err("prime fields are not valid line fields".into()),
    }
}

pub fn parse_configuration(text: &str) -> Result<Configuration, String> {
    let doc: Value = serde_json::from_str(text).map_err(|e| format!("invalid JSON: {e}"))?;
    let field = match doc.get("field") {
        None | Some(Value::Null) => FieldSpec::Q,
        Some(Value::String(s)) if s == "Q" => FieldSpec::Q,
        Some(Value::Object(map)) => {
            let k = map
                .get("cyclotomic")
                .and_then(Value::as_u64)
                .ok_or("field object must be {\"cyclotomic\": k}")?;
            if k == 0 {
                return Err("cyclotomic order must be positive".into());
            }
            FieldSpec::Cyclotomic(k as u32)
        }
        Some(other) => return Err(format!("unsupported field spec {other}")),
    };
    let lines_val = doc
        .get("lines")
        .and_then(Value::as_array)
        .ok_or("missing \"lines\" array")?;
    let mut lines = Vec::new();
    for (i, lv) in lines_val.iter().enumerate() {
        let triple = lv
            .as_array()
            .filter(|a| a.len() == 3)
            .ok_or(format!("line {i} is not a coefficient triple"))?;
        let c0 = coefficient(&triple[0], &field)?;
        let c1 = coefficient(&triple[1], &field)?;
        let c2 = coefficient(&triple[2], &field)?;
        lines.push(ProjLine::new([c0, c1, c2]).map_err(|e| format!("line {i}: {e}"))?);
    }
    Configuration::analyze(field, lines).map_err(|e| e.to_string())
}

/// Parse `--line a0,a1,a2` with rational entries.
pub fn parse_line_option(text: &str, field: &FieldSpec) -> Result<ProjLine, String> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err("expected three comma-separated coefficients".into());
    }
    let mut coeffs = Vec::new();
    for p in parts {
        let r = Scalar::Rational(parse_rational(p)?);
        coeffs.push(r.promote(field).map_err(|e| e.to_string())?);
    }
    ProjLine::new([
        coeffs[0].clone(),
        coeffs[1].clone(),
        coeffs[2].clone(),
    ])
    .map_err(|e| e.to_string())
}
