//! JSON serialization of scalars, polynomials and configurations.
//!
//! Rationals travel as strings "p/q" (never floats), cyclotomic elements as
//! `{"order": k, "coeffs": ["p/q", ...]}`, prime-field elements as
//! `{"p": p, "value": v}`. Polynomials are exponent/coefficient term lists.
//! serde_json's map keeps keys sorted, so identical inputs produce
//! byte-identical output.

use lineal_core::config::Configuration;
use lineal_core::poly::MultiPoly;
use lineal_core::scalar::Scalar;
use lineal_core::PolyMatrix;
use serde_json::{json, Value};

pub fn scalar_json(s: &Scalar) -> Value {
    match s {
        Scalar::Rational(_) => Value::String(s.to_wire_string()),
        Scalar::Cyclotomic { order, coeffs } => json!({
            "order": order,
            "coeffs": coeffs
                .iter()
                .map(|c| Value::String(Scalar::Rational(c.clone()).to_wire_string()))
                .collect::<Vec<_>>(),
        }),
        Scalar::PrimeField { p, value } => json!({ "p": p, "value": value }),
    }
}

pub fn poly_json(p: &MultiPoly) -> Value {
    json!({
        "vars": p.vars().as_ref(),
        "terms": p
            .terms()
            .map(|(m, c)| json!({ "exponents": m.0, "coefficient": scalar_json(c) }))
            .collect::<Vec<_>>(),
    })
}

pub fn matrix_json(m: &PolyMatrix) -> Value {
    let rows: Vec<Value> = (0..m.rows())
        .map(|r| {
            (0..m.cols())
                .map(|c| poly_json(m.entry(r, c)))
                .collect::<Vec<_>>()
                .into()
        })
        .collect();
    Value::Array(rows)
}

pub fn config_json(cfg: &Configuration) -> Value {
    let lines: Vec<Value> = cfg
        .lines()
        .iter()
        .map(|l| Value::Array(l.coeffs().iter().map(scalar_json).collect()))
        .collect();
    let points: Vec<Value> = cfg
        .points()
        .iter()
        .map(|ip| {
            json!({
                "point": ip.point.coords().iter().map(scalar_json).collect::<Vec<_>>(),
                "valency": ip.valency(),
                "lines": ip.lines,
            })
        })
        .collect();
    json!({
        "field": format!("{}", cfg.field()),
        "lines": lines,
        "points": points,
        "m": cfg.m(),
        "n_i": cfg.line_singular_counts(),
    })
}
