//! JSON curve files and JSON renderings of the library's results.
//!
//! Field values are written as strings: rationals `"a/b"` (integers without
//! the denominator), prime-field residues in decimal, and extension
//! elements as arrays of residues, constant first.

use std::path::Path;

use serde::Deserialize;
use serde_json::{json, Value};

use crate::algebra::{BaseField, FieldValue, Poly};
use crate::curve::place::short_value;
use crate::curve::{Divisor, Place, SuperellipticCurve};
use crate::error::{Error, Result};
use crate::jacobian::{Verdict, ZetaData};
use crate::weierstrass::{GapData, WeightReport};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CurveFile {
    n: u32,
    h: HInput,
    field: FieldInput,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum HInput {
    Coeffs(Vec<Value>),
    Branch { branch: Vec<(Value, u32)> },
}

#[derive(Deserialize)]
#[serde(tag = "type", deny_unknown_fields)]
enum FieldInput {
    Q,
    Fp { p: u64 },
    Fq { p: u64, k: usize, modulus: Vec<u64> },
}

fn parse_field(input: &FieldInput) -> Result<BaseField> {
    let f = match input {
        FieldInput::Q => BaseField::Rational,
        FieldInput::Fp { p } => BaseField::prime(*p).map_err(|e| Error::Parse(e.to_string()))?,
        FieldInput::Fq { p, k, modulus } => {
            if modulus.len() != k + 1 {
                return Err(Error::Parse(format!("modulus of F_{p}^{k} needs {} coefficients", k + 1)));
            }
            BaseField::extension_with_modulus(*p, modulus.clone()).map_err(|e| Error::Parse(e.to_string()))?
        }
    };
    Ok(f)
}

/// Parses one field value: a string `"a/b"` or integer, a JSON integer, or
/// (extension fields) an array of residues.
pub fn parse_value(field: &BaseField, v: &Value) -> Result<FieldValue> {
    let parsed = match v {
        Value::String(s) => field.parse_value(s),
        Value::Number(n) => field.parse_value(&n.to_string()),
        Value::Array(items) => {
            let coeffs: Option<Vec<u64>> = items.iter().map(|x| x.as_u64()).collect();
            let coeffs = coeffs.ok_or_else(|| Error::Parse(format!("bad coefficient list {v}")))?;
            field.from_coeff_list(&coeffs)
        }
        other => return Err(Error::Parse(format!("cannot read a field value from {other}"))),
    };
    parsed.map_err(|e| Error::Parse(e.to_string()))
}

pub fn parse_curve(text: &str) -> Result<SuperellipticCurve> {
    let file: CurveFile = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    let field = parse_field(&file.field)?;
    match &file.h {
        HInput::Coeffs(cs) => {
            let coeffs = cs.iter().map(|c| parse_value(&field, c)).collect::<Result<Vec<_>>>()?;
            SuperellipticCurve::new(field.clone(), file.n, Poly::from_coeffs(&field, coeffs))
        }
        HInput::Branch { branch } => {
            let pts = branch
                .iter()
                .map(|(c, m)| Ok((parse_value(&field, c)?, *m)))
                .collect::<Result<Vec<_>>>()?;
            SuperellipticCurve::from_branch(field, file.n, &pts)
        }
    }
}

pub fn load_curve(path: &Path) -> Result<SuperellipticCurve> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_curve(&text)
}

pub fn field_json(f: &BaseField) -> Value {
    match f {
        BaseField::Rational => json!({"type": "Q"}),
        BaseField::Prime(p) => json!({"type": "Fp", "p": p}),
        BaseField::Extension(e) => json!({"type": "Fq", "p": e.p(), "k": e.degree(), "modulus": e.modulus()}),
    }
}

pub fn value_json(v: &FieldValue) -> Value {
    match v {
        FieldValue::Extension { coeffs, .. } => json!(coeffs),
        other => Value::String(short_value(other)),
    }
}

pub fn poly_json(p: &Poly<FieldValue>) -> Value {
    Value::Array(p.coeffs().iter().map(value_json).collect())
}

pub fn curve_json(c: &SuperellipticCurve) -> Value {
    json!({
        "n": c.n(),
        "h": poly_json(c.h()),
        "field": field_json(c.field()),
        "genus": c.genus(),
        "branch": c.branch().iter().map(|b| json!({"locus": poly_json(&b.q), "multiplicity": b.m})).collect::<Vec<_>>(),
        "infinity": {"d": c.d_inf(), "e": c.e_inf()},
    })
}

pub fn place_json(p: &Place) -> Value {
    Value::String(p.to_string())
}

pub fn divisor_json(d: &Divisor) -> Value {
    Value::Array(
        d.terms()
            .map(|(p, m)| json!({"place": place_json(p), "mult": m, "degree": p.degree()}))
            .collect(),
    )
}

pub fn report_json(r: &WeightReport) -> Value {
    json!({
        "genus": r.genus,
        "total_weight": r.total_weight,
        "expected_total": r.expected_total(),
        "method": r.method.as_str(),
        "places": r.entries.iter().map(|e| json!({
            "place": place_json(&e.place),
            "degree": e.place.degree(),
            "weight": e.weight,
            "gaps": e.gaps,
            "orders": e.orders,
        })).collect::<Vec<_>>(),
    })
}

pub fn gaps_json(gd: &GapData, ladder: &[u32]) -> Value {
    json!({
        "place": place_json(&gd.place),
        "orders": gd.orders,
        "gaps": gd.gaps,
        "weight": gd.weight,
        "ell": ladder,
    })
}

pub fn verdict_json(v: &Verdict) -> Value {
    json!({
        "proposition": v.proposition,
        "genus": v.genus,
        "field": field_json(&v.field),
        "assertions": v.assertions.iter().map(|a| json!({"name": a.name, "pass": a.pass, "detail": a.detail})).collect::<Vec<_>>(),
        "data": v.data.iter().map(|(k, x)| (k.clone(), Value::String(x.clone()))).collect::<serde_json::Map<_, _>>(),
        "verdict": v.verdict(),
    })
}

pub fn zeta_json(z: &ZetaData) -> Value {
    json!({
        "p": z.p.to_string(),
        "genus": z.genus,
        "counts": z.counts.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "l_poly": z.l_poly.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "jacobian_order": z.jacobian_order.to_string(),
        "checks": z.checks.iter().map(|a| json!({"name": a.name, "pass": a.pass, "detail": a.detail})).collect::<Vec<_>>(),
    })
}
