use crate::curve::{places_over, Locus, Place, SuperellipticCurve};
use crate::error::{Error, Result};
use crate::io::parse_value;
use crate::algebra::Poly;

fn squash(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

fn value(curve: &SuperellipticCurve, s: &str) -> Result<crate::algebra::FieldValue> {
    let v = serde_json::from_str(s).unwrap_or_else(|_| serde_json::Value::String(s.to_string()));
    parse_value(curve.field(), &v)
}

/// Resolves a place descriptor: `inf`, `x=<value>`, `(x=<value>, y=<value>)`
/// or any string printed by the tool for a place.
pub fn resolve_place(curve: &SuperellipticCurve, desc: &str) -> Result<Place> {
    let d = squash(desc);
    let inner = d.trim_start_matches('(').trim_end_matches(')');
    let (xpart, rest) = match inner.find(",") {
        Some(i) if !inner.starts_with("x=[") => (&inner[..i], Some(&inner[i + 1..])),
        _ => match inner.find("],") {
            Some(i) => (&inner[..i + 1], Some(&inner[i + 2..])),
            None => (inner, None),
        },
    };
    let locus = if xpart == "inf" {
        Locus::Infinity
    } else if let Some(x) = xpart.strip_prefix("x=") {
        Locus::Finite(Poly::linear(curve.field(), &value(curve, x)?))
    } else {
        return Err(Error::Parse(format!("cannot read place {desc:?}; use inf, x=<value> or (x=<value>, y=<value>)")));
    };
    let places = places_over(curve, &locus)?;
    if let Some(p) = places.iter().find(|p| squash(&p.to_string()) == d) {
        return Ok(p.clone());
    }
    let chosen: Vec<&Place> = match rest.and_then(|r| r.strip_prefix("y=")) {
        Some(y) => {
            let y = value(curve, y)?;
            places
                .iter()
                .filter(|p| p.sheet_value().is_some_and(|v| v.coeffs().first() == Some(&y) || (v.is_zero() && y.is_zero())))
                .collect()
        }
        None if rest.is_none() => places.iter().collect(),
        None => vec![],
    };
    match chosen.as_slice() {
        [p] => Ok((*p).clone()),
        _ => {
            let names: Vec<String> = places.iter().map(|p| p.to_string()).collect();
            Err(Error::Domain(format!("{desc:?} does not name a single place; places there: {}", names.join(", "))))
        }
    }
}
