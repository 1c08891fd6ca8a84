use rayon::prelude::*;

use crate::curve::chart::FibreKind;
use crate::curve::{places_over, Locus, Place, PlaceKind, SuperellipticCurve};
use crate::error::{Error, Result};

use super::expected_total_weight;
use super::gaps::{fibre_orders, GapData};
use super::wronskian::{places_of, wronskian_loci, WeightLocus};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Wronskian,
    Local,
    Both,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Wronskian => "wronskian",
            Method::Local => "local",
            Method::Both => "both",
        }
    }
}

impl std::str::FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "wronskian" => Ok(Method::Wronskian),
            "local" => Ok(Method::Local),
            "both" => Ok(Method::Both),
            other => Err(Error::Parse(format!("unknown method {other:?}"))),
        }
    }
}

/// One place of positive weight. Gaps and orders are absent when only the
/// Wronskian was used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightEntry {
    pub place: Place,
    pub weight: u64,
    pub gaps: Option<Vec<u32>>,
    pub orders: Option<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightReport {
    pub genus: u32,
    pub total_weight: u64,
    pub entries: Vec<WeightEntry>,
    pub method: Method,
}

impl WeightReport {
    /// Sorts the entries and checks the total against `g (g^2 - 1)`.
    pub(crate) fn assemble(curve: &SuperellipticCurve, mut entries: Vec<WeightEntry>, method: Method) -> Result<Self> {
        entries.retain(|e| e.weight > 0);
        entries.sort_by(|a, b| a.place.cmp(&b.place));
        let total_weight = entries.iter().map(|e| e.weight * e.place.degree() as u64).sum();
        let expected = expected_total_weight(curve.genus());
        if total_weight != expected {
            return Err(Error::CrossCheck(format!(
                "total weight {total_weight} differs from g(g^2-1) = {expected} ({} method)",
                method.as_str()
            )));
        }
        Ok(WeightReport { genus: curve.genus(), total_weight, entries, method })
    }

    pub fn expected_total(&self) -> u64 {
        expected_total_weight(self.genus)
    }

    pub fn weight_at(&self, place: &Place) -> u64 {
        self.entries.iter().find(|e| &e.place == place).map_or(0, |e| e.weight)
    }
}

fn kind_of(curve: &SuperellipticCurve, wl: &WeightLocus) -> FibreKind {
    match wl.kind {
        PlaceKind::Branch => FibreKind::Branch(curve.branch_multiplicity(wl.locus.as_ref().unwrap()).unwrap()),
        PlaceKind::Ordinary => FibreKind::Ordinary,
        PlaceKind::Infinite => FibreKind::Infinity,
    }
}

/// Gap data along one candidate locus; in `check` mode every piece must
/// carry the Wronskian weight.
fn local_entries(curve: &SuperellipticCurve, wl: &WeightLocus, start_precision: usize, check: bool) -> Result<Vec<WeightEntry>> {
    let mut out = Vec::new();
    for (piece, orders) in fibre_orders(curve, kind_of(curve, wl), wl.locus.as_ref(), start_precision)? {
        let places = match &piece {
            Some(q) => places_over(curve, &Locus::Finite(q.clone()))?,
            None => places_of(curve, wl)?,
        };
        for place in places {
            let gd = GapData::from_orders(place, orders.clone());
            if check && gd.weight != wl.weight {
                return Err(Error::CrossCheck(format!(
                    "weight at {}: wronskian {}, vanishing orders {} (gaps {:?})",
                    gd.place, wl.weight, gd.weight, gd.gaps
                )));
            }
            out.push(WeightEntry { place: gd.place, weight: gd.weight, gaps: Some(gd.gaps), orders: Some(gd.orders) });
        }
    }
    Ok(out)
}

/// The Weierstrass divisor. Candidate loci come from the Wronskian; the
/// local methods compute gap sequences along each of them.
pub fn weierstrass_report(curve: &SuperellipticCurve, method: Method, start_precision: usize) -> Result<WeightReport> {
    if method == Method::Wronskian {
        return super::wronskian::wronskian_divisor(curve);
    }
    let loci = wronskian_loci(curve)?;
    let check = method == Method::Both;
    let per_locus: Vec<Vec<WeightEntry>> = loci
        .par_iter()
        .map(|wl| local_entries(curve, wl, start_precision, check))
        .collect::<Result<_>>()?;
    WeightReport::assemble(curve, per_locus.into_iter().flatten().collect(), method)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{BaseField, FieldValue, Poly};
    use crate::curve::build_trigonal;

    fn qpoly(c: &[i64]) -> Poly<FieldValue> {
        Poly::from_coeffs(&BaseField::Rational, c.iter().map(|&x| FieldValue::rational(x, 1)).collect())
    }

    #[test]
    fn both_methods_on_genus_two() {
        let c = SuperellipticCurve::new(BaseField::Rational, 2, qpoly(&[1, 0, 0, 0, 0, 1])).unwrap();
        let r = weierstrass_report(&c, Method::Both, 0).unwrap();
        assert_eq!(r.total_weight, 6);
        for e in &r.entries {
            assert_eq!(e.gaps.as_deref(), Some(&[1, 3][..]));
        }
    }

    #[test]
    fn both_methods_on_trigonal_genus_three() {
        let tc = build_trigonal(3, &BaseField::Rational, None).unwrap();
        let r = weierstrass_report(&tc.curve, Method::Both, 0).unwrap();
        assert_eq!(r.total_weight, 24);
        assert!(r.weight_at(&tc.p1) >= 1);
        assert!(r.weight_at(&tc.p2) >= 1);
    }
}
