use crate::algebra::matrix::pivot_columns;
use crate::algebra::residue::split_on_zero_divisors;
use crate::algebra::{AlgebraError, FieldValue, Poly};
use crate::curve::chart::{differential_rows, infinity_ring, FibreKind};
use crate::curve::{differential_basis, Differential, Place, PlaceKind, SuperellipticCurve};
use crate::error::{Error, Result};

/// Marker for "start at `2g`". Vanishing orders of holomorphic
/// differentials never exceed `2g - 2`, so `2g` columns always suffice.
pub const DEFAULT_START_PRECISION: usize = 0;

/// Vanishing orders of the differentials at a place, and the derived gaps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapData {
    pub place: Place,
    pub orders: Vec<u32>,
    pub gaps: Vec<u32>,
    pub weight: u64,
}

impl GapData {
    pub fn from_orders(place: Place, orders: Vec<u32>) -> GapData {
        let g = orders.len() as u64;
        let gaps: Vec<u32> = orders.iter().map(|d| d + 1).collect();
        let weight = gaps.iter().map(|&x| x as u64).sum::<u64>() - g * (g + 1) / 2;
        GapData { place, orders, gaps, weight }
    }

    pub fn is_weierstrass(&self) -> bool {
        self.weight > 0
    }
}

fn precision_cap(g: u32) -> usize {
    8 * (g as usize).pow(3).max(1)
}

fn fibre_kind(curve: &SuperellipticCurve, place: &Place) -> FibreKind {
    match place.kind() {
        PlaceKind::Branch => FibreKind::Branch(curve.branch_multiplicity(place.locus().unwrap()).unwrap()),
        PlaceKind::Ordinary => FibreKind::Ordinary,
        PlaceKind::Infinite => FibreKind::Infinity,
    }
}

fn orders_in(
    curve: &SuperellipticCurve,
    ring: &crate::algebra::ResidueRing,
    kind: FibreKind,
    basis: &[Differential],
    start: usize,
) -> Result<Vec<u32>, AlgebraError> {
    let g = basis.len();
    let cap = precision_cap(g as u32);
    let mut prec = start;
    loop {
        let rows = differential_rows(curve, ring, kind, basis, prec)?;
        let pivots = pivot_columns(ring, &rows)?;
        if pivots.len() == g {
            return Ok(pivots.into_iter().map(|c| c as u32).collect());
        }
        if prec >= cap {
            return Err(AlgebraError::PrecisionExhausted(format!(
                "only {} of {g} vanishing orders found at precision {prec}",
                pivots.len()
            )));
        }
        prec = (2 * prec).min(cap);
    }
}

/// Vanishing orders along a whole fibre. A finite locus is split into
/// pieces on which the orders are constant; infinity is one piece.
pub fn fibre_orders(
    curve: &SuperellipticCurve,
    kind: FibreKind,
    locus: Option<&Poly<FieldValue>>,
    start_precision: usize,
) -> Result<Vec<(Option<Poly<FieldValue>>, Vec<u32>)>> {
    let basis = differential_basis(curve)?;
    let g = curve.genus();
    if g == 0 {
        return Ok(vec![(locus.cloned(), Vec::new())]);
    }
    let start = if start_precision == DEFAULT_START_PRECISION { 2 * g as usize } else { start_precision };
    match locus {
        None => {
            let ring = infinity_ring(curve.field());
            Ok(vec![(None, orders_in(curve, &ring, kind, &basis, start)?)])
        }
        Some(q) => {
            let pieces = split_on_zero_divisors(curve.field(), q, |ring| orders_in(curve, ring, kind, &basis, start))?;
            Ok(pieces.into_iter().map(|(q, o)| (Some(q), o)).collect())
        }
    }
}

/// Gap data at a place. The orders must be the same at every geometric
/// point of the place, which always holds for places of degree 1.
pub fn vanishing_orders(curve: &SuperellipticCurve, place: &Place, start_precision: usize) -> Result<GapData> {
    let pieces = fibre_orders(curve, fibre_kind(curve, place), place.locus(), start_precision)?;
    let first = &pieces[0].1;
    if pieces.iter().any(|(_, o)| o != first) {
        return Err(Error::Algebra(AlgebraError::Unsupported(format!(
            "vanishing orders differ between the points of {place}; split the locus first"
        ))));
    }
    Ok(GapData::from_orders(place.clone(), first.clone()))
}

/// `l(k P)` for `k = 0..=n_max`: `k + 1 - #{gaps <= k}`.
pub fn ell_ladder(gaps: &GapData, n_max: u32) -> Vec<u32> {
    (0..=n_max).map(|k| k + 1 - gaps.gaps.iter().filter(|&&x| x <= k).count() as u32).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{BaseField, Ring};
    use crate::curve::{build_trigonal, places_over, Locus};

    fn qpoly(c: &[i64]) -> Poly<FieldValue> {
        Poly::from_coeffs(&BaseField::Rational, c.iter().map(|&x| FieldValue::rational(x, 1)).collect())
    }

    #[test]
    fn hyperelliptic_ramification_gaps() {
        let c = SuperellipticCurve::new(BaseField::Rational, 2, qpoly(&[1, 0, 0, 0, 0, 0, 0, 1])).unwrap();
        let p = places_over(&c, &Locus::Finite(qpoly(&[1, 1]))).unwrap().remove(0);
        let gd = vanishing_orders(&c, &p, 0).unwrap();
        assert_eq!(gd.orders, vec![0, 2, 4]);
        assert_eq!(gd.gaps, vec![1, 3, 5]);
        assert_eq!(gd.weight, 3);
        let inf = places_over(&c, &Locus::Infinity).unwrap().remove(0);
        assert_eq!(vanishing_orders(&c, &inf, 0).unwrap().gaps, vec![1, 3, 5]);
    }

    #[test]
    fn ladder_at_genus_two_ramification_point() {
        let c = SuperellipticCurve::new(BaseField::Rational, 2, qpoly(&[1, 0, 0, 0, 0, 1])).unwrap();
        let p = places_over(&c, &Locus::Finite(qpoly(&[1, 1]))).unwrap().remove(0);
        let gd = vanishing_orders(&c, &p, 0).unwrap();
        assert_eq!(ell_ladder(&gd, 4), vec![1, 1, 2, 2, 3]);
    }

    #[test]
    fn generic_point_has_no_weight() {
        // y^2 = x^5 + 1 over F_101 at x = 3
        let f = BaseField::prime(101).unwrap();
        let h = Poly::from_coeffs(&f, vec![f.one(), f.zero(), f.zero(), f.zero(), f.zero(), f.one()]);
        let c = SuperellipticCurve::new(f.clone(), 2, h).unwrap();
        let q = Poly::linear(&f, &f.from_u64(3));
        for p in places_over(&c, &Locus::Finite(q)).unwrap() {
            let gd = vanishing_orders(&c, &p, 0).unwrap();
            assert_eq!(gd.gaps, vec![1, 2]);
            assert_eq!(gd.weight, 0);
            assert_eq!(ell_ladder(&gd, 2)[2], 1);
        }
    }

    #[test]
    fn trigonal_p1_is_weierstrass() {
        for g in 3..=6 {
            let tc = build_trigonal(g, &BaseField::Rational, None).unwrap();
            let gd = vanishing_orders(&tc.curve, &tc.p1, 0).unwrap();
            assert!(gd.weight >= 1, "g = {g}: {:?}", gd.gaps);
            assert!(ell_ladder(&gd, 3)[3] >= 2);
        }
    }
}
