//! The Wronskian of the differential basis with respect to `x`.
//!
//! For `f_i = x^a P_b y^-b` the `j`-th derivative is `N_j (n h)^-j y^-b`
//! with `N_(j+1) = n h N_j' - (n j + b) h' N_j`, so the Wronskian is
//! `Delta (n h)^-(g(g-1)/2) y^-B` with `Delta = det N` and `B = sum b`.
//! Its divisor plus `g(g+1)/2 div(dx)` is the weight divisor.

use crate::algebra::factor::squarefree_decomposition;
use crate::algebra::matrix::det_poly;
use crate::algebra::zpoly::{self, ZPoly};
use crate::algebra::{FieldValue, Poly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use crate::curve::model::split_locus;
use crate::curve::{differential_basis, places_over, Locus, Place, PlaceKind, SuperellipticCurve};
use crate::error::{Error, Result};

use super::report::{Method, WeightEntry, WeightReport};

/// Where the weight is constant: a finite locus (branch or not) or infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightLocus {
    pub kind: PlaceKind,
    pub locus: Option<Poly<FieldValue>>,
    pub weight: u64,
}

/// `Delta` and `B`.
pub fn wronskian_delta(curve: &SuperellipticCurve) -> Result<(Poly<FieldValue>, u64)> {
    let basis = differential_basis(curve)?;
    let pr = curve.poly_ring();
    let field = curve.field();
    let n = curve.n() as u64;
    let g = basis.len();
    let nh = pr.scale(curve.h(), &field.from_u64(n));
    let dh = pr.derivative(curve.h());
    let mut m = Vec::with_capacity(g);
    for d in &basis {
        let mut row = Vec::with_capacity(g);
        let mut cur = pr.mul(&pr.pow(&pr.x(), d.a as u64), &curve.branch_multiplier(d.b));
        for j in 0..g as u64 {
            row.push(cur.clone());
            let c = field.from_u64(n * j + d.b as u64);
            cur = pr.sub(&pr.mul(&nh, &pr.derivative(&cur)), &pr.scale(&pr.mul(&dh, &cur), &c));
        }
        m.push(row);
    }
    let delta = if field.is_rational() { det_rational(&m)? } else { det_poly(&pr, &m)? };
    if delta.is_zero() {
        return Err(Error::CrossCheck("the Wronskian vanishes identically".into()));
    }
    Ok((delta, basis.iter().map(|d| d.b as u64).sum()))
}

/// Determinant over Q through integer polynomials, one common denominator
/// per row.
fn det_rational(m: &[Vec<Poly<FieldValue>>]) -> Result<Poly<FieldValue>> {
    let mut scale = BigRational::one();
    let mut rows = Vec::with_capacity(m.len());
    for row in m {
        let den = row
            .iter()
            .flat_map(|p| p.coeffs())
            .fold(BigInt::one(), |acc, c| acc.lcm(c.as_rational().unwrap().denom()));
        scale /= BigRational::from_integer(den.clone());
        let d = BigRational::from_integer(den);
        rows.push(
            row.iter()
                .map(|p| p.coeffs().iter().map(|c| (c.as_rational().unwrap() * &d).to_integer()).collect::<ZPoly>())
                .collect::<Vec<_>>(),
        );
    }
    Ok(zpoly::to_poly(&zpoly::det(&rows), &scale))
}

fn checked_weight(w: i64, what: &str) -> Result<u64> {
    u64::try_from(w).map_err(|_| Error::CrossCheck(format!("negative weight {w} {what}")))
}

/// Loci of positive weight read off from `Delta`.
pub fn wronskian_loci(curve: &SuperellipticCurve) -> Result<Vec<WeightLocus>> {
    let g = curve.genus() as i64;
    let mut out = Vec::new();
    if g == 0 {
        return Ok(out);
    }
    let (delta, big_b) = wronskian_delta(curve)?;
    let big_b = big_b as i64;
    let pr = curve.poly_ring();
    let field = curve.field();
    let n = curve.n() as i64;
    let half_minus = g * (g - 1) / 2;
    let half_plus = g * (g + 1) / 2;
    let pieces = squarefree_decomposition(field, &delta)?;

    let mut off_branch: Vec<(Poly<FieldValue>, i64)> = pieces.iter().map(|(p, k)| (p.clone(), *k as i64)).collect();
    for bl in curve.branch() {
        let m = bl.m as i64;
        let mut rest = bl.q.clone();
        let mut parts: Vec<(Poly<FieldValue>, i64)> = Vec::new();
        for (piece, k) in off_branch.iter_mut() {
            let common = pr.gcd(piece, &rest)?;
            if common.degree().unwrap_or(0) > 0 {
                *piece = pr.div_exact(piece, &common)?;
                rest = pr.div_exact(&rest, &common)?;
                parts.push((common, *k));
            }
        }
        if rest.degree().unwrap_or(0) > 0 {
            parts.push((rest, 0));
        }
        for (part, delta_ord) in parts {
            let w = n * delta_ord - half_minus * n * m - big_b * m + half_plus * (n - 1);
            let w = checked_weight(w, "at a branch place")?;
            if w > 0 {
                for q in split_locus(field, &part)? {
                    out.push(WeightLocus { kind: PlaceKind::Branch, locus: Some(q), weight: w });
                }
            }
        }
    }
    for (piece, k) in off_branch {
        for q in split_locus(field, &piece)? {
            out.push(WeightLocus { kind: PlaceKind::Ordinary, locus: Some(q), weight: k as u64 });
        }
    }
    let e = curve.e_inf() as i64;
    let w_inf = -e * delta.degree().unwrap() as i64 + half_minus * e * curve.h().degree().unwrap() as i64 + big_b * curve.mu() as i64
        - half_plus * (e + 1);
    let w_inf = checked_weight(w_inf, "at infinity")?;
    if w_inf > 0 {
        out.push(WeightLocus { kind: PlaceKind::Infinite, locus: None, weight: w_inf });
    }
    Ok(out)
}

/// Places carrying a weight locus.
pub(crate) fn places_of(curve: &SuperellipticCurve, wl: &WeightLocus) -> Result<Vec<Place>> {
    match &wl.locus {
        Some(q) => places_over(curve, &Locus::Finite(q.clone())),
        None => places_over(curve, &Locus::Infinity),
    }
}

/// The weight divisor from the Wronskian alone; gaps are not computed.
pub fn wronskian_divisor(curve: &SuperellipticCurve) -> Result<WeightReport> {
    let mut entries = Vec::new();
    for wl in wronskian_loci(curve)? {
        for place in places_of(curve, &wl)? {
            entries.push(WeightEntry { place, weight: wl.weight, gaps: None, orders: None });
        }
    }
    WeightReport::assemble(curve, entries, Method::Wronskian)
}
