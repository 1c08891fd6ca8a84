//! Places of the smooth model.
//!
//! A place is labelled by the x-locus it lies over (a monic polynomial, or
//! infinity) and, where the fibre splits, a sheet polynomial: a factor of
//! `Y^n - h(z)` over the residue ring of the locus for ordinary places, or a
//! factor of `Y^d - lc(h)` for places at infinity, where `Y = y^e / x^mu`.
//!
//! Over finite fields these labels are closed points. Over Q nothing is
//! factored beyond rational roots, so a label with a nonlinear locus or
//! sheet stands for the Galois-stable set of its geometric points.

use std::cmp::Ordering;
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::factor::factor;
use crate::algebra::field::exact_rational_root;
use crate::algebra::{BaseField, FieldValue, Poly, PolyRing, ResidueRing, Ring};
use crate::error::{Error, Result};

use super::model::SuperellipticCurve;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PlaceKind {
    Branch,
    Ordinary,
    Infinite,
}

impl PlaceKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            PlaceKind::Branch => "branch",
            PlaceKind::Ordinary => "ordinary",
            PlaceKind::Infinite => "infinite",
        }
    }
}

/// Where a set of places lies on the x-line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Locus {
    Finite(Poly<FieldValue>),
    Infinity,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Place {
    kind: PlaceKind,
    /// Monic squarefree x-polynomial; `None` at infinity.
    locus: Option<Poly<FieldValue>>,
    /// Monic polynomial in `Y` with coefficients in the residue ring of the
    /// locus (constants at infinity). `None` for branch places and for
    /// unsplit ordinary fibres.
    sheet: Option<Poly<Poly<FieldValue>>>,
    e: u32,
    degree: usize,
}

impl Place {
    /// The place over a branch locus; `e = n`.
    pub fn branch(curve: &SuperellipticCurve, q: Poly<FieldValue>) -> Result<Place> {
        if curve.branch_multiplicity(&q).is_none() {
            return Err(Error::Domain("locus is not a branch locus of the curve".into()));
        }
        let degree = q.degree().unwrap();
        Ok(Place { kind: PlaceKind::Branch, locus: Some(q), sheet: None, e: curve.n(), degree })
    }

    pub fn kind(&self) -> PlaceKind {
        self.kind
    }

    pub fn locus(&self) -> Option<&Poly<FieldValue>> {
        self.locus.as_ref()
    }

    pub fn sheet(&self) -> Option<&Poly<Poly<FieldValue>>> {
        self.sheet.as_ref()
    }

    /// Ramification index over the x-line.
    pub fn e(&self) -> u32 {
        self.e
    }

    /// Number of geometric points; the residue degree for closed points.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_infinite(&self) -> bool {
        self.kind == PlaceKind::Infinite
    }

    /// Root of a linear locus.
    pub fn x_value(&self) -> Option<FieldValue> {
        let q = self.locus.as_ref()?;
        if q.degree() == Some(1) {
            Some(negate(&q.coeffs()[0]))
        } else {
            None
        }
    }

    /// Value of the sheet coordinate for a linear sheet: `y` at finite
    /// places, `Y = y^e / x^mu` at infinity.
    pub fn sheet_value(&self) -> Option<Poly<FieldValue>> {
        let s = self.sheet.as_ref()?;
        if s.degree() == Some(1) {
            Some(neg_poly(&s.coeffs()[0]))
        } else {
            None
        }
    }

    /// Sort key for loci: by degree, then so that linear loci come in
    /// ascending order of their root.
    pub(crate) fn locus_key(q: &Poly<FieldValue>) -> (usize, Vec<FieldValue>) {
        (q.degree().unwrap_or(0), q.coeffs().iter().map(negate).collect())
    }

    fn sheet_key(s: &Option<Poly<Poly<FieldValue>>>) -> Option<(usize, Vec<(usize, Vec<FieldValue>)>)> {
        s.as_ref().map(|s| {
            (s.degree().unwrap_or(0), s.coeffs().iter().map(Self::locus_key).collect())
        })
    }

    fn sort_key(&self) -> impl Ord + '_ {
        (
            self.kind == PlaceKind::Infinite,
            self.locus.as_ref().map(Self::locus_key),
            self.kind,
            Self::sheet_key(&self.sheet),
        )
    }
}

impl PartialOrd for Place {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Place {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key()).then_with(|| self.e.cmp(&other.e))
    }
}

fn negate(v: &FieldValue) -> FieldValue {
    v.checked_neg()
}

/// Negation that keeps the coefficient list shape (negation never creates
/// trailing zeros).
fn neg_poly(p: &Poly<FieldValue>) -> Poly<FieldValue> {
    Poly::from_trimmed(p.coeffs().iter().map(negate).collect())
}

/// Compact text for a field value: integers without `/1`.
pub fn short_value(v: &FieldValue) -> String {
    match v {
        FieldValue::Rational(r) if r.is_integer() => r.numer().to_string(),
        other => other.to_string(),
    }
}

fn is_negative(v: &FieldValue) -> bool {
    matches!(v, FieldValue::Rational(r) if *r < num_rational::BigRational::from_integer(0.into()))
}

/// Human-readable polynomial, highest term first.
pub fn format_poly(p: &Poly<FieldValue>, var: &str) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = is_negative(c);
        let mag = if neg { negate(c) } else { c.clone() };
        let one = matches!(&mag, FieldValue::Rational(r) if r == &num_rational::BigRational::from_integer(1.into()))
            || matches!(&mag, FieldValue::Prime { residue: 1, .. });
        let body = match (i, one) {
            (0, _) => short_value(&mag),
            (1, true) => var.to_string(),
            (1, false) => format!("{}*{var}", short_value(&mag)),
            (_, true) => format!("{var}^{i}"),
            (_, false) => format!("{}*{var}^{i}", short_value(&mag)),
        };
        if out.is_empty() {
            out = if neg { format!("-{body}") } else { body };
        } else {
            out.push_str(if neg { " - " } else { " + " });
            out.push_str(&body);
        }
    }
    out
}

fn format_residue_poly(p: &Poly<Poly<FieldValue>>, var: &str, inner: &str) -> String {
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let (neg, body) = if c.degree() == Some(0) {
            let v = &c.coeffs()[0];
            let neg = is_negative(v);
            let mag = if neg { negate(v) } else { v.clone() };
            let mag_poly = Poly::from_trimmed(vec![mag.clone()]);
            let is_one = short_value(&mag) == "1";
            let text = match (i, is_one) {
                (0, _) => format_poly(&mag_poly, inner),
                (1, true) => var.to_string(),
                (_, true) => format!("{var}^{i}"),
                (1, false) => format!("{}*{var}", format_poly(&mag_poly, inner)),
                (_, false) => format!("{}*{var}^{i}", format_poly(&mag_poly, inner)),
            };
            (neg, text)
        } else {
            let c = format!("({})", format_poly(c, inner));
            (
                false,
                match i {
                    0 => c,
                    1 => format!("{c}*{var}"),
                    _ => format!("{c}*{var}^{i}"),
                },
            )
        };
        if out.is_empty() {
            out = if neg { format!("-{body}") } else { body };
        } else {
            out.push_str(if neg { " - " } else { " + " });
            out.push_str(&body);
        }
    }
    out
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let locus = |q: &Poly<FieldValue>| match q.degree() {
            Some(1) => format!("x={}", short_value(&negate(&q.coeffs()[0]))),
            _ => format!("{{{}=0}}", format_poly(q, "x")),
        };
        match self.kind {
            PlaceKind::Branch => write!(f, "({}, y=0)", locus(self.locus.as_ref().unwrap())),
            PlaceKind::Ordinary => {
                let x = locus(self.locus.as_ref().unwrap());
                match (&self.sheet, self.sheet_value()) {
                    (_, Some(v)) if v.degree().unwrap_or(0) == 0 => {
                        write!(f, "({x}, y={})", format_poly(&v, "x"))
                    }
                    (Some(s), _) => write!(f, "({x}, {{{}=0}})", format_residue_poly(s, "y", "x")),
                    (None, _) => write!(f, "({x}, all y)"),
                }
            }
            PlaceKind::Infinite => match (&self.sheet, self.sheet_value()) {
                (_, Some(v)) => write!(f, "(inf, Y={})", format_poly(&v, "x")),
                (Some(s), _) => write!(f, "(inf, {{{}=0}})", format_residue_poly(s, "Y", "x")),
                (None, _) => write!(f, "inf"),
            },
        }
    }
}

/// Residue field of a locus as a [`BaseField`], when one is available, and
/// the image of `x` in it. Linear loci give the base field itself; over a
/// prime field an irreducible locus gives the extension it defines.
pub(crate) fn locus_field(field: &BaseField, q: &Poly<FieldValue>) -> Option<(BaseField, FieldValue)> {
    match q.degree()? {
        1 => Some((field.clone(), negate(&q.coeffs()[0]))),
        _ => match field {
            BaseField::Prime(p) => {
                let m: Vec<u64> = q.coeffs().iter().map(|c| c.residue().unwrap()).collect();
                let l = BaseField::extension_with_modulus(*p, m).ok()?;
                let z = l.generator()?;
                Some((l, z))
            }
            _ => None,
        },
    }
}

/// Converts a residue class (a polynomial in `x` reduced mod the locus) to
/// the locus field.
pub(crate) fn residue_to_field(l: &BaseField, z: &FieldValue, r: &Poly<FieldValue>) -> Result<FieldValue> {
    let mut acc = l.zero();
    for c in r.coeffs().iter().rev() {
        acc = l.add(&l.mul(&acc, z), &l.embed(c)?);
    }
    Ok(acc)
}

/// Inverse of [`residue_to_field`].
pub(crate) fn field_to_residue(base: &BaseField, v: &FieldValue) -> Poly<FieldValue> {
    match v {
        FieldValue::Extension { coeffs, .. } if !matches!(base, BaseField::Extension(_)) => {
            Poly::from_coeffs(base, coeffs.iter().map(|&c| base.from_u64(c)).collect())
        }
        other => Poly::constant(base, other.clone()),
    }
}

/// Splits `Y^n - c` over Q into linear factors for rational roots and a
/// remainder.
fn split_binomial_rational(n: u32, c: &FieldValue) -> Vec<Poly<FieldValue>> {
    let q = BaseField::Rational;
    let pr = PolyRing::new(q.clone());
    let mut coeffs = vec![q.neg(c)];
    coeffs.extend((1..n).map(|_| q.zero()));
    coeffs.push(q.one());
    let mut rest = pr.from_coeffs(coeffs);
    let mut out = Vec::new();
    if let Some(r) = exact_rational_root(c.as_rational().unwrap(), n) {
        let mut roots = vec![FieldValue::Rational(r.clone())];
        if n.is_multiple_of(2) {
            roots.push(FieldValue::Rational(-r));
        }
        roots.sort();
        for r in roots {
            let lin = Poly::linear(&q, &r);
            rest = pr.div_exact(&rest, &lin).expect("root divides");
            out.push(lin);
        }
    }
    if rest.degree().unwrap_or(0) > 0 {
        out.push(rest);
    }
    out
}

/// Factors of `Y^k - c` over a field (finite fields completely, Q only
/// rational roots), as monic polynomials.
fn binomial_factors(field: &BaseField, k: u32, c: &FieldValue) -> Result<Vec<Poly<FieldValue>>> {
    if field.is_rational() {
        return Ok(split_binomial_rational(k, c));
    }
    let pr = PolyRing::new(field.clone());
    let mut coeffs = vec![field.neg(c)];
    coeffs.extend((1..k).map(|_| field.zero()));
    coeffs.push(field.one());
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    Ok(factor(field, &pr.from_coeffs(coeffs), &mut rng)?.factors.into_iter().map(|(f, _)| f).collect())
}

/// All places over a locus, in canonical order. Finite loci must be monic
/// and squarefree, and either a branch locus or coprime to `h`.
pub fn places_over(curve: &SuperellipticCurve, locus: &Locus) -> Result<Vec<Place>> {
    let field = curve.field();
    let n = curve.n();
    let mut out = match locus {
        Locus::Infinity => {
            let d = curve.d_inf();
            let e = curve.e_inf();
            let constant = |f: Poly<FieldValue>| -> Poly<Poly<FieldValue>> {
                let pr = PolyRing::new(field.clone());
                let coeffs = f.coeffs().iter().map(|c| pr.constant(c.clone())).collect();
                Poly::from_coeffs(&pr, coeffs)
            };
            binomial_factors(field, d, curve.lead())?
                .into_iter()
                .map(|psi| Place {
                    kind: PlaceKind::Infinite,
                    locus: None,
                    degree: psi.degree().unwrap(),
                    sheet: Some(constant(psi)),
                    e,
                })
                .collect::<Vec<_>>()
        }
        Locus::Finite(q) => {
            let pr = curve.poly_ring();
            if !pr.is_monic(q) || q.degree().unwrap_or(0) == 0 {
                return Err(Error::Domain("locus must be monic of positive degree".into()));
            }
            if curve.branch_multiplicity(q).is_some() {
                return Ok(vec![Place::branch(curve, q.clone())?]);
            }
            if pr.gcd(q, curve.h())?.degree().unwrap_or(0) > 0 {
                return Err(Error::Domain("locus meets the branch locus only partially".into()));
            }
            if pr.gcd(q, &pr.derivative(q))?.degree().unwrap_or(0) > 0 {
                return Err(Error::Domain("locus must be squarefree".into()));
            }
            ordinary_places(curve, q)?
        }
    };
    out.sort();
    debug_assert_eq!(
        out.iter().map(|p| p.e as usize * p.degree).sum::<usize>(),
        n as usize * match locus {
            Locus::Infinity => 1,
            Locus::Finite(q) => q.degree().unwrap(),
        }
    );
    Ok(out)
}

fn ordinary_places(curve: &SuperellipticCurve, q: &Poly<FieldValue>) -> Result<Vec<Place>> {
    let field = curve.field();
    let n = curve.n();
    let dq = q.degree().unwrap();
    let fibre = || Place { kind: PlaceKind::Ordinary, locus: Some(q.clone()), sheet: None, e: 1, degree: n as usize * dq };
    let Some((l, z)) = locus_field(field, q) else {
        return Ok(vec![fibre()]);
    };
    if field.is_rational() && dq > 1 {
        return Ok(vec![fibre()]);
    }
    let hz = {
        let mut acc = l.zero();
        for c in curve.h().coeffs().iter().rev() {
            acc = l.add(&l.mul(&acc, &z), &l.embed(c)?);
        }
        acc
    };
    let ring = ResidueRing::new(field.clone(), q)?;
    let mut out = Vec::new();
    for phi in binomial_factors(&l, n, &hz)? {
        let coeffs: Vec<Poly<FieldValue>> = phi.coeffs().iter().map(|c| field_to_residue(field, c)).collect();
        let k = phi.degree().unwrap();
        out.push(Place {
            kind: PlaceKind::Ordinary,
            locus: Some(q.clone()),
            sheet: Some(Poly::from_coeffs(&ring, coeffs)),
            e: 1,
            degree: dq * k,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::model::build_trigonal;

    fn qpoly(c: &[i64]) -> Poly<FieldValue> {
        Poly::from_coeffs(&BaseField::Rational, c.iter().map(|&x| FieldValue::rational(x, 1)).collect())
    }

    #[test]
    fn trigonal_branch_place_is_totally_ramified() {
        let tc = build_trigonal(3, &BaseField::Rational, None).unwrap();
        let places = places_over(&tc.curve, &Locus::Finite(qpoly(&[0, 1]))).unwrap();
        assert_eq!(places, vec![tc.p1.clone()]);
        assert_eq!((tc.p1.e(), tc.p1.degree()), (3, 1));
        assert_eq!(tc.p1.to_string(), "(x=0, y=0)");
    }

    #[test]
    fn trigonal_infinity_has_degree_three() {
        let tc = build_trigonal(3, &BaseField::Rational, None).unwrap();
        let places = places_over(&tc.curve, &Locus::Infinity).unwrap();
        // Y^3 - 1 = (Y - 1)(Y^2 + Y + 1) over Q
        assert_eq!(places.len(), 2);
        assert!(places.iter().all(|p| p.e() == 1));
        assert_eq!(places.iter().map(|p| p.degree()).sum::<usize>(), 3);
        assert_eq!(places[0].to_string(), "(inf, Y=1)");
    }

    #[test]
    fn hyperelliptic_square_value_splits() {
        // y^2 = x^5 + 1 at x = 2: h = 33 not a square; at x = 0: h = 1
        let c = SuperellipticCurve::new(BaseField::Rational, 2, qpoly(&[1, 0, 0, 0, 0, 1])).unwrap();
        let at0 = places_over(&c, &Locus::Finite(qpoly(&[0, 1]))).unwrap();
        assert_eq!(at0.len(), 2);
        assert_eq!(at0[0].to_string(), "(x=0, y=-1)");
        assert_eq!(at0[1].to_string(), "(x=0, y=1)");
        let at2 = places_over(&c, &Locus::Finite(qpoly(&[-2, 1]))).unwrap();
        assert_eq!(at2.len(), 1);
        assert_eq!(at2[0].degree(), 2);
        let inf = places_over(&c, &Locus::Infinity).unwrap();
        assert_eq!((inf.len(), inf[0].e()), (1, 2));
    }

    #[test]
    fn nonlinear_locus_over_prime_field_splits_fibre() {
        // y^2 = x^5 + 1 over F_11 at the roots of x^2 + 1
        let f = BaseField::prime(11).unwrap();
        let h = Poly::from_coeffs(&f, [1u64, 0, 0, 0, 0, 1].iter().map(|&c| f.from_u64(c)).collect());
        let c = SuperellipticCurve::new(f.clone(), 2, h).unwrap();
        let q = Poly::from_coeffs(&f, vec![f.one(), f.zero(), f.one()]);
        let places = places_over(&c, &Locus::Finite(q)).unwrap();
        assert_eq!(places.iter().map(|p| p.degree()).sum::<usize>(), 4);
    }

    #[test]
    fn formatting() {
        assert_eq!(format_poly(&qpoly(&[1, 0, -3, 1]), "x"), "x^3 - 3*x^2 + 1");
        assert_eq!(format_poly(&qpoly(&[-2, 1]), "x"), "x - 2");
    }
}
