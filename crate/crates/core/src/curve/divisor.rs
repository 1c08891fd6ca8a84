//! Divisors and exact divisors of functions.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::factor::squarefree_decomposition;
use crate::algebra::{AlgebraError, BaseField, FieldValue, Poly, PolyRing};
use crate::error::{Error, Result};

use super::chart::PlaceChart;
use super::function::FunctionFieldElement;
use super::model::{split_locus, SuperellipticCurve};
use super::place::{places_over, Locus, Place, PlaceKind};

/// Finite formal sum of places, without zero multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Divisor {
    terms: BTreeMap<Place, i64>,
}

impl Divisor {
    pub fn zero() -> Self {
        Divisor::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Place, i64)>) -> Self {
        let mut d = Divisor::zero();
        for (p, m) in terms {
            d.add_term(p, m);
        }
        d
    }

    pub fn add_term(&mut self, place: Place, mult: i64) {
        let entry = self.terms.entry(place.clone()).or_insert(0);
        *entry += mult;
        if *entry == 0 {
            self.terms.remove(&place);
        }
    }

    pub fn add(&self, other: &Divisor) -> Divisor {
        let mut out = self.clone();
        for (p, m) in &other.terms {
            out.add_term(p.clone(), *m);
        }
        out
    }

    pub fn scale(&self, k: i64) -> Divisor {
        if k == 0 {
            return Divisor::zero();
        }
        Divisor { terms: self.terms.iter().map(|(p, m)| (p.clone(), m * k)).collect() }
    }

    pub fn degree(&self) -> i64 {
        self.terms.iter().map(|(p, m)| m * p.degree() as i64).sum()
    }

    pub fn multiplicity(&self, place: &Place) -> i64 {
        self.terms.get(place).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Place, i64)> {
        self.terms.iter().map(|(p, m)| (p, *m))
    }

    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|&m| m > 0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, m) in &self.terms {
            let sign = if *m < 0 { "-" } else { "+" };
            let mag = m.abs();
            let coef = if mag == 1 { String::new() } else { format!("{mag}*") };
            if first {
                write!(f, "{}{coef}P{p}", if *m < 0 { "-" } else { "" })?;
                first = false;
            } else {
                write!(f, " {sign} {coef}P{p}")?;
            }
        }
        Ok(())
    }
}

/// Order of `a` along the locus `q`. Over Q a nonlinear `q` may be
/// reducible; the order must then be the same at all of its roots.
pub(crate) fn locus_order(pr: &PolyRing<BaseField>, q: &Poly<FieldValue>, a: &Poly<FieldValue>) -> Result<i64> {
    if a.is_zero() {
        return Err(Error::Algebra(AlgebraError::ZeroPolynomial));
    }
    let mut k = 0;
    let mut cur = a.clone();
    loop {
        let g = pr.gcd(&cur, q)?;
        match g.degree() {
            Some(0) => return Ok(k),
            _ if &g == q => {
                cur = pr.div_exact(&cur, q)?;
                k += 1;
            }
            _ => {
                return Err(Error::Algebra(AlgebraError::Unsupported(
                    "order is not constant along a reducible locus".into(),
                )))
            }
        }
    }
}

/// Valuation of the numerator `sum a_i y^i` at one place, by expansion.
fn numerator_valuation(curve: &SuperellipticCurve, place: &Place, f: &FunctionFieldElement) -> Result<i64> {
    let mut prec = 8;
    loop {
        let chart = PlaceChart::new(curve, place, prec)?;
        let s = chart.numerator(f)?;
        if let Some(v) = s.leading_exponent() {
            chart.series_ring().valuation(&s).map_err(|e| match e {
                AlgebraError::ZeroDivisor(_) => Error::Algebra(AlgebraError::Unsupported(format!(
                    "valuation differs between the geometric points of {place}"
                ))),
                other => Error::Algebra(other),
            })?;
            return Ok(v);
        }
        prec *= 2;
        if prec > 1 << 14 {
            return Err(Error::Algebra(AlgebraError::PrecisionExhausted(format!("valuation at {place}"))));
        }
    }
}

/// Valuation of `f` at a place.
pub fn valuation(curve: &SuperellipticCurve, place: &Place, f: &FunctionFieldElement) -> Result<i64> {
    if f.is_zero() {
        return Err(Error::Algebra(AlgebraError::ZeroPolynomial));
    }
    let pr = curve.poly_ring();
    let n = curve.n() as i64;
    let den = f.denominator();
    match place.kind() {
        PlaceKind::Branch => {
            let q = place.locus().unwrap();
            let m = curve.branch_multiplicity(q).unwrap() as i64;
            let mut best: Option<i64> = None;
            // distinct i give distinct residues mod n, so the minimum is attained once
            for (i, a) in f.numerator().iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let v = n * locus_order(&pr, q, a)? + i as i64 * m;
                best = Some(best.map_or(v, |b| b.min(v)));
            }
            Ok(best.unwrap() - n * locus_order(&pr, q, den)?)
        }
        PlaceKind::Ordinary => {
            let q = place.locus().unwrap();
            let num = match f.as_monomial() {
                Some((_, a)) => locus_order(&pr, q, a)?,
                None => numerator_valuation(curve, place, f)?,
            };
            Ok(num - locus_order(&pr, q, den)?)
        }
        PlaceKind::Infinite => {
            let e = curve.e_inf() as i64;
            let num = match f.as_monomial() {
                Some((k, a)) => -e * a.degree().unwrap() as i64 - k as i64 * curve.mu() as i64,
                None => numerator_valuation(curve, place, f)?,
            };
            Ok(num + e * den.degree().unwrap() as i64)
        }
    }
}

/// Finite loci off the branch locus where `f` can have a zero or pole: a
/// coprime base of the squarefree pieces of the numerator norm and the
/// denominator, split into loci, so each piece has a uniform order.
fn candidate_loci(curve: &SuperellipticCurve, f: &FunctionFieldElement) -> Result<Vec<Poly<FieldValue>>> {
    let pr = curve.poly_ring();
    let field = curve.field();
    let norm = match f.as_monomial() {
        // the norm of a y^k is +-a^n h^k; only the roots matter
        Some((_, a)) => a.clone(),
        None => f.numerator_norm(curve)?,
    };
    let mut pieces = Vec::new();
    for atom in [&norm, f.denominator()] {
        if atom.degree().unwrap_or(0) > 0 {
            pieces.extend(squarefree_decomposition(field, atom)?.into_iter().map(|(q, _)| q));
        }
    }
    let mut loci: Vec<Poly<FieldValue>> = Vec::new();
    for piece in coprime_base(&pr, pieces)? {
        // parts on the branch locus are handled by the branch places themselves
        let mut off_branch = piece;
        for b in curve.branch() {
            let g = pr.gcd(&off_branch, &b.q)?;
            if g.degree().unwrap_or(0) > 0 {
                off_branch = pr.div_exact(&off_branch, &g)?;
            }
        }
        loci.extend(split_locus(field, &off_branch)?);
    }
    Ok(loci)
}

/// Pairwise coprime monic squarefree polynomials whose products give back
/// each (squarefree) input.
fn coprime_base(pr: &PolyRing<BaseField>, polys: Vec<Poly<FieldValue>>) -> Result<Vec<Poly<FieldValue>>> {
    let mut base: Vec<Poly<FieldValue>> = Vec::new();
    for p in polys {
        let mut p = pr.monic(&p)?;
        let mut next = Vec::with_capacity(base.len() + 2);
        for b in base {
            let g = pr.gcd(&p, &b)?;
            if g.degree().unwrap_or(0) == 0 {
                next.push(b);
                continue;
            }
            let rest = pr.div_exact(&b, &g)?;
            p = pr.div_exact(&p, &g)?;
            if rest.degree().unwrap_or(0) > 0 {
                next.push(rest);
            }
            next.push(g);
        }
        if p.degree().unwrap_or(0) > 0 {
            next.push(p);
        }
        base = next;
    }
    Ok(base)
}

/// `div(f)`. Over Q, functions that are not of the form `a(x) y^k / d(x)`
/// are only supported when their zeros and poles lie over rational x.
pub fn divisor_of(curve: &SuperellipticCurve, f: &FunctionFieldElement) -> Result<Divisor> {
    if f.is_zero() {
        return Err(Error::Algebra(AlgebraError::ZeroPolynomial));
    }
    let mut places: Vec<Place> = Vec::new();
    for b in curve.branch() {
        places.push(Place::branch(curve, b.q.clone())?);
    }
    for q in candidate_loci(curve, f)? {
        places.extend(places_over(curve, &Locus::Finite(q))?);
    }
    places.extend(places_over(curve, &Locus::Infinity)?);
    let mut d = Divisor::zero();
    for p in places {
        let v = valuation(curve, &p, f)?;
        if v != 0 {
            d.add_term(p, v);
        }
    }
    if d.degree() != 0 {
        return Err(Error::CrossCheck(format!("principal divisor of degree {}: {d}", d.degree())));
    }
    Ok(d)
}

/// `div(dx)`: `(n - 1)` at each finite branch place, `-(e + 1)` at each
/// place at infinity, read off from the local expansions of `x`.
pub fn div_dx(curve: &SuperellipticCurve) -> Result<Divisor> {
    let mut d = Divisor::zero();
    let mut places: Vec<Place> = curve.branch().iter().map(|b| Place::branch(curve, b.q.clone())).collect::<Result<_>>()?;
    places.extend(places_over(curve, &Locus::Infinity)?);
    for p in places {
        let chart = PlaceChart::new(curve, &p, 4)?;
        let v = chart.series_ring().valuation(&chart.dx())?;
        d.add_term(p, v);
    }
    Ok(d)
}
