//! Local parameters and expansions.
//!
//! Exact charts, one per place kind:
//! - branch place over `c` with `h = (x - c)^m G(x)`: `x = c + k t^n`,
//!   `y = c0 t^m (G(x)/G(c))^(1/n)` where `k = G(c)^b'`, `c0 = G(c)^a'` and
//!   `n a' - m b' = 1`. This avoids extracting an `n`-th root of `G(c)`.
//! - ordinary place on the sheet `y = Y`: `x = c + t`, `y = Y (h(x)/h(c))^(1/n)`.
//! - place at infinity with `Y = y^e / x^mu`: `x = k t^-e`,
//!   `y = c0 t^-mu u(t^e / k)^(1/n)` with `u(s) = s^deg(h) h(1/s) / lc`,
//!   `k = Y^b'`, `c0 = Y^a'` and `e a' - mu b' = 1`.
//!
//! Coefficients live in the residue ring of the place. For orders of
//! vanishing only the shape matters: rescaling rows by units and `t` by a
//! constant leaves pivot positions alone, so [`differential_rows`] drops the
//! constants `k`, `c0`, `Y` and works over the residue ring of the x-locus,
//! uniformly for every place in the fibre.

use crate::algebra::{AlgebraError, BaseField, FieldValue, Poly, PolyRing, ResidueRing, Ring, SeriesRing, TruncatedSeries};
use crate::error::{Error, Result};

use super::differentials::Differential;
use super::function::FunctionFieldElement;
use super::model::SuperellipticCurve;
use super::place::{locus_field, residue_to_field, Place, PlaceKind};

type Elem = Poly<FieldValue>;
type Series = TruncatedSeries<Elem>;

/// What to expand at a place.
#[derive(Clone, Copy, Debug)]
pub enum Expandable<'a> {
    Function(&'a FunctionFieldElement),
    /// The differential `dx`, as `(dx/dt)`.
    Dx,
}

/// `(a', b')` with `n a' - m b' = 1`, `0 <= a' < m` (`a' = 0` when `m = 1`).
fn bezout_pair(n: u32, m: u32) -> (i64, i64) {
    let (n, m) = (n as i64, m as i64);
    for a in 0..m.max(1) {
        if (n * a - 1).rem_euclid(m) == 0 {
            return (a, (n * a - 1) / m);
        }
    }
    unreachable!("gcd(n, m) = 1")
}

fn lift(ring: &ResidueRing, a: &Poly<FieldValue>) -> Poly<Elem> {
    Poly::from_coeffs(ring, a.coeffs().iter().map(|c| ring.from_base(c)).collect())
}

/// `a(c + s)` as a polynomial in `s`.
fn taylor_shift(ring: &ResidueRing, a: &Poly<Elem>, c: &Elem) -> Poly<Elem> {
    let pr = PolyRing::new(ring.clone());
    let s_plus_c = Poly::from_coeffs(ring, vec![c.clone(), ring.one()]);
    pr.compose(a, &s_plus_c)
}

/// Substitutes `s = lambda t^step` into coefficients `coeffs[j] s^j` and
/// shifts by `t^shift`; the result is known mod `t^prec`.
fn spread(
    sr: &SeriesRing<ResidueRing>,
    coeffs: &[Elem],
    step: i64,
    lambda: &Elem,
    shift: i64,
    prec: i64,
) -> Series {
    let ring = &sr.ring;
    let len = (prec - shift).max(0) as usize;
    let mut out = vec![ring.zero(); len];
    let mut scale = ring.one();
    for (j, c) in coeffs.iter().enumerate() {
        let k = j as i64 * step;
        if k >= len as i64 {
            break;
        }
        out[k as usize] = ring.mul(c, &scale);
        scale = ring.mul(&scale, lambda);
    }
    sr.from_coeffs(shift, out, prec)
}

/// Coefficients of a truncated series starting at exponent 0, up to
/// (excluding) `len`.
fn dense(sr: &SeriesRing<ResidueRing>, s: &Series, len: usize) -> Vec<Elem> {
    (0..len as i64).map(|e| s.coeff(&sr.ring, e).unwrap_or_else(|| sr.ring.zero())).collect()
}

/// `(u / u(0))^(1/n)` for a polynomial `u` with unit constant term, to
/// precision `prec`.
fn normalized_root(sr: &SeriesRing<ResidueRing>, u: &Poly<Elem>, n: u32, prec: i64) -> Result<Series, AlgebraError> {
    let ring = &sr.ring;
    let u0 = u.coeff(0).cloned().unwrap_or_else(|| ring.zero());
    let inv = ring.inv(&u0)?;
    let coeffs: Vec<Elem> = u.coeffs().iter().map(|c| ring.mul(c, &inv)).collect();
    let series = sr.from_coeffs(0, coeffs, prec.max(1));
    sr.nth_root(&series, n)
}

/// Series for `x`, `y`, `dx/dt` at a place, plus `a(x)` for polynomials.
pub struct PlaceChart {
    sr: SeriesRing<ResidueRing>,
    kind: PlaceKind,
    /// Base point of `x` (finite places).
    c: Elem,
    /// `x = c + lambda t^step` at finite places, `x = lambda t^-step` at infinity.
    lambda: Elem,
    step: i64,
    y: Series,
    prec: i64,
}

impl PlaceChart {
    /// Builds the chart with roughly `prec` terms of relative precision.
    pub fn new(curve: &SuperellipticCurve, place: &Place, prec: i64) -> Result<Self> {
        let field = curve.field();
        let n = curve.n();
        match place.kind() {
            PlaceKind::Branch => {
                let q = place.locus().unwrap();
                let m = curve.branch_multiplicity(q).unwrap();
                let ring = ResidueRing::new(field.clone(), q)?;
                let sr = SeriesRing::new(ring.clone());
                let c = ring.generator();
                let shifted = taylor_shift(&ring, &lift(&ring, curve.h()), &c);
                let g = Poly::from_coeffs(&ring, shifted.coeffs()[m as usize..].to_vec());
                let g0 = g.coeff(0).cloned().unwrap();
                let (a1, b1) = bezout_pair(n, m);
                let kappa = ring.pow_signed(&g0, b1)?;
                let c0 = ring.pow_signed(&g0, a1)?;
                let sprec = prec / n as i64 + 2;
                let w = normalized_root(&sr, &g, n, sprec)?;
                let w_t = spread(&sr, &dense(&sr, &w, sprec as usize), n as i64, &kappa, 0, n as i64 * sprec);
                let y = sr.scale(&sr.shift(&w_t, m as i64), &c0);
                Ok(PlaceChart { sr, kind: PlaceKind::Branch, c, lambda: kappa, step: n as i64, y, prec })
            }
            PlaceKind::Ordinary => {
                let q = place.locus().unwrap();
                let sheet = place
                    .sheet()
                    .ok_or_else(|| Error::Domain(format!("place {place} is an unsplit fibre; expansions need a single sheet")))?;
                let (l, z) = locus_field(field, q)
                    .ok_or_else(|| Error::Domain(format!("no residue field available for {place}")))?;
                let phi = Poly::from_coeffs(
                    &l,
                    sheet.coeffs().iter().map(|r| residue_to_field(&l, &z, r)).collect::<Result<_>>()?,
                );
                let ring = ResidueRing::new(l.clone(), &phi)?;
                let sr = SeriesRing::new(ring.clone());
                let c = ring.from_base(&z);
                let hl = curve.h().try_map(&l, |v| l.embed(v))?;
                let shifted = taylor_shift(&ring, &lift(&ring, &hl), &c);
                let w = normalized_root(&sr, &shifted, n, prec)?;
                let y = sr.scale(&w, &ring.generator());
                Ok(PlaceChart { sr, kind: PlaceKind::Ordinary, c, lambda: ring.one(), step: 1, y, prec })
            }
            PlaceKind::Infinite => {
                let psi = Poly::from_coeffs(
                    field,
                    place.sheet().unwrap().coeffs().iter().map(|r| r.coeff(0).cloned().unwrap_or_else(|| field.zero())).collect(),
                );
                let ring = ResidueRing::new(field.clone(), &psi)?;
                let sr = SeriesRing::new(ring.clone());
                let e = curve.e_inf();
                let mu = curve.mu();
                let y0 = ring.generator();
                let (a1, b1) = bezout_pair(e, mu);
                let kappa = ring.pow_signed(&y0, b1)?;
                let c0 = ring.pow_signed(&y0, a1)?;
                let u = reversed_monic(curve, &ring);
                let sprec = prec / e as i64 + 2;
                let w = normalized_root(&sr, &u, n, sprec)?;
                let kinv = ring.inv(&kappa)?;
                let w_t = spread(&sr, &dense(&sr, &w, sprec as usize), e as i64, &kinv, 0, e as i64 * sprec);
                let y = sr.scale(&sr.shift(&w_t, -(mu as i64)), &c0);
                Ok(PlaceChart { sr, kind: PlaceKind::Infinite, c: ring.zero(), lambda: kappa, step: e as i64, y, prec })
            }
        }
    }

    pub fn series_ring(&self) -> &SeriesRing<ResidueRing> {
        &self.sr
    }

    pub fn y(&self) -> &Series {
        &self.y
    }

    /// `a(x)` as an exact Laurent polynomial in `t`, known mod `t^(v + prec)`.
    pub fn poly(&self, a: &Poly<FieldValue>) -> Result<Series> {
        let ring = &self.sr.ring;
        let a = lift_any(ring, a)?;
        match self.kind {
            PlaceKind::Infinite => {
                let d = a.degree().unwrap_or(0) as i64;
                // a(k t^-e) = sum a_j k^j t^(-e j); reversed so exponents ascend
                let mut coeffs = Vec::new();
                for (j, cj) in a.coeffs().iter().enumerate() {
                    coeffs.push(ring.mul(cj, &ring.pow(&self.lambda, j as u64)));
                }
                let mut out = vec![ring.zero(); (d * self.step + 1) as usize];
                for (j, cj) in coeffs.into_iter().enumerate() {
                    out[((d - j as i64) * self.step) as usize] = cj;
                }
                let val = -d * self.step;
                Ok(self.sr.from_coeffs(val, out, val + (d * self.step) + self.prec))
            }
            _ => {
                let shifted = taylor_shift(ring, &a, &self.c);
                let len = shifted.coeffs().len() as i64 * self.step + self.prec;
                Ok(spread(&self.sr, shifted.coeffs(), self.step, &self.lambda, 0, len))
            }
        }
    }

    /// `dx/dt`.
    pub fn dx(&self) -> Series {
        let ring = &self.sr.ring;
        let k = self.step;
        match self.kind {
            PlaceKind::Infinite => {
                let c = ring.scale_int(&self.lambda, -k);
                self.sr.from_coeffs(-k - 1, vec![c], -k - 1 + self.prec)
            }
            _ => {
                let c = ring.scale_int(&self.lambda, k);
                self.sr.from_coeffs(k - 1, vec![c], k - 1 + self.prec)
            }
        }
    }

    /// Expansion of a function or of `dx`.
    pub fn expand(&self, what: Expandable<'_>) -> Result<Series> {
        match what {
            Expandable::Dx => Ok(self.dx()),
            Expandable::Function(f) => {
                let num = self.numerator(f)?;
                let den = self.poly(f.denominator())?;
                Ok(self.sr.div(&num, &den)?)
            }
        }
    }

    /// `sum a_i(x) y^i`.
    pub fn numerator(&self, f: &FunctionFieldElement) -> Result<Series> {
        let mut acc: Option<Series> = None;
        let mut ypow: Option<Series> = None;
        for a in f.numerator() {
            let term = match &ypow {
                None => self.poly(a)?,
                Some(yp) => self.sr.mul(&self.poly(a)?, yp),
            };
            if !a.is_zero() {
                acc = Some(match acc {
                    None => term,
                    Some(s) => self.sr.add(&s, &term),
                });
            }
            ypow = Some(match ypow {
                None => self.y.clone(),
                Some(yp) => self.sr.mul(&yp, &self.y),
            });
        }
        acc.ok_or(Error::Algebra(AlgebraError::DivisionByZero))
    }
}

/// Lifts a polynomial with coefficients in the base field or in the locus
/// field into the residue ring.
fn lift_any(ring: &ResidueRing, a: &Poly<FieldValue>) -> Result<Poly<Elem>> {
    let base = ring.base();
    Ok(Poly::from_coeffs(ring, a.coeffs().iter().map(|c| base.embed(c).map(|v| ring.from_base(&v))).collect::<Result<_, _>>()?))
}

/// `s^deg(h) h(1/s) / lc(h)`, a polynomial with constant term 1.
fn reversed_monic(curve: &SuperellipticCurve, ring: &ResidueRing) -> Poly<Elem> {
    let base = ring.base();
    let inv = base.inv(curve.lead()).unwrap();
    let coeffs: Vec<Elem> = curve.h().coeffs().iter().rev().map(|c| ring.from_base(&base.mul(c, &inv))).collect();
    Poly::from_coeffs(ring, coeffs)
}

/// Expansion at a place to about `prec` terms.
pub fn local_expansion(curve: &SuperellipticCurve, place: &Place, what: Expandable<'_>, prec: i64) -> Result<(ResidueRing, Series)> {
    let chart = PlaceChart::new(curve, place, prec)?;
    let s = chart.expand(what)?;
    Ok((chart.sr.ring.clone(), s))
}

/// Which reduced chart to use for a whole fibre.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FibreKind {
    /// Branch locus of multiplicity `m`.
    Branch(u32),
    Ordinary,
    Infinity,
}

/// Coefficient rows of the basis differentials at the places of one fibre,
/// columns `t^0 .. t^(prec-1)`. `ring` is the residue ring of the x-locus
/// (for infinity, any ring over the base field; its generator is unused).
pub fn differential_rows(
    curve: &SuperellipticCurve,
    ring: &ResidueRing,
    kind: FibreKind,
    basis: &[Differential],
    prec: usize,
) -> Result<Vec<Vec<Elem>>, AlgebraError> {
    let sr = SeriesRing::new(ring.clone());
    let n = curve.n();
    let pr = PolyRing::new(ring.clone());
    let one = ring.one();
    let max_b = basis.iter().map(|d| d.b).max().unwrap_or(0);
    let p = prec as i64;
    let (step, unit_poly): (i64, Poly<Elem>) = match kind {
        FibreKind::Branch(m) => {
            let shifted = taylor_shift(ring, &lift(ring, curve.h()), &ring.generator());
            (n as i64, Poly::from_coeffs(ring, shifted.coeffs()[m as usize..].to_vec()))
        }
        FibreKind::Ordinary => (1, taylor_shift(ring, &lift(ring, curve.h()), &ring.generator())),
        FibreKind::Infinity => (curve.e_inf() as i64, reversed_monic(curve, ring)),
    };
    // the most negative shift below determines how many s-terms are needed
    let worst_shift = basis
        .iter()
        .map(|d| row_shift(curve, kind, d))
        .min()
        .unwrap_or(0)
        .min(0);
    let sprec = (p - worst_shift) / step + 2;
    let root_inv = sr.inv(&normalized_root(&sr, &unit_poly, n, sprec)?)?;
    let mut powers = vec![sr.one(sprec)];
    for _ in 0..max_b {
        let next = sr.mul(powers.last().unwrap(), &root_inv);
        powers.push(next);
    }
    let mut rows = Vec::with_capacity(basis.len());
    for d in basis {
        let r = pr.mul(&pr.pow(&pr.x(), d.a as u64), &lift(ring, &curve.branch_multiplier(d.b)));
        let rs: Poly<Elem> = match kind {
            FibreKind::Infinity => {
                let mut c = r.coeffs().to_vec();
                c.reverse();
                Poly::from_coeffs(ring, c)
            }
            _ => taylor_shift(ring, &r, &ring.generator()),
        };
        let rs = sr.from_poly(&rs, sprec);
        let body = sr.mul(&rs, &powers[d.b as usize]);
        let series = spread(&sr, &dense(&sr, &body, sprec as usize), step, &one, row_shift(curve, kind, d), p);
        if series.precision() < p {
            return Err(AlgebraError::PrecisionExhausted("differential row".into()));
        }
        rows.push((0..p).map(|e| series.coeff(ring, e).unwrap()).collect());
    }
    Ok(rows)
}

/// Exponent of `t` multiplying the `s`-series of a basis differential.
fn row_shift(curve: &SuperellipticCurve, kind: FibreKind, d: &Differential) -> i64 {
    let n = curve.n() as i64;
    let b = d.b as i64;
    match kind {
        FibreKind::Branch(m) => n - 1 - b * m as i64,
        FibreKind::Ordinary => 0,
        FibreKind::Infinity => {
            let e = curve.e_inf() as i64;
            let deg_r = d.a as i64 + curve.branch_multiplier(d.b).degree().unwrap() as i64;
            b * curve.mu() as i64 - e * deg_r - e - 1
        }
    }
}

/// Residue ring standing in for the base field at infinity.
pub fn infinity_ring(field: &BaseField) -> ResidueRing {
    ResidueRing::new(field.clone(), &Poly::x(field)).expect("x is monic")
}
