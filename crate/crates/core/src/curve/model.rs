//! The model `y^n = h(x)`, its branch data and genus.

use num_integer::Integer;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::factor::{factor, squarefree_decomposition};
use crate::algebra::rational::split_rational_linear;
use crate::algebra::{BaseField, FieldValue, Poly, PolyRing, Ring};
use crate::error::{Error, Result};

use super::place::Place;

/// A group of branch values of equal multiplicity: the roots of `q`.
///
/// Over finite fields `q` is irreducible. Over Q only rational roots are
/// split off, so a nonlinear `q` may still be reducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchLocus {
    pub q: Poly<FieldValue>,
    pub m: u32,
}

#[derive(Clone, Debug)]
pub struct SuperellipticCurve {
    n: u32,
    h: Poly<FieldValue>,
    field: BaseField,
    branch: Vec<BranchLocus>,
    genus: u32,
    d_inf: u32,
}

/// Splits a squarefree polynomial into loci: irreducible factors over a
/// finite field, rational linear factors plus one remainder over Q.
pub(crate) fn split_locus(field: &BaseField, f: &Poly<FieldValue>) -> Result<Vec<Poly<FieldValue>>> {
    if f.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    if field.is_rational() {
        let (mut lin, rest) = split_rational_linear(f)?;
        lin.extend(rest);
        Ok(lin)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        Ok(factor(field, f, &mut rng)?.factors.into_iter().map(|(q, _)| q).collect())
    }
}

/// `(locus, multiplicity)` pairs covering the roots of `f`.
pub(crate) fn loci_with_multiplicity(field: &BaseField, f: &Poly<FieldValue>) -> Result<Vec<(Poly<FieldValue>, u32)>> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return Ok(out);
    }
    for (piece, m) in squarefree_decomposition(field, f)? {
        for q in split_locus(field, &piece)? {
            out.push((q, m as u32));
        }
    }
    out.sort_by(|a, b| Place::locus_key(&a.0).cmp(&Place::locus_key(&b.0)));
    Ok(out)
}

impl SuperellipticCurve {
    pub fn new(field: BaseField, n: u32, h: Poly<FieldValue>) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain(format!("cover degree n = {n} must be at least 2")));
        }
        if h.coeffs().iter().any(|c| !field.contains(c)) {
            return Err(Error::Domain(format!("coefficients of h do not lie in {field}")));
        }
        let deg = h.degree().unwrap_or(0);
        if deg == 0 {
            return Err(Error::Domain("h must be non-constant".into()));
        }
        let p = field.characteristic();
        if p != 0 && (n as u64).is_multiple_of(p) {
            return Err(Error::Domain(format!("characteristic {p} divides n = {n}")));
        }
        let branch: Vec<BranchLocus> = loci_with_multiplicity(&field, &h)?
            .into_iter()
            .map(|(q, m)| BranchLocus { q, m })
            .collect();
        for b in &branch {
            let d = n.gcd(&b.m);
            if d != 1 {
                return Err(Error::Domain(format!(
                    "branch value of multiplicity {} has gcd(n, m) = {d}; only totally ramified finite branch points are supported",
                    b.m
                )));
            }
        }
        let d_inf = n.gcd(&(deg as u32));
        // Riemann-Hurwitz for the degree-n cover of the line
        let finite: i64 = branch.iter().map(|b| b.q.degree().unwrap() as i64 * (n as i64 - 1)).sum();
        let twice = finite + (n as i64 - d_inf as i64) - 2 * n as i64 + 2;
        if twice < 0 || twice % 2 != 0 {
            return Err(Error::Domain("inconsistent ramification data".into()));
        }
        let genus = (twice / 2) as u32;
        if p != 0 && p <= 2 * genus as u64 {
            return Err(Error::Domain(format!(
                "characteristic {p} must exceed 2g = {} for the classical theory",
                2 * genus
            )));
        }
        Ok(SuperellipticCurve { n, h, field, branch, genus, d_inf })
    }

    /// `y^n = prod (x - c_i)^{m_i}`.
    pub fn from_branch(field: BaseField, n: u32, branch: &[(FieldValue, u32)]) -> Result<Self> {
        let pr = PolyRing::new(field.clone());
        let mut h = pr.constant(field.one());
        for (c, m) in branch {
            if *m == 0 {
                return Err(Error::Domain("branch multiplicity must be positive".into()));
            }
            h = pr.mul(&h, &pr.pow(&Poly::linear(&field, c), *m as u64));
        }
        Self::new(field, n, h)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn h(&self) -> &Poly<FieldValue> {
        &self.h
    }

    pub fn field(&self) -> &BaseField {
        &self.field
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn branch(&self) -> &[BranchLocus] {
        &self.branch
    }

    pub fn lead(&self) -> &FieldValue {
        self.h.lead().unwrap()
    }

    /// `deg h`, the pole order data `m_inf` at infinity.
    pub fn m_inf(&self) -> u32 {
        self.h.degree().unwrap() as u32
    }

    /// Number of geometric places at infinity.
    pub fn d_inf(&self) -> u32 {
        self.d_inf
    }

    /// Ramification index of each place at infinity.
    pub fn e_inf(&self) -> u32 {
        self.n / self.d_inf
    }

    /// `-v(y)` at each place at infinity.
    pub fn mu(&self) -> u32 {
        self.m_inf() / self.d_inf
    }

    pub fn poly_ring(&self) -> PolyRing<BaseField> {
        PolyRing::new(self.field.clone())
    }

    /// Branch multiplicity of the locus `q`, if `q` is a branch locus.
    /// Multiplicity of the branch locus containing the roots of `q`, when
    /// `q` is monic and divides one.
    pub fn branch_multiplicity(&self, q: &Poly<FieldValue>) -> Option<u32> {
        if q.degree().unwrap_or(0) == 0 {
            return None;
        }
        let pr = self.poly_ring();
        self.branch
            .iter()
            .find(|b| &b.q == q || (pr.is_monic(q) && pr.divides(q, &b.q).unwrap_or(false)))
            .map(|b| b.m)
    }

    /// `prod_m q_m^floor(b m / n)`: the smallest polynomial multiplier making
    /// `y^-b dx` regular over every branch value.
    pub fn branch_multiplier(&self, b: u32) -> Poly<FieldValue> {
        let pr = self.poly_ring();
        self.branch.iter().fold(pr.constant(self.field.one()), |acc, bl| {
            pr.mul(&acc, &pr.pow(&bl.q, (b * bl.m / self.n) as u64))
        })
    }

    /// Base change to a larger field containing the current one.
    pub fn extend_field(&self, ext: &BaseField) -> Result<Self> {
        let h = self.h.try_map(ext, |c| ext.embed(c))?;
        Self::new(ext.clone(), self.n, h)
    }

    /// Residue characteristic-`p` model of a curve over Q.
    pub fn reduce_mod(&self, p: u64) -> Result<Self> {
        if !self.field.is_rational() {
            return Err(Error::Domain("reduction needs a curve over Q".into()));
        }
        let fp = BaseField::prime(p)?;
        let h = self.h.try_map(&fp, |c| fp.from_rational(c.as_rational().unwrap()))?;
        if h.degree() != self.h.degree() {
            return Err(Error::Domain(format!("bad reduction at {p}: leading coefficient vanishes")));
        }
        let reduced = Self::new(fp, self.n, h)?;
        if reduced.genus != self.genus {
            return Err(Error::Domain(format!("bad reduction at {p}: branch points collide")));
        }
        Ok(reduced)
    }
}

/// The cyclic trigonal family `y^3 = prod (x - a_i) prod (x - b_j)^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrigonalParams {
    pub s: usize,
    pub t: usize,
    pub alpha: Vec<FieldValue>,
    pub beta: Vec<FieldValue>,
}

impl TrigonalParams {
    /// `(s, t)` for a target genus: `t = 1 - g mod 3`, `s = g - t + 2`.
    pub fn shape(g: u32) -> (usize, usize) {
        let t = (1 - g as i64).rem_euclid(3) as usize;
        (g as usize + 2 - t, t)
    }
}

#[derive(Clone, Debug)]
pub struct TrigonalCurve {
    pub curve: SuperellipticCurve,
    pub params: TrigonalParams,
    pub p1: Place,
    pub p2: Place,
}

/// Builds the trigonal curve of genus `g`. Without explicit values the
/// branch values are `0, 1, ..., s + t - 1`, simple ones first.
pub fn build_trigonal(
    g: u32,
    field: &BaseField,
    values: Option<(Vec<FieldValue>, Vec<FieldValue>)>,
) -> Result<TrigonalCurve> {
    if g < 3 {
        return Err(Error::Domain(format!("trigonal family needs genus at least 3, got {g}")));
    }
    let (s, t) = TrigonalParams::shape(g);
    let (alpha, beta) = match values {
        Some((a, b)) => {
            if a.len() != s || b.len() != t {
                return Err(Error::Domain(format!(
                    "genus {g} needs s = {s} simple and t = {t} double branch values, got {} and {}",
                    a.len(),
                    b.len()
                )));
            }
            (a, b)
        }
        None => {
            if let Some(q) = field.order() {
                if q < num_bigint::BigUint::from(s + t) {
                    return Err(Error::Domain(format!("{field} has fewer than {} elements", s + t)));
                }
            }
            let a = (0..s).map(|i| field.from_u64(i as u64)).collect();
            let b = (s..s + t).map(|i| field.from_u64(i as u64)).collect();
            (a, b)
        }
    };
    let mut all: Vec<&FieldValue> = alpha.iter().chain(beta.iter()).collect();
    all.sort();
    if all.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Domain("branch values must be pairwise distinct".into()));
    }
    let mut branch: Vec<(FieldValue, u32)> = alpha.iter().map(|a| (a.clone(), 1)).collect();
    branch.extend(beta.iter().map(|b| (b.clone(), 2)));
    let curve = SuperellipticCurve::from_branch(field.clone(), 3, &branch)?;
    if curve.genus() != g {
        return Err(Error::CrossCheck(format!("built genus {} instead of {g}", curve.genus())));
    }
    let p1 = Place::branch(&curve, Poly::linear(field, &alpha[0]))?;
    let p2 = Place::branch(&curve, Poly::linear(field, &alpha[1]))?;
    Ok(TrigonalCurve { curve, params: TrigonalParams { s, t, alpha, beta }, p1, p2 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> FieldValue {
        FieldValue::rational(n, 1)
    }

    fn qpoly(c: &[i64]) -> Poly<FieldValue> {
        Poly::from_coeffs(&BaseField::Rational, c.iter().map(|&x| q(x)).collect())
    }

    #[test]
    fn trigonal_shapes() {
        assert_eq!(TrigonalParams::shape(3), (4, 1));
        assert_eq!(TrigonalParams::shape(4), (6, 0));
        assert_eq!(TrigonalParams::shape(5), (5, 2));
        for g in 3..=12 {
            let (s, t) = TrigonalParams::shape(g);
            assert_eq!((s + 2 * t) % 3, 0);
            assert!(t < s);
            assert_eq!(s + t - 2, g as usize);
        }
    }

    #[test]
    fn trigonal_genus_matches_family_formula() {
        for g in 3..=8 {
            let tc = build_trigonal(g, &BaseField::Rational, None).unwrap();
            assert_eq!(tc.curve.genus(), g);
            assert_eq!(tc.curve.d_inf(), 3);
        }
    }

    #[test]
    fn hyperelliptic_genus() {
        let c = SuperellipticCurve::new(BaseField::Rational, 2, qpoly(&[1, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(c.genus(), 2);
        assert_eq!(c.d_inf(), 1);
        let c = SuperellipticCurve::new(BaseField::Rational, 2, qpoly(&[1, 1, 0, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(c.genus(), 3);
        // even degree: two places at infinity
        let c = SuperellipticCurve::new(BaseField::Rational, 2, qpoly(&[-1, 0, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!((c.genus(), c.d_inf()), (2, 2));
    }

    #[test]
    fn rejects_partial_ramification() {
        // y^4 = x^2 (x - 1): gcd(4, 2) = 2 at x = 0
        let h = qpoly(&[0, 0, -1, 1]);
        assert!(matches!(SuperellipticCurve::new(BaseField::Rational, 4, h), Err(Error::Domain(_))));
    }

    #[test]
    fn rejects_small_characteristic() {
        let f5 = BaseField::prime(5).unwrap();
        let h = Poly::from_coeffs(&f5, vec![f5.one(), f5.zero(), f5.zero(), f5.zero(), f5.zero(), f5.zero(), f5.zero(), f5.one()]);
        // genus 3 needs p > 6
        assert!(SuperellipticCurve::new(f5, 2, h).is_err());
    }

    #[test]
    fn branch_multiplier_of_trigonal_genus_three() {
        let tc = build_trigonal(3, &BaseField::Rational, None).unwrap();
        let pr = tc.curve.poly_ring();
        assert_eq!(tc.curve.branch_multiplier(1), pr.constant(q(1)));
        // only the double branch value x = 4 contributes for b = 2
        assert_eq!(tc.curve.branch_multiplier(2), qpoly(&[-4, 1]));
    }
}
