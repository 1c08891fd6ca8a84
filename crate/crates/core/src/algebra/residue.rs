//! Residue algebras `K[z]/(q)` for squarefree `q`.
//!
//! Over a finite field `q` is usually irreducible and the algebra is a
//! field. Over Q we never factor, so `q` may be reducible and the algebra
//! a product of number fields; inverting a nonzero non-unit then reports
//! the factor of `q` it exposed, and [`split_on_zero_divisors`] retries the
//! computation on each piece.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::RngCore;

use super::field::{BaseField, FieldValue};
use super::poly::{Poly, PolyRing};
use super::ring::{AlgebraError, Ring};

#[derive(Clone, Debug)]
pub struct ResidueRing {
    base: BaseField,
    modulus: Poly<FieldValue>,
    /// Over Q: integer reduction table, see [`IntReduction`].
    int_table: Option<Arc<IntReduction>>,
}

/// `z^(d+k) mod q = rows[k] / den` for `k = 0..d-1`, with integer rows.
/// Multiplying over Q through this table avoids a gcd per coefficient
/// operation, which dominates once coefficients get large.
#[derive(Debug)]
struct IntReduction {
    den: BigInt,
    rows: Vec<Vec<BigInt>>,
}

impl IntReduction {
    fn new(q: &Poly<FieldValue>) -> IntReduction {
        let d = q.degree().unwrap();
        let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(d.saturating_sub(1));
        // z^d = -sum q_i z^i
        let mut cur: Vec<BigRational> = q.coeffs()[..d].iter().map(|c| -rat(c)).collect();
        for _ in 0..d.saturating_sub(1) {
            rows.push(cur.clone());
            let top = cur.pop().unwrap();
            cur.insert(0, BigRational::zero());
            for (i, c) in q.coeffs()[..d].iter().enumerate() {
                cur[i] -= &top * rat(c);
            }
        }
        let den = rows.iter().flatten().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        let rows = rows
            .into_iter()
            .map(|r| r.into_iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect())
            .collect();
        IntReduction { den, rows }
    }
}

fn rat(c: &FieldValue) -> BigRational {
    c.as_rational().expect("rational coefficient").clone()
}

/// Integer numerators over a common denominator.
fn to_int(a: &Poly<FieldValue>) -> (Vec<BigInt>, BigInt) {
    let den = a.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(rat(c).denom()));
    let nums = a
        .coeffs()
        .iter()
        .map(|c| {
            let r = rat(c);
            r.numer() * (&den / r.denom())
        })
        .collect();
    (nums, den)
}

impl ResidueRing {
    /// `modulus` is made monic; it must have positive degree.
    pub fn new(base: BaseField, modulus: &Poly<FieldValue>) -> Result<Self, AlgebraError> {
        let pr = PolyRing::new(base.clone());
        let modulus = pr.monic(modulus)?;
        if modulus.degree().unwrap_or(0) == 0 {
            return Err(AlgebraError::Unsupported("residue modulus must be non-constant".into()));
        }
        let int_table = base.is_rational().then(|| Arc::new(IntReduction::new(&modulus)));
        Ok(ResidueRing { base, modulus, int_table })
    }

    fn mul_rational(&self, t: &IntReduction, a: &Poly<FieldValue>, b: &Poly<FieldValue>) -> Poly<FieldValue> {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let d = self.degree();
        let (an, ad) = to_int(a);
        let (bn, bd) = to_int(b);
        let mut prod = vec![BigInt::zero(); an.len() + bn.len() - 1];
        for (i, x) in an.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in bn.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        let mut den = ad * bd;
        let out: Vec<BigInt> = if prod.len() <= d {
            prod
        } else {
            let mut low: Vec<BigInt> = prod[..d].iter().map(|c| c * &t.den).collect();
            for (k, c) in prod[d..].iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (i, r) in t.rows[k].iter().enumerate() {
                    low[i] += c * r;
                }
            }
            den *= &t.den;
            low
        };
        let coeffs = out.into_iter().map(|c| FieldValue::Rational(BigRational::new(c, den.clone()))).collect();
        Poly::from_coeffs(&self.base, coeffs)
    }

    pub fn base(&self) -> &BaseField {
        &self.base
    }

    pub fn modulus(&self) -> &Poly<FieldValue> {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    fn pr(&self) -> PolyRing<BaseField> {
        PolyRing::new(self.base.clone())
    }

    pub fn reduce(&self, a: &Poly<FieldValue>) -> Poly<FieldValue> {
        self.pr().rem(a, &self.modulus).expect("monic modulus")
    }

    /// The class of `z`, i.e. a generic root of the modulus.
    pub fn generator(&self) -> Poly<FieldValue> {
        self.reduce(&Poly::x(&self.base))
    }

    pub fn from_base(&self, c: &FieldValue) -> Poly<FieldValue> {
        Poly::constant(&self.base, c.clone())
    }

    /// Evaluates a base-field polynomial at the generator.
    pub fn eval_at_generator(&self, f: &Poly<FieldValue>) -> Poly<FieldValue> {
        self.reduce(f)
    }

    /// Evaluates a base-field polynomial at an arbitrary residue element.
    pub fn eval_poly(&self, f: &Poly<FieldValue>, at: &Poly<FieldValue>) -> Poly<FieldValue> {
        f.coeffs()
            .iter()
            .rev()
            .fold(self.zero(), |acc, c| self.add(&self.mul(&acc, at), &self.from_base(c)))
    }

    /// If the element lies in the base field, returns it.
    pub fn as_constant(&self, a: &Poly<FieldValue>) -> Option<FieldValue> {
        match a.degree() {
            None => Some(self.base.zero()),
            Some(0) => Some(a.coeffs()[0].clone()),
            _ => None,
        }
    }
}

impl Ring for ResidueRing {
    type Elem = Poly<FieldValue>;

    fn zero(&self) -> Self::Elem {
        Poly::zero()
    }

    fn one(&self) -> Self::Elem {
        Poly::constant(&self.base, self.base.one())
    }

    fn from_int(&self, n: i64) -> Self::Elem {
        Poly::constant(&self.base, self.base.from_int(n))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.pr().add(a, b)
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.pr().sub(a, b)
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        match &self.int_table {
            Some(t) => self.mul_rational(t, a, b),
            None => self.reduce(&self.pr().mul(a, b)),
        }
    }

    fn check_unit(&self, a: &Self::Elem) -> Result<(), AlgebraError> {
        if a.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let g = self.pr().gcd(a, &self.modulus)?;
        if g.degree() == Some(0) {
            Ok(())
        } else {
            Err(AlgebraError::ZeroDivisor(g))
        }
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.pr().neg(a)
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }

    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, AlgebraError> {
        if a.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if let Some(c) = self.as_constant(a) {
            return Ok(self.from_base(&self.base.inv(&c)?));
        }
        let (g, s, _) = self.pr().xgcd(a, &self.modulus)?;
        if g.degree() == Some(0) {
            Ok(self.reduce(&s))
        } else {
            Err(AlgebraError::ZeroDivisor(g))
        }
    }

    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }

    fn random_element(&self, rng: &mut dyn RngCore) -> Self::Elem {
        self.pr().random(self.degree(), rng)
    }
}

/// Runs `f` over `K[z]/(q)`, splitting `q` whenever a zero divisor shows up.
/// Returns one result per piece; the pieces multiply to `q`.
pub fn split_on_zero_divisors<T>(
    base: &BaseField,
    q: &Poly<FieldValue>,
    mut f: impl FnMut(&ResidueRing) -> Result<T, AlgebraError>,
) -> Result<Vec<(Poly<FieldValue>, T)>, AlgebraError> {
    let pr = PolyRing::new(base.clone());
    let mut pending = vec![pr.monic(q)?];
    let mut out = Vec::new();
    while let Some(piece) = pending.pop() {
        let ring = ResidueRing::new(base.clone(), &piece)?;
        match f(&ring) {
            Ok(v) => out.push((piece, v)),
            Err(AlgebraError::ZeroDivisor(g)) => {
                let g = pr.gcd(&g, &piece)?;
                let dg = g.degree().unwrap_or(0);
                if dg == 0 || dg >= piece.degree().unwrap() {
                    return Err(AlgebraError::Unsupported("zero divisor without a proper factor".into()));
                }
                let h = pr.div_exact(&piece, &g)?;
                pending.push(g);
                pending.push(h);
            }
            Err(e) => return Err(e),
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qpoly(c: &[i64]) -> Poly<FieldValue> {
        let q = BaseField::Rational;
        Poly::from_coeffs(&q, c.iter().map(|&x| q.from_int(x)).collect())
    }

    #[test]
    fn inverse_in_number_field() {
        // Q[z]/(z^2 - 2): (1 + z)^-1 = -1 + z
        let r = ResidueRing::new(BaseField::Rational, &qpoly(&[-2, 0, 1])).unwrap();
        let a = qpoly(&[1, 1]);
        assert_eq!(r.inv(&a).unwrap(), qpoly(&[-1, 1]));
    }

    #[test]
    fn zero_divisor_exposes_factor() {
        // Q[z]/((z-1)(z-2)): z - 1 is a zero divisor
        let r = ResidueRing::new(BaseField::Rational, &qpoly(&[2, -3, 1])).unwrap();
        match r.inv(&qpoly(&[-1, 1])) {
            Err(AlgebraError::ZeroDivisor(g)) => assert_eq!(g, qpoly(&[-1, 1])),
            other => panic!("expected zero divisor, got {other:?}"),
        }
    }

    #[test]
    fn splitting_driver_separates_components() {
        // is z - 1 invertible?  On the (z-1) component no, elsewhere yes.
        let q = qpoly(&[2, -3, 1]);
        let pieces = split_on_zero_divisors(&BaseField::Rational, &q, |ring| {
            let c = ring.sub(&ring.generator(), &ring.one());
            if ring.is_zero(&c) {
                return Ok(false);
            }
            ring.inv(&c).map(|_| true)
        })
        .unwrap();
        assert_eq!(pieces, vec![(qpoly(&[-2, 1]), true), (qpoly(&[-1, 1]), false)]);
    }
}
