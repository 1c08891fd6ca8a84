//! Dense univariate polynomials over any [`Ring`].

use std::fmt;

use num_bigint::BigUint;
use rand::RngCore;

use super::ring::{AlgebraError, Ring};

/// Dense coefficient list, constant term first, no trailing zeros.
/// The zero polynomial is the empty list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E> Poly<E> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn from_coeffs<R: Ring<Elem = E>>(ring: &R, mut coeffs: Vec<E>) -> Self {
        while coeffs.last().is_some_and(|c| ring.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant<R: Ring<Elem = E>>(ring: &R, c: E) -> Self {
        Self::from_coeffs(ring, vec![c])
    }

    /// `x`.
    pub fn x<R: Ring<Elem = E>>(ring: &R) -> Self {
        Poly { coeffs: vec![ring.zero(), ring.one()] }
    }

    /// `x - c`.
    pub fn linear<R: Ring<Elem = E>>(ring: &R, c: &E) -> Self {
        Poly { coeffs: vec![ring.neg(c), ring.one()] }
    }

    /// `c x^k`.
    pub fn monomial<R: Ring<Elem = E>>(ring: &R, c: E, k: usize) -> Self {
        let mut coeffs: Vec<E> = (0..k).map(|_| ring.zero()).collect();
        coeffs.push(c);
        Self::from_coeffs(ring, coeffs)
    }

    /// Builds from coefficients already known to have a nonzero last entry.
    pub(crate) fn from_trimmed(coeffs: Vec<E>) -> Self {
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lead(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Option<&E> {
        self.coeffs.get(i)
    }

    pub fn map<F, R: Ring<Elem = F>>(&self, ring: &R, f: impl Fn(&E) -> F) -> Poly<F> {
        Poly::from_coeffs(ring, self.coeffs.iter().map(f).collect())
    }

    pub fn try_map<F, R: Ring<Elem = F>>(
        &self,
        ring: &R,
        f: impl Fn(&E) -> Result<F, AlgebraError>,
    ) -> Result<Poly<F>, AlgebraError> {
        Ok(Poly::from_coeffs(ring, self.coeffs.iter().map(f).collect::<Result<_, _>>()?))
    }
}

impl<E: fmt::Display> fmt::Display for Poly<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("({c})*x"),
                _ => format!("({c})*x^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Polynomial ring `R[x]`. Also a [`Ring`] itself, with units the invertible
/// constants.
#[derive(Clone, Debug)]
pub struct PolyRing<R: Ring> {
    pub base: R,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(base: R) -> Self {
        PolyRing { base }
    }

    fn r(&self) -> &R {
        &self.base
    }

    pub fn from_coeffs(&self, coeffs: Vec<R::Elem>) -> Poly<R::Elem> {
        Poly::from_coeffs(self.r(), coeffs)
    }

    pub fn x(&self) -> Poly<R::Elem> {
        Poly::x(self.r())
    }

    pub fn constant(&self, c: R::Elem) -> Poly<R::Elem> {
        Poly::constant(self.r(), c)
    }

    pub fn add(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Poly<R::Elem> {
        let n = a.coeffs.len().max(b.coeffs.len());
        let zero = self.r().zero();
        let coeffs = (0..n)
            .map(|i| {
                let x = a.coeffs.get(i).unwrap_or(&zero);
                let y = b.coeffs.get(i).unwrap_or(&zero);
                self.r().add(x, y)
            })
            .collect();
        self.from_coeffs(coeffs)
    }

    pub fn neg(&self, a: &Poly<R::Elem>) -> Poly<R::Elem> {
        Poly { coeffs: a.coeffs.iter().map(|c| self.r().neg(c)).collect() }
    }

    pub fn sub(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Poly<R::Elem> {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Poly<R::Elem> {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let r = self.r();
        let mut out: Vec<R::Elem> = (0..a.coeffs.len() + b.coeffs.len() - 1).map(|_| r.zero()).collect();
        for (i, x) in a.coeffs.iter().enumerate() {
            if r.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                out[i + j] = r.add(&out[i + j], &r.mul(x, y));
            }
        }
        self.from_coeffs(out)
    }

    pub fn scale(&self, a: &Poly<R::Elem>, c: &R::Elem) -> Poly<R::Elem> {
        self.from_coeffs(a.coeffs.iter().map(|x| self.r().mul(x, c)).collect())
    }

    pub fn pow(&self, a: &Poly<R::Elem>, mut e: u64) -> Poly<R::Elem> {
        let mut base = a.clone();
        let mut acc = self.constant(self.r().one());
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, a: &Poly<R::Elem>, k: usize) -> Poly<R::Elem> {
        if a.is_zero() {
            return Poly::zero();
        }
        let mut coeffs: Vec<R::Elem> = (0..k).map(|_| self.r().zero()).collect();
        coeffs.extend(a.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// `(q, r)` with `a = q b + r` and `deg r < deg b`. Requires the leading
    /// coefficient of `b` to be a unit.
    pub fn divmod(
        &self,
        a: &Poly<R::Elem>,
        b: &Poly<R::Elem>,
    ) -> Result<(Poly<R::Elem>, Poly<R::Elem>), AlgebraError> {
        let r = self.r();
        let db = b.degree().ok_or(AlgebraError::DivisionByZero)?;
        let inv_lead = r.inv(b.lead().unwrap())?;
        let mut rem = a.coeffs.clone();
        if rem.len() <= db {
            return Ok((Poly::zero(), a.clone()));
        }
        let mut q: Vec<R::Elem> = (0..rem.len() - db).map(|_| r.zero()).collect();
        for top in (db..rem.len()).rev() {
            let c = r.mul(&rem[top], &inv_lead);
            if r.is_zero(&c) {
                continue;
            }
            let shift = top - db;
            for (i, bc) in b.coeffs.iter().enumerate() {
                rem[shift + i] = r.sub(&rem[shift + i], &r.mul(&c, bc));
            }
            q[shift] = c;
        }
        rem.truncate(db);
        Ok((self.from_coeffs(q), self.from_coeffs(rem)))
    }

    pub fn rem(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Result<Poly<R::Elem>, AlgebraError> {
        Ok(self.divmod(a, b)?.1)
    }

    /// Exact quotient; errors if `b` does not divide `a`.
    pub fn div_exact(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Result<Poly<R::Elem>, AlgebraError> {
        if let Some(q) = self.base.fast_poly_div_exact(a, b) {
            return q;
        }
        let (q, rem) = self.divmod(a, b)?;
        if !rem.is_zero() {
            return Err(AlgebraError::Unsupported("inexact polynomial division".into()));
        }
        Ok(q)
    }

    pub fn divides(&self, b: &Poly<R::Elem>, a: &Poly<R::Elem>) -> Result<bool, AlgebraError> {
        Ok(self.rem(a, b)?.is_zero())
    }

    pub fn monic(&self, a: &Poly<R::Elem>) -> Result<Poly<R::Elem>, AlgebraError> {
        match a.lead() {
            None => Ok(Poly::zero()),
            Some(l) => Ok(self.scale(a, &self.r().inv(l)?)),
        }
    }

    pub fn is_monic(&self, a: &Poly<R::Elem>) -> bool {
        a.lead().is_some_and(|l| self.r().is_one(l))
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Result<Poly<R::Elem>, AlgebraError> {
        if let Some(g) = self.base.fast_poly_gcd(a, b) {
            return g;
        }
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = self.rem(&x, &y)?;
            x = y;
            y = r;
        }
        self.monic(&x)
    }

    /// `(g, s, t)` with `g = s a + t b` and `g` monic.
    #[allow(clippy::type_complexity)]
    pub fn xgcd(
        &self,
        a: &Poly<R::Elem>,
        b: &Poly<R::Elem>,
    ) -> Result<(Poly<R::Elem>, Poly<R::Elem>, Poly<R::Elem>), AlgebraError> {
        let one = self.constant(self.r().one());
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (one.clone(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), one);
        while !r1.is_zero() {
            let (q, r) = self.divmod(&r0, &r1)?;
            let s2 = self.sub(&s0, &self.mul(&q, &s1));
            let t2 = self.sub(&t0, &self.mul(&q, &t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        match r0.lead() {
            None => Ok((r0, s0, t0)),
            Some(l) => {
                let c = self.r().inv(l)?;
                Ok((self.scale(&r0, &c), self.scale(&s0, &c), self.scale(&t0, &c)))
            }
        }
    }

    pub fn derivative(&self, a: &Poly<R::Elem>) -> Poly<R::Elem> {
        let r = self.r();
        self.from_coeffs(
            a.coeffs.iter().enumerate().skip(1).map(|(i, c)| r.scale_int(c, i as i64)).collect(),
        )
    }

    pub fn eval(&self, a: &Poly<R::Elem>, x: &R::Elem) -> R::Elem {
        let r = self.r();
        a.coeffs.iter().rev().fold(r.zero(), |acc, c| r.add(&r.mul(&acc, x), c))
    }

    /// `a(b(x))`.
    pub fn compose(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Poly<R::Elem> {
        a.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| self.add(&self.mul(&acc, b), &self.constant(c.clone())))
    }

    /// `a^e mod m` for a big exponent.
    pub fn pow_mod(
        &self,
        a: &Poly<R::Elem>,
        e: &BigUint,
        m: &Poly<R::Elem>,
    ) -> Result<Poly<R::Elem>, AlgebraError> {
        let mut acc = self.rem(&self.constant(self.r().one()), m)?;
        let base = self.rem(a, m)?;
        for i in (0..e.bits()).rev() {
            acc = self.rem(&self.mul(&acc, &acc), m)?;
            if e.bit(i) {
                acc = self.rem(&self.mul(&acc, &base), m)?;
            }
        }
        Ok(acc)
    }

    /// Multiplicity of `q` as a factor of `a` (`a` nonzero, `q` non-constant).
    pub fn multiplicity(&self, q: &Poly<R::Elem>, a: &Poly<R::Elem>) -> Result<usize, AlgebraError> {
        if a.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        let mut k = 0;
        let mut cur = a.clone();
        loop {
            let (quot, rem) = self.divmod(&cur, q)?;
            if !rem.is_zero() {
                return Ok(k);
            }
            cur = quot;
            k += 1;
        }
    }

    /// Squarefree part (product of the distinct monic irreducible factors).
    pub fn squarefree_part(&self, a: &Poly<R::Elem>) -> Result<Poly<R::Elem>, AlgebraError> {
        let parts = super::factor::squarefree_decomposition(&self.base, a)?;
        Ok(parts.iter().fold(self.constant(self.r().one()), |acc, (f, _)| self.mul(&acc, f)))
    }

    pub fn random(&self, degree_below: usize, rng: &mut dyn RngCore) -> Poly<R::Elem> {
        self.from_coeffs((0..degree_below).map(|_| self.r().random_element(rng)).collect())
    }

    /// Embeds a polynomial with coefficients from a subfield, via `f`.
    pub fn lift<E>(&self, a: &Poly<E>, f: impl Fn(&E) -> R::Elem) -> Poly<R::Elem> {
        self.from_coeffs(a.coeffs.iter().map(f).collect())
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = Poly<R::Elem>;

    fn zero(&self) -> Self::Elem {
        Poly::zero()
    }

    fn one(&self) -> Self::Elem {
        self.constant(self.r().one())
    }

    fn from_int(&self, n: i64) -> Self::Elem {
        self.constant(self.r().from_int(n))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        PolyRing::add(self, a, b)
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        PolyRing::sub(self, a, b)
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        PolyRing::mul(self, a, b)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        PolyRing::neg(self, a)
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }

    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, AlgebraError> {
        match a.degree() {
            None => Err(AlgebraError::DivisionByZero),
            Some(0) => Ok(self.constant(self.r().inv(&a.coeffs[0])?)),
            Some(_) => Err(AlgebraError::Unsupported("inverse of a non-constant polynomial".into())),
        }
    }

    fn characteristic(&self) -> u64 {
        self.r().characteristic()
    }

    fn random_element(&self, rng: &mut dyn RngCore) -> Self::Elem {
        self.random(3, rng)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{BaseField, FieldValue};

    fn qpoly(c: &[i64]) -> Poly<FieldValue> {
        let q = BaseField::Rational;
        Poly::from_coeffs(&q, c.iter().map(|&x| q.from_int(x)).collect())
    }

    fn fpoly(f: &BaseField, c: &[i64]) -> Poly<FieldValue> {
        Poly::from_coeffs(f, c.iter().map(|&x| f.from_int(x)).collect())
    }

    #[test]
    fn gcd_over_rationals() {
        let ring = PolyRing::new(BaseField::Rational);
        let g = ring.gcd(&qpoly(&[-1, 0, 1]), &qpoly(&[1, -2, 1])).unwrap();
        assert_eq!(g, qpoly(&[-1, 1]));
    }

    #[test]
    fn derivative_is_formal() {
        let ring = PolyRing::new(BaseField::Rational);
        assert_eq!(ring.derivative(&qpoly(&[1, 0, 0, 0, 0, 1])), qpoly(&[0, 0, 0, 0, 5]));
        let f5 = BaseField::prime(5).unwrap();
        let r5 = PolyRing::new(f5.clone());
        assert!(r5.derivative(&fpoly(&f5, &[1, 0, 0, 0, 0, 1])).is_zero());
    }

    #[test]
    fn divmod_cubic_by_linear_mod_7() {
        let f7 = BaseField::prime(7).unwrap();
        let ring = PolyRing::new(f7.clone());
        let a = fpoly(&f7, &[0, 0, 0, 1]);
        let b = fpoly(&f7, &[-2, 1]);
        let (q, r) = ring.divmod(&a, &b).unwrap();
        assert_eq!(q, fpoly(&f7, &[4, 2, 1]));
        assert_eq!(r, fpoly(&f7, &[1]));
        // independent check: q*b + r == a
        assert_eq!(ring.add(&ring.mul(&q, &b), &r), a);
    }

    #[test]
    fn xgcd_bezout() {
        let ring = PolyRing::new(BaseField::Rational);
        let a = qpoly(&[1, 2, 0, 1]);
        let b = qpoly(&[3, 0, 1]);
        let (g, s, t) = ring.xgcd(&a, &b).unwrap();
        assert_eq!(ring.add(&ring.mul(&s, &a), &ring.mul(&t, &b)), g);
        assert_eq!(g, qpoly(&[1]));
    }

    #[test]
    fn division_by_zero_polynomial() {
        let ring = PolyRing::new(BaseField::Rational);
        assert_eq!(ring.divmod(&qpoly(&[1, 1]), &Poly::zero()), Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn compose_and_eval_agree() {
        let ring = PolyRing::new(BaseField::Rational);
        let a = qpoly(&[1, 0, 3]);
        let b = qpoly(&[2, 1]);
        let c = ring.compose(&a, &b);
        let x = BaseField::Rational.from_int(5);
        assert_eq!(ring.eval(&c, &x), ring.eval(&a, &ring.eval(&b, &x)));
    }
}
