//! Truncated Laurent series in one local parameter `t`.
//!
//! A series is known modulo `t^prec` (absolute precision). Operations
//! propagate precision pessimistically, so cancellation shows up as lost
//! precision rather than as invented zero coefficients.

use super::poly::Poly;
use super::ring::{AlgebraError, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries<E> {
    /// Exponent of `coeffs[0]`.
    val: i64,
    /// Coefficients of `t^val .. t^(prec-1)`; the first is nonzero unless
    /// the list is empty, in which case the series is `O(t^prec)`.
    coeffs: Vec<E>,
    prec: i64,
}

impl<E: Clone> TruncatedSeries<E> {
    pub fn precision(&self) -> i64 {
        self.prec
    }

    /// Leading exponent, or `None` when the series vanishes to its precision.
    pub fn leading_exponent(&self) -> Option<i64> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.val)
        }
    }

    pub fn is_zero_to_precision(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `t^e`, `None` beyond the precision.
    pub fn coeff<R: Ring<Elem = E>>(&self, ring: &R, e: i64) -> Option<E> {
        if e >= self.prec {
            None
        } else if e < self.val {
            Some(ring.zero())
        } else {
            Some(self.coeffs[(e - self.val) as usize].clone())
        }
    }

    pub fn coefficients(&self) -> &[E] {
        &self.coeffs
    }

    /// Exponent of the first stored coefficient.
    pub fn start(&self) -> i64 {
        self.val
    }
}

/// Series arithmetic over a coefficient ring.
#[derive(Clone, Debug)]
pub struct SeriesRing<R: Ring> {
    pub ring: R,
}

impl<R: Ring> SeriesRing<R> {
    pub fn new(ring: R) -> Self {
        SeriesRing { ring }
    }

    fn normalize(&self, val: i64, mut coeffs: Vec<R::Elem>, prec: i64) -> TruncatedSeries<R::Elem> {
        let keep = (prec - val).max(0) as usize;
        coeffs.truncate(keep);
        let lead = coeffs.iter().position(|c| !self.ring.is_zero(c));
        match lead {
            None => TruncatedSeries { val: prec, coeffs: Vec::new(), prec },
            Some(k) => {
                coeffs.drain(..k);
                TruncatedSeries { val: val + k as i64, coeffs, prec }
            }
        }
    }

    /// Series from coefficients of `t^val, t^(val+1), ...`, known mod `t^prec`.
    pub fn from_coeffs(&self, val: i64, coeffs: Vec<R::Elem>, prec: i64) -> TruncatedSeries<R::Elem> {
        let mut coeffs = coeffs;
        let need = (prec - val).max(0) as usize;
        while coeffs.len() < need {
            coeffs.push(self.ring.zero());
        }
        self.normalize(val, coeffs, prec)
    }

    pub fn zero(&self, prec: i64) -> TruncatedSeries<R::Elem> {
        TruncatedSeries { val: prec, coeffs: Vec::new(), prec }
    }

    pub fn constant(&self, c: R::Elem, prec: i64) -> TruncatedSeries<R::Elem> {
        self.from_coeffs(0, vec![c], prec)
    }

    pub fn one(&self, prec: i64) -> TruncatedSeries<R::Elem> {
        self.constant(self.ring.one(), prec)
    }

    /// `c t^k`, known to relative precision `rel`.
    pub fn monomial(&self, c: R::Elem, k: i64, rel: i64) -> TruncatedSeries<R::Elem> {
        self.from_coeffs(k, vec![c], k + rel)
    }

    pub fn from_poly(&self, p: &Poly<R::Elem>, prec: i64) -> TruncatedSeries<R::Elem> {
        self.from_coeffs(0, p.coeffs().to_vec(), prec)
    }

    pub fn add(&self, a: &TruncatedSeries<R::Elem>, b: &TruncatedSeries<R::Elem>) -> TruncatedSeries<R::Elem> {
        let prec = a.prec.min(b.prec);
        let val = a.val.min(b.val).min(prec);
        let coeffs = (val..prec)
            .map(|e| {
                let x = a.coeff(&self.ring, e).unwrap();
                let y = b.coeff(&self.ring, e).unwrap();
                self.ring.add(&x, &y)
            })
            .collect();
        self.normalize(val, coeffs, prec)
    }

    pub fn neg(&self, a: &TruncatedSeries<R::Elem>) -> TruncatedSeries<R::Elem> {
        TruncatedSeries {
            val: a.val,
            coeffs: a.coeffs.iter().map(|c| self.ring.neg(c)).collect(),
            prec: a.prec,
        }
    }

    pub fn sub(&self, a: &TruncatedSeries<R::Elem>, b: &TruncatedSeries<R::Elem>) -> TruncatedSeries<R::Elem> {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &TruncatedSeries<R::Elem>, c: &R::Elem) -> TruncatedSeries<R::Elem> {
        let coeffs = a.coeffs.iter().map(|x| self.ring.mul(x, c)).collect();
        self.normalize(a.val, coeffs, a.prec)
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, a: &TruncatedSeries<R::Elem>, k: i64) -> TruncatedSeries<R::Elem> {
        TruncatedSeries { val: a.val + k, coeffs: a.coeffs.clone(), prec: a.prec + k }
    }

    pub fn mul(&self, a: &TruncatedSeries<R::Elem>, b: &TruncatedSeries<R::Elem>) -> TruncatedSeries<R::Elem> {
        let prec = (a.val + b.prec).min(b.val + a.prec);
        if a.coeffs.is_empty() || b.coeffs.is_empty() {
            return self.zero(prec);
        }
        let val = a.val + b.val;
        let len = (prec - val).max(0) as usize;
        let mut out: Vec<R::Elem> = (0..len).map(|_| self.ring.zero()).collect();
        for (i, x) in a.coeffs.iter().enumerate().take(len) {
            if self.ring.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate().take(len - i) {
                out[i + j] = self.ring.add(&out[i + j], &self.ring.mul(x, y));
            }
        }
        self.normalize(val, out, prec)
    }

    /// Multiplicative inverse; the leading coefficient must be a unit.
    pub fn inv(&self, a: &TruncatedSeries<R::Elem>) -> Result<TruncatedSeries<R::Elem>, AlgebraError> {
        if a.coeffs.is_empty() {
            return Err(AlgebraError::DivisionByZero);
        }
        let rel = a.coeffs.len();
        let l = self.ring.inv(&a.coeffs[0])?;
        let mut w: Vec<R::Elem> = Vec::with_capacity(rel);
        w.push(l.clone());
        for k in 1..rel {
            let mut s = self.ring.zero();
            for j in 1..=k {
                s = self.ring.add(&s, &self.ring.mul(&a.coeffs[j], &w[k - j]));
            }
            w.push(self.ring.neg(&self.ring.mul(&s, &l)));
        }
        Ok(self.normalize(-a.val, w, -a.val + rel as i64))
    }

    pub fn div(
        &self,
        a: &TruncatedSeries<R::Elem>,
        b: &TruncatedSeries<R::Elem>,
    ) -> Result<TruncatedSeries<R::Elem>, AlgebraError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Integer power (negative exponents need a unit leading coefficient).
    pub fn pow(&self, a: &TruncatedSeries<R::Elem>, e: i64) -> Result<TruncatedSeries<R::Elem>, AlgebraError> {
        let base = if e < 0 { self.inv(a)? } else { a.clone() };
        let mut e = e.unsigned_abs();
        let rel = if base.coeffs.is_empty() { 0 } else { base.prec - base.val };
        let mut acc = self.one(rel.max(1));
        let mut sq = base;
        let mut first = true;
        while e > 0 {
            if e & 1 == 1 {
                acc = if first { sq.clone() } else { self.mul(&acc, &sq) };
                first = false;
            }
            e >>= 1;
            if e > 0 {
                sq = self.mul(&sq, &sq);
            }
        }
        Ok(acc)
    }

    /// Series `r` with `r^n = a`. The leading exponent must be divisible by
    /// `n`, the leading coefficient must have an `n`-th root in the ring, and
    /// `n` must be invertible.
    pub fn nth_root(&self, a: &TruncatedSeries<R::Elem>, n: u32) -> Result<TruncatedSeries<R::Elem>, AlgebraError> {
        if a.coeffs.is_empty() {
            return Err(AlgebraError::PrecisionExhausted("root of a series that vanishes to precision".into()));
        }
        if a.val.rem_euclid(n as i64) != 0 {
            return Err(AlgebraError::RootExtraction(n));
        }
        let lead = &a.coeffs[0];
        let lead_root = self.ring.nth_root_elem(lead, n).ok_or(AlgebraError::RootExtraction(n))?;
        let rel = a.coeffs.len() as i64;
        let inv_lead = self.ring.inv(lead)?;
        // u = a / (lead t^val), a unit series with constant term 1
        let u = self.normalize(0, a.coeffs.iter().map(|c| self.ring.mul(c, &inv_lead)).collect(), rel);
        let inv_n = self.ring.inv(&self.ring.from_int(n as i64))?;
        // Newton for w = u^(-1/n):  w <- w + w (1 - u w^n) / n
        let mut w = self.one(rel);
        let mut correct = 1;
        loop {
            let wn = self.pow(&w, n as i64)?;
            let err = self.sub(&self.one(rel), &self.mul(&u, &wn));
            w = self.add(&w, &self.scale(&self.mul(&w, &err), &inv_n));
            if correct >= rel {
                break;
            }
            correct *= 2;
        }
        let r = self.mul(&u, &self.pow(&w, n as i64 - 1)?);
        let r = self.scale(&r, &lead_root);
        Ok(self.shift(&r, a.val / n as i64))
    }

    /// Formal derivative `d/dt`.
    pub fn derivative(&self, a: &TruncatedSeries<R::Elem>) -> TruncatedSeries<R::Elem> {
        let coeffs = a
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| self.ring.scale_int(c, a.val + i as i64))
            .collect();
        self.normalize(a.val - 1, coeffs, a.prec - 1)
    }

    /// Evaluates a polynomial at a series (Horner).
    pub fn eval_poly(&self, p: &Poly<R::Elem>, s: &TruncatedSeries<R::Elem>) -> TruncatedSeries<R::Elem> {
        let rel = if s.coeffs.is_empty() { s.prec.max(1) } else { s.prec - s.val };
        // enough headroom for any power of s that appears
        let wide = rel.max(s.prec) + (p.degree().unwrap_or(0) as i64) * s.val.abs() + rel;
        let mut acc = self.zero(wide);
        for c in p.coeffs().iter().rev() {
            acc = self.add(&self.mul(&acc, s), &self.constant(c.clone(), wide));
        }
        acc
    }

    /// `a(b(t))` for `b` of positive valuation.
    pub fn compose(
        &self,
        a: &TruncatedSeries<R::Elem>,
        b: &TruncatedSeries<R::Elem>,
    ) -> Result<TruncatedSeries<R::Elem>, AlgebraError> {
        let vb = b
            .leading_exponent()
            .ok_or_else(|| AlgebraError::PrecisionExhausted("inner series vanishes to precision".into()))?;
        if vb < 1 {
            return Err(AlgebraError::Unsupported("composition needs an inner series of positive valuation".into()));
        }
        let poly = Poly::from_coeffs(&self.ring, a.coeffs.clone());
        let body = self.eval_poly(&poly, b);
        let lead = self.pow(b, a.val)?;
        let out = self.mul(&body, &lead);
        // a is only known mod t^prec, so the result is only known mod b^prec
        let cap = vb * a.prec;
        Ok(if out.prec > cap { self.truncate(&out, cap) } else { out })
    }

    pub fn truncate(&self, a: &TruncatedSeries<R::Elem>, prec: i64) -> TruncatedSeries<R::Elem> {
        let prec = prec.min(a.prec);
        self.normalize(a.val, a.coeffs.clone(), prec)
    }

    /// Leading exponent. Over residue algebras the leading coefficient must
    /// be a unit, otherwise the valuation differs between components and a
    /// [`AlgebraError::ZeroDivisor`] is returned.
    pub fn valuation(&self, a: &TruncatedSeries<R::Elem>) -> Result<i64, AlgebraError> {
        match a.coeffs.first() {
            None => Err(AlgebraError::PrecisionExhausted(format!("series vanishes mod t^{}", a.prec))),
            Some(c) => {
                self.ring.inv(c)?;
                Ok(a.val)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{BaseField, FieldValue};
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> FieldValue {
        FieldValue::rational(n, d)
    }

    fn sr() -> SeriesRing<BaseField> {
        SeriesRing::new(BaseField::Rational)
    }

    #[test]
    fn sqrt_one_plus_t() {
        let s = sr();
        let a = s.from_coeffs(0, vec![q(1, 1), q(1, 1)], 6);
        let r = s.nth_root(&a, 2).unwrap();
        // binomial coefficients of (1+t)^(1/2)
        let expected = [q(1, 1), q(1, 2), q(-1, 8), q(1, 16), q(-5, 128), q(7, 256)];
        for (e, c) in expected.iter().enumerate() {
            assert_eq!(r.coeff(&s.ring, e as i64).unwrap(), *c);
        }
        // oracle: squaring reproduces 1 + t to precision
        assert_eq!(s.mul(&r, &r), a);
    }

    #[test]
    fn valuation_of_t3_plus_2t4() {
        let s = sr();
        let a = s.from_coeffs(3, vec![q(1, 1), q(2, 1)], 10);
        assert_eq!(s.valuation(&a).unwrap(), 3);
    }

    #[test]
    fn geometric_series() {
        let s = sr();
        let a = s.from_coeffs(0, vec![q(1, 1), q(-1, 1)], 8);
        let inv = s.inv(&a).unwrap();
        assert_eq!(inv.coefficients().to_vec(), vec![q(1, 1); 8]);
        assert_eq!(inv.precision(), 8);
    }

    #[test]
    fn cancellation_reports_lost_precision() {
        let s = sr();
        let a = s.from_coeffs(0, vec![q(1, 1), q(1, 1)], 2);
        let b = s.from_coeffs(0, vec![q(1, 1), q(1, 1)], 5);
        let d = s.sub(&a, &b);
        assert!(d.is_zero_to_precision());
        assert_eq!(d.precision(), 2);
        assert!(matches!(s.valuation(&d), Err(AlgebraError::PrecisionExhausted(_))));
    }

    #[test]
    fn zero_series_has_no_inverse() {
        let s = sr();
        assert_eq!(s.inv(&s.zero(5)), Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn root_of_non_square_lead_fails() {
        let s = sr();
        let a = s.from_coeffs(0, vec![q(2, 1), q(1, 1)], 5);
        assert_eq!(s.nth_root(&a, 2), Err(AlgebraError::RootExtraction(2)));
        let odd = s.from_coeffs(1, vec![q(1, 1)], 5);
        assert_eq!(s.nth_root(&odd, 2), Err(AlgebraError::RootExtraction(2)));
    }

    #[test]
    fn laurent_inverse_and_derivative() {
        let s = sr();
        // t^-2 (1 + t)
        let a = s.from_coeffs(-2, vec![q(1, 1), q(1, 1)], 4);
        let b = s.inv(&a).unwrap();
        assert_eq!(b.leading_exponent(), Some(2));
        assert_eq!(s.mul(&a, &b).coeff(&s.ring, 0), Some(q(1, 1)));
        let d = s.derivative(&a);
        assert_eq!(d.coeff(&s.ring, -3), Some(q(-2, 1)));
        assert_eq!(d.coeff(&s.ring, -2), Some(q(-1, 1)));
    }

    #[test]
    fn composition_matches_substitution() {
        let s = sr();
        // (1 + u)^-1 with u = t + t^2
        let geo = s.inv(&s.from_coeffs(0, vec![q(1, 1), q(1, 1)], 6)).unwrap();
        let u = s.from_coeffs(1, vec![q(1, 1), q(1, 1)], 8);
        let c = s.compose(&geo, &u).unwrap();
        let direct = s.inv(&s.add(&s.one(8), &u)).unwrap();
        assert_eq!(c.precision(), 6);
        assert_eq!(s.truncate(&direct, 6), c);
    }

    #[test]
    fn cube_root_in_characteristic_seven_beyond_p_terms() {
        let f7 = BaseField::prime(7).unwrap();
        let s = SeriesRing::new(f7.clone());
        let a = s.from_coeffs(0, vec![f7.one(), f7.from_int(3), f7.from_int(5)], 20);
        let r = s.nth_root(&a, 3).unwrap();
        assert_eq!(s.pow(&r, 3).unwrap(), a);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]
        #[test]
        fn nth_root_then_power_is_identity(
            tail in proptest::collection::vec(-5i64..6, 1..8),
            n in 2u32..5,
        ) {
            let s = sr();
            let mut coeffs = vec![q(1, 1)];
            coeffs.extend(tail.iter().map(|&c| q(c, 1)));
            let prec = coeffs.len() as i64;
            let a = s.from_coeffs(0, coeffs, prec);
            let r = s.nth_root(&a, n).unwrap();
            prop_assert_eq!(s.pow(&r, n as i64).unwrap(), a);
        }
    }
}
