//! Elements of the function field `K(x)[y]/(y^n - h)`.

use rand::RngCore;

use crate::algebra::matrix::det_poly;
use crate::algebra::{FieldValue, Poly, Ring};
use crate::error::{Error, Result};

use super::model::SuperellipticCurve;

/// `(sum_i a_i(x) y^i) / d(x)` with `i < n`, `d` monic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionFieldElement {
    num: Vec<Poly<FieldValue>>,
    den: Poly<FieldValue>,
}

impl FunctionFieldElement {
    /// Normalises: reduces `y`-powers at or above `n`, makes the
    /// denominator monic and cancels common polynomial content.
    pub fn new(curve: &SuperellipticCurve, num: Vec<Poly<FieldValue>>, den: Poly<FieldValue>) -> Result<Self> {
        let pr = curve.poly_ring();
        if den.is_zero() {
            return Err(Error::Algebra(crate::algebra::AlgebraError::DivisionByZero));
        }
        let n = curve.n() as usize;
        let mut reduced = vec![Poly::zero(); n];
        for (i, a) in num.into_iter().enumerate() {
            // y^i = h^(i div n) y^(i mod n)
            let lifted = pr.mul(&a, &pr.pow(curve.h(), (i / n) as u64));
            reduced[i % n] = pr.add(&reduced[i % n], &lifted);
        }
        let lead_inv = curve.field().inv(den.lead().unwrap())?;
        let mut den = pr.scale(&den, &lead_inv);
        let mut num: Vec<Poly<FieldValue>> = reduced.iter().map(|a| pr.scale(a, &lead_inv)).collect();
        let content = num.iter().try_fold(den.clone(), |g, a| pr.gcd(&g, a))?;
        if content.degree().unwrap_or(0) > 0 {
            den = pr.div_exact(&den, &content)?;
            num = num.iter().map(|a| pr.div_exact(a, &content)).collect::<Result<_, _>>()?;
        }
        while num.last().is_some_and(|a| a.is_zero()) {
            num.pop();
        }
        Ok(FunctionFieldElement { num, den })
    }

    pub fn from_poly(curve: &SuperellipticCurve, a: Poly<FieldValue>) -> Self {
        Self::new(curve, vec![a], curve.poly_ring().one()).expect("unit denominator")
    }

    pub fn ratio(curve: &SuperellipticCurve, a: Poly<FieldValue>, d: Poly<FieldValue>) -> Result<Self> {
        Self::new(curve, vec![a], d)
    }

    /// `y^k` for `0 <= k < n`.
    pub fn y_power(curve: &SuperellipticCurve, k: usize) -> Self {
        let pr = curve.poly_ring();
        let mut num = vec![Poly::zero(); k];
        num.push(pr.one());
        Self::new(curve, num, pr.one()).expect("unit denominator")
    }

    pub fn numerator(&self) -> &[Poly<FieldValue>] {
        &self.num
    }

    pub fn denominator(&self) -> &Poly<FieldValue> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    /// `(k, a)` when the numerator is the single term `a(x) y^k`.
    pub fn as_monomial(&self) -> Option<(usize, &Poly<FieldValue>)> {
        let mut it = self.num.iter().enumerate().filter(|(_, a)| !a.is_zero());
        let first = it.next()?;
        if it.next().is_some() {
            None
        } else {
            Some(first)
        }
    }

    pub fn mul(&self, curve: &SuperellipticCurve, other: &Self) -> Result<Self> {
        let pr = curve.poly_ring();
        let mut prod = vec![Poly::zero(); (self.num.len() + other.num.len()).saturating_sub(1)];
        for (i, a) in self.num.iter().enumerate() {
            for (j, b) in other.num.iter().enumerate() {
                prod[i + j] = pr.add(&prod[i + j], &pr.mul(a, b));
            }
        }
        Self::new(curve, prod, pr.mul(&self.den, &other.den))
    }

    /// Norm of the numerator down to `K(x)`: `det(sum a_i C^i)` with `C` the
    /// matrix of multiplication by `y` on the basis `1, y, ..., y^(n-1)`.
    pub fn numerator_norm(&self, curve: &SuperellipticCurve) -> Result<Poly<FieldValue>> {
        let pr = curve.poly_ring();
        let n = curve.n() as usize;
        // column k of the matrix is the coordinate vector of y^k * F
        let mut cols: Vec<Vec<Poly<FieldValue>>> = Vec::with_capacity(n);
        let mut cur: Vec<Poly<FieldValue>> = (0..n).map(|i| self.num.get(i).cloned().unwrap_or_else(Poly::zero)).collect();
        for _ in 0..n {
            cols.push(cur.clone());
            // multiply by y: shift up, wrap y^n -> h
            let top = cur.pop().unwrap();
            cur.insert(0, pr.mul(&top, curve.h()));
        }
        let m: Vec<Vec<Poly<FieldValue>>> = (0..n).map(|r| (0..n).map(|c| cols[c][r].clone()).collect()).collect();
        Ok(det_poly(&pr, &m)?)
    }

    /// Random element with numerator coefficients of degree below `deg` and
    /// a random monic denominator of degree below `den_deg`.
    pub fn random(curve: &SuperellipticCurve, deg: usize, den_deg: usize, rng: &mut dyn RngCore) -> Result<Self> {
        let pr = curve.poly_ring();
        loop {
            let num: Vec<Poly<FieldValue>> = (0..curve.n()).map(|_| pr.random(deg, rng)).collect();
            if num.iter().all(|a| a.is_zero()) {
                continue;
            }
            let mut den = pr.random(den_deg, rng);
            if den.is_zero() {
                den = pr.one();
            }
            return Self::new(curve, num, den);
        }
    }
}
