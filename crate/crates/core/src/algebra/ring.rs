use std::fmt;
use std::hash::Hash;

use num_bigint::BigUint;
use num_traits::Zero;
use rand::RngCore;

use super::field::FieldValue;
use super::poly::Poly;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AlgebraError {
    #[error("field domain mismatch: {0} vs {1}")]
    DomainMismatch(String, String),
    #[error("division by zero")]
    DivisionByZero,
    /// Raised by residue algebras `K[x]/(q)` with `q` squarefree but not
    /// known to be irreducible. Carries `gcd(a, q)`, a proper factor of `q`.
    #[error("zero divisor found; modulus splits off a factor of degree {}", .0.degree().unwrap_or(0))]
    ZeroDivisor(Poly<FieldValue>),
    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),
    #[error("leading coefficient has no {0}-th root in the field")]
    RootExtraction(u32),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("not a field: {0}")]
    NotAField(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// A commutative ring with an explicit context object.
///
/// Elements carry no reference to their ring; every operation goes through
/// the context, so one element type can be shared by many moduli.
pub trait Ring: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Ord + Hash + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Multiplicative inverse. Residue algebras that are not fields return
    /// [`AlgebraError::ZeroDivisor`] for nonzero non-units.
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, AlgebraError>;
    fn characteristic(&self) -> u64;

    /// Number of elements, for finite fields.
    fn order(&self) -> Option<BigUint> {
        None
    }

    /// Uniform random element (finite fields) or a small random integer.
    fn random_element(&self, rng: &mut dyn RngCore) -> Self::Elem;

    /// An `n`-th root of `a` inside the ring, if one is known to exist.
    fn nth_root_elem(&self, a: &Self::Elem, _n: u32) -> Option<Self::Elem> {
        if self.is_one(a) {
            Some(self.one())
        } else {
            None
        }
    }

    /// `Ok` for units; [`AlgebraError::ZeroDivisor`] or division by zero
    /// otherwise.
    fn check_unit(&self, a: &Self::Elem) -> Result<(), AlgebraError> {
        self.inv(a).map(|_| ())
    }

    /// A faster exact polynomial division than long division, where one exists.
    fn fast_poly_div_exact(&self, _a: &Poly<Self::Elem>, _b: &Poly<Self::Elem>) -> Option<Result<Poly<Self::Elem>, AlgebraError>> {
        None
    }

    /// A faster polynomial gcd than plain Euclid, where one exists.
    fn fast_poly_gcd(&self, _a: &Poly<Self::Elem>, _b: &Poly<Self::Elem>) -> Option<Result<Poly<Self::Elem>, AlgebraError>> {
        None
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, AlgebraError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
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

    fn pow_big(&self, a: &Self::Elem, e: &BigUint) -> Self::Elem {
        if e.is_zero() {
            return self.one();
        }
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    /// Integer power allowing negative exponents.
    fn pow_signed(&self, a: &Self::Elem, e: i64) -> Result<Self::Elem, AlgebraError> {
        if e >= 0 {
            Ok(self.pow(a, e as u64))
        } else {
            Ok(self.pow(&self.inv(a)?, e.unsigned_abs()))
        }
    }

    fn scale_int(&self, a: &Self::Elem, n: i64) -> Self::Elem {
        self.mul(a, &self.from_int(n))
    }

    fn is_finite(&self) -> bool {
        self.order().is_some()
    }

    /// `q / p` for a finite field of order `q` and characteristic `p`: the
    /// exponent giving the inverse of Frobenius.
    fn pth_root_exponent(&self) -> Option<BigUint> {
        let q = self.order()?;
        Some(q / BigUint::from(self.characteristic()))
    }
}
