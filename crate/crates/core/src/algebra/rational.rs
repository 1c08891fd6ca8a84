//! Rational roots of polynomials over Q.
//!
//! Full factorisation over Q is out of scope; splitting off linear factors
//! is enough to give rational points their own places.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::factor::roots;
use super::field::{is_prime_u64, BaseField, FieldValue};
use super::poly::{Poly, PolyRing};
use super::ring::AlgebraError;
use super::zpoly::{self, primitive_form};

/// Scales a rational polynomial to a primitive integer polynomial.
pub fn integer_primitive(f: &Poly<FieldValue>) -> Result<Vec<BigInt>, AlgebraError> {
    let rats: Vec<BigRational> = f
        .coeffs()
        .iter()
        .map(|c| c.as_rational().cloned().ok_or_else(|| AlgebraError::NotAField("expected Q".into())))
        .collect::<Result<_, _>>()?;
    let den = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = rats.iter().map(|r| (r * BigRational::from_integer(den.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    Ok(ints.into_iter().map(|x| x / &g).collect())
}

/// Distinct rational roots, sorted ascending.
///
/// Roots modulo a small prime of good reduction are lifted 2-adically fast
/// (Newton) until `lc * root` is determined by its symmetric residue, then
/// tested exactly.
pub fn rational_roots(f: &Poly<FieldValue>) -> Result<Vec<BigRational>, AlgebraError> {
    let pr = PolyRing::new(BaseField::Rational);
    let sq = pr.squarefree_part(f)?;
    let mut ints = integer_primitive(&sq)?;
    let mut roots = Vec::new();
    if ints[0].is_zero() {
        roots.push(BigRational::zero());
        ints.remove(0);
    }
    if ints.len() <= 1 {
        return Ok(roots);
    }
    let lc = ints.last().unwrap().clone();
    let bound = lc.abs() * (BigInt::one() + ints.iter().map(|c| c.abs()).max().unwrap());
    let p = good_prime(&ints)?;
    let fp = BaseField::prime(p)?;
    let reduced = Poly::from_coeffs(&fp, ints.iter().map(|c| fp.from_bigint(c)).collect());
    let mut rng = ChaCha8Rng::seed_from_u64(p);
    let deriv: Vec<BigInt> = ints.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect();
    for r0 in roots_mod(&fp, &reduced, &mut rng)? {
        let mut r = BigInt::from(r0);
        let mut modulus = BigInt::from(p);
        while modulus <= &bound * 2 {
            modulus = &modulus * &modulus;
            let fr = eval_mod(&ints, &r, &modulus);
            let dr = eval_mod(&deriv, &r, &modulus);
            let inv = mod_inverse(&dr, &modulus)?;
            r = (r - fr * inv).mod_floor(&modulus);
        }
        let mut c = (&lc * &r).mod_floor(&modulus);
        if &c * 2 > modulus {
            c -= &modulus;
        }
        let cand = BigRational::new(c, lc.clone());
        if eval_int(&ints, &cand).is_zero() {
            roots.push(cand);
        }
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

/// A prime not dividing the leading coefficient and keeping `f` squarefree.
fn good_prime(ints: &[BigInt]) -> Result<u64, AlgebraError> {
    let mut p = 10_007u64;
    for _ in 0..1000 {
        if is_prime_u64(p) && !(ints.last().unwrap() % BigInt::from(p)).is_zero() {
            let fp = BaseField::prime(p)?;
            let pr = PolyRing::new(fp.clone());
            let f = Poly::from_coeffs(&fp, ints.iter().map(|c| fp.from_bigint(c)).collect());
            if pr.gcd(&f, &pr.derivative(&f))?.degree() == Some(0) {
                return Ok(p);
            }
        }
        p += 2;
    }
    Err(AlgebraError::Unsupported("no prime of good reduction found".into()))
}

fn roots_mod(fp: &BaseField, f: &Poly<FieldValue>, rng: &mut ChaCha8Rng) -> Result<Vec<u64>, AlgebraError> {
    Ok(roots(fp, f, rng)?.iter().map(|v| v.residue().unwrap()).collect())
}

fn eval_mod(coeffs: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    coeffs.iter().rev().fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(m))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Result<BigInt, AlgebraError> {
    let e = a.mod_floor(m).extended_gcd(m);
    if !e.gcd.is_one() {
        return Err(AlgebraError::Unsupported("derivative vanishes modulo the lifting prime".into()));
    }
    Ok(e.x.mod_floor(m))
}

/// Monic gcd over Q, computed on primitive integer polynomials.
pub fn rational_gcd(a: &Poly<FieldValue>, b: &Poly<FieldValue>) -> Result<Poly<FieldValue>, AlgebraError> {
    let pr = PolyRing::new(BaseField::Rational);
    if a.is_zero() && b.is_zero() {
        return Ok(Poly::zero());
    }
    if a.is_zero() || b.is_zero() {
        return pr.monic(if a.is_zero() { b } else { a });
    }
    let g = zpoly::gcd(&primitive_form(a)?.1, &primitive_form(b)?.1);
    let lc = BigRational::from_integer(g.last().unwrap().clone());
    Ok(zpoly::to_poly(&g, &lc.recip()))
}

/// `a / b` over Q when exact.
pub fn rational_div_exact(a: &Poly<FieldValue>, b: &Poly<FieldValue>) -> Result<Poly<FieldValue>, AlgebraError> {
    if b.is_zero() {
        return Err(AlgebraError::DivisionByZero);
    }
    if a.is_zero() {
        return Ok(Poly::zero());
    }
    let (ca, pa) = primitive_form(a)?;
    let (cb, pb) = primitive_form(b)?;
    let q = zpoly::div_exact(&pa, &pb).ok_or_else(|| AlgebraError::Unsupported("inexact polynomial division".into()))?;
    Ok(zpoly::to_poly(&q, &(ca / cb)))
}

fn eval_int(coeffs: &[BigInt], x: &BigRational) -> BigRational {
    coeffs
        .iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
}

/// Splits a squarefree rational polynomial into its rational linear factors
/// (monic, ascending by root) and the remaining cofactor, if non-constant.
pub fn split_rational_linear(
    f: &Poly<FieldValue>,
) -> Result<(Vec<Poly<FieldValue>>, Option<Poly<FieldValue>>), AlgebraError> {
    let q = BaseField::Rational;
    let pr = PolyRing::new(q.clone());
    let mut rest = pr.monic(f)?;
    let mut linears = Vec::new();
    for r in rational_roots(f)? {
        let lin = Poly::linear(&q, &FieldValue::Rational(r));
        rest = pr.div_exact(&rest, &lin)?;
        linears.push(lin);
    }
    let rest = if rest.degree().unwrap_or(0) > 0 { Some(rest) } else { None };
    Ok((linears, rest))
}
