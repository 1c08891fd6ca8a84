//! Squarefree decomposition (any characteristic) and factorization over
//! finite fields: distinct-degree splitting followed by Cantor-Zassenhaus.

use num_bigint::BigUint;
use num_integer::Integer;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::{BaseField, FieldValue};
use super::poly::{Poly, PolyRing};
use super::ring::{AlgebraError, Ring};

/// `f = lead * prod(factor^mult)` with monic irreducible factors, sorted by
/// degree then coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization<E> {
    pub lead: E,
    pub factors: Vec<(Poly<E>, usize)>,
}

impl<E: Clone> Factorization<E> {
    pub fn expand<R: Ring<Elem = E>>(&self, ring: &R) -> Poly<E> {
        let pr = PolyRing::new(ring.clone());
        self.factors
            .iter()
            .fold(pr.constant(self.lead.clone()), |acc, (f, m)| pr.mul(&acc, &pr.pow(f, *m as u64)))
    }
}

/// Squarefree decomposition of the monic associate of `f`: pairs
/// `(g_i, i)` with `g_i` monic squarefree, pairwise coprime, and
/// `monic(f) = prod g_i^i`. Works in characteristic 0 and over finite fields.
pub fn squarefree_decomposition<R: Ring>(
    ring: &R,
    f: &Poly<R::Elem>,
) -> Result<Vec<(Poly<R::Elem>, usize)>, AlgebraError> {
    let pr = PolyRing::new(ring.clone());
    if f.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let f = pr.monic(f)?;
    let mut out = Vec::new();
    if f.degree() == Some(0) {
        return Ok(out);
    }
    let one = pr.one();
    let mut c = pr.gcd(&f, &pr.derivative(&f))?;
    let mut w = pr.div_exact(&f, &c)?;
    let mut i = 1;
    while w != one {
        let y = pr.gcd(&w, &c)?;
        let fac = pr.div_exact(&w, &y)?;
        if fac != one {
            out.push((fac, i));
        }
        c = pr.div_exact(&c, &y)?;
        w = y;
        i += 1;
    }
    if c != one {
        // c' = 0, so c is a p-th power.
        let p = ring.characteristic() as usize;
        let root = pth_root_poly(ring, &c)?;
        for (g, j) in squarefree_decomposition(ring, &root)? {
            out.push((g, j * p));
        }
    }
    out.sort_by_key(|a| a.1);
    Ok(out)
}

fn pth_root_poly<R: Ring>(ring: &R, c: &Poly<R::Elem>) -> Result<Poly<R::Elem>, AlgebraError> {
    let p = ring.characteristic() as usize;
    let e = ring
        .pth_root_exponent()
        .ok_or_else(|| AlgebraError::Unsupported("p-th roots need a finite field".into()))?;
    let coeffs = c.coeffs().iter().step_by(p).map(|a| ring.pow_big(a, &e)).collect();
    Ok(Poly::from_coeffs(ring, coeffs))
}

fn require_finite<R: Ring>(ring: &R) -> Result<BigUint, AlgebraError> {
    ring.order()
        .ok_or_else(|| AlgebraError::Unsupported("factorization over Q is not supported".into()))
}

/// Distinct-degree splitting of a monic squarefree polynomial.
pub fn distinct_degree<R: Ring>(
    ring: &R,
    f: &Poly<R::Elem>,
) -> Result<Vec<(Poly<R::Elem>, usize)>, AlgebraError> {
    let q = require_finite(ring)?;
    let pr = PolyRing::new(ring.clone());
    let x = pr.x();
    let mut rest = f.clone();
    let mut h = pr.rem(&x, &rest)?;
    let mut out = Vec::new();
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = pr.pow_mod(&h, &q, &rest)?;
        let g = pr.gcd(&pr.sub(&h, &x), &rest)?;
        if g.degree().unwrap_or(0) > 0 {
            rest = pr.div_exact(&rest, &g)?;
            h = pr.rem(&h, &rest)?;
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(deg) = rest.degree().filter(|&deg| deg > 0) {
        out.push((rest, deg));
    }
    Ok(out)
}

/// Splits a monic squarefree product of irreducibles of degree `d`.
pub fn equal_degree<R: Ring>(
    ring: &R,
    f: &Poly<R::Elem>,
    d: usize,
    rng: &mut dyn RngCore,
) -> Result<Vec<Poly<R::Elem>>, AlgebraError> {
    let n = f.degree().ok_or(AlgebraError::ZeroPolynomial)?;
    if n == d {
        return Ok(vec![f.clone()]);
    }
    let q = require_finite(ring)?;
    let pr = PolyRing::new(ring.clone());
    let p = ring.characteristic();
    loop {
        let a = pr.random(n, rng);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if p == 2 {
            // absolute trace to F_2 of the degree-d extension
            let bits = (q.bits() as usize - 1) * d;
            let mut t = a.clone();
            let mut s = a.clone();
            for _ in 1..bits {
                t = pr.rem(&pr.mul(&t, &t), f)?;
                s = pr.add(&s, &t);
            }
            s
        } else {
            let e = (q.pow(d as u32) - 1u32) / 2u32;
            pr.sub(&pr.pow_mod(&a, &e, f)?, &pr.one())
        };
        let g = pr.gcd(&b, f)?;
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && dg < n {
            let h = pr.div_exact(f, &g)?;
            let mut out = equal_degree(ring, &g, d, rng)?;
            out.extend(equal_degree(ring, &h, d, rng)?);
            return Ok(out);
        }
    }
}

/// Complete factorization over a finite field.
pub fn factor<R: Ring>(
    ring: &R,
    f: &Poly<R::Elem>,
    rng: &mut dyn RngCore,
) -> Result<Factorization<R::Elem>, AlgebraError> {
    require_finite(ring)?;
    let lead = f.lead().ok_or(AlgebraError::ZeroPolynomial)?.clone();
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decomposition(ring, f)? {
        for (block, d) in distinct_degree(ring, &part)? {
            for irr in equal_degree(ring, &block, d, rng)? {
                factors.push((irr, mult));
            }
        }
    }
    factors.sort_by(|a, b| a.0.degree().cmp(&b.0.degree()).then_with(|| a.0.cmp(&b.0)));
    Ok(Factorization { lead, factors })
}

/// Rabin's irreducibility test over a finite field.
pub fn is_irreducible<R: Ring>(ring: &R, f: &Poly<R::Elem>) -> bool {
    let Some(n) = f.degree() else { return false };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let Some(q) = ring.order() else { return false };
    let pr = PolyRing::new(ring.clone());
    let Ok(f) = pr.monic(f) else { return false };
    let x = pr.x();
    // x^(q^i) mod f for i = 0..=n
    let mut frob = vec![x.clone()];
    for _ in 0..n {
        let next = pr.pow_mod(frob.last().unwrap(), &q, &f).expect("monic modulus");
        frob.push(next);
    }
    if pr.rem(&pr.sub(&frob[n], &x), &f).map(|r| !r.is_zero()).unwrap_or(true) {
        return false;
    }
    for r in prime_divisors(n) {
        let g = pr.gcd(&pr.sub(&frob[n / r], &x), &f).expect("field");
        if g.degree() != Some(0) {
            return false;
        }
    }
    true
}

pub(crate) fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Random monic irreducible polynomial of the given degree.
pub fn random_irreducible<R: Ring>(ring: &R, degree: usize, rng: &mut dyn RngCore) -> Poly<R::Elem> {
    let pr = PolyRing::new(ring.clone());
    loop {
        let mut coeffs: Vec<R::Elem> = (0..degree).map(|_| ring.random_element(rng)).collect();
        coeffs.push(ring.one());
        let cand = pr.from_coeffs(coeffs);
        if is_irreducible(ring, &cand) {
            return cand;
        }
    }
}

/// All roots of `f` in a finite field, sorted.
pub fn roots<R: Ring>(
    ring: &R,
    f: &Poly<R::Elem>,
    rng: &mut dyn RngCore,
) -> Result<Vec<R::Elem>, AlgebraError> {
    let q = require_finite(ring)?;
    let pr = PolyRing::new(ring.clone());
    let f = pr.monic(f)?;
    if f.degree().unwrap_or(0) == 0 {
        return Ok(vec![]);
    }
    let x = pr.x();
    let xq = pr.pow_mod(&x, &q, &f)?;
    let split = pr.gcd(&pr.sub(&xq, &x), &f)?;
    if split.degree().unwrap_or(0) == 0 {
        return Ok(vec![]);
    }
    let mut out: Vec<R::Elem> = equal_degree(ring, &split, 1, rng)?
        .into_iter()
        .map(|lin| ring.neg(&lin.coeffs()[0]))
        .collect();
    out.sort();
    Ok(out)
}

/// All `n`-th roots of `a` in a finite field.
pub fn nth_roots(field: &BaseField, a: &FieldValue, n: u32) -> Vec<FieldValue> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let pr = PolyRing::new(field.clone());
    let mut c = vec![field.neg(a)];
    c.extend((1..n).map(|_| field.zero()));
    c.push(field.one());
    roots(field, &pr.from_coeffs(c), &mut rng).unwrap_or_default()
}

/// Least common multiple of a list of degrees.
pub fn lcm_all(degrees: impl IntoIterator<Item = usize>) -> usize {
    degrees.into_iter().fold(1, |acc, d| acc.lcm(&d.max(1)))
}
