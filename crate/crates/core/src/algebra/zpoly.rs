//! Dense integer polynomials, `Vec<BigInt>` with the constant term first
//! and no trailing zeros. Used to keep arithmetic over Q free of
//! per-coefficient gcds: gcds are computed modulo word-size primes and
//! lifted by Chinese remaindering, determinants by Bareiss over `Z[x]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::{inv_mod, is_prime_u64, mul_mod, BaseField, FieldValue};
use super::poly::Poly;
use super::ring::AlgebraError;

pub type ZPoly = Vec<BigInt>;

fn trim(mut a: ZPoly) -> ZPoly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

/// `f = c * prim` with `prim` primitive with positive leading coefficient.
pub fn primitive_form(f: &Poly<FieldValue>) -> Result<(BigRational, ZPoly), AlgebraError> {
    let rats: Vec<&BigRational> = f
        .coeffs()
        .iter()
        .map(|c| c.as_rational().ok_or_else(|| AlgebraError::NotAField("expected Q".into())))
        .collect::<Result<_, _>>()?;
    if rats.is_empty() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let den = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: ZPoly = rats.iter().map(|r| r.numer() * (&den / r.denom())).collect();
    let mut g = content(&ints);
    if ints.last().unwrap().is_negative() {
        g = -g;
    }
    let prim = ints.into_iter().map(|x| x / &g).collect();
    Ok((BigRational::new(g, den), prim))
}

pub fn to_poly(a: &[BigInt], scale: &BigRational) -> Poly<FieldValue> {
    let q = BaseField::Rational;
    Poly::from_coeffs(&q, a.iter().map(|c| FieldValue::Rational(scale * BigRational::from_integer(c.clone()))).collect())
}

pub fn content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
}

pub fn primitive(a: ZPoly) -> ZPoly {
    let mut g = content(&a);
    if g.is_zero() {
        return a;
    }
    if a.last().unwrap().is_negative() {
        g = -g;
    }
    a.into_iter().map(|x| x / &g).collect()
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub fn add(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let mut out: ZPoly = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), BigInt::zero());
    }
    for (i, y) in b.iter().enumerate() {
        out[i] += y;
    }
    trim(out)
}

pub fn sub(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let mut out: ZPoly = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), BigInt::zero());
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

/// `a / b` when the division is exact in `Z[x]`; `None` otherwise.
pub fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    if b.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let lb = b.last().unwrap();
    let mut r: ZPoly = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - b.len() + 1];
    for k in (0..q.len()).rev() {
        let top = &r[k + b.len() - 1];
        if top.is_zero() {
            continue;
        }
        let (c, rem) = top.div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (i, y) in b.iter().enumerate() {
            r[k + i] -= &c * y;
        }
        q[k] = c;
    }
    if r.iter().any(|c| !c.is_zero()) {
        return None;
    }
    Some(trim(q))
}

/// Determinant over `Z[x]` by Bareiss elimination.
pub fn det(m: &[Vec<ZPoly>]) -> ZPoly {
    let n = m.len();
    if n == 0 {
        return vec![BigInt::one()];
    }
    let mut a: Vec<Vec<ZPoly>> = m.to_vec();
    let mut negative = false;
    let mut prev: ZPoly = vec![BigInt::one()];
    for k in 0..n - 1 {
        if a[k][k].is_empty() {
            match (k + 1..n).find(|&i| !a[i][k].is_empty()) {
                Some(i) => {
                    a.swap(k, i);
                    negative = !negative;
                }
                None => return Vec::new(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = sub(&mul(&a[i][j], &a[k][k]), &mul(&a[i][k], &a[k][j]));
                a[i][j] = div_exact(&num, &prev).expect("Bareiss division is exact");
            }
            a[i][k] = Vec::new();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negative {
        d.into_iter().map(|c| -c).collect()
    } else {
        d
    }
}

fn reduce_mod(a: &[BigInt], p: u64) -> Vec<u64> {
    let bp = BigInt::from(p);
    let mut out: Vec<u64> = a.iter().map(|c| c.mod_floor(&bp).to_u64().unwrap()).collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn rem_mod(a: &mut Vec<u64>, b: &[u64], p: u64) {
    let inv = inv_mod(*b.last().unwrap(), p);
    while a.len() >= b.len() {
        let c = mul_mod(*a.last().unwrap(), inv, p);
        let shift = a.len() - b.len();
        for (i, y) in b.iter().enumerate() {
            let t = mul_mod(c, *y, p);
            a[shift + i] = (a[shift + i] + p - t) % p;
        }
        a.pop();
        while a.last() == Some(&0) {
            a.pop();
        }
    }
}

/// Monic gcd over `F_p`.
fn gcd_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut x, mut y) = (a.to_vec(), b.to_vec());
    while !y.is_empty() {
        rem_mod(&mut x, &y, p);
        std::mem::swap(&mut x, &mut y);
    }
    let inv = inv_mod(*x.last().unwrap(), p);
    x.iter().map(|c| mul_mod(*c, inv, p)).collect()
}

/// Primes below `2^61`, descending.
fn word_primes() -> impl Iterator<Item = u64> {
    ((1u64 << 60)..(1u64 << 61)).rev().filter(|&n| n % 2 == 1 && is_prime_u64(n))
}

/// Primitive gcd of two nonzero integer polynomials, by gcds modulo
/// primes, Chinese remaindering and a trial-division check.
pub fn gcd(f: &[BigInt], g: &[BigInt]) -> ZPoly {
    if f.is_empty() {
        return primitive(g.to_vec());
    }
    if g.is_empty() {
        return primitive(f.to_vec());
    }
    let (f, g) = (primitive(f.to_vec()), primitive(g.to_vec()));
    if f.len() == 1 || g.len() == 1 {
        return vec![BigInt::one()];
    }
    let gamma = f.last().unwrap().gcd(g.last().unwrap());
    let mut best_deg = usize::MAX;
    let mut image: ZPoly = Vec::new();
    let mut modulus = BigInt::one();
    let mut last_candidate: Option<ZPoly> = None;
    for p in word_primes() {
        let bp = BigInt::from(p);
        if (f.last().unwrap() % &bp).is_zero() || (g.last().unwrap() % &bp).is_zero() {
            continue;
        }
        let gp = gcd_mod(&reduce_mod(&f, p), &reduce_mod(&g, p), p);
        let d = gp.len() - 1;
        if d == 0 {
            return vec![BigInt::one()];
        }
        if d > best_deg {
            continue;
        }
        let gm = gamma.mod_floor(&bp).to_u64().unwrap();
        let scaled: Vec<u64> = gp.iter().map(|c| mul_mod(*c, gm, p)).collect();
        if d < best_deg {
            best_deg = d;
            image = scaled.iter().map(|&c| BigInt::from(c)).collect();
            modulus = bp;
            last_candidate = None;
            continue;
        }
        // combine: x = image + modulus * ((c - image) / modulus mod p)
        let minv = BigInt::from(inv_mod(modulus.mod_floor(&bp).to_u64().unwrap(), p));
        for (x, &c) in image.iter_mut().zip(&scaled) {
            let diff = (BigInt::from(c) - &*x).mod_floor(&bp);
            let t = (diff * &minv).mod_floor(&bp);
            *x += &modulus * t;
        }
        modulus *= &bp;
        let half = &modulus >> 1;
        let sym: ZPoly = image.iter().map(|c| if c > &half { c - &modulus } else { c.clone() }).collect();
        let cand = primitive(trim(sym));
        if last_candidate.as_ref() == Some(&cand) && div_exact(&f, &cand).is_some() && div_exact(&g, &cand).is_some() {
            return cand;
        }
        last_candidate = Some(cand);
    }
    unreachable!("ran out of primes")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(c: &[i64]) -> ZPoly {
        trim(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn gcd_of_products() {
        let common = z(&[3, -7, 0, 2]);
        let f = mul(&mul(&common, &z(&[1, 1])), &z(&[5, 0, 3]));
        let g = mul(&common, &z(&[-11, 4]));
        assert_eq!(gcd(&f, &g), common);
        assert_eq!(gcd(&z(&[1, 1]), &z(&[1, -1])), z(&[1]));
    }

    #[test]
    fn gcd_with_large_coefficients() {
        let big: BigInt = num_traits::pow(BigInt::from(10), 40) + 7;
        let common: ZPoly = vec![big.clone(), BigInt::from(-3), big.clone() * 2 + 1];
        let f = mul(&common, &z(&[123456789, 987654321, 1]));
        let g = mul(&common, &mul(&common, &z(&[-1, 0, 0, 1])));
        assert_eq!(gcd(&f, &g), primitive(common));
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let m = vec![
            vec![z(&[1, 1]), z(&[2]), z(&[0, 0, 1])],
            vec![z(&[3]), z(&[0, 1]), z(&[1])],
            vec![z(&[1]), z(&[1, 1]), z(&[2, 0, 1])],
        ];
        // expand along the first row
        let minor = |c: [usize; 2]| sub(&mul(&m[1][c[0]], &m[2][c[1]]), &mul(&m[1][c[1]], &m[2][c[0]]));
        let e = add(
            &sub(&mul(&m[0][0], &minor([1, 2])), &mul(&m[0][1], &minor([0, 2]))),
            &mul(&m[0][2], &minor([0, 1])),
        );
        assert_eq!(det(&m), e);
    }

    #[test]
    fn exact_division() {
        let a = mul(&z(&[2, 3]), &z(&[1, 0, 5]));
        assert_eq!(div_exact(&a, &z(&[2, 3])), Some(z(&[1, 0, 5])));
        assert_eq!(div_exact(&a, &z(&[1, 3])), None);
    }
}
