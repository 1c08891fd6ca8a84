#![allow(dead_code)]

use rand::Rng;
use weierstrass::algebra::{BaseField, FieldValue, Poly, PolyRing, Ring};
use weierstrass::curve::SuperellipticCurve;

pub fn qpoly(c: &[i64]) -> Poly<FieldValue> {
    Poly::from_coeffs(&BaseField::Rational, c.iter().map(|&x| FieldValue::rational(x, 1)).collect())
}

pub fn fpoly(f: &BaseField, c: &[i64]) -> Poly<FieldValue> {
    Poly::from_coeffs(f, c.iter().map(|&x| f.from_int(x)).collect())
}

pub fn hyper(f: &BaseField, c: &[i64]) -> SuperellipticCurve {
    SuperellipticCurve::new(f.clone(), 2, fpoly(f, c)).unwrap()
}

/// A random supported curve `y^n = prod (x - c_i)^{m_i}` with distinct
/// `c_i`, `gcd(m_i, n) = 1` and positive genus.
pub fn random_curve(field: &BaseField, rng: &mut impl Rng) -> SuperellipticCurve {
    let pr = PolyRing::new(field.clone());
    loop {
        let n = rng.gen_range(2..=5u32);
        let k = rng.gen_range(3..=6usize);
        let mut roots: Vec<i64> = Vec::new();
        while roots.len() < k {
            let c = rng.gen_range(-6..=6);
            if !roots.contains(&c) {
                roots.push(c);
            }
        }
        let mut h = pr.one();
        for c in roots {
            let m = loop {
                let m = rng.gen_range(1..=3u32);
                if num_integer::gcd(m, n) == 1 {
                    break m;
                }
            };
            h = pr.mul(&h, &pr.pow(&Poly::linear(field, &field.from_int(c)), m as u64));
        }
        if let Ok(c) = SuperellipticCurve::new(field.clone(), n, h) {
            if c.genus() >= 1 {
                return c;
            }
        }
    }
}
