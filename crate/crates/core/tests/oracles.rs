//! Independent recomputations of values the library derives.

mod common;

use common::hyper;
use weierstrass::algebra::{BaseField, FieldValue, Poly, PolyRing, Ring};
use weierstrass::curve::{build_trigonal, TrigonalParams};
use weierstrass::jacobian::{zeta, HyperellipticJacobian, MumfordClass, DEFAULT_BUDGET};

fn eval_mod(h: &[i64], x: u64, p: u64) -> u64 {
    h.iter().rev().fold(0i128, |acc, &c| (acc * x as i128 + c as i128).rem_euclid(p as i128)) as u64
}

/// `#C(F_p)` by trying every pair `(x, y)`, plus the points at infinity of
/// the smooth model read off the leading coefficient.
fn naive_count(h: &[i64], p: u64) -> u64 {
    let mut n = 0;
    for x in 0..p {
        let hx = eval_mod(h, x, p);
        n += (0..p).filter(|y| y * y % p == hx).count() as u64;
    }
    let d = h.len() - 1;
    if d % 2 == 1 {
        n + 1
    } else {
        let lc = h[d].rem_euclid(p as i64) as u64;
        n + 2 * (0..p).filter(|y| y * y % p == lc).count().min(1) as u64
    }
}

/// `F_{p^2} = F_p[s]/(s^2 - r)` with `r` a non-residue, elements `(a, b)`.
fn naive_count_quadratic(h: &[i64], p: u64) -> u64 {
    let r = (2..p).find(|&r| (0..p).all(|y| y * y % p != r)).unwrap();
    let mul = |a: (u64, u64), b: (u64, u64)| ((a.0 * b.0 + a.1 * b.1 % p * r) % p, (a.0 * b.1 + a.1 * b.0) % p);
    let mut squares = std::collections::HashMap::new();
    for a in 0..p {
        for b in 0..p {
            *squares.entry(mul((a, b), (a, b))).or_insert(0u64) += 1;
        }
    }
    let mut n = 0;
    for a in 0..p {
        for b in 0..p {
            let hx = h.iter().rev().fold((0, 0), |acc, &c| {
                let t = mul(acc, (a, b));
                ((t.0 + c.rem_euclid(p as i64) as u64) % p, t.1)
            });
            n += squares.get(&hx).copied().unwrap_or(0);
        }
    }
    // every element of F_p is a square in F_{p^2}
    n + if (h.len() - 1) % 2 == 1 { 1 } else { 2 }
}

const CURVES: &[(u64, &[i64])] = &[
    (5, &[0, 1, 0, 1]),
    (7, &[3, 1, 0, 1]),
    (11, &[1, 0, 0, 0, 0, 1]),
    (13, &[2, 0, 1, 0, 0, 1]),
    (7, &[1, 2, 0, 1, 0, 1]),
    (17, &[5, 0, 0, 1, 1, 0, 1]),
];

#[test]
fn point_counts_match_brute_force() {
    for &(p, h) in CURVES {
        let f = BaseField::prime(p).unwrap();
        let z = zeta(&hyper(&f, h), DEFAULT_BUDGET).unwrap();
        assert_eq!(z.counts[0], naive_count(h, p), "p = {p}, h = {h:?}");
        if z.genus >= 2 {
            assert_eq!(z.counts[1], naive_count_quadratic(h, p), "p = {p}, h = {h:?}");
        }
    }
}

#[test]
fn jacobian_order_from_counts() {
    for &(p, h) in CURVES {
        let f = BaseField::prime(p).unwrap();
        let z = zeta(&hyper(&f, h), DEFAULT_BUDGET).unwrap();
        let n1 = naive_count(h, p) as i128;
        let expected = match z.genus {
            1 => n1,
            // #J = (N_1^2 + N_2) / 2 - p for genus 2
            2 => (n1 * n1 + naive_count_quadratic(h, p) as i128) / 2 - p as i128,
            _ => unreachable!(),
        };
        assert_eq!(z.jacobian_order, expected, "p = {p}, h = {h:?}");
    }
}

/// Every reduced pair `(u, v)` over `F_p`, found by exhaustive search.
fn all_reduced_pairs(jac: &HyperellipticJacobian, h: &Poly<FieldValue>) -> Vec<MumfordClass> {
    let f = jac.field().clone();
    let pr = PolyRing::new(f.clone());
    let p = f.characteristic();
    let g = jac.genus();
    let polys_below = |d: usize| -> Vec<Poly<FieldValue>> {
        let count = p.pow(d as u32);
        (0..count)
            .map(|mut i| {
                let coeffs = (0..d)
                    .map(|_| {
                        let c = f.from_u64(i % p);
                        i /= p;
                        c
                    })
                    .collect();
                pr.from_coeffs(coeffs)
            })
            .collect()
    };
    let mut out = Vec::new();
    for d in 0..=g {
        for low in polys_below(d) {
            let u = pr.add(&low, &Poly::monomial(&f, f.one(), d));
            for v in polys_below(d) {
                if pr.rem(&pr.sub(&pr.mul(&v, &v), h), &u).unwrap().is_zero() {
                    out.push(MumfordClass { u: u.clone(), v });
                }
            }
        }
    }
    out
}

#[test]
fn mumford_pairs_count_the_jacobian() {
    for &(p, h) in &[(7u64, &[1i64, 0, 0, 0, 0, 1][..]), (7, &[1, 2, 0, 1, 0, 1]), (5, &[0, 1, 0, 1])] {
        let f = BaseField::prime(p).unwrap();
        let c = hyper(&f, h);
        let jac = HyperellipticJacobian::new(&c).unwrap();
        let pairs = all_reduced_pairs(&jac, c.h());
        let z = zeta(&c, DEFAULT_BUDGET).unwrap();
        assert_eq!(pairs.len() as i128, z.jacobian_order, "p = {p}, h = {h:?}");
        // Cantor addition is closed on the set and every element is valid
        let set: std::collections::HashSet<_> = pairs.iter().cloned().collect();
        for a in pairs.iter().take(20) {
            for b in pairs.iter().take(20) {
                let s = jac.add(a, b).unwrap();
                jac.validate(&s).unwrap();
                assert!(set.contains(&s));
            }
        }
    }
}

#[test]
fn two_torsion_count_by_exhaustion() {
    // 2-torsion of y^2 = x^5 - x over F_13: h splits, so all 16 points are rational
    let f = BaseField::prime(13).unwrap();
    let c = hyper(&f, &[0, -1, 0, 0, 0, 1]);
    let jac = HyperellipticJacobian::new(&c).unwrap();
    let pairs = all_reduced_pairs(&jac, c.h());
    let killed = pairs.iter().filter(|a| jac.is_identity(&jac.double(a).unwrap())).count();
    assert_eq!(killed, 16);
    // they are exactly the pairs with v = 0 and u | h
    let pr = c.poly_ring();
    let zero_v = pairs.iter().filter(|a| a.v.is_zero() && pr.rem(c.h(), &a.u).unwrap().is_zero()).count();
    assert_eq!(zero_v, 16);
}

#[test]
fn trigonal_genus_formula() {
    // y^3 = prod of s simple and t double factors: Riemann-Hurwitz for a
    // cyclic triple cover with s + t finite branch points, unramified at
    // infinity when s + 2t = 0 mod 3
    for g in 3..=14u32 {
        let (s, t) = TrigonalParams::shape(g);
        assert_eq!((s + 2 * t) % 3, 0);
        assert!(t < s);
        let r = (s + t) as i64;
        assert_eq!((2 * r - 4) / 2, g as i64);
        let tc = build_trigonal(g, &BaseField::prime(1009).unwrap(), None).unwrap();
        assert_eq!(tc.curve.genus(), g);
    }
}
