use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{BaseField, FieldValue, Poly, PolyRing};
use crate::curve::SuperellipticCurve;
use crate::error::{Error, Result};

use super::mumford::{HyperellipticJacobian, MumfordClass};
use super::verdict::Assertion;

/// Default bound on `p^g`, the largest field enumerated.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Point counts and L-polynomial of a hyperelliptic curve over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaData {
    pub p: u64,
    pub genus: u32,
    /// `#C(F_{p^k})` for `k = 1..=g`.
    pub counts: Vec<u64>,
    /// `b_0, ..., b_{2g}` of `L(T)`.
    pub l_poly: Vec<i128>,
    /// `L(1)`, the order of the Jacobian over `F_p`.
    pub jacobian_order: i128,
    pub checks: Vec<Assertion>,
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * a as u128) % p as u128) as u64;
        }
        a = ((a as u128 * a as u128) % p as u128) as u64;
        e >>= 1;
    }
    r
}

/// Number of `y` with `y^2 = a`, for `a` in `F_p`.
fn sqrt_count_prime(a: u64, p: u64) -> u64 {
    if a == 0 {
        1
    } else if pow_mod(a, (p - 1) / 2, p) == 1 {
        2
    } else {
        0
    }
}

fn count_prime(h: &Poly<FieldValue>, p: u64) -> u64 {
    let coeffs: Vec<u64> = h.coeffs().iter().map(|c| c.residue().unwrap()).collect();
    (0..p)
        .into_par_iter()
        .map(|x| {
            let hx = coeffs.iter().rev().fold(0u64, |acc, &c| ((acc as u128 * x as u128 + c as u128) % p as u128) as u64);
            sqrt_count_prime(hx, p)
        })
        .sum()
}

fn count_extension(h: &Poly<FieldValue>, field: &BaseField, p: u64, k: usize) -> Result<u64> {
    let pr = PolyRing::new(field.clone());
    let hk = h.try_map(field, |c| field.embed(c))?;
    let total = p.pow(k as u32);
    let count = (0..total)
        .into_par_iter()
        .map(|mut idx| {
            let mut digits = Vec::with_capacity(k);
            for _ in 0..k {
                digits.push(idx % p);
                idx /= p;
            }
            let x = field.from_coeff_list(&digits).expect("digits below p");
            let hx = pr.eval(&hk, &x);
            match field.legendre(&hx).expect("finite field") {
                0 => 1,
                1 => 2,
                _ => 0,
            }
        })
        .sum();
    Ok(count)
}

/// Affine count plus the points at infinity of the smooth model.
fn points_at_infinity(field: &BaseField, h: &Poly<FieldValue>) -> Result<u64> {
    let d = h.degree().unwrap();
    if d % 2 == 1 {
        return Ok(1);
    }
    let lead = field.embed(h.lead().unwrap())?;
    Ok((1 + field.legendre(&lead)?) as u64)
}

/// `L(T)` from `S_k = N_k - p^k - 1`, `k = 1..=g`, using the power-sum
/// relations for the first half and the functional equation for the rest.
fn l_polynomial(p: u64, g: usize, counts: &[u64]) -> Result<Vec<i128>> {
    let p = p as i128;
    // L(T) = prod (1 - a_i T), S_k = -sum a_i^k
    let s: Vec<i128> = (1..=g).map(|k| counts[k - 1] as i128 - p.pow(k as u32) - 1).collect();
    let mut b = vec![0i128; 2 * g + 1];
    b[0] = 1;
    for i in 1..=g {
        let acc: i128 = (1..=i).map(|j| s[j - 1] * b[i - j]).sum();
        if acc % i as i128 != 0 {
            return Err(Error::CrossCheck(format!("L-polynomial coefficient b_{i} is not an integer")));
        }
        b[i] = acc / i as i128;
    }
    for i in 0..g {
        b[2 * g - i] = p.pow((g - i) as u32) * b[i];
    }
    Ok(b)
}

/// `#C(F_{p^k})` predicted by `L`: `p^k + 1 + S_k` with `S_k` from Newton.
fn predicted_count(p: u64, b: &[i128], k: usize) -> i128 {
    let n = b.len() - 1;
    // power sums of the reciprocal roots: e_j = (-1)^j b_j
    let mut s = vec![0i128; k + 1];
    for m in 1..=k {
        let mut acc = if m <= n { -(m as i128) * b[m] } else { 0 };
        for j in 1..m {
            if j <= n {
                acc -= b[j] * s[m - j];
            }
        }
        s[m] = acc;
    }
    (p as i128).pow(k as u32) + 1 - s[k]
}

/// Counts points over `F_{p^k}` for `k <= g` and derives the L-polynomial.
/// `p^g` must not exceed `budget`.
pub fn zeta(curve: &SuperellipticCurve, budget: u64) -> Result<ZetaData> {
    if curve.n() != 2 {
        return Err(Error::Domain("zeta needs a hyperelliptic curve y^2 = h".into()));
    }
    let p = match curve.field() {
        BaseField::Prime(p) => *p,
        other => return Err(Error::Domain(format!("zeta needs a prime field, got {other}"))),
    };
    if p == 2 {
        return Err(Error::Domain("characteristic 2 is not supported".into()));
    }
    let pr = curve.poly_ring();
    if pr.gcd(curve.h(), &pr.derivative(curve.h()))?.degree() != Some(0) {
        return Err(Error::Domain(format!("bad reduction: h is not squarefree mod {p}")));
    }
    let g = curve.genus() as usize;
    let within = |k: usize| p.checked_pow(k as u32).is_some_and(|q| q <= budget);
    if !within(g) {
        return Err(Error::Budget(format!("p^g = {p}^{g} exceeds the enumeration budget {budget}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut count_over = |k: usize| -> Result<u64> {
        let field = BaseField::extension(p, k, &mut rng)?;
        let affine = if k == 1 { count_prime(curve.h(), p) } else { count_extension(curve.h(), &field, p, k)? };
        Ok(affine + points_at_infinity(&field, curve.h())?)
    };
    let counts: Vec<u64> = (1..=g).map(&mut count_over).collect::<Result<_>>()?;
    let b = l_polynomial(p, g, &counts)?;
    let jacobian_order: i128 = b.iter().sum();

    let mut checks = Vec::new();
    let fe = (0..=2 * g).all(|i| i > g || b[2 * g - i] == (p as i128).pow((g - i) as u32) * b[i]);
    checks.push(Assertion::new(
        "functional equation",
        fe && b[0] == 1 && b[2 * g] == (p as i128).pow(g as u32),
        "b_{2g-i} = p^{g-i} b_i",
    ));
    // (N - q - 1)^2 <= 4 g^2 q
    let weil = counts.iter().enumerate().all(|(i, &n)| {
        let q = (p as i128).pow(i as u32 + 1);
        let dev = n as i128 - q - 1;
        dev * dev <= 4 * (g * g) as i128 * q
    });
    checks.push(Assertion::new("weil bound", weil, "|N_k - p^k - 1| <= 2 g p^(k/2)"));
    checks.push(Assertion::new("jacobian order positive", jacobian_order > 0, format!("L(1) = {jacobian_order}")));
    if within(g + 1) {
        let n = count_over(g + 1)?;
        let pred = predicted_count(p, &b, g + 1);
        checks.push(Assertion::new(
            "next count",
            n as i128 == pred,
            format!("#C(F_{{p^{}}}) = {n}, predicted {pred}", g + 1),
        ));
    }
    if let Some(bad) = checks.iter().find(|c| !c.pass) {
        return Err(Error::CrossCheck(format!("zeta invariant {} failed: {}", bad.name, bad.detail)));
    }
    Ok(ZetaData { p, genus: g as u32, counts, l_poly: b, jacobian_order, checks })
}

/// Verifies `L(1) * C = 0` for each class.
pub fn lagrange_check(jac: &HyperellipticJacobian, zeta: &ZetaData, classes: &[MumfordClass]) -> Result<bool> {
    let n = BigInt::from(zeta.jacobian_order);
    for c in classes {
        if !jac.is_identity(&jac.mul(c, &n)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fcurve(p: u64, c: &[u64]) -> SuperellipticCurve {
        let f = BaseField::prime(p).unwrap();
        SuperellipticCurve::new(f.clone(), 2, Poly::from_coeffs(&f, c.iter().map(|&x| f.from_u64(x)).collect())).unwrap()
    }

    #[test]
    fn elliptic_curve_over_f5() {
        // y^2 = x^3 + x over F_5: x = 0 -> 1, x = 2, 3 -> 2 each, plus infinity
        let z = zeta(&fcurve(5, &[0, 1, 0, 1]), DEFAULT_BUDGET).unwrap();
        assert_eq!(z.counts, vec![4]);
        assert_eq!(z.l_poly, vec![1, -2, 5]);
        assert_eq!(z.jacobian_order, 4);
    }

    #[test]
    fn genus_two_matches_brute_force_over_extension() {
        let c = fcurve(7, &[1, 0, 0, 0, 0, 1]);
        let z = zeta(&c, DEFAULT_BUDGET).unwrap();
        assert_eq!(z.l_poly.len(), 5);
        assert!(z.checks.iter().all(|a| a.pass));
        assert!(z.checks.iter().any(|a| a.name == "next count"));
    }

    #[test]
    fn over_budget() {
        let c = fcurve(101, &[1, 0, 0, 0, 0, 1]);
        assert!(matches!(zeta(&c, 1000), Err(Error::Budget(_))));
    }

    #[test]
    fn predicted_counts_agree_with_l() {
        let b = [1i128, -2, 5];
        assert_eq!(predicted_count(5, &b, 1), 4);
        // N_2 = 25 + 1 - (a1^2 + a2^2) with a1 + a2 = 2, a1 a2 = 5: 4 - 10 = -6
        assert_eq!(predicted_count(5, &b, 2), 32);
    }
}
