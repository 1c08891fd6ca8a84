use std::collections::{HashSet, VecDeque};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::factor::{factor, lcm_all, roots};
use crate::algebra::{BaseField, Ring};
use crate::curve::SuperellipticCurve;
use crate::error::{Error, Result};

use super::mumford::{odd_degree_model, HyperellipticJacobian, MumfordClass};
use super::verdict::{Assertion, Verdict};

#[derive(Clone, Debug)]
pub struct Prop5Outcome {
    pub verdict: Verdict,
    /// Degree over the base field of the splitting field of `h`.
    pub splitting_degree: usize,
    pub subgroup_size: usize,
}

/// Checks that the classes `[P_i - P_j]` of Weierstrass points of a
/// hyperelliptic curve over a finite field of odd characteristic generate
/// a group of order `4^g` killed by 2, with the single relation that their
/// sum vanishes. Works over the splitting field of `h`. `budget` bounds the
/// subgroup size enumerated.
pub fn weierstrass_subgroup_2torsion(curve: &SuperellipticCurve, seed: u64, budget: u64) -> Result<Prop5Outcome> {
    if curve.n() != 2 {
        return Err(Error::Domain("needs a hyperelliptic curve y^2 = h".into()));
    }
    let field = curve.field();
    let p = field.characteristic();
    if p == 0 {
        return Err(Error::Domain("needs a finite field; reduce the curve modulo a prime first".into()));
    }
    if p == 2 {
        return Err(Error::Domain("characteristic 2 is not supported".into()));
    }
    let pr = curve.poly_ring();
    if pr.gcd(curve.h(), &pr.derivative(curve.h()))?.degree() != Some(0) {
        return Err(Error::Domain("h is not squarefree: bad reduction".into()));
    }
    let g = curve.genus() as usize;
    let size = 4u64.checked_pow(g as u32).filter(|&s| s <= budget).ok_or_else(|| {
        Error::Budget(format!("subgroup of order 4^{g} exceeds the enumeration budget {budget}"))
    })?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let fac = factor(field, curve.h(), &mut rng)?;
    let k = lcm_all(fac.factors.iter().map(|(f, _)| f.degree().unwrap()));
    let split_curve = if k == 1 {
        curve.clone()
    } else {
        if field.degree() > 1 {
            return Err(Error::Domain(format!(
                "h splits over a degree-{k} extension of {field}; give the curve over F_p or its splitting field"
            )));
        }
        let ext = BaseField::extension(p, k, &mut rng)?;
        curve.extend_field(&ext)?
    };
    let model = odd_degree_model(&split_curve)?;
    let jac = HyperellipticJacobian::new(&model)?;
    let ext = jac.field().clone();
    let rts = roots(&ext, model.h(), &mut rng)?;

    let gens: Vec<MumfordClass> =
        rts.iter().map(|r| jac.point_class(r, &ext.zero())).collect::<Result<_>>()?;
    let mut assertions = Vec::new();
    assertions.push(Assertion::new(
        "weierstrass points",
        gens.len() == 2 * g + 1,
        format!("{} affine Weierstrass points plus one at infinity, genus {g}", gens.len()),
    ));
    let orders_ok = gens.iter().all(|d| !jac.is_identity(d) && jac.double(d).map(|e| jac.is_identity(&e)).unwrap_or(false));
    assertions.push(Assertion::new("generators have order 2", orders_ok, format!("{} generators", gens.len())));

    let group = closure(&jac, &gens, size as usize)?;
    assertions.push(Assertion::new(
        "subgroup order",
        group.len() as u64 == size,
        format!("generated subgroup has {} elements, 4^{g} = {size}", group.len()),
    ));
    let mut killed = true;
    for d in &group {
        jac.validate(d)?;
        killed &= jac.is_identity(&jac.double(d)?);
    }
    assertions.push(Assertion::new("killed by 2", killed, "every element D satisfies 2D = 0"));
    let mut sum = jac.identity();
    for d in &gens {
        sum = jac.add(&sum, d)?;
    }
    assertions.push(Assertion::new(
        "relation",
        jac.is_identity(&sum),
        "the sum of all generators is 0",
    ));
    // the first 2g generators already span the group
    let basis = closure(&jac, &gens[..gens.len().min(2 * g)], size as usize)?;
    assertions.push(Assertion::new(
        "2g generators suffice",
        basis.len() == group.len(),
        format!("{} elements from the first {} generators", basis.len(), 2 * g),
    ));

    let verdict = Verdict {
        proposition: "prop5",
        genus: g as u32,
        field: field.clone(),
        assertions,
        data: vec![
            ("splitting degree".into(), k.to_string()),
            ("subgroup size".into(), group.len().to_string()),
            ("expected".into(), size.to_string()),
        ],
    };
    Ok(Prop5Outcome { verdict, splitting_degree: k, subgroup_size: group.len() })
}

/// Breadth-first closure of `gens` under addition, stopping past `cap`.
fn closure(jac: &HyperellipticJacobian, gens: &[MumfordClass], cap: usize) -> Result<HashSet<MumfordClass>> {
    let id = jac.identity();
    let mut seen: HashSet<MumfordClass> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(d) = queue.pop_front() {
        for gen in gens {
            let e = jac.add(&d, gen)?;
            if seen.insert(e.clone()) {
                if seen.len() > cap {
                    return Ok(seen);
                }
                queue.push_back(e);
            }
        }
    }
    Ok(seen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Poly;

    fn curve(p: u64, c: &[i64]) -> SuperellipticCurve {
        let f = BaseField::prime(p).unwrap();
        SuperellipticCurve::new(f.clone(), 2, Poly::from_coeffs(&f, c.iter().map(|&x| f.from_int(x)).collect())).unwrap()
    }

    #[test]
    fn genus_two_over_f11() {
        let out = weierstrass_subgroup_2torsion(&curve(11, &[1, 0, 0, 0, 0, 1]), 0, 1 << 20).unwrap();
        assert_eq!(out.subgroup_size, 16);
        assert_eq!(out.splitting_degree, 1);
        assert!(out.verdict.verdict(), "{:?}", out.verdict);
    }

    #[test]
    fn non_split_h_uses_extension() {
        // x^5 + 1 over F_7 splits over F_{7^6}
        let out = weierstrass_subgroup_2torsion(&curve(7, &[1, 0, 0, 0, 0, 1]), 0, 1 << 20).unwrap();
        assert!(out.splitting_degree > 1);
        assert_eq!(out.subgroup_size, 16);
        assert!(out.verdict.verdict());
    }

    #[test]
    fn genus_three_and_even_degree() {
        let out = weierstrass_subgroup_2torsion(&curve(13, &[0, 1, 0, 0, 0, 0, 0, 1]), 3, 1 << 20).unwrap();
        assert_eq!(out.subgroup_size, 64);
        assert!(out.verdict.verdict());
        let f = BaseField::prime(17).unwrap();
        let pr = crate::algebra::PolyRing::new(f.clone());
        let h = (1..7).fold(pr.one(), |acc, r| pr.mul(&acc, &Poly::linear(&f, &f.from_u64(r))));
        let c = SuperellipticCurve::new(f, 2, h).unwrap();
        let out = weierstrass_subgroup_2torsion(&c, 0, 1 << 20).unwrap();
        assert_eq!(out.subgroup_size, 16);
        assert!(out.verdict.verdict());
    }

    #[test]
    fn bad_reduction_and_budget() {
        // x^5 + 1 = (x + 1)^5 mod 5
        let q = BaseField::Rational;
        let c = SuperellipticCurve::new(q.clone(), 2, Poly::from_coeffs(&q, vec![q.one(), q.zero(), q.zero(), q.zero(), q.zero(), q.one()])).unwrap();
        assert!(matches!(c.reduce_mod(5), Err(Error::Domain(_))));
        assert!(matches!(weierstrass_subgroup_2torsion(&c, 0, 1 << 20), Err(Error::Domain(_))));
        assert!(matches!(
            weierstrass_subgroup_2torsion(&curve(11, &[1, 0, 0, 0, 0, 1]), 0, 10),
            Err(Error::Budget(_))
        ));
    }
}
