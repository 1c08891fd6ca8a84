use num_bigint::BigInt;
use num_traits::Signed;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::factor::{nth_roots, roots};
use crate::algebra::rational::rational_roots;
use crate::algebra::{BaseField, FieldValue, Poly, PolyRing, Ring};
use crate::curve::{Place, PlaceKind, SuperellipticCurve};
use crate::error::{Error, Result};

/// Reduced divisor class `(u, v)`: `u` monic, `deg v < deg u <= g`,
/// `u | v^2 - h`. The identity is `(1, 0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MumfordClass {
    pub u: Poly<FieldValue>,
    pub v: Poly<FieldValue>,
}

/// Jacobian of `y^2 = h` with `deg h = 2g + 1` and `h` squarefree.
#[derive(Clone, Debug)]
pub struct HyperellipticJacobian {
    field: BaseField,
    h: Poly<FieldValue>,
    g: usize,
}

impl HyperellipticJacobian {
    pub fn new(curve: &SuperellipticCurve) -> Result<Self> {
        if curve.n() != 2 {
            return Err(Error::Domain("Cantor arithmetic needs a hyperelliptic curve y^2 = h".into()));
        }
        let d = curve.h().degree().unwrap();
        if d.is_multiple_of(2) {
            return Err(Error::Domain("Cantor arithmetic needs deg h odd; move a rational branch point to infinity first".into()));
        }
        let pr = curve.poly_ring();
        if pr.gcd(curve.h(), &pr.derivative(curve.h()))?.degree() != Some(0) {
            return Err(Error::Domain("h is not squarefree (bad reduction or singular model)".into()));
        }
        Ok(HyperellipticJacobian { field: curve.field().clone(), h: curve.h().clone(), g: (d - 1) / 2 })
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn field(&self) -> &BaseField {
        &self.field
    }

    fn pr(&self) -> PolyRing<BaseField> {
        PolyRing::new(self.field.clone())
    }

    pub fn identity(&self) -> MumfordClass {
        MumfordClass { u: self.pr().one(), v: Poly::zero() }
    }

    pub fn is_identity(&self, a: &MumfordClass) -> bool {
        a.u.degree() == Some(0)
    }

    /// Checks the reduced Mumford invariants.
    pub fn validate(&self, a: &MumfordClass) -> Result<()> {
        let pr = self.pr();
        let du = a.u.degree().ok_or_else(|| Error::Domain("u = 0".into()))?;
        let ok = pr.is_monic(&a.u)
            && du <= self.g
            && a.v.degree().is_none_or(|dv| dv < du)
            && pr.rem(&pr.sub(&pr.mul(&a.v, &a.v), &self.h), &a.u)?.is_zero();
        if ok {
            Ok(())
        } else {
            Err(Error::Domain(format!("not a reduced Mumford pair: u = {:?}, v = {:?}", a.u, a.v)))
        }
    }

    /// Class of `(x0, y0) - inf`.
    pub fn point_class(&self, x0: &FieldValue, y0: &FieldValue) -> Result<MumfordClass> {
        let f = &self.field;
        let pr = self.pr();
        if f.mul(y0, y0) != pr.eval(&self.h, x0) {
            return Err(Error::Domain("point does not lie on the curve".into()));
        }
        Ok(MumfordClass { u: Poly::linear(f, x0), v: pr.constant(y0.clone()) })
    }

    pub fn neg(&self, a: &MumfordClass) -> MumfordClass {
        let pr = self.pr();
        MumfordClass { u: a.u.clone(), v: pr.rem(&pr.neg(&a.v), &a.u).expect("monic u") }
    }

    /// Cantor composition followed by reduction.
    pub fn add(&self, a: &MumfordClass, b: &MumfordClass) -> Result<MumfordClass> {
        let pr = self.pr();
        let (d1, e1, e2) = pr.xgcd(&a.u, &b.u)?;
        let (d, c1, c2) = pr.xgcd(&d1, &pr.add(&a.v, &b.v))?;
        let s1 = pr.mul(&c1, &e1);
        let s2 = pr.mul(&c1, &e2);
        let s3 = c2;
        let u = pr.div_exact(&pr.mul(&a.u, &b.u), &pr.mul(&d, &d))?;
        let num = pr.add(
            &pr.add(&pr.mul(&s1, &pr.mul(&a.u, &b.v)), &pr.mul(&s2, &pr.mul(&b.u, &a.v))),
            &pr.mul(&s3, &pr.add(&pr.mul(&a.v, &b.v), &self.h)),
        );
        let mut v = pr.rem(&pr.div_exact(&num, &d)?, &u)?;
        let mut u = pr.monic(&u)?;
        while u.degree().unwrap() > self.g {
            let u2 = pr.div_exact(&pr.sub(&self.h, &pr.mul(&v, &v)), &u)?;
            u = pr.monic(&u2)?;
            v = pr.rem(&pr.neg(&v), &u)?;
        }
        Ok(MumfordClass { u, v })
    }

    pub fn double(&self, a: &MumfordClass) -> Result<MumfordClass> {
        self.add(a, a)
    }

    /// `k * a` by double-and-add.
    pub fn mul(&self, a: &MumfordClass, k: &BigInt) -> Result<MumfordClass> {
        let base = if k.is_negative() { self.neg(a) } else { a.clone() };
        let k = k.abs();
        let mut acc = self.identity();
        for i in (0..k.bits()).rev() {
            acc = self.double(&acc)?;
            if k.bit(i) {
                acc = self.add(&acc, &base)?;
            }
        }
        Ok(acc)
    }

    /// Order of `a` when it divides `bound`, by trying divisors in turn.
    pub fn order_up_to(&self, a: &MumfordClass, bound: u64) -> Result<Option<u64>> {
        let mut cur = self.identity();
        for k in 1..=bound {
            cur = self.add(&cur, a)?;
            if self.is_identity(&cur) {
                return Ok(Some(k));
            }
        }
        Ok(None)
    }

    /// A random affine point over a finite field.
    fn random_point(&self, rng: &mut dyn RngCore) -> Result<(FieldValue, FieldValue)> {
        let f = &self.field;
        if f.order().is_none() {
            return Err(Error::Domain("random points need a finite field".into()));
        }
        let pr = self.pr();
        loop {
            let x = f.random_element(rng);
            let hx = pr.eval(&self.h, &x);
            let rts = nth_roots(f, &hx, 2);
            if let Some(y) = rts.get((rng.next_u32() % 2) as usize).or(rts.first()) {
                return Ok((x, y.clone()));
            }
        }
    }

    /// Sum of `g` random point classes.
    pub fn random_class(&self, rng: &mut dyn RngCore) -> Result<MumfordClass> {
        let mut acc = self.identity();
        for _ in 0..self.g {
            let (x, y) = self.random_point(rng)?;
            acc = self.add(&acc, &self.point_class(&x, &y)?)?;
        }
        Ok(acc)
    }
}

/// `y^2 = h` with `deg h` odd, moving a rational root of `h` to infinity
/// when `deg h` is even: `x = r + 1/X`, `y = Y / X^(g+1)`.
pub fn odd_degree_model(curve: &SuperellipticCurve) -> Result<SuperellipticCurve> {
    if curve.n() != 2 {
        return Err(Error::Domain("not a hyperelliptic curve".into()));
    }
    let h = curve.h();
    let d = h.degree().unwrap();
    if d % 2 == 1 {
        return Ok(curve.clone());
    }
    let field = curve.field();
    let r = if field.is_rational() {
        rational_roots(h)?.into_iter().next().map(FieldValue::Rational)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        roots(field, h, &mut rng)?.into_iter().next()
    };
    let r = r.ok_or_else(|| Error::Domain("deg h is even and h has no root in the field to move to infinity".into()))?;
    let pr = curve.poly_ring();
    // X^d h(r + 1/X) = sum h_i (r X + 1)^i X^(d - i)
    let rx1 = pr.from_coeffs(vec![field.one(), r]);
    let mut out = Poly::zero();
    for (i, c) in h.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = pr.mul(&pr.pow(&rx1, i as u64), &pr.shift(&pr.constant(c.clone()), d - i));
        out = pr.add(&out, &term);
    }
    SuperellipticCurve::new(field.clone(), 2, out)
}

fn affine_point(field: &BaseField, place: &Place) -> Result<Option<(FieldValue, FieldValue)>> {
    let unsupported = || Error::Domain(format!("{place} is not a degree-1 place"));
    match place.kind() {
        PlaceKind::Infinite => Ok(None),
        PlaceKind::Branch => {
            let x = place.x_value().ok_or_else(unsupported)?;
            Ok(Some((x, field.zero())))
        }
        PlaceKind::Ordinary => {
            let x = place.x_value().ok_or_else(unsupported)?;
            let v = place.sheet_value().ok_or_else(unsupported)?;
            if v.degree().unwrap_or(0) > 0 {
                return Err(unsupported());
            }
            let y = v.coeffs().first().cloned().unwrap_or_else(|| field.zero());
            Ok(Some((x, y)))
        }
    }
}

/// `[P - Q]` for degree-1 places on an odd-degree hyperelliptic curve.
pub fn class_of_difference(jac: &HyperellipticJacobian, p: &Place, q: &Place) -> Result<MumfordClass> {
    if p.degree() != 1 || q.degree() != 1 {
        return Err(Error::Domain("class_of_difference needs degree-1 places".into()));
    }
    if p == q {
        return Ok(jac.identity());
    }
    let cls = |pl: &Place| -> Result<MumfordClass> {
        match affine_point(jac.field(), pl)? {
            None => Ok(jac.identity()),
            Some((x, y)) => jac.point_class(&x, &y),
        }
    };
    jac.add(&cls(p)?, &jac.neg(&cls(q)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(p: u64, c: &[i64]) -> SuperellipticCurve {
        let f = BaseField::prime(p).unwrap();
        SuperellipticCurve::new(f.clone(), 2, Poly::from_coeffs(&f, c.iter().map(|&x| f.from_int(x)).collect())).unwrap()
    }

    #[test]
    fn group_laws_on_random_classes() {
        let jac = HyperellipticJacobian::new(&curve(31, &[1, 3, 0, 2, 0, 1])).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let a = jac.random_class(&mut rng).unwrap();
            let b = jac.random_class(&mut rng).unwrap();
            let c = jac.random_class(&mut rng).unwrap();
            jac.validate(&a).unwrap();
            assert_eq!(jac.add(&a, &jac.identity()).unwrap(), a);
            assert!(jac.is_identity(&jac.add(&a, &jac.neg(&a)).unwrap()));
            assert_eq!(jac.add(&a, &b).unwrap(), jac.add(&b, &a).unwrap());
            let l = jac.add(&jac.add(&a, &b).unwrap(), &c).unwrap();
            let r = jac.add(&a, &jac.add(&b, &c).unwrap()).unwrap();
            assert_eq!(l, r);
            assert_eq!(jac.mul(&a, &BigInt::from(3)).unwrap(), jac.add(&a, &jac.double(&a).unwrap()).unwrap());
        }
    }

    #[test]
    fn two_roots_compose_to_their_product() {
        // x^5 - x = x (x - 1)(x + 1)(x^2 + 1) over F_13 has roots 0, 1, 5, 8, 12
        let c = curve(13, &[0, -1, 0, 0, 0, 1]);
        let jac = HyperellipticJacobian::new(&c).unwrap();
        let f = c.field();
        let a = jac.point_class(&f.from_u64(0), &f.zero()).unwrap();
        let b = jac.point_class(&f.from_u64(1), &f.zero()).unwrap();
        let s = jac.add(&a, &b).unwrap();
        let pr = c.poly_ring();
        assert_eq!(s.u, pr.from_coeffs(vec![f.zero(), f.from_int(-1), f.one()]));
        assert!(s.v.is_zero());
        assert!(jac.is_identity(&jac.double(&a).unwrap()));
    }

    #[test]
    fn even_degree_model_moves_a_root_to_infinity() {
        // y^2 = x (x - 1)(x - 2)(x - 3)(x - 4)(x - 5) over F_11
        let f = BaseField::prime(11).unwrap();
        let pr = PolyRing::new(f.clone());
        let h = (0..6).fold(pr.one(), |acc, r| pr.mul(&acc, &Poly::linear(&f, &f.from_u64(r))));
        let c = SuperellipticCurve::new(f, 2, h).unwrap();
        let m = odd_degree_model(&c).unwrap();
        assert_eq!(m.h().degree(), Some(5));
        assert_eq!(m.genus(), 2);
    }

    #[test]
    fn rejects_non_hyperelliptic_and_even_degree() {
        let f = BaseField::prime(13).unwrap();
        let c = SuperellipticCurve::new(f.clone(), 3, Poly::from_coeffs(&f, vec![f.one(), f.zero(), f.zero(), f.zero(), f.one()])).unwrap();
        assert!(HyperellipticJacobian::new(&c).is_err());
        let c = curve(13, &[2, 0, 0, 0, 0, 0, 1]);
        assert!(HyperellipticJacobian::new(&c).is_err());
    }
}
