mod common;

use std::sync::OnceLock;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{hyper, random_curve};
use weierstrass::algebra::factor::roots;
use weierstrass::algebra::{BaseField, Ring};
use weierstrass::curve::{differential_basis, div_dx, divisor_of, FunctionFieldElement};
use weierstrass::jacobian::{zeta, HyperellipticJacobian, DEFAULT_BUDGET};
use weierstrass::weierstrass::{expected_total_weight, weierstrass_report, Method};

const CURVES: [(u64, &[i64]); 3] = [(31, &[1, 3, 0, 2, 0, 1]), (101, &[7, 0, 1, 0, 0, 0, 0, 1]), (13, &[2, 1, 0, 1])];

fn jacobian(idx: usize) -> HyperellipticJacobian {
    let (p, h) = CURVES[idx % CURVES.len()];
    HyperellipticJacobian::new(&hyper(&BaseField::prime(p).unwrap(), h)).unwrap()
}

/// `L(1)` for each curve, computed once.
fn jacobian_order(idx: usize) -> i128 {
    static ORDERS: OnceLock<Vec<i128>> = OnceLock::new();
    ORDERS.get_or_init(|| {
        CURVES
            .iter()
            .map(|(p, h)| zeta(&hyper(&BaseField::prime(*p).unwrap(), h), DEFAULT_BUDGET).unwrap().jacobian_order)
            .collect()
    })[idx]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cantor_group_laws(idx in 0usize..3, seed in any::<u64>()) {
        let jac = jacobian(idx);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = jac.random_class(&mut rng).unwrap();
        let b = jac.random_class(&mut rng).unwrap();
        let c = jac.random_class(&mut rng).unwrap();
        jac.validate(&a).unwrap();
        prop_assert_eq!(jac.add(&jac.add(&a, &b).unwrap(), &c).unwrap(), jac.add(&a, &jac.add(&b, &c).unwrap()).unwrap());
        prop_assert_eq!(jac.add(&a, &b).unwrap(), jac.add(&b, &a).unwrap());
        prop_assert_eq!(jac.add(&a, &jac.identity()).unwrap(), a.clone());
        prop_assert!(jac.is_identity(&jac.add(&a, &jac.neg(&a)).unwrap()));
        let k = BigInt::from(seed % 1000);
        let m = BigInt::from(seed % 77);
        let lhs = jac.mul(&a, &(&k + &m)).unwrap();
        let rhs = jac.add(&jac.mul(&a, &k).unwrap(), &jac.mul(&a, &m).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn jacobian_order_kills_classes(idx in 0usize..3, seed in any::<u64>()) {
        let jac = jacobian(idx);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = jac.random_class(&mut rng).unwrap();
        prop_assert!(jac.is_identity(&jac.mul(&a, &BigInt::from(jacobian_order(idx))).unwrap()));
    }

    #[test]
    fn ramification_classes_are_two_torsion(p in prop::sample::select(vec![11u64, 13, 17, 19, 23, 29]), c0 in 1i64..10, c1 in 0i64..10) {
        let f = BaseField::prime(p).unwrap();
        let h = [c0, c1, 0, 0, 0, 1];
        let pr = weierstrass::algebra::PolyRing::new(f.clone());
        let hp = common::fpoly(&f, &h);
        prop_assume!(pr.gcd(&hp, &pr.derivative(&hp)).unwrap().degree() == Some(0));
        let jac = HyperellipticJacobian::new(&hyper(&f, &h)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for r in roots(&f, &hp, &mut rng).unwrap() {
            let d = jac.point_class(&r, &f.zero()).unwrap();
            prop_assert!(!jac.is_identity(&d));
            prop_assert!(jac.is_identity(&jac.double(&d).unwrap()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn weights_sum_to_g_g2_minus_1(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = BaseField::prime(1009).unwrap();
        let c = loop {
            let c = random_curve(&f, &mut rng);
            if c.genus() <= 4 {
                break c;
            }
        };
        let r = weierstrass_report(&c, Method::Both, 0).unwrap();
        prop_assert_eq!(r.total_weight, expected_total_weight(c.genus()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn principal_divisors_have_degree_zero(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = BaseField::prime(1009).unwrap();
        let c = loop {
            let c = random_curve(&f, &mut rng);
            if c.genus() <= 5 {
                break c;
            }
        };
        let g = c.genus() as i64;
        prop_assert_eq!(differential_basis(&c).unwrap().len() as i64, g);
        prop_assert_eq!(div_dx(&c).unwrap().degree(), 2 * g - 2);
        let a = FunctionFieldElement::random(&c, 3, 2, &mut rng).unwrap();
        let b = FunctionFieldElement::random(&c, 2, 2, &mut rng).unwrap();
        let da = divisor_of(&c, &a).unwrap();
        let db = divisor_of(&c, &b).unwrap();
        prop_assert_eq!(da.degree(), 0);
        // div(ab) = div(a) + div(b)
        let ab = a.mul(&c, &b).unwrap();
        prop_assert_eq!(divisor_of(&c, &ab).unwrap(), da.add(&db));
    }
}
