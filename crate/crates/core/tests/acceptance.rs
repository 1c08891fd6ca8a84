//! Acceptance gate: one PASS/FAIL line per criterion. Every comparison is
//! exact (tolerance 0); there is no floating point anywhere.

mod common;

use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{hyper, qpoly, random_curve};
use weierstrass::algebra::field::is_prime_u64;
use weierstrass::algebra::{BaseField, Poly, Ring};
use weierstrass::curve::{
    build_trigonal, differential_basis, div_dx, divisor_of, places_over, FunctionFieldElement, Locus, Place,
    SuperellipticCurve,
};
use weierstrass::jacobian::{
    class_of_difference, lagrange_check, verify_trigonal_3torsion, weierstrass_subgroup_2torsion, zeta,
    HyperellipticJacobian, DEFAULT_BUDGET,
};
use weierstrass::weierstrass::{ell_ladder, vanishing_orders, weierstrass_report, Method};

type Outcome = Result<String, String>;

fn criterion_curves() -> Vec<(&'static str, SuperellipticCurve, u64)> {
    let q = BaseField::Rational;
    let mut out = vec![
        ("y^2 = x^5 + 1", SuperellipticCurve::new(q.clone(), 2, qpoly(&[1, 0, 0, 0, 0, 1])).unwrap(), 6),
        ("y^2 = x^7 + x + 1", SuperellipticCurve::new(q.clone(), 2, qpoly(&[1, 1, 0, 0, 0, 0, 0, 1])).unwrap(), 24),
    ];
    for (g, w, name) in [(3, 24, "trigonal g=3"), (4, 60, "trigonal g=4"), (5, 120, "trigonal g=5")] {
        out.push((name, build_trigonal(g, &q, None).unwrap().curve, w));
    }
    out
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn weight_sum() -> Outcome {
    let mut totals = Vec::new();
    for (name, c, expected) in criterion_curves() {
        let r = weierstrass_report(&c, Method::Both, 0).map_err(err)?;
        check(r.total_weight == expected, || format!("{name}: total {} != {expected}", r.total_weight))?;
        totals.push(r.total_weight.to_string());
    }
    Ok(format!("totals {} (exact)", totals.join(", ")))
}

fn cross_validation() -> Outcome {
    let mut places = 0;
    for (name, c, _) in criterion_curves() {
        let w = weierstrass_report(&c, Method::Wronskian, 0).map_err(err)?;
        let l = weierstrass_report(&c, Method::Local, 0).map_err(err)?;
        let wm: BTreeMap<&Place, u64> = w.entries.iter().map(|e| (&e.place, e.weight)).collect();
        let lm: BTreeMap<&Place, u64> = l.entries.iter().map(|e| (&e.place, e.weight)).collect();
        check(wm == lm, || format!("{name}: wronskian {wm:?} vs local {lm:?}"))?;
        places += wm.len();
    }
    Ok(format!("{places} places agree exactly"))
}

fn ramification_places(c: &SuperellipticCurve) -> Vec<Place> {
    let mut out: Vec<Place> = c
        .branch()
        .iter()
        .flat_map(|b| places_over(c, &Locus::Finite(b.q.clone())).unwrap())
        .collect();
    out.extend(places_over(c, &Locus::Infinity).unwrap());
    out
}

fn hyperelliptic_gaps() -> Outcome {
    let mut count = 0;
    for (name, c, _) in criterion_curves().into_iter().take(2) {
        let g = c.genus();
        let odd: Vec<u32> = (0..g).map(|i| 2 * i + 1).collect();
        let places = ramification_places(&c);
        let deg: usize = places.iter().map(|p| p.degree()).sum();
        check(deg == 2 * g as usize + 2, || format!("{name}: {deg} ramification points"))?;
        for p in places {
            let gd = vanishing_orders(&c, &p, 0).map_err(err)?;
            check(gd.gaps == odd, || format!("{name} at {p}: gaps {:?}", gd.gaps))?;
            check(gd.weight == (g * (g - 1) / 2) as u64, || format!("{name} at {p}: weight {}", gd.weight))?;
            let ladder = ell_ladder(&gd, g);
            check(ladder[g as usize] >= 2, || format!("{name} at {p}: l(gP) = {}", ladder[g as usize]))?;
            count += p.degree();
        }
    }
    Ok(format!("{count} ramification points with gaps 1,3,..,2g-1 and l(gP) >= 2"))
}

fn prop5() -> Outcome {
    let f = BaseField::prime(11).map_err(err)?;
    let c = hyper(&f, &[1, 0, 0, 0, 0, 1]);
    let out = weierstrass_subgroup_2torsion(&c, 0, DEFAULT_BUDGET).map_err(err)?;
    check(out.verdict.verdict(), || format!("{:?}", out.verdict.assertions))?;
    check(out.subgroup_size == 16, || format!("subgroup size {}", out.subgroup_size))?;
    let jac = HyperellipticJacobian::new(&c).map_err(err)?;
    let inf = places_over(&c, &Locus::Infinity).map_err(err)?.remove(0);
    let branch: Vec<Place> = ramification_places(&c).into_iter().filter(|p| p.degree() == 1 && !p.is_infinite()).collect();
    check(branch.len() == 5, || format!("{} rational branch points", branch.len()))?;
    for p in &branch {
        let d = class_of_difference(&jac, p, &inf).map_err(err)?;
        let ord = jac.order_up_to(&d, 16).map_err(err)?;
        check(ord == Some(2), || format!("[{p} - inf] has order {ord:?}"))?;
    }
    Ok("y^2 = x^5 + 1 over F_11: 16 elements, all 2-torsion, 5 generators of order exactly 2".into())
}

fn good_primes(g: u32, count: usize) -> Vec<u64> {
    (2 * g as u64 + 1..).filter(|&p| is_prime_u64(p) && p != 3).take(count).collect()
}

fn prop6() -> Outcome {
    let mut cases = 0;
    for g in 3..=8 {
        let mut fields = vec![BaseField::Rational];
        fields.extend(good_primes(g, 3).into_iter().map(|p| BaseField::prime(p).unwrap()));
        for f in fields {
            let tc = build_trigonal(g, &f, None).map_err(err)?;
            let v = verify_trigonal_3torsion(&tc, 0).map_err(err)?;
            check(v.verdict(), || format!("g={g} over {f}: {:?}", v.assertions))?;
            check(v.datum("order") == Some("3"), || format!("g={g} over {f}: order {:?}", v.datum("order")))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} cases (g = 3..8, over Q and 3 primes p > 2g each)"))
}

fn mechanism() -> Outcome {
    // genus 3 hyperelliptic: every Weierstrass difference is 2-torsion
    let f = BaseField::prime(13).map_err(err)?;
    let hyp = hyper(&f, &[0, -1, 0, 0, 0, 0, 0, 1]);
    let jac = HyperellipticJacobian::new(&hyp).map_err(err)?;
    let inf = places_over(&hyp, &Locus::Infinity).map_err(err)?.remove(0);
    let p = ramification_places(&hyp).into_iter().find(|p| p.degree() == 1 && !p.is_infinite()).unwrap();
    let order2 = jac.order_up_to(&class_of_difference(&jac, &p, &inf).map_err(err)?, 12).map_err(err)?;
    let sub = weierstrass_subgroup_2torsion(&hyp, 0, DEFAULT_BUDGET).map_err(err)?;
    // genus 3 trigonal: P1 - P2 has order 3
    let tc = build_trigonal(3, &BaseField::Rational, None).map_err(err)?;
    let v = verify_trigonal_3torsion(&tc, 0).map_err(err)?;
    let order3 = v.datum("order").and_then(|s| s.parse::<u64>().ok());
    check(
        hyp.genus() == 3 && tc.curve.genus() == 3 && order2 == Some(2) && sub.verdict.verdict() && order3 == Some(3),
        || format!("order-2 class {order2:?}, subgroup verdict {}, order-3 class {order3:?}", sub.verdict.verdict()),
    )?;
    Ok("genus 3: hyperelliptic difference of order 2 (subgroup killed by 2), trigonal difference of order 3".into())
}

fn zeta_sanity() -> Outcome {
    let mut parts = Vec::new();
    let curves = [(5, vec![0, 1, 0, 1]), (11, vec![1, 0, 0, 0, 0, 1]), (31, vec![1, 3, 0, 0, 0, 1])];
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for (p, h) in curves {
        let f = BaseField::prime(p).map_err(err)?;
        let c = hyper(&f, &h);
        let z = zeta(&c, DEFAULT_BUDGET).map_err(err)?;
        let g = c.genus() as usize;
        check(z.l_poly[0] == 1 && z.l_poly[2 * g] == (p as i128).pow(g as u32), || format!("F_{p}: {:?}", z.l_poly))?;
        for i in 0..=g {
            check(z.l_poly[2 * g - i] == (p as i128).pow((g - i) as u32) * z.l_poly[i], || format!("F_{p}: functional equation"))?;
        }
        for (k, &n) in z.counts.iter().enumerate() {
            let q = (p as i128).pow(k as u32 + 1);
            let dev = n as i128 - q - 1;
            check(dev * dev <= 4 * (g * g) as i128 * q, || format!("F_{p}: Weil bound at k={}", k + 1))?;
        }
        let jac = HyperellipticJacobian::new(&c).map_err(err)?;
        let classes: Vec<_> = (0..20).map(|_| jac.random_class(&mut rng)).collect::<Result<_, _>>().map_err(err)?;
        check(lagrange_check(&jac, &z, &classes).map_err(err)?, || format!("F_{p}: L(1) C != 0"))?;
        parts.push(format!("F_{p} g={g} L(1)={}", z.jacobian_order));
    }
    Ok(parts.join(", "))
}

/// Random element; over Q only `a(x) y^k / d(x)`, whose zeros and poles
/// are read off the x-line without splitting fibres over number fields.
fn random_function(c: &SuperellipticCurve, rng: &mut ChaCha8Rng) -> Result<FunctionFieldElement, String> {
    if !c.field().is_rational() {
        return FunctionFieldElement::random(c, 3, 2, rng).map_err(err);
    }
    let pr = c.poly_ring();
    let k = rng.gen_range(0..c.n() as usize);
    let a = loop {
        let a = pr.random(4, rng);
        if !a.is_zero() {
            break a;
        }
    };
    let mut num = vec![Poly::zero(); k];
    num.push(a);
    let d = pr.random(3, rng);
    let d = if d.is_zero() { pr.one() } else { d };
    FunctionFieldElement::new(c, num, d).map_err(err)
}

fn property_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let fields = [BaseField::Rational, BaseField::prime(101).unwrap(), BaseField::prime(1009).unwrap()];
    let mut functions = 0;
    for i in 0..10 {
        let c = random_curve(&fields[i % 3], &mut rng);
        let g = c.genus() as i64;
        check(differential_basis(&c).map_err(err)?.len() as i64 == g, || format!("basis size on {}", c.h()))?;
        let dx = div_dx(&c).map_err(err)?;
        check(dx.degree() == 2 * g - 2, || format!("deg div dx = {} on genus {g}", dx.degree()))?;
        for _ in 0..10 {
            let f = random_function(&c, &mut rng)?;
            let d = divisor_of(&c, &f).map_err(|e| format!("{e} for {f:?} on y^{} = {}", c.n(), c.h()))?;
            check(d.degree() == 0, || format!("deg div f = {}", d.degree()))?;
            functions += 1;
        }
    }
    let f = BaseField::prime(31).unwrap();
    let jac = HyperellipticJacobian::new(&hyper(&f, &[1, 3, 0, 2, 0, 1])).map_err(err)?;
    for _ in 0..500 {
        let a = jac.random_class(&mut rng).map_err(err)?;
        let b = jac.random_class(&mut rng).map_err(err)?;
        let c = jac.random_class(&mut rng).map_err(err)?;
        let ab_c = jac.add(&jac.add(&a, &b).map_err(err)?, &c).map_err(err)?;
        let a_bc = jac.add(&a, &jac.add(&b, &c).map_err(err)?).map_err(err)?;
        check(ab_c == a_bc, || "associativity".into())?;
        check(jac.add(&a, &b).map_err(err)? == jac.add(&b, &a).map_err(err)?, || "commutativity".into())?;
        check(jac.add(&a, &jac.identity()).map_err(err)? == a, || "identity".into())?;
        check(jac.is_identity(&jac.add(&a, &jac.neg(&a)).map_err(err)?), || "inverse".into())?;
    }
    Ok(format!("{functions} principal divisors of degree 0 on 10 curves, 500 Cantor triples"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("weight-sum identity", weight_sum),
        ("wronskian vs vanishing-order weights", cross_validation),
        ("hyperelliptic gap sequences", hyperelliptic_gaps),
        ("2-torsion subgroup of order 16", prop5),
        ("trigonal 3-torsion, g = 3..8", prop6),
        ("order 2 versus order 3 in genus 3", mechanism),
        ("zeta sanity and Lagrange", zeta_sanity),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {} {name}: {detail} [tolerance exact, {secs:.2}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why} [tolerance exact, {secs:.2}s]", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
