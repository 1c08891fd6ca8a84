use crate::curve::{divisor_of, Divisor, FunctionFieldElement, TrigonalCurve};
use crate::error::Result;
use crate::algebra::Poly;
use crate::weierstrass::{vanishing_orders, wronskian_divisor, GapData};

use super::verdict::{Assertion, Verdict};

/// Checks on the trigonal curve that `P1 - P2` is a point of order exactly
/// 3 in the Jacobian, and that both `P1` and `P2` are Weierstrass points.
///
/// `f = (x - a1) / (x - a2)` has divisor `3 P1 - 3 P2`, so `3 [P1 - P2] = 0`;
/// a degree-1 principal divisor `P1 - P2` would force genus 0.
pub fn verify_trigonal_3torsion(tc: &TrigonalCurve, start_precision: usize) -> Result<Verdict> {
    let curve = &tc.curve;
    let field = curve.field();
    let (s, t) = (tc.params.s, tc.params.t);
    let g = curve.genus();
    let mut assertions = Vec::new();

    let expected_genus = s as i64 + t as i64 - 2;
    assertions.push(Assertion::new(
        "genus",
        g as i64 == expected_genus,
        format!("genus {g}, s + t - 2 = {expected_genus} (s = {s}, t = {t})"),
    ));

    let num = Poly::linear(field, &tc.params.alpha[0]);
    let den = Poly::linear(field, &tc.params.alpha[1]);
    let f = FunctionFieldElement::ratio(curve, num, den)?;
    let div = divisor_of(curve, &f)?;
    let target = Divisor::from_terms([(tc.p1.clone(), 3), (tc.p2.clone(), -3)]);
    assertions.push(Assertion::new("divisor", div == target, format!("div(f) = {div}")));

    assertions.push(Assertion::new(
        "P1 - P2 not principal",
        g >= 1,
        format!("genus {g} >= 1, so no function has a single simple pole"),
    ));

    let report = wronskian_divisor(curve)?;
    let mut data = vec![("div(f)".to_string(), div.to_string())];
    for (label, place) in [("P1", &tc.p1), ("P2", &tc.p2)] {
        let w = report.weight_at(place);
        let gd: GapData = vanishing_orders(curve, place, start_precision)?;
        assertions.push(Assertion::new(
            &format!("{label} is a Weierstrass point"),
            w >= 1 && gd.weight == w,
            format!("{place}: wronskian weight {w}, gap weight {}, gaps {:?}", gd.weight, gd.gaps),
        ));
        assertions.push(Assertion::new(
            &format!("3 is a non-gap at {label}"),
            !gd.gaps.contains(&3),
            format!("gaps {:?}", gd.gaps),
        ));
        data.push((format!("{label} gaps"), format!("{:?}", gd.gaps)));
        data.push((format!("{label} weight"), w.to_string()));
    }

    let order_three = assertions[1].pass && assertions[2].pass;
    assertions.push(Assertion::new(
        "order",
        order_three,
        "3 [P1 - P2] = 0 and [P1 - P2] != 0, so the order is exactly 3",
    ));
    data.push(("order".into(), if order_three { "3" } else { "unknown" }.into()));

    Ok(Verdict { proposition: "prop6", genus: g, field: field.clone(), assertions, data })
}
