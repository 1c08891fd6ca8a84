//! A basis of holomorphic differentials.
//!
//! The basis consists of `x^a P_b(x) y^-b dx` for `1 <= b < n`, where
//! `P_b = prod_m q_m^floor(b m / n)` collects the branch loci. When all
//! branch multiplicities are below `n / b` (for instance hyperelliptic
//! curves with squarefree `h`) `P_b = 1` and the basis is monomial.

use crate::error::{Error, Result};

use super::model::SuperellipticCurve;

/// `x^a P_b(x) y^-b dx`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Differential {
    pub a: u32,
    pub b: u32,
}

/// Largest `a` for which `x^a P_b y^-b dx` is regular at infinity, if any.
/// The order there is `b mu - e (a + deg P_b) - e - 1`.
fn max_exponent(curve: &SuperellipticCurve, b: u32) -> Option<u32> {
    let e = curve.e_inf() as i64;
    let mu = curve.mu() as i64;
    let deg_p = curve.branch_multiplier(b).degree().unwrap() as i64;
    let top = (b as i64 * mu - 1).div_euclid(e) - 1 - deg_p;
    (top >= 0).then_some(top as u32)
}

/// Basis ordered by `(b, a)`; its length is the genus.
pub fn differential_basis(curve: &SuperellipticCurve) -> Result<Vec<Differential>> {
    let mut out = Vec::new();
    for b in 1..curve.n() {
        if let Some(top) = max_exponent(curve, b) {
            out.extend((0..=top).map(|a| Differential { a, b }));
        }
    }
    if out.len() != curve.genus() as usize {
        return Err(Error::CrossCheck(format!(
            "found {} holomorphic differentials, genus is {}",
            out.len(),
            curve.genus()
        )));
    }
    Ok(out)
}
