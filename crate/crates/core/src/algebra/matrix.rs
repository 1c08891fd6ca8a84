//! Dense matrices: fraction-free determinants over polynomial rings and
//! row reduction over residue algebras.

use super::poly::{Poly, PolyRing};
use super::ring::{AlgebraError, Ring};

/// Determinant over `R[x]` by Bareiss elimination. Every intermediate
/// division is exact, so `R` must be a field for the divisions to exist.
pub fn det_poly<R: Ring>(pr: &PolyRing<R>, m: &[Vec<Poly<R::Elem>>]) -> Result<Poly<R::Elem>, AlgebraError> {
    let n = m.len();
    if n == 0 {
        return Ok(pr.constant(pr.base.one()));
    }
    let mut a: Vec<Vec<Poly<R::Elem>>> = m.to_vec();
    let mut sign_negative = false;
    let mut prev = pr.constant(pr.base.one());
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign_negative = !sign_negative;
                }
                None => return Ok(Poly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = pr.sub(&pr.mul(&a[i][j], &a[k][k]), &pr.mul(&a[i][k], &a[k][j]));
                a[i][j] = pr.div_exact(&num, &prev)?;
            }
            a[i][k] = Poly::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if sign_negative { pr.neg(&d) } else { d })
}

/// Column indices where successive pivots occur when the rows are reduced
/// left to right. Pivots must be units; over a residue algebra a non-unit
/// nonzero pivot surfaces as [`AlgebraError::ZeroDivisor`].
///
/// Stops once every row has a pivot. The returned list is shorter than the
/// row count when the columns run out first.
pub fn pivot_columns<R: Ring>(ring: &R, rows: &[Vec<R::Elem>]) -> Result<Vec<usize>, AlgebraError> {
    let mut a: Vec<Vec<R::Elem>> = rows.to_vec();
    let width = a.iter().map(|r| r.len()).max().unwrap_or(0);
    for row in a.iter_mut() {
        row.resize(width, ring.zero());
    }
    let mut pivots = Vec::new();
    let mut free: Vec<usize> = (0..a.len()).collect();
    for col in 0..width {
        if free.is_empty() {
            break;
        }
        let Some(pos) = free.iter().position(|&i| !ring.is_zero(&a[i][col])) else {
            continue;
        };
        let pr = free.remove(pos);
        // fraction-free: rows are rescaled by the (unit) pivot instead of
        // dividing by it, which is far cheaper than inversion in number fields
        let piv = a[pr][col].clone();
        ring.check_unit(&piv)?;
        for &i in &free {
            let f = a[i][col].clone();
            if ring.is_zero(&f) {
                continue;
            }
            a[i][col] = ring.zero();
            for j in col + 1..width {
                a[i][j] = ring.sub(&ring.mul(&piv, &a[i][j]), &ring.mul(&f, &a[pr][j]));
            }
        }
        pivots.push(col);
    }
    Ok(pivots)
}

/// Determinant over a field by Gaussian elimination.
pub fn det_field<R: Ring>(ring: &R, m: &[Vec<R::Elem>]) -> Result<R::Elem, AlgebraError> {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = ring.one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !ring.is_zero(&a[i][k])) else {
            return Ok(ring.zero());
        };
        if p != k {
            a.swap(p, k);
            det = ring.neg(&det);
        }
        det = ring.mul(&det, &a[k][k]);
        let inv = ring.inv(&a[k][k])?;
        for i in k + 1..n {
            let f = ring.mul(&a[i][k], &inv);
            if ring.is_zero(&f) {
                continue;
            }
            for j in k..n {
                a[i][j] = ring.sub(&a[i][j], &ring.mul(&f, &a[k][j]));
            }
        }
    }
    Ok(det)
}
