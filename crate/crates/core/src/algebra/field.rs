//! Base fields: the rationals, prime fields and their finite extensions.
//!
//! Values are tagged so that mixing domains is detected at runtime; the
//! [`BaseField`] descriptor implements [`Ring`] over [`FieldValue`].

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, RngCore};

use super::poly::Poly;
use super::ring::{AlgebraError, Ring};

/// `F_p[z] / (modulus)` with a monic irreducible modulus of degree `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtensionField {
    p: u64,
    /// Constant term first, monic, length `k + 1`.
    modulus: Vec<u64>,
}

impl ExtensionField {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldValue {
    Rational(BigRational),
    Prime { residue: u64, p: u64 },
    Extension { coeffs: Vec<u64>, field: Arc<ExtensionField> },
}

impl FieldValue {
    pub fn rational(n: i64, d: i64) -> FieldValue {
        FieldValue::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    fn domain_name(&self) -> String {
        match self {
            FieldValue::Rational(_) => "Q".to_string(),
            FieldValue::Prime { p, .. } => format!("F_{p}"),
            FieldValue::Extension { field, .. } => format!("F_{}^{}", field.p, field.degree()),
        }
    }

    fn mismatch(&self, other: &FieldValue) -> AlgebraError {
        AlgebraError::DomainMismatch(self.domain_name(), other.domain_name())
    }

    fn same_domain(&self, other: &FieldValue) -> bool {
        match (self, other) {
            (FieldValue::Rational(_), FieldValue::Rational(_)) => true,
            (FieldValue::Prime { p: a, .. }, FieldValue::Prime { p: b, .. }) => a == b,
            (FieldValue::Extension { field: a, .. }, FieldValue::Extension { field: b, .. }) => {
                Arc::ptr_eq(a, b) || a == b
            }
            _ => false,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldValue::Rational(r) => r.is_zero(),
            FieldValue::Prime { residue, .. } => *residue == 0,
            FieldValue::Extension { coeffs, .. } => coeffs.iter().all(|&c| c == 0),
        }
    }

    pub fn checked_add(&self, other: &FieldValue) -> Result<FieldValue, AlgebraError> {
        if !self.same_domain(other) {
            return Err(self.mismatch(other));
        }
        Ok(match (self, other) {
            (FieldValue::Rational(a), FieldValue::Rational(b)) => FieldValue::Rational(a + b),
            (FieldValue::Prime { residue: a, p }, FieldValue::Prime { residue: b, .. }) => {
                FieldValue::Prime { residue: add_mod(*a, *b, *p), p: *p }
            }
            (
                FieldValue::Extension { coeffs: a, field },
                FieldValue::Extension { coeffs: b, .. },
            ) => FieldValue::Extension {
                coeffs: a.iter().zip(b).map(|(&x, &y)| add_mod(x, y, field.p)).collect(),
                field: field.clone(),
            },
            _ => unreachable!(),
        })
    }

    pub fn checked_neg(&self) -> FieldValue {
        match self {
            FieldValue::Rational(a) => FieldValue::Rational(-a),
            FieldValue::Prime { residue, p } => FieldValue::Prime { residue: neg_mod(*residue, *p), p: *p },
            FieldValue::Extension { coeffs, field } => FieldValue::Extension {
                coeffs: coeffs.iter().map(|&c| neg_mod(c, field.p)).collect(),
                field: field.clone(),
            },
        }
    }

    pub fn checked_sub(&self, other: &FieldValue) -> Result<FieldValue, AlgebraError> {
        self.checked_add(&other.checked_neg())
    }

    pub fn checked_mul(&self, other: &FieldValue) -> Result<FieldValue, AlgebraError> {
        if !self.same_domain(other) {
            return Err(self.mismatch(other));
        }
        Ok(match (self, other) {
            (FieldValue::Rational(a), FieldValue::Rational(b)) => FieldValue::Rational(a * b),
            (FieldValue::Prime { residue: a, p }, FieldValue::Prime { residue: b, .. }) => {
                FieldValue::Prime { residue: mul_mod(*a, *b, *p), p: *p }
            }
            (
                FieldValue::Extension { coeffs: a, field },
                FieldValue::Extension { coeffs: b, .. },
            ) => FieldValue::Extension { coeffs: ext_mul(a, b, field), field: field.clone() },
            _ => unreachable!(),
        })
    }

    pub fn checked_inv(&self) -> Result<FieldValue, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(match self {
            FieldValue::Rational(a) => FieldValue::Rational(a.recip()),
            FieldValue::Prime { residue, p } => FieldValue::Prime { residue: inv_mod(*residue, *p), p: *p },
            FieldValue::Extension { coeffs, field } => {
                FieldValue::Extension { coeffs: ext_inv(coeffs, field), field: field.clone() }
            }
        })
    }

    pub fn checked_div(&self, other: &FieldValue) -> Result<FieldValue, AlgebraError> {
        if !self.same_domain(other) {
            return Err(self.mismatch(other));
        }
        self.checked_mul(&other.checked_inv()?)
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldValue::Rational(r) => Some(r),
            _ => None,
        }
    }
}

impl PartialOrd for FieldValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical total order used for deterministic output; it has no algebraic
/// meaning on finite fields.
impl Ord for FieldValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (FieldValue::Rational(a), FieldValue::Rational(b)) => a.cmp(b),
            (FieldValue::Prime { residue: a, p: pa }, FieldValue::Prime { residue: b, p: pb }) => {
                (pa, a).cmp(&(pb, b))
            }
            (
                FieldValue::Extension { coeffs: a, field: fa },
                FieldValue::Extension { coeffs: b, field: fb },
            ) => fa.cmp(fb).then_with(|| a.iter().rev().cmp(b.iter().rev())),
            _ => rank(self).cmp(&rank(other)),
        }
    }
}

fn rank(v: &FieldValue) -> u8 {
    match v {
        FieldValue::Rational(_) => 0,
        FieldValue::Prime { .. } => 1,
        FieldValue::Extension { .. } => 2,
    }
}

impl fmt::Display for FieldValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldValue::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            FieldValue::Prime { residue, .. } => write!(f, "{residue}"),
            FieldValue::Extension { coeffs, .. } => {
                let parts: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
                write!(f, "[{}]", parts.join(","))
            }
        }
    }
}

/// Descriptor of a base field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BaseField {
    Rational,
    Prime(u64),
    Extension(Arc<ExtensionField>),
}

impl BaseField {
    pub fn prime(p: u64) -> Result<BaseField, AlgebraError> {
        if !is_prime_u64(p) || p >= 1 << 62 {
            return Err(AlgebraError::NotAField(format!("{p} is not a supported prime")));
        }
        Ok(BaseField::Prime(p))
    }

    /// Extension of `F_p` defined by an explicit modulus (constant term first).
    pub fn extension_with_modulus(p: u64, modulus: Vec<u64>) -> Result<BaseField, AlgebraError> {
        let fp = BaseField::prime(p)?;
        let poly = super::poly::Poly::from_coeffs(
            &fp,
            modulus.iter().map(|&c| fp.from_u64(c)).collect(),
        );
        let k = poly.degree().ok_or(AlgebraError::ZeroPolynomial)?;
        if k == 0 || !fp.is_one(poly.lead().unwrap()) {
            return Err(AlgebraError::NotAField("extension modulus must be monic of degree >= 1".into()));
        }
        if !super::factor::is_irreducible(&fp, &poly) {
            return Err(AlgebraError::NotAField("extension modulus is reducible".into()));
        }
        if k == 1 {
            return Ok(fp);
        }
        let modulus = poly.coeffs().iter().map(|c| c.residue().unwrap()).collect();
        Ok(BaseField::Extension(Arc::new(ExtensionField { p, modulus })))
    }

    /// `F_{p^k}` with a modulus found by seeded random search.
    pub fn extension(p: u64, k: usize, rng: &mut dyn RngCore) -> Result<BaseField, AlgebraError> {
        let fp = BaseField::prime(p)?;
        if k == 1 {
            return Ok(fp);
        }
        let m = super::factor::random_irreducible(&fp, k, rng);
        let modulus = m.coeffs().iter().map(|c| c.residue().unwrap()).collect();
        Ok(BaseField::Extension(Arc::new(ExtensionField { p, modulus })))
    }

    pub fn prime_subfield(&self) -> BaseField {
        match self {
            BaseField::Extension(e) => BaseField::Prime(e.p),
            other => other.clone(),
        }
    }

    /// Degree over the prime field.
    pub fn degree(&self) -> usize {
        match self {
            BaseField::Extension(e) => e.degree(),
            _ => 1,
        }
    }

    pub fn from_u64(&self, n: u64) -> FieldValue {
        match self {
            BaseField::Rational => FieldValue::Rational(BigRational::from_integer(BigInt::from(n))),
            BaseField::Prime(p) => FieldValue::Prime { residue: n % p, p: *p },
            BaseField::Extension(e) => {
                let mut coeffs = vec![0; e.degree()];
                coeffs[0] = n % e.p;
                FieldValue::Extension { coeffs, field: e.clone() }
            }
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldValue {
        match self {
            BaseField::Rational => FieldValue::Rational(BigRational::from_integer(n.clone())),
            _ => {
                let p = BigInt::from(self.characteristic());
                let r = n.mod_floor(&p).to_u64().unwrap();
                self.from_u64(r)
            }
        }
    }

    pub fn from_rational(&self, r: &BigRational) -> Result<FieldValue, AlgebraError> {
        match self {
            BaseField::Rational => Ok(FieldValue::Rational(r.clone())),
            _ => {
                let num = self.from_bigint(r.numer());
                let den = self.from_bigint(r.denom());
                num.checked_div(&den)
            }
        }
    }

    /// Extension element from coefficients in the prime field (constant first).
    pub fn from_coeff_list(&self, coeffs: &[u64]) -> Result<FieldValue, AlgebraError> {
        match self {
            BaseField::Extension(e) => {
                if coeffs.len() > e.degree() {
                    return Err(AlgebraError::Parse(format!(
                        "extension element has {} coefficients, field degree is {}",
                        coeffs.len(),
                        e.degree()
                    )));
                }
                let mut c: Vec<u64> = coeffs.iter().map(|&x| x % e.p).collect();
                c.resize(e.degree(), 0);
                Ok(FieldValue::Extension { coeffs: c, field: e.clone() })
            }
            _ if coeffs.len() <= 1 => Ok(self.from_u64(coeffs.first().copied().unwrap_or(0))),
            _ => Err(AlgebraError::Parse("coefficient list given for a non-extension field".into())),
        }
    }

    /// The class of `z` in `F_p[z]/(modulus)`.
    pub fn generator(&self) -> Option<FieldValue> {
        match self {
            BaseField::Extension(e) => {
                let mut c = vec![0; e.degree()];
                c[1 % e.degree()] = 1;
                Some(FieldValue::Extension { coeffs: c, field: e.clone() })
            }
            _ => None,
        }
    }

    /// Maps a value of the prime subfield (or the field itself) into this field.
    pub fn embed(&self, v: &FieldValue) -> Result<FieldValue, AlgebraError> {
        match (self, v) {
            (BaseField::Rational, FieldValue::Rational(_)) => Ok(v.clone()),
            (BaseField::Prime(p), FieldValue::Prime { p: q, .. }) if p == q => Ok(v.clone()),
            (BaseField::Extension(e), FieldValue::Prime { residue, p }) if *p == e.p => {
                Ok(self.from_u64(*residue))
            }
            (BaseField::Extension(e), FieldValue::Extension { field, .. }) if **field == **e => Ok(v.clone()),
            _ => Err(AlgebraError::DomainMismatch(self.to_string(), v.domain_name())),
        }
    }

    pub fn contains(&self, v: &FieldValue) -> bool {
        match (self, v) {
            (BaseField::Rational, FieldValue::Rational(_)) => true,
            (BaseField::Prime(p), FieldValue::Prime { p: q, .. }) => p == q,
            (BaseField::Extension(e), FieldValue::Extension { field, .. }) => **field == **e,
            _ => false,
        }
    }

    /// Enumerates all elements of a finite field in a fixed order.
    pub fn elements(&self) -> Option<Box<dyn Iterator<Item = FieldValue> + '_>> {
        match self {
            BaseField::Rational => None,
            BaseField::Prime(p) => {
                let p = *p;
                Some(Box::new((0..p).map(move |r| FieldValue::Prime { residue: r, p })))
            }
            BaseField::Extension(e) => {
                let total = (e.p as u128).checked_pow(e.degree() as u32)?;
                let e = e.clone();
                Some(Box::new((0..total).map(move |mut idx| {
                    let mut coeffs = Vec::with_capacity(e.degree());
                    for _ in 0..e.degree() {
                        coeffs.push((idx % e.p as u128) as u64);
                        idx /= e.p as u128;
                    }
                    FieldValue::Extension { coeffs, field: e.clone() }
                })))
            }
        }
    }

    /// Quadratic character: 1 for nonzero squares, -1 for non-squares, 0 for 0.
    pub fn legendre(&self, a: &FieldValue) -> Result<i32, AlgebraError> {
        let q = self.order().ok_or_else(|| AlgebraError::Unsupported("quadratic character over Q".into()))?;
        if a.is_zero() {
            return Ok(0);
        }
        let e = (q - 1u32) / 2u32;
        let r = self.pow_big(a, &e);
        Ok(if self.is_one(&r) { 1 } else { -1 })
    }

    /// Parses a coefficient given as text: `a/b` or an integer.
    pub fn parse_value(&self, s: &str) -> Result<FieldValue, AlgebraError> {
        let s = s.trim();
        let bad = || AlgebraError::Parse(format!("cannot parse field value {s:?}"));
        if let Some((n, d)) = s.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(AlgebraError::DivisionByZero);
            }
            self.from_rational(&BigRational::new(n, d))
        } else {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(self.from_bigint(&n))
        }
    }
}

impl fmt::Display for BaseField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseField::Rational => write!(f, "Q"),
            BaseField::Prime(p) => write!(f, "F_{p}"),
            BaseField::Extension(e) => write!(f, "F_{}^{}", e.p, e.degree()),
        }
    }
}

impl FieldValue {
    pub fn residue(&self) -> Option<u64> {
        match self {
            FieldValue::Prime { residue, .. } => Some(*residue),
            _ => None,
        }
    }
}

impl Ring for BaseField {
    type Elem = FieldValue;

    fn fast_poly_gcd(&self, a: &Poly<FieldValue>, b: &Poly<FieldValue>) -> Option<Result<Poly<FieldValue>, AlgebraError>> {
        self.is_rational().then(|| super::rational::rational_gcd(a, b))
    }

    fn fast_poly_div_exact(&self, a: &Poly<FieldValue>, b: &Poly<FieldValue>) -> Option<Result<Poly<FieldValue>, AlgebraError>> {
        self.is_rational().then(|| super::rational::rational_div_exact(a, b))
    }

    fn zero(&self) -> FieldValue {
        self.from_u64(0)
    }

    fn one(&self) -> FieldValue {
        self.from_u64(1)
    }

    fn from_int(&self, n: i64) -> FieldValue {
        self.from_bigint(&BigInt::from(n))
    }

    fn add(&self, a: &FieldValue, b: &FieldValue) -> FieldValue {
        a.checked_add(b).expect("field domain mismatch")
    }

    fn sub(&self, a: &FieldValue, b: &FieldValue) -> FieldValue {
        a.checked_sub(b).expect("field domain mismatch")
    }

    fn mul(&self, a: &FieldValue, b: &FieldValue) -> FieldValue {
        a.checked_mul(b).expect("field domain mismatch")
    }

    fn neg(&self, a: &FieldValue) -> FieldValue {
        a.checked_neg()
    }

    fn is_zero(&self, a: &FieldValue) -> bool {
        a.is_zero()
    }

    fn inv(&self, a: &FieldValue) -> Result<FieldValue, AlgebraError> {
        a.checked_inv()
    }

    fn characteristic(&self) -> u64 {
        match self {
            BaseField::Rational => 0,
            BaseField::Prime(p) => *p,
            BaseField::Extension(e) => e.p,
        }
    }

    fn order(&self) -> Option<BigUint> {
        match self {
            BaseField::Rational => None,
            BaseField::Prime(p) => Some(BigUint::from(*p)),
            BaseField::Extension(e) => Some(BigUint::from(e.p).pow(e.degree() as u32)),
        }
    }

    fn random_element(&self, rng: &mut dyn RngCore) -> FieldValue {
        match self {
            BaseField::Rational => self.from_int(rng.gen_range(-9..=9)),
            BaseField::Prime(p) => FieldValue::Prime { residue: rng.gen_range(0..*p), p: *p },
            BaseField::Extension(e) => FieldValue::Extension {
                coeffs: (0..e.degree()).map(|_| rng.gen_range(0..e.p)).collect(),
                field: e.clone(),
            },
        }
    }

    fn nth_root_elem(&self, a: &FieldValue, n: u32) -> Option<FieldValue> {
        if a.is_zero() {
            return Some(a.clone());
        }
        if self.is_one(a) {
            return Some(self.one());
        }
        match (self, a) {
            (BaseField::Rational, FieldValue::Rational(r)) => {
                exact_rational_root(r, n).map(FieldValue::Rational)
            }
            _ => super::factor::nth_roots(self, a, n).into_iter().next(),
        }
    }
}

/// Exact `n`-th root of a rational number, when it is rational.
pub fn exact_rational_root(r: &BigRational, n: u32) -> Option<BigRational> {
    if n == 0 {
        return None;
    }
    if r.is_negative() && n.is_multiple_of(2) {
        return None;
    }
    let root_int = |x: &BigInt| -> Option<BigInt> {
        let s = x.abs().nth_root(n);
        if s.pow(n) == x.abs() {
            Some(if x.is_negative() { -s } else { s })
        } else {
            None
        }
    };
    let num = root_int(r.numer())?;
    let den = root_int(r.denom())?;
    Some(BigRational::new(num, den))
}

pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

pub(crate) fn neg_mod(a: u64, p: u64) -> u64 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    let (g, x, _) = egcd(a as i128, p as i128);
    debug_assert_eq!(g, 1);
    x.rem_euclid(p as i128) as u64
}

fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    (old_r, old_s, old_t)
}

fn ext_mul(a: &[u64], b: &[u64], field: &ExtensionField) -> Vec<u64> {
    let p = field.p;
    let k = field.degree();
    let mut prod = vec![0u128; 2 * k - 1];
    let pp = p as u128;
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u128 * y as u128) % pp;
        }
    }
    let mut prod: Vec<u64> = prod.into_iter().map(|c| c as u64).collect();
    for top in (k..prod.len()).rev() {
        let c = prod[top];
        if c == 0 {
            continue;
        }
        prod[top] = 0;
        for (i, &m) in field.modulus[..k].iter().enumerate() {
            let idx = top - k + i;
            prod[idx] = add_mod(prod[idx], mul_mod(neg_mod(c, p), m, p), p);
        }
    }
    prod.truncate(k);
    prod
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// `(q, r)` with `a = q b + r` over `F_p`; `b` must be nonzero and trimmed.
fn fp_divmod(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return (vec![], r);
    }
    let inv_lead = inv_mod(*b.last().unwrap(), p);
    let mut q = vec![0u64; r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = mul_mod(*r.last().unwrap(), inv_lead, p);
        q[shift] = c;
        for (i, &bc) in b.iter().enumerate() {
            r[shift + i] = add_mod(r[shift + i], mul_mod(neg_mod(c, p), bc, p), p);
        }
        trim(&mut r);
    }
    (q, r)
}

fn fp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = add_mod(out[i + j], mul_mod(x, y, p), p);
        }
    }
    trim(&mut out);
    out
}

fn fp_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out: Vec<u64> = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            add_mod(x, neg_mod(y, p), p)
        })
        .collect();
    trim(&mut out);
    out
}

fn ext_inv(a: &[u64], field: &ExtensionField) -> Vec<u64> {
    let p = field.p;
    let mut r0 = field.modulus.clone();
    let mut r1 = a.to_vec();
    trim(&mut r1);
    let (mut s0, mut s1): (Vec<u64>, Vec<u64>) = (vec![], vec![1]);
    while !r1.is_empty() {
        let (q, r) = fp_divmod(&r0, &r1, p);
        let s2 = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
    // r0 is a nonzero constant because the modulus is irreducible
    let c = inv_mod(r0[0], p);
    let mut out: Vec<u64> = s0.iter().map(|&x| mul_mod(x, c, p)).collect();
    out.resize(field.degree(), 0);
    out
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(small) {
            return n == small;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

impl BaseField {
    /// Integer value of a prime-field element as a representative in `[0, p)`.
    pub fn rational_value(&self, v: &FieldValue) -> Option<BigRational> {
        match v {
            FieldValue::Rational(r) => Some(r.clone()),
            FieldValue::Prime { residue, .. } => Some(BigRational::from_integer(BigInt::from(*residue))),
            FieldValue::Extension { .. } => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, BaseField::Rational)
    }
}
