//! C interface to the `weierstrass` crate.
//!
//! Curves and reports are opaque handles freed with their `*_free`
//! function. Every fallible call returns a [`WpStatus`]; on failure the
//! message is available from [`wp_last_error`] until the next call on the
//! same thread. Strings returned by the library are freed with
//! [`wp_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use weierstrass::algebra::BaseField;
use weierstrass::curve::{build_trigonal, SuperellipticCurve};
use weierstrass::io;
use weierstrass::jacobian::{verify_trigonal_3torsion, weierstrass_subgroup_2torsion, zeta};
use weierstrass::weierstrass::{weierstrass_report, Method, WeightReport};
use weierstrass::Error;

/// Status codes; the nonzero values match the command-line exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WpStatus {
    Ok = 0,
    VerdictFailed = 1,
    Parse = 2,
    CrossCheck = 3,
    Domain = 4,
    Budget = 5,
    NullPointer = 6,
    Panic = 7,
}

/// Method selector for [`wp_weierstrass_report`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WpMethod {
    Wronskian = 0,
    Local = 1,
    Both = 2,
}

/// Opaque curve handle.
pub struct WpCurve(SuperellipticCurve);

/// Opaque Weierstrass divisor handle.
pub struct WpReport(WeightReport);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> WpStatus {
    match e.exit_code() {
        2 => WpStatus::Parse,
        3 => WpStatus::CrossCheck,
        5 => WpStatus::Budget,
        _ => WpStatus::Domain,
    }
}

enum Fail {
    Null,
    Lib(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

impl From<weierstrass::algebra::AlgebraError> for Fail {
    fn from(e: weierstrass::algebra::AlgebraError) -> Self {
        Fail::Lib(e.into())
    }
}

fn guard(f: impl FnOnce() -> Result<WpStatus, Fail>) -> WpStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err(Fail::Null)) => {
            set_error("null pointer argument");
            WpStatus::NullPointer
        }
        Ok(Err(Fail::Lib(e))) => {
            set_error(&e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic");
            WpStatus::Panic
        }
    }
}

fn null() -> Fail {
    Fail::Null
}

fn field_for(prime: u64) -> Result<BaseField, Error> {
    if prime == 0 {
        Ok(BaseField::Rational)
    } else {
        Ok(BaseField::prime(prime)?)
    }
}

fn reduce(curve: &SuperellipticCurve, prime: u64) -> Result<SuperellipticCurve, Error> {
    if prime != 0 && curve.field().is_rational() {
        curve.reduce_mod(prime)
    } else {
        Ok(curve.clone())
    }
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<WpStatus, Fail> {
    let c = CString::new(s).map_err(|_| Error::Domain("interior NUL in output".into()))?;
    *out = c.into_raw();
    Ok(WpStatus::Ok)
}

/// Message for the last failed call on this thread; empty after success.
/// The pointer stays valid until the next library call on the thread.
#[no_mangle]
pub extern "C" fn wp_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses a curve file (JSON text).
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wp_curve_from_json(json: *const c_char, out: *mut *mut WpCurve) -> WpStatus {
    guard(|| {
        if json.is_null() || out.is_null() {
            return Err(null());
        }
        let text = CStr::from_ptr(json).to_str().map_err(|e| Error::Parse(e.to_string()))?;
        let curve = io::parse_curve(text)?;
        *out = Box::into_raw(Box::new(WpCurve(curve)));
        Ok(WpStatus::Ok)
    })
}

/// # Safety
/// `curve` must come from [`wp_curve_from_json`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn wp_curve_free(curve: *mut WpCurve) {
    if !curve.is_null() {
        drop(Box::from_raw(curve));
    }
}

/// # Safety
/// `curve` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wp_curve_genus(curve: *const WpCurve, out: *mut u32) -> WpStatus {
    guard(|| {
        let c = curve.as_ref().ok_or_else(null)?;
        *out.as_mut().ok_or_else(null)? = c.0.genus();
        Ok(WpStatus::Ok)
    })
}

/// Computes the Weierstrass divisor. `start_precision` 0 picks the default.
///
/// # Safety
/// `curve` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wp_weierstrass_report(
    curve: *const WpCurve,
    method: WpMethod,
    start_precision: usize,
    out: *mut *mut WpReport,
) -> WpStatus {
    guard(|| {
        let c = curve.as_ref().ok_or_else(null)?;
        if out.is_null() {
            return Err(null());
        }
        let m = match method {
            WpMethod::Wronskian => Method::Wronskian,
            WpMethod::Local => Method::Local,
            WpMethod::Both => Method::Both,
        };
        let r = weierstrass_report(&c.0, m, start_precision)?;
        *out = Box::into_raw(Box::new(WpReport(r)));
        Ok(WpStatus::Ok)
    })
}

/// # Safety
/// `report` must come from [`wp_weierstrass_report`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn wp_report_free(report: *mut WpReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Total weight and the number of places of positive weight.
///
/// # Safety
/// `report` must be a live handle; the out pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn wp_report_summary(
    report: *const WpReport,
    total_weight: *mut u64,
    expected_total: *mut u64,
    places: *mut usize,
) -> WpStatus {
    guard(|| {
        let r = report.as_ref().ok_or_else(null)?;
        *total_weight.as_mut().ok_or_else(null)? = r.0.total_weight;
        *expected_total.as_mut().ok_or_else(null)? = r.0.expected_total();
        *places.as_mut().ok_or_else(null)? = r.0.entries.len();
        Ok(WpStatus::Ok)
    })
}

/// The report as JSON.
///
/// # Safety
/// `report` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wp_report_json(report: *const WpReport, out: *mut *mut c_char) -> WpStatus {
    guard(|| {
        let r = report.as_ref().ok_or_else(null)?;
        if out.is_null() {
            return Err(null());
        }
        write_string(out, io::report_json(&r.0).to_string())
    })
}

/// 2-torsion check on a hyperelliptic curve; `prime` reduces a curve over Q
/// (0 keeps the curve's field). Returns `VerdictFailed` when an assertion
/// fails.
///
/// # Safety
/// `curve` must be a live handle; `subgroup_size` may be null.
#[no_mangle]
pub unsafe extern "C" fn wp_prop5(
    curve: *const WpCurve,
    prime: u64,
    seed: u64,
    budget: u64,
    subgroup_size: *mut u64,
) -> WpStatus {
    guard(|| {
        let c = curve.as_ref().ok_or_else(null)?;
        let outcome = weierstrass_subgroup_2torsion(&reduce(&c.0, prime)?, seed, budget)?;
        if let Some(s) = subgroup_size.as_mut() {
            *s = outcome.subgroup_size as u64;
        }
        Ok(if outcome.verdict.verdict() { WpStatus::Ok } else { WpStatus::VerdictFailed })
    })
}

/// 3-torsion check on the trigonal curve of genus `genus` over Q
/// (`prime` 0) or F_prime. `verdict_json` may be null.
///
/// # Safety
/// `verdict_json`, when not null, must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wp_prop6(genus: u32, prime: u64, verdict_json: *mut *mut c_char) -> WpStatus {
    guard(|| {
        let tc = build_trigonal(genus, &field_for(prime)?, None)?;
        let v = verify_trigonal_3torsion(&tc, 0)?;
        if !verdict_json.is_null() {
            write_string(verdict_json, io::verdict_json(&v).to_string())?;
        }
        Ok(if v.verdict() { WpStatus::Ok } else { WpStatus::VerdictFailed })
    })
}

/// Point counts and L-polynomial as JSON.
///
/// # Safety
/// `curve` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wp_zeta_json(curve: *const WpCurve, prime: u64, budget: u64, out: *mut *mut c_char) -> WpStatus {
    guard(|| {
        let c = curve.as_ref().ok_or_else(null)?;
        if out.is_null() {
            return Err(null());
        }
        let z = zeta(&reduce(&c.0, prime)?, budget)?;
        write_string(out, io::zeta_json(&z).to_string())
    })
}

/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn wp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
