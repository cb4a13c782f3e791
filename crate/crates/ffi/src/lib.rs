//! C ABI over the `changhee` crate.
//!
//! Parameter specs and suite reports are opaque handles. Every entry point
//! returns a [`ChStatus`]; on failure a message is available from
//! [`ch_last_error`] on the same thread. Rational values cross the boundary
//! as NUL-terminated `"p/q"` strings and are released with
//! [`ch_string_free`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use libc::c_char;

use changhee::euler_changhee::{changhee_number, changhee_order_k_gf, euler_order_k};
use changhee::multiparam::{
    generalized_changhee, mp_first_poly, mp_second_lah_path, mp_second_poly, poly_cauchy_first,
    poly_cauchy_second,
};
use changhee::rational::{self, parse_rational};
use changhee::triangles::{comtet_first, lah, stirling_first, stirling_first_unsigned, stirling_second};
use changhee::verify::{run_suite, IdentityReport};
use changhee::{Error, ParameterSpec, Rational};

/// Result of every call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidParams = 3,
    InvalidArgument = 4,
    UnknownName = 5,
    Internal = 6,
    Panic = 7,
}

pub const CH_TRIANGLE_STIRLING_FIRST: u32 = 0;
pub const CH_TRIANGLE_STIRLING_FIRST_UNSIGNED: u32 = 1;
pub const CH_TRIANGLE_STIRLING_SECOND: u32 = 2;
pub const CH_TRIANGLE_LAH: u32 = 3;

/// Opaque `(alpha, r)` parameter spec.
pub struct ChSpec(ParameterSpec);

/// Opaque identity-suite report.
pub struct ChReport(IdentityReport);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(err: &Error) -> ChStatus {
    match err {
        Error::MalformedRational(_)
        | Error::LengthMismatch { .. }
        | Error::NonPositiveMultiplicity { .. }
        | Error::Params(_)
        | Error::Json(_) => ChStatus::InvalidParams,
        Error::ZeroOrder | Error::ArityMismatch { .. } | Error::NotSimple { .. } => ChStatus::InvalidArgument,
        Error::UnknownSuite { .. } | Error::UnknownFamily { .. } | Error::UnknownCase(_) => ChStatus::UnknownName,
        _ => ChStatus::Internal,
    }
}

struct Failure(ChStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> ChStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            ChStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            ChStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(ChStatus::NullPointer, format!("{what} is null"))
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(ChStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn rational_arg(p: *const c_char, what: &str) -> Result<Rational, Failure> {
    Ok(parse_rational(str_arg(p, what)?)?)
}

/// A null `x` means the numbers, i.e. `x = 1`.
unsafe fn optional_x(x: *const c_char) -> Result<Rational, Failure> {
    if x.is_null() {
        Ok(rational::int(1))
    } else {
        rational_arg(x, "x")
    }
}

unsafe fn spec_arg<'a>(spec: *const ChSpec) -> Result<&'a ParameterSpec, Failure> {
    spec.as_ref().map(|s| &s.0).ok_or_else(|| null("spec"))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    let c = CString::new(s).map_err(|e| Failure(ChStatus::Internal, e.to_string()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn write_rational(out: *mut *mut c_char, q: &Rational) -> Result<(), Failure> {
    write_string(out, rational::render(q))
}

fn order(k: u32) -> Result<u32, Failure> {
    if k == 0 {
        return Err(Error::ZeroOrder.into());
    }
    Ok(k)
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn ch_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ch_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a spec from `len` rational strings and multiplicities.
///
/// # Safety
/// `alpha` and `r` must point to `len` readable elements (or be null when
/// `len` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ch_spec_new(
    alpha: *const *const c_char,
    r: *const u32,
    len: usize,
    out: *mut *mut ChSpec,
) -> ChStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        if len > 0 && (alpha.is_null() || r.is_null()) {
            return Err(null("alpha or r"));
        }
        let mut alphas = Vec::with_capacity(len);
        let mut rs = Vec::with_capacity(len);
        for i in 0..len {
            alphas.push(rational_arg(*alpha.add(i), "alpha entry")?);
            let ri = *r.add(i);
            if ri == 0 {
                return Err(Error::NonPositiveMultiplicity { index: i, value: 0 }.into());
            }
            rs.push(ri);
        }
        let spec = ParameterSpec::new(alphas, rs)?;
        *out = Box::into_raw(Box::new(ChSpec(spec)));
        Ok(())
    })
}

/// Parses the `{"alpha": [...], "r": [...]}` parameter format.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ch_spec_from_json(json: *const c_char, out: *mut *mut ChSpec) -> ChStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let spec = ParameterSpec::from_json(str_arg(json, "json")?)?;
        *out = Box::into_raw(Box::new(ChSpec(spec)));
        Ok(())
    })
}

/// # Safety
/// `spec` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ch_spec_free(spec: *mut ChSpec) {
    if !spec.is_null() {
        drop(Box::from_raw(spec));
    }
}

/// Number of factors `n`; 0 for a null handle.
///
/// # Safety
/// `spec` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ch_spec_len(spec: *const ChSpec) -> usize {
    spec.as_ref().map_or(0, |s| s.0.len())
}

/// Total degree `|r|`; 0 for a null handle.
///
/// # Safety
/// `spec` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ch_spec_total_degree(spec: *const ChSpec) -> usize {
    spec.as_ref().map_or(0, |s| s.0.total_degree())
}

/// Coefficient `s_alpha(n, m; r)`; zero beyond the total degree.
///
/// # Safety
/// `spec` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ch_comtet_first(spec: *const ChSpec, m: usize, out: *mut *mut c_char) -> ChStatus {
    guard(|| {
        let coeffs = comtet_first(spec_arg(spec)?);
        let v = coeffs.get(m).cloned().unwrap_or_else(|| rational::int(0));
        write_rational(out, &v)
    })
}

/// First-kind multiparameter value at order `k`; `x` null gives the number.
///
/// # Safety
/// `spec` must be a live handle, `x` null or NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ch_mp_first(
    spec: *const ChSpec,
    k: u32,
    x: *const c_char,
    out: *mut *mut c_char,
) -> ChStatus {
    guard(|| {
        let v = mp_first_poly(spec_arg(spec)?, order(k)?, &optional_x(x)?);
        write_rational(out, &v)
    })
}

/// Second-kind multiparameter value at order `k`; `x` null gives the number.
///
/// # Safety
/// As for [`ch_mp_first`].
#[no_mangle]
pub unsafe extern "C" fn ch_mp_second(
    spec: *const ChSpec,
    k: u32,
    x: *const c_char,
    out: *mut *mut c_char,
) -> ChStatus {
    guard(|| {
        let v = mp_second_poly(spec_arg(spec)?, order(k)?, &optional_x(x)?);
        write_rational(out, &v)
    })
}

/// Second-kind number through the Lah expansion of `(-y)_m`.
///
/// # Safety
/// `spec` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ch_mp_second_lah(spec: *const ChSpec, k: u32, out: *mut *mut c_char) -> ChStatus {
    guard(|| {
        let v = mp_second_lah_path(spec_arg(spec)?, order(k)?).lah;
        write_rational(out, &v)
    })
}

/// Order-one value for a spec with every multiplicity 1.
///
/// # Safety
/// `spec` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ch_generalized_changhee(spec: *const ChSpec, out: *mut *mut c_char) -> ChStatus {
    guard(|| {
        let v = generalized_changhee(spec_arg(spec)?)?;
        write_rational(out, &v)
    })
}

unsafe fn bounds_arg(bounds: *const *const c_char, n: usize) -> Result<Vec<Rational>, Failure> {
    if n > 0 && bounds.is_null() {
        return Err(null("bounds"));
    }
    (0..n).map(|i| rational_arg(*bounds.add(i), "bound")).collect()
}

/// First-kind poly-Cauchy value over the box `[0, l_1] x ... x [0, l_k]`;
/// `n_bounds` must equal `k`.
///
/// # Safety
/// `bounds` must point to `n_bounds` NUL-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn ch_poly_cauchy_first(
    spec: *const ChSpec,
    k: u32,
    bounds: *const *const c_char,
    n_bounds: usize,
    out: *mut *mut c_char,
) -> ChStatus {
    guard(|| {
        let v = poly_cauchy_first(spec_arg(spec)?, order(k)?, &bounds_arg(bounds, n_bounds)?)?;
        write_rational(out, &v)
    })
}

/// Second-kind counterpart of [`ch_poly_cauchy_first`].
///
/// # Safety
/// As for [`ch_poly_cauchy_first`].
#[no_mangle]
pub unsafe extern "C" fn ch_poly_cauchy_second(
    spec: *const ChSpec,
    k: u32,
    bounds: *const *const c_char,
    n_bounds: usize,
    out: *mut *mut c_char,
) -> ChStatus {
    guard(|| {
        let v = poly_cauchy_second(spec_arg(spec)?, order(k)?, &bounds_arg(bounds, n_bounds)?)?;
        write_rational(out, &v)
    })
}

/// `Ch_n = (-1)^n n!/2^n`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ch_changhee_number(n: usize, out: *mut *mut c_char) -> ChStatus {
    guard(|| write_rational(out, &changhee_number(n)))
}

/// Order-`k` Changhee polynomial `Ch_n^(k)(x)`; `x` null means 0.
///
/// # Safety
/// `x` null or NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ch_changhee_order_k(n: usize, k: u32, x: *const c_char, out: *mut *mut c_char) -> ChStatus {
    guard(|| {
        let x = if x.is_null() { rational::int(0) } else { rational_arg(x, "x")? };
        write_rational(out, &changhee_order_k_gf(n, order(k)?, &x))
    })
}

/// Order-`k` Euler polynomial `E_n^(k)(x)`; `x` null means 0.
///
/// # Safety
/// `x` null or NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ch_euler_order_k(n: usize, k: u32, x: *const c_char, out: *mut *mut c_char) -> ChStatus {
    guard(|| {
        let x = if x.is_null() { rational::int(0) } else { rational_arg(x, "x")? };
        write_rational(out, &euler_order_k(n, order(k)?, &x))
    })
}

/// Triangle entry `(n, k)` of kind `CH_TRIANGLE_*`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ch_triangle(kind: u32, n: usize, k: usize, out: *mut *mut c_char) -> ChStatus {
    guard(|| {
        let v = match kind {
            CH_TRIANGLE_STIRLING_FIRST => stirling_first(n, k),
            CH_TRIANGLE_STIRLING_FIRST_UNSIGNED => stirling_first_unsigned(n, k),
            CH_TRIANGLE_STIRLING_SECOND => stirling_second(n, k),
            CH_TRIANGLE_LAH => lah(n, k),
            other => return Err(Failure(ChStatus::UnknownName, format!("unknown triangle kind {other}"))),
        };
        write_rational(out, &v)
    })
}

/// Runs an identity suite by name.
///
/// # Safety
/// `name` must be NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ch_run_suite(name: *const c_char, out: *mut *mut ChReport) -> ChStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let report = run_suite(str_arg(name, "name")?)?;
        *out = Box::into_raw(Box::new(ChReport(report)));
        Ok(())
    })
}

/// The report as JSON, byte-identical to the CLI output.
///
/// # Safety
/// `report` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ch_report_json(report: *const ChReport, out: *mut *mut c_char) -> ChStatus {
    guard(|| {
        let report = report.as_ref().ok_or_else(|| null("report"))?;
        write_string(out, report.0.to_json())
    })
}

/// 1 if every check produced its expected verdict, 0 if not, -1 for a null
/// handle.
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ch_report_all_as_expected(report: *const ChReport) -> i32 {
    match report.as_ref() {
        Some(r) => i32::from(r.0.all_as_expected()),
        None => -1,
    }
}

/// Number of checks in the report; 0 for a null handle.
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ch_report_check_count(report: *const ChReport) -> usize {
    report.as_ref().map_or(0, |r| r.0.checks.len())
}

/// # Safety
/// `report` must be null or a handle from [`ch_run_suite`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ch_report_free(report: *mut ChReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}
