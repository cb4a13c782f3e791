use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

use changhee_ffi::*;

fn take(out: *mut c_char) -> String {
    assert!(!out.is_null());
    let s = unsafe { CStr::from_ptr(out) }.to_str().unwrap().to_string();
    unsafe { ch_string_free(out) };
    s
}

fn call(f: impl FnOnce(*mut *mut c_char) -> ChStatus) -> Result<String, (ChStatus, String)> {
    let mut out = ptr::null_mut();
    match f(&mut out) {
        ChStatus::Ok => Ok(take(out)),
        status => {
            assert!(out.is_null());
            let msg = unsafe { CStr::from_ptr(ch_last_error()) }.to_str().unwrap().to_string();
            Err((status, msg))
        }
    }
}

fn spec(json: &str) -> *mut ChSpec {
    let json = CString::new(json).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { ch_spec_from_json(json.as_ptr(), &mut out) }, ChStatus::Ok);
    out
}

#[test]
fn spec_handles() {
    let alpha = [CString::new("1/2").unwrap(), CString::new("-2").unwrap()];
    let ptrs: Vec<_> = alpha.iter().map(|a| a.as_ptr()).collect();
    let r = [2u32, 1];
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { ch_spec_new(ptrs.as_ptr(), r.as_ptr(), 2, &mut s) }, ChStatus::Ok);
    assert_eq!(unsafe { ch_spec_len(s) }, 2);
    assert_eq!(unsafe { ch_spec_total_degree(s) }, 3);
    // (x - 1/2)^2 (x + 2): leading coefficient 1, constant 1/2
    assert_eq!(call(|o| unsafe { ch_comtet_first(s, 3, o) }).unwrap(), "1");
    assert_eq!(call(|o| unsafe { ch_comtet_first(s, 0, o) }).unwrap(), "1/2");
    assert_eq!(call(|o| unsafe { ch_comtet_first(s, 9, o) }).unwrap(), "0");
    unsafe { ch_spec_free(s) };

    let mut empty = ptr::null_mut();
    assert_eq!(unsafe { ch_spec_new(ptr::null(), ptr::null(), 0, &mut empty) }, ChStatus::Ok);
    assert_eq!(call(|o| unsafe { ch_mp_first(empty, 3, ptr::null(), o) }).unwrap(), "1");
    unsafe { ch_spec_free(empty) };
    unsafe { ch_spec_free(ptr::null_mut()) };
}

#[test]
fn family_values() {
    let s = spec(r#"{"alpha": ["0"], "r": [1]}"#);
    let half = CString::new("1/2").unwrap();
    let two = CString::new("2").unwrap();
    assert_eq!(call(|o| unsafe { ch_mp_first(s, 1, ptr::null(), o) }).unwrap(), "-1/2");
    assert_eq!(call(|o| unsafe { ch_mp_first(s, 1, half.as_ptr(), o) }).unwrap(), "-1/4");
    assert_eq!(call(|o| unsafe { ch_mp_second(s, 1, two.as_ptr(), o) }).unwrap(), "1");
    assert_eq!(call(|o| unsafe { ch_mp_second_lah(s, 1, o) }).unwrap(), "1/2");
    assert_eq!(call(|o| unsafe { ch_generalized_changhee(s, o) }).unwrap(), "-1/2");
    let ones = [CString::new("1").unwrap(), CString::new("1").unwrap()];
    let bounds: Vec<_> = ones.iter().map(|b| b.as_ptr()).collect();
    assert_eq!(call(|o| unsafe { ch_poly_cauchy_first(s, 2, bounds.as_ptr(), 2, o) }).unwrap(), "1/4");
    unsafe { ch_spec_free(s) };

    let s = spec(r#"{"alpha": ["0", "1"], "r": [1, 1]}"#);
    assert_eq!(call(|o| unsafe { ch_poly_cauchy_second(s, 1, bounds.as_ptr(), 1, o) }).unwrap(), "5/6");
    unsafe { ch_spec_free(s) };

    assert_eq!(call(|o| unsafe { ch_changhee_number(2, o) }).unwrap(), "1/2");
    assert_eq!(call(|o| unsafe { ch_changhee_order_k(2, 2, ptr::null(), o) }).unwrap(), "3/2");
    assert_eq!(call(|o| unsafe { ch_euler_order_k(3, 1, ptr::null(), o) }).unwrap(), "1/4");
    assert_eq!(call(|o| unsafe { ch_triangle(CH_TRIANGLE_STIRLING_FIRST, 3, 2, o) }).unwrap(), "-3");
    assert_eq!(call(|o| unsafe { ch_triangle(CH_TRIANGLE_STIRLING_FIRST_UNSIGNED, 3, 2, o) }).unwrap(), "3");
    assert_eq!(call(|o| unsafe { ch_triangle(CH_TRIANGLE_STIRLING_SECOND, 4, 2, o) }).unwrap(), "7");
    assert_eq!(call(|o| unsafe { ch_triangle(CH_TRIANGLE_LAH, 3, 1, o) }).unwrap(), "6");
}

#[test]
fn error_codes() {
    let s = spec(r#"{"alpha": ["0", "0"], "r": [2, 1]}"#);
    let bad = CString::new("1/0").unwrap();
    let (st, msg) = call(|o| unsafe { ch_mp_first(s, 1, bad.as_ptr(), o) }).unwrap_err();
    assert_eq!(st, ChStatus::InvalidParams);
    assert!(msg.contains("malformed rational"));
    let (st, _) = call(|o| unsafe { ch_mp_first(s, 0, ptr::null(), o) }).unwrap_err();
    assert_eq!(st, ChStatus::InvalidArgument);
    let (st, _) = call(|o| unsafe { ch_generalized_changhee(s, o) }).unwrap_err();
    assert_eq!(st, ChStatus::InvalidArgument);
    let (st, _) = call(|o| unsafe { ch_poly_cauchy_first(s, 2, ptr::null(), 0, o) }).unwrap_err();
    assert_eq!(st, ChStatus::InvalidArgument);
    let (st, _) = call(|o| unsafe { ch_mp_first(ptr::null(), 1, ptr::null(), o) }).unwrap_err();
    assert_eq!(st, ChStatus::NullPointer);
    let (st, _) = call(|o| unsafe { ch_triangle(9, 1, 1, o) }).unwrap_err();
    assert_eq!(st, ChStatus::UnknownName);
    assert_eq!(unsafe { ch_mp_first(s, 1, ptr::null(), ptr::null_mut()) }, ChStatus::NullPointer);
    unsafe { ch_spec_free(s) };

    let cases = [
        (r#"{"alpha": ["0"], "r": [1, 1]}"#, "lengths differ"),
        (r#"{"alpha": ["1"], "r": [0]}"#, "r entries must be >= 1"),
        (r#"{"alpha": ["x"], "r": [1]}"#, "malformed rational"),
    ];
    for (json, needle) in cases {
        let json = CString::new(json).unwrap();
        let mut out = ptr::null_mut();
        assert_eq!(unsafe { ch_spec_from_json(json.as_ptr(), &mut out) }, ChStatus::InvalidParams);
        assert!(out.is_null());
        let msg = unsafe { CStr::from_ptr(ch_last_error()) }.to_str().unwrap();
        assert!(msg.contains(needle), "{msg}");
    }

    let bytes = [0xffu8, 0];
    let mut out = ptr::null_mut();
    let st = unsafe { ch_spec_from_json(bytes.as_ptr() as *const c_char, &mut out) };
    assert_eq!(st, ChStatus::InvalidUtf8);

    assert_eq!(call(|o| unsafe { ch_changhee_number(1, o) }).unwrap(), "-1/2");
    assert!(ch_last_error().is_null());
}

#[test]
fn suite_reports() {
    let name = CString::new("theorem-2-2-as-printed").unwrap();
    let mut report = ptr::null_mut();
    assert_eq!(unsafe { ch_run_suite(name.as_ptr(), &mut report) }, ChStatus::Ok);
    assert_eq!(unsafe { ch_report_all_as_expected(report) }, 1);
    assert!(unsafe { ch_report_check_count(report) } >= 1);
    let json = call(|o| unsafe { ch_report_json(report, o) }).unwrap();
    let direct = changhee::verify::run_suite("theorem-2-2-as-printed").unwrap().to_json();
    assert_eq!(json, direct);
    unsafe { ch_report_free(report) };

    let bogus = CString::new("bogus").unwrap();
    let mut report = ptr::null_mut();
    assert_eq!(unsafe { ch_run_suite(bogus.as_ptr(), &mut report) }, ChStatus::UnknownName);
    assert!(report.is_null());
    assert_eq!(unsafe { ch_report_all_as_expected(ptr::null()) }, -1);
}
