use std::ffi::{CStr, CString};
use std::ptr;

use skewbrace_ffi::*;

fn build(json: &str) -> (BraceStatus, *mut BraceHandle) {
    let c = CString::new(json).unwrap();
    let mut h = ptr::null_mut();
    let s = unsafe { brace_from_json(c.as_ptr(), 7, &mut h) };
    (s, h)
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(brace_last_error_message()) }
        .to_string_lossy()
        .into_owned()
}

fn take(s: *mut std::ffi::c_char) -> serde_json::Value {
    let v = serde_json::from_str(unsafe { CStr::from_ptr(s) }.to_str().unwrap()).unwrap();
    unsafe { brace_string_free(s) };
    v
}

#[test]
fn pq_brace_round_trip() {
    let (s, h) = build(r#"{"kind":"pq","p":3,"q":2,"k":2,"variant":"i"}"#);
    assert_eq!(s, BraceStatus::Ok);
    unsafe {
        let mut n = 0;
        assert_eq!(brace_order(h, &mut n), BraceStatus::Ok);
        assert_eq!(n, 6);
        let mut v = 0;
        assert_eq!(brace_star(h, 3, 1, &mut v), BraceStatus::Ok);
        assert_eq!(v, 1);
        assert_eq!(brace_dot(h, 1, 2, &mut v), BraceStatus::Ok);
        assert_eq!(v, 0);
        assert_eq!(brace_circ(h, 3, 1, &mut v), BraceStatus::Ok);
        assert_eq!(v, 5);
        assert_eq!(brace_dot(h, 6, 0, &mut v), BraceStatus::OutOfRange);

        let mut p = BraceProfile::default();
        assert_eq!(brace_profile(h, &mut p), BraceStatus::Ok);
        assert_eq!(
            p,
            BraceProfile {
                left: -1,
                right: 2,
                socle: 2,
                annihilator: -1,
                add_group: 1,
                mult_group: -1,
            }
        );

        let kind = CString::new("right").unwrap();
        let mut out = ptr::null_mut();
        assert_eq!(brace_series_json(h, kind.as_ptr(), &mut out), BraceStatus::Ok);
        assert_eq!(take(out)["orders"], serde_json::json!([6, 3, 1]));

        let kind = CString::new("sideways").unwrap();
        assert_eq!(brace_series_json(h, kind.as_ptr(), &mut out), BraceStatus::Parse);
        assert!(last_error().contains("sideways"));

        assert_eq!(brace_analyze_json(h, 1, &mut out), BraceStatus::Ok);
        assert_eq!(take(out)["profile"]["right"], 2);
        brace_free(h);
    }
}

#[test]
fn formula_brace_handles() {
    let (s, h) = build(r#"{"kind":"counterexample_F","p":5}"#);
    assert_eq!(s, BraceStatus::Ok);
    let mut n = 0;
    assert_eq!(unsafe { brace_order(h, &mut n) }, BraceStatus::Ok);
    assert_eq!(n, 390_625);
    let kind = CString::new("gamma_prime").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { brace_series_json(h, kind.as_ptr(), &mut out) },
        BraceStatus::Validation
    );
    unsafe { brace_free(h) };
}

#[test]
fn error_codes() {
    assert_eq!(build("{").0, BraceStatus::Parse);
    assert!(!last_error().is_empty());
    let (s, h) = build(r#"{"kind":"tables","dot":[[0,1],[1,1]],"circ":[[0,1],[1,0]]}"#);
    assert_eq!(s, BraceStatus::Validation);
    assert!(h.is_null());
    assert_eq!(build(r#"{"kind":"counterexample_F","p":3}"#).0, BraceStatus::Validation);

    let mut h = ptr::null_mut();
    assert_eq!(
        unsafe { brace_from_json(ptr::null(), 0, &mut h) },
        BraceStatus::NullPointer
    );
    let mut n = 0;
    assert_eq!(unsafe { brace_order(ptr::null(), &mut n) }, BraceStatus::NullPointer);
    let (_, h) = build(r#"{"kind":"trivial","group":"C2"}"#);
    assert_eq!(unsafe { brace_order(h, ptr::null_mut()) }, BraceStatus::NullPointer);
    unsafe {
        brace_free(h);
        brace_free(ptr::null_mut());
        brace_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/skewbrace.h")).unwrap();
    for name in [
        "brace_from_json",
        "brace_free",
        "brace_order",
        "brace_dot",
        "brace_circ",
        "brace_star",
        "brace_profile",
        "brace_analyze_json",
        "brace_series_json",
        "brace_string_free",
        "brace_last_error_message",
        "BRACE_STATUS_OK",
        "BraceProfile",
    ] {
        assert!(header.contains(name), "{name}");
    }
}
