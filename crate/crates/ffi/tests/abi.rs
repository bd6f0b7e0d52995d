use std::ffi::{c_char, CStr, CString};
use std::ptr;

use rookrep_ffi::*;
use serde_json::Value;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { rookrep_string_free(s) };
    text
}

fn last_error() -> String {
    let p = rookrep_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn enumerate_counts() {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { rookrep_enumerate(2, 1, &mut out) }, RookrepStatus::Ok);
    let v: Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(v["count"], 7);
    assert!(rookrep_last_error().is_null());
}

#[test]
fn irrep_handle_lifecycle() {
    let lambda = CString::new("[[1],[]]").unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { rookrep_irrep_new(lambda.as_ptr(), 2, &mut h) }, RookrepStatus::Ok);
    let mut dim = 0usize;
    assert_eq!(unsafe { rookrep_irrep_dim(h, &mut dim) }, RookrepStatus::Ok);
    assert_eq!(dim, 2);

    let mut out = ptr::null_mut();
    assert_eq!(unsafe { rookrep_irrep_json(h, &mut out) }, RookrepStatus::Ok);
    let v: Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(v["basis"].as_array().unwrap().len(), 2);

    assert_eq!(unsafe { rookrep_irrep_jm_spectrum(h, &mut out) }, RookrepStatus::Ok);
    let v: Value = serde_json::from_str(&take(out)).unwrap();
    assert!(v.is_object());
    unsafe { rookrep_irrep_free(h) };
}

#[test]
fn error_codes() {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { rookrep_enumerate(9, 1, &mut out) }, RookrepStatus::TooLarge);
    assert!(last_error().contains("exceeds"));
    assert_eq!(unsafe { rookrep_enumerate(2, 0, &mut out) }, RookrepStatus::InvalidArgument);
    assert_eq!(unsafe { rookrep_enumerate(2, 1, ptr::null_mut()) }, RookrepStatus::NullPointer);

    let bad = CString::new("[[1],").unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { rookrep_irrep_new(bad.as_ptr(), 2, &mut h) }, RookrepStatus::Parse);
    assert!(h.is_null());
    assert_eq!(unsafe { rookrep_irrep_new(ptr::null(), 2, &mut h) }, RookrepStatus::NullPointer);

    let mut dim = 0usize;
    assert_eq!(unsafe { rookrep_irrep_dim(ptr::null(), &mut dim) }, RookrepStatus::NullPointer);

    let word = CString::new("e0").unwrap();
    let start = CString::new("[]:0").unwrap();
    assert_eq!(
        unsafe { rookrep_groth_apply(4, word.as_ptr(), start.as_ptr(), &mut out) },
        RookrepStatus::InvalidArgument
    );
    assert!(last_error().contains("prime"));

    // A successful call clears the previous message.
    assert_eq!(unsafe { rookrep_enumerate(1, 1, &mut out) }, RookrepStatus::Ok);
    take(out);
    assert!(rookrep_last_error().is_null());
}

#[test]
fn bratteli_formats() {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { rookrep_bratteli(2, 2, RookrepFormat::Dot, &mut out) }, RookrepStatus::Ok);
    assert!(take(out).starts_with("graph bratteli"));
    assert_eq!(unsafe { rookrep_bratteli(2, 2, RookrepFormat::Json, &mut out) }, RookrepStatus::Ok);
    let v: Value = serde_json::from_str(&take(out)).unwrap();
    assert!(v.is_object());
}

#[test]
fn groth_word() {
    let word = CString::new("f1 f0").unwrap();
    let start = CString::new("[]:0").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { rookrep_groth_apply(3, word.as_ptr(), start.as_ptr(), &mut out) },
        RookrepStatus::Ok
    );
    let v: Value = serde_json::from_str(&take(out)).unwrap();
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 1);
    assert_eq!(terms[0]["lambda"], serde_json::json!([2]));
}

#[test]
fn lr_coefficient_value() {
    let s = |t: &str| CString::new(t).unwrap();
    let (l, m, n) = (s("[3,2,1]"), s("[2,1]"), s("[2,1]"));
    let mut c = 0u64;
    assert_eq!(
        unsafe { rookrep_lr_coefficient(l.as_ptr(), m.as_ptr(), n.as_ptr(), &mut c) },
        RookrepStatus::Ok
    );
    assert_eq!(c, 2);
}

#[test]
fn verify_reports() {
    let suite = CString::new("jm").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { rookrep_verify(suite.as_ptr(), 2, 1, 0, 0, &mut out) },
        RookrepStatus::Ok
    );
    let v: Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(v["passed"], true);

    let unknown = CString::new("nonsense").unwrap();
    assert_ne!(
        unsafe { rookrep_verify(unknown.as_ptr(), 0, 0, 0, 0, &mut out) },
        RookrepStatus::Ok
    );
}

#[test]
fn header_declares_every_export() {
    let header = include_str!("../include/rookrep.h");
    for name in [
        "rookrep_last_error",
        "rookrep_string_free",
        "rookrep_enumerate",
        "rookrep_irrep_new",
        "rookrep_irrep_free",
        "rookrep_irrep_dim",
        "rookrep_irrep_json",
        "rookrep_irrep_jm_spectrum",
        "rookrep_bratteli",
        "rookrep_groth_apply",
        "rookrep_lr_coefficient",
        "rookrep_verify",
        "typedef struct RookrepIrrep RookrepIrrep",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}
