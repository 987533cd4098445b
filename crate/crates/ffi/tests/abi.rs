use std::ffi::{CStr, CString};
use std::ptr;
use std::sync::{Mutex, MutexGuard};

use jsharp_ffi::*;

// the order cap is process-wide
static CAP: Mutex<()> = Mutex::new(());

fn lock() -> MutexGuard<'static, ()> {
    CAP.lock().unwrap_or_else(|e| e.into_inner())
}

fn parse(expr: &str) -> *mut JsRing {
    let text = CString::new(expr).unwrap();
    let mut ring = ptr::null_mut();
    assert_eq!(unsafe { jsharp_ring_parse(text.as_ptr(), &mut ring) }, JsStatus::Ok);
    ring
}

fn last_error() -> String {
    let p = jsharp_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string();
    unsafe { jsharp_string_free(p) };
    s
}

#[test]
fn parse_query_and_free() {
    let _cap = lock();
    let ring = parse("Z4");
    unsafe {
        assert_eq!(jsharp_ring_order(ring), 4);
        let mut clean = false;
        assert_eq!(jsharp_ring_is_strongly_jsharp_clean(ring, &mut clean), JsStatus::Ok);
        assert!(clean);

        let mut buf = [0usize; 4];
        let mut len = 0;
        assert_eq!(jsharp_ring_structural_set(ring, JsSet::JSharp, buf.as_mut_ptr(), 4, &mut len), JsStatus::Ok);
        assert_eq!(&buf[..len], &[0, 2]);
        assert_eq!(jsharp_ring_structural_set(ring, JsSet::Units, buf.as_mut_ptr(), 1, &mut len), JsStatus::BufferTooSmall);
        assert_eq!(len, 2);
        assert_eq!(jsharp_ring_structural_set(ring, JsSet::Idempotents, ptr::null_mut(), 0, &mut len), JsStatus::BufferTooSmall);

        let kind = CString::new("strongly-jsharp-clean").unwrap();
        let mut holds = false;
        assert_eq!(jsharp_element_is_of_kind(ring, 3, kind.as_ptr(), &mut holds), JsStatus::Ok);
        assert!(holds);
        assert_eq!(jsharp_element_is_of_kind(ring, 4, kind.as_ptr(), &mut holds), JsStatus::OutOfRange);
        let bogus = CString::new("sparkly").unwrap();
        assert_eq!(jsharp_element_is_of_kind(ring, 0, bogus.as_ptr(), &mut holds), JsStatus::InvalidArgument);

        let mut json = ptr::null_mut();
        assert_eq!(jsharp_ring_classify_json(ring, &mut json), JsStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(v["strongly_jsharp_clean"], true);
        jsharp_ring_free(ring);
        jsharp_ring_free(ptr::null_mut());
    }
}

#[test]
fn negative_ring_and_set_sizes() {
    let _cap = lock();
    let ring = parse("M2(Z2)");
    unsafe {
        let mut clean = true;
        assert_eq!(jsharp_ring_is_strongly_jsharp_clean(ring, &mut clean), JsStatus::Ok);
        assert!(!clean);
        let mut buf = [0usize; 16];
        let mut len = 0;
        assert_eq!(jsharp_ring_structural_set(ring, JsSet::Units, buf.as_mut_ptr(), 16, &mut len), JsStatus::Ok);
        assert_eq!(len, 6);
        jsharp_ring_free(ring);
    }
}

#[test]
fn tables_are_validated() {
    let _cap = lock();
    let add: Vec<usize> = (0..3).flat_map(|a| (0..3).map(move |b| (a + b) % 3)).collect();
    let mut mul: Vec<usize> = (0..3).flat_map(|a| (0..3).map(move |b| (a * b) % 3)).collect();
    let mut ring = ptr::null_mut();
    unsafe {
        assert_eq!(jsharp_ring_from_tables(3, add.as_ptr(), mul.as_ptr(), 0, 1, &mut ring), JsStatus::Ok);
        assert_eq!(jsharp_ring_order(ring), 3);
        jsharp_ring_free(ring);

        mul[2 * 3 + 2] = 2;
        let mut bad = ptr::null_mut();
        assert_eq!(jsharp_ring_from_tables(3, add.as_ptr(), mul.as_ptr(), 0, 1, &mut bad), JsStatus::AxiomViolation);
        assert!(bad.is_null());
        assert!(!last_error().is_empty());
        assert_eq!(jsharp_ring_from_tables(3, add.as_ptr(), mul.as_ptr(), 0, 7, &mut bad), JsStatus::MalformedTable);
        assert_eq!(jsharp_ring_from_tables(0, add.as_ptr(), mul.as_ptr(), 0, 0, &mut bad), JsStatus::MalformedTable);
        assert_eq!(jsharp_ring_from_tables(3, ptr::null(), mul.as_ptr(), 0, 1, &mut bad), JsStatus::NullPointer);
    }
}

#[test]
fn errors_carry_messages() {
    let _cap = lock();
    let mut ring = ptr::null_mut();
    unsafe {
        let text = CString::new("GR(Z4,C2xC2").unwrap();
        assert_eq!(jsharp_ring_parse(text.as_ptr(), &mut ring), JsStatus::ParseError);
        assert!(last_error().contains("byte 11"));
        assert_eq!(jsharp_ring_parse(ptr::null(), &mut ring), JsStatus::NullPointer);
        let bytes = [0xffu8, 0];
        assert_eq!(jsharp_ring_parse(bytes.as_ptr().cast(), &mut ring), JsStatus::InvalidUtf8);
        assert_eq!(jsharp_ring_order(ptr::null()), 0);
        let mut clean = false;
        assert_eq!(jsharp_ring_is_strongly_jsharp_clean(ptr::null(), &mut clean), JsStatus::NullPointer);
    }
}

#[test]
fn run_check_reports_json() {
    let _cap = lock();
    let id = CString::new("CHK-theorem-j").unwrap();
    let expr = CString::new("Z4").unwrap();
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(jsharp_run_check(id.as_ptr(), expr.as_ptr(), &mut out), JsStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
        assert_eq!(v["status"], "pass");

        let corner = CString::new("CHK-corner-Jsharp").unwrap();
        let m2 = CString::new("M2(Z2)").unwrap();
        assert_eq!(jsharp_run_check(corner.as_ptr(), m2.as_ptr(), &mut out), JsStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
        assert_eq!(v["status"], "fail");
        assert!(v["witness"].is_object());

        let unknown = CString::new("CHK-none").unwrap();
        assert_eq!(jsharp_run_check(unknown.as_ptr(), expr.as_ptr(), &mut out), JsStatus::UnknownCheck);
    }
}

#[test]
fn order_cap_applies() {
    let _cap = lock();
    let text = CString::new("M2(Z2)").unwrap();
    let mut ring = ptr::null_mut();
    let add = [0usize; 16 * 16];
    unsafe {
        jsharp_set_order_cap(8);
        let parsed = jsharp_ring_parse(text.as_ptr(), &mut ring);
        let tables = jsharp_ring_from_tables(16, add.as_ptr(), add.as_ptr(), 0, 0, &mut ring);
        jsharp_set_order_cap(4096);
        assert_eq!(parsed, JsStatus::SizeExceeded);
        assert_eq!(tables, JsStatus::SizeExceeded);
        assert!(last_error().contains("order cap"));
    }
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/jsharp.h")).unwrap();
    for name in [
        "jsharp_ring_parse",
        "jsharp_ring_from_tables",
        "jsharp_ring_free",
        "jsharp_ring_structural_set",
        "jsharp_run_check",
        "JS_STATUS_BUFFER_TOO_SMALL",
        "typedef struct JsRing JsRing",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}
