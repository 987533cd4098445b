//! C ABI over the `jsharp` core.
//!
//! Rings are opaque handles created by `jsharp_ring_parse` or
//! `jsharp_ring_from_tables` and released with `jsharp_ring_free`. Every
//! fallible call returns a [`JsStatus`]; the message of the last failure on
//! the calling thread is available from `jsharp_last_error_message`. Strings
//! returned through out-parameters are owned by the caller and released with
//! `jsharp_string_free`. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use jsharp::classify::{is_element_of_kind, is_ring_of_kind, ring_class_report, Kind};
use jsharp::dsl::build_ring;
use jsharp::harness::{run_check, Subject};
use jsharp::{sets, Error, FiniteRing};

#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum JsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    AxiomViolation = 4,
    MalformedTable = 5,
    SizeExceeded = 6,
    OutOfRange = 7,
    BufferTooSmall = 8,
    UnknownCheck = 9,
    InvalidArgument = 10,
    Panic = 11,
}

/// Which structural set to copy out.
#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum JsSet {
    Units = 0,
    Idempotents = 1,
    Nilpotents = 2,
    Jacobson = 3,
    JSharp = 4,
    QuasiNilpotents = 5,
    DeltaNilpotents = 6,
}

/// Opaque ring handle.
pub struct JsRing {
    ring: FiniteRing,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(CString::new(msg).expect("nul bytes removed")));
}

fn status_of(e: &Error) -> JsStatus {
    match e {
        Error::Parse(_) | Error::UnknownGroup(_) => JsStatus::ParseError,
        Error::AxiomViolation { .. } | Error::GroupAxiomViolation { .. } => JsStatus::AxiomViolation,
        Error::MalformedTable(_) | Error::IndexOutOfRange { .. } => JsStatus::MalformedTable,
        Error::SizeExceeded { .. } => JsStatus::SizeExceeded,
        Error::ElementOutOfRange { .. } => JsStatus::OutOfRange,
        Error::UnknownCheck(_) => JsStatus::UnknownCheck,
        _ => JsStatus::InvalidArgument,
    }
}

/// Run `f`, turning errors and panics into a status plus a thread-local message.
fn guard(f: impl FnOnce() -> Result<(), (JsStatus, String)>) -> JsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => JsStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            set_error(format!("internal panic: {msg}"));
            JsStatus::Panic
        }
    }
}

fn core_err(e: Error) -> (JsStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (JsStatus, String) {
    (JsStatus::NullPointer, format!("{what} is null"))
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, (JsStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| (JsStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn ring_arg<'a>(p: *const JsRing) -> Result<&'a FiniteRing, (JsStatus, String)> {
    p.as_ref().map(|h| &h.ring).ok_or_else(|| null("ring"))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("nul bytes removed").into_raw()
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn jsharp_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Set the largest order any construction may produce.
#[no_mangle]
pub extern "C" fn jsharp_set_order_cap(cap: usize) {
    jsharp::set_order_cap(cap);
}

/// Build a ring from a construction expression such as `"K(Z4,2)"`.
///
/// # Safety
/// `expr` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn jsharp_ring_parse(expr: *const c_char, out: *mut *mut JsRing) -> JsStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let text = str_arg(expr, "expr")?;
        let ring = build_ring(text).map_err(core_err)?;
        *out = Box::into_raw(Box::new(JsRing { ring }));
        Ok(())
    })
}

/// Build and validate a ring from row-major `order × order` tables.
///
/// # Safety
/// `add` and `mul` must each point to `order * order` readable values and
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn jsharp_ring_from_tables(
    order: usize,
    add: *const usize,
    mul: *const usize,
    zero: usize,
    one: usize,
    out: *mut *mut JsRing,
) -> JsStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        if add.is_null() || mul.is_null() {
            return Err(null("table"));
        }
        if order == 0 {
            return Err((JsStatus::MalformedTable, "order must be positive".into()));
        }
        let cells = order
            .checked_mul(order)
            .ok_or_else(|| (JsStatus::SizeExceeded, format!("order {order} overflows")))?;
        jsharp::ring::check_size(order as u128).map_err(core_err)?;
        let rows = |p: *const usize| -> Vec<Vec<usize>> {
            std::slice::from_raw_parts(p, cells).chunks(order).map(<[usize]>::to_vec).collect()
        };
        let ring = jsharp::make_ring(&rows(add), &rows(mul), zero, one, "ffi").map_err(core_err)?;
        *out = Box::into_raw(Box::new(JsRing { ring }));
        Ok(())
    })
}

/// Release a handle. Null is ignored.
///
/// # Safety
/// `ring` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn jsharp_ring_free(ring: *mut JsRing) {
    if !ring.is_null() {
        drop(Box::from_raw(ring));
    }
}

/// Number of elements, or 0 for a null handle.
///
/// # Safety
/// `ring` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn jsharp_ring_order(ring: *const JsRing) -> usize {
    ring.as_ref().map_or(0, |h| h.ring.order())
}

/// Copy a structural set as ascending indices. `*len` receives the set size
/// even when `capacity` is too small (then `BufferTooSmall` is returned and
/// nothing is written). `buf` may be null when `capacity` is 0.
///
/// # Safety
/// `buf` must have room for `capacity` values; `len` must be valid.
#[no_mangle]
pub unsafe extern "C" fn jsharp_ring_structural_set(
    ring: *const JsRing,
    which: JsSet,
    buf: *mut usize,
    capacity: usize,
    len: *mut usize,
) -> JsStatus {
    guard(|| {
        let r = ring_arg(ring)?;
        if len.is_null() {
            return Err(null("len"));
        }
        let set = match which {
            JsSet::Units => sets::units(r),
            JsSet::Idempotents => sets::idempotents(r),
            JsSet::Nilpotents => sets::nilpotents(r),
            JsSet::Jacobson => sets::jacobson_radical(r).map_err(core_err)?,
            JsSet::JSharp => sets::j_sharp(r),
            JsSet::QuasiNilpotents => sets::quasi_nilpotents(r),
            JsSet::DeltaNilpotents => sets::delta_nilpotents(r),
        };
        *len = set.len();
        if set.len() > capacity {
            return Err((JsStatus::BufferTooSmall, format!("set has {} members, buffer holds {capacity}", set.len())));
        }
        if !set.is_empty() && buf.is_null() {
            return Err(null("buf"));
        }
        for (i, x) in set.iter().enumerate() {
            *buf.add(i) = x;
        }
        Ok(())
    })
}

/// Whether every element is strongly J#-clean.
///
/// # Safety
/// `ring` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn jsharp_ring_is_strongly_jsharp_clean(ring: *const JsRing, out: *mut bool) -> JsStatus {
    guard(|| {
        let r = ring_arg(ring)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = is_ring_of_kind(r, Kind::StronglyJsharpClean);
        Ok(())
    })
}

/// Whether element `index` admits a decomposition of the named kind, e.g.
/// `"strongly-jsharp-clean"`.
///
/// # Safety
/// `ring` must be a live handle, `kind` a nul-terminated string, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn jsharp_element_is_of_kind(
    ring: *const JsRing,
    index: usize,
    kind: *const c_char,
    out: *mut bool,
) -> JsStatus {
    guard(|| {
        let r = ring_arg(ring)?;
        let name = str_arg(kind, "kind")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let kind: Kind = name.parse().map_err(|e| (JsStatus::InvalidArgument, e))?;
        if index >= r.order() {
            return Err(core_err(Error::ElementOutOfRange { index, order: r.order() }));
        }
        *out = is_element_of_kind(r, index, kind);
        Ok(())
    })
}

/// Classification report as a JSON object.
///
/// # Safety
/// `ring` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn jsharp_ring_classify_json(ring: *const JsRing, out: *mut *mut c_char) -> JsStatus {
    guard(|| {
        let r = ring_arg(ring)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let json = serde_json::to_string(&ring_class_report(r)).expect("report serializes");
        *out = into_c_string(json);
        Ok(())
    })
}

/// Run one named check on the ring an expression describes; the result is a
/// JSON object. A failing check still returns `Ok`; inspect `"status"`.
///
/// # Safety
/// `check_id` and `expr` must be nul-terminated strings and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn jsharp_run_check(
    check_id: *const c_char,
    expr: *const c_char,
    out: *mut *mut c_char,
) -> JsStatus {
    guard(|| {
        let id = str_arg(check_id, "check_id")?;
        let text = str_arg(expr, "expr")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let subject = Subject::from_expr(text).map_err(core_err)?;
        let result = run_check(id, &subject).map_err(core_err)?;
        *out = into_c_string(serde_json::to_string(&result).expect("result serializes"));
        Ok(())
    })
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn jsharp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
