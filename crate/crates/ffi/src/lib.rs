//! C ABI over the skewbrace library.
//!
//! Braces are opaque handles built from the same JSON descriptions the
//! command line tool reads. Every function returns a [`BraceStatus`]; the
//! message of the last failure on the calling thread is available through
//! [`brace_last_error_message`]. Strings returned to the caller must be
//! released with [`brace_string_free`], handles with [`brace_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use skewbrace::classify::{analyze, NilpotencyProfile, SeriesBundle};
use skewbrace::report::{analysis_json, chain_json};
use skewbrace::spec::BraceSpec;
use skewbrace::{Error, SkewBrace};

/// Result codes; `BRACE_STATUS_OK` is zero.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BraceStatus {
    Ok = 0,
    NullPointer = 1,
    Parse = 2,
    Validation = 3,
    Resource = 4,
    OutOfRange = 5,
    Panic = 6,
}

/// Nilpotency classes; `-1` means the corresponding series never terminates.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BraceProfile {
    pub left: i64,
    pub right: i64,
    pub socle: i64,
    pub annihilator: i64,
    pub add_group: i64,
    pub mult_group: i64,
}

impl From<NilpotencyProfile> for BraceProfile {
    fn from(p: NilpotencyProfile) -> Self {
        let c = |x: Option<usize>| x.map_or(-1, |n| n as i64);
        BraceProfile {
            left: c(p.left),
            right: c(p.right),
            socle: c(p.socle),
            annihilator: c(p.annihilator),
            add_group: c(p.add_group_nilpotent),
            mult_group: c(p.mult_group_nilpotent),
        }
    }
}

/// Opaque brace handle.
pub struct BraceHandle {
    brace: SkewBrace,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> BraceStatus {
    match e.exit_code() {
        1 => BraceStatus::Parse,
        3 => BraceStatus::Resource,
        _ => BraceStatus::Validation,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (BraceStatus, String)>) -> BraceStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => BraceStatus::Ok,
        Ok(Err((s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            BraceStatus::Panic
        }
    }
}

fn fail(e: Error) -> (BraceStatus, String) {
    (status_of(&e), e.to_string())
}

fn null() -> (BraceStatus, String) {
    (BraceStatus::NullPointer, "null pointer argument".into())
}

unsafe fn handle<'a>(h: *const BraceHandle) -> Result<&'a BraceHandle, (BraceStatus, String)> {
    h.as_ref().ok_or_else(null)
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (BraceStatus, String)> {
    if out.is_null() {
        return Err(null());
    }
    let c = CString::new(s).map_err(|_| (BraceStatus::Panic, "string contains NUL".to_string()))?;
    *out = c.into_raw();
    Ok(())
}

/// Builds a brace from a NUL-terminated JSON description.
///
/// # Safety
/// `json` must be a valid C string and `out` a valid pointer to write to.
#[no_mangle]
pub unsafe extern "C" fn brace_from_json(json: *const c_char, seed: u64, out: *mut *mut BraceHandle) -> BraceStatus {
    guard(|| {
        if json.is_null() || out.is_null() {
            return Err(null());
        }
        *out = ptr::null_mut();
        let text = CStr::from_ptr(json)
            .to_str()
            .map_err(|_| (BraceStatus::Parse, "input is not UTF-8".to_string()))?;
        let spec = BraceSpec::parse(text).map_err(fail)?;
        let brace = spec.build(seed).map_err(fail)?;
        *out = Box::into_raw(Box::new(BraceHandle { brace }));
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `h` must come from [`brace_from_json`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn brace_free(h: *mut BraceHandle) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn brace_order(h: *const BraceHandle, out: *mut usize) -> BraceStatus {
    guard(|| {
        let h = handle(h)?;
        if out.is_null() {
            return Err(null());
        }
        *out = h.brace.order();
        Ok(())
    })
}

unsafe fn binary(
    h: *const BraceHandle,
    a: usize,
    b: usize,
    out: *mut usize,
    f: fn(&SkewBrace, usize, usize) -> usize,
) -> BraceStatus {
    guard(|| {
        let h = handle(h)?;
        if out.is_null() {
            return Err(null());
        }
        let n = h.brace.order();
        if a >= n || b >= n {
            return Err((BraceStatus::OutOfRange, format!("element index out of range 0..{n}")));
        }
        *out = f(&h.brace, a, b);
        Ok(())
    })
}

/// `a · b`.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn brace_dot(h: *const BraceHandle, a: usize, b: usize, out: *mut usize) -> BraceStatus {
    binary(h, a, b, out, SkewBrace::dot)
}

/// `a ∘ b`.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn brace_circ(h: *const BraceHandle, a: usize, b: usize, out: *mut usize) -> BraceStatus {
    binary(h, a, b, out, SkewBrace::circ)
}

/// `a * b = λ_a(b) · b^{-1}`.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn brace_star(h: *const BraceHandle, a: usize, b: usize, out: *mut usize) -> BraceStatus {
    binary(h, a, b, out, SkewBrace::star)
}

/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn brace_profile(h: *const BraceHandle, out: *mut BraceProfile) -> BraceStatus {
    guard(|| {
        let h = handle(h)?;
        if out.is_null() {
            return Err(null());
        }
        *out = NilpotencyProfile::from_series(&SeriesBundle::compute(&h.brace)).into();
        Ok(())
    })
}

/// Full analysis report as a JSON string; free with [`brace_string_free`].
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn brace_analyze_json(h: *const BraceHandle, seed: u64, out: *mut *mut c_char) -> BraceStatus {
    guard(|| {
        let h = handle(h)?;
        let a = analyze(&h.brace, seed, skewbrace::brace::DEFAULT_SAMPLES);
        write_string(out, analysis_json(&h.brace, &a).to_string())
    })
}

/// One series as JSON. `kind` is one of `left`, `right`, `smoktunowicz`,
/// `socle`, `annihilator`, `gamma`, `gamma_prime`, `add_group_lower`,
/// `mult_group_lower`.
///
/// # Safety
/// `h` must be a live handle, `kind` a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn brace_series_json(
    h: *const BraceHandle,
    kind: *const c_char,
    out: *mut *mut c_char,
) -> BraceStatus {
    guard(|| {
        let h = handle(h)?;
        if kind.is_null() {
            return Err(null());
        }
        let kind = CStr::from_ptr(kind).to_string_lossy();
        let br = &h.brace;
        let chain = match kind.as_ref() {
            "left" => skewbrace::series::left_series(br),
            "right" => skewbrace::series::right_series(br),
            "smoktunowicz" => skewbrace::series::smoktunowicz_series(br),
            "socle" => skewbrace::series::socle_series(br),
            "annihilator" => skewbrace::series::annihilator_series(br),
            "gamma" => skewbrace::series::gamma_series(br),
            "gamma_prime" => skewbrace::series::gamma_prime_series(br).map_err(fail)?,
            "add_group_lower" => skewbrace::group::lower_central_series(&br.additive()),
            "mult_group_lower" => skewbrace::group::lower_central_series(&br.multiplicative()),
            other => return Err((BraceStatus::Parse, format!("unknown series kind {other:?}"))),
        };
        write_string(out, chain_json(br, &chain).to_string())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn brace_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failure on this thread (empty if none). The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn brace_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
