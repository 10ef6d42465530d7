//! C ABI over `klr-typea`.
//!
//! Every fallible call returns a [`KlrStatus`]. On failure the message is kept
//! per thread and can be fetched with [`klr_last_error_message`]. Strings
//! returned through out-parameters are owned by the caller and released with
//! [`klr_string_free`]; q-character handles with [`klr_qchar_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use klr_typea::cartan::CartanA;
use klr_typea::qchar::{qch_sp, shuffle, QChar};
use klr_typea::rmatrix::SigmaRequest;
use klr_typea::tableaux::ColumnTableau;
use klr_typea::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KlrStatus {
    Ok = 0,
    /// Malformed or out-of-range input.
    Invalid = 1,
    /// The computation rejected its input or an internal check failed.
    Computation = 2,
    NullPointer = 3,
    /// A Rust panic was caught at the boundary.
    Panic = 4,
}

/// Opaque q-character.
pub struct KlrQChar(QChar);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: KlrStatus, msg: &str) -> KlrStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> KlrStatus {
    let status = if e.is_validation() {
        KlrStatus::Invalid
    } else {
        KlrStatus::Computation
    };
    fail(status, &e.to_string())
}

fn guard(f: impl FnOnce() -> KlrStatus) -> KlrStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            fail(KlrStatus::Panic, &msg)
        }
    }
}

unsafe fn slice(p: *const u32, len: usize) -> Option<Vec<usize>> {
    if len == 0 {
        return Some(Vec::new());
    }
    if p.is_null() {
        return None;
    }
    Some(
        std::slice::from_raw_parts(p, len)
            .iter()
            .map(|&v| v as usize)
            .collect(),
    )
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> KlrStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            KlrStatus::Ok
        }
        Err(_) => fail(KlrStatus::Computation, "output contains a nul byte"),
    }
}

/// Message of the last failed call on this thread, or null. Free with `klr_string_free`.
#[no_mangle]
pub extern "C" fn klr_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|e| {
        e.borrow()
            .as_ref()
            .map_or(ptr::null_mut(), |c| c.clone().into_raw())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn klr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Combinatorial R-matrix of `first ⊗ second`; writes the JSON response
/// `{"first","second","bits_in","bits_out"}` to `*out_json`.
///
/// # Safety
/// The arrays must hold `*_len` readable elements; `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn klr_sigma_json(
    n: usize,
    first: *const u32,
    first_len: usize,
    second: *const u32,
    second_len: usize,
    out_json: *mut *mut c_char,
) -> KlrStatus {
    guard(|| {
        if out_json.is_null() {
            return fail(KlrStatus::NullPointer, "out_json is null");
        }
        let (Some(first), Some(second)) = (slice(first, first_len), slice(second, second_len))
        else {
            return fail(KlrStatus::NullPointer, "column array is null");
        };
        match (SigmaRequest { n, first, second }).run() {
            Ok(r) => write_string(out_json, serde_json::to_string(&r).expect("serializable")),
            Err(e) => from_error(e),
        }
    })
}

/// q-character of the module attached to one column.
///
/// # Safety
/// `entries` must hold `len` readable elements; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn klr_qchar_sp(
    n: usize,
    entries: *const u32,
    len: usize,
    out: *mut *mut KlrQChar,
) -> KlrStatus {
    guard(|| {
        if out.is_null() {
            return fail(KlrStatus::NullPointer, "out is null");
        }
        let Some(entries) = slice(entries, len) else {
            return fail(KlrStatus::NullPointer, "entries is null");
        };
        let r = CartanA::new(n)
            .and_then(|cd| ColumnTableau::new(n, entries).and_then(|c| qch_sp(&c, &cd)));
        match r {
            Ok(q) => {
                *out = Box::into_raw(Box::new(KlrQChar(q)));
                KlrStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Quantum shuffle `left ⧢ right`, multiplied by `q^shift`.
///
/// # Safety
/// `left` and `right` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn klr_qchar_shuffle(
    left: *const KlrQChar,
    right: *const KlrQChar,
    shift: i64,
    out: *mut *mut KlrQChar,
) -> KlrStatus {
    guard(|| {
        if left.is_null() || right.is_null() || out.is_null() {
            return fail(KlrStatus::NullPointer, "null handle");
        }
        let (a, b) = (&(*left).0, &(*right).0);
        let r = CartanA::new(a.n()).and_then(|cd| shuffle(a, b, &cd));
        match r {
            Ok(q) => {
                *out = Box::into_raw(Box::new(KlrQChar(q.shift(shift))));
                KlrStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Text rendering, e.g. `(1,3,2)+(3,1,2)`.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn klr_qchar_render(h: *const KlrQChar, out: *mut *mut c_char) -> KlrStatus {
    guard(|| {
        if h.is_null() || out.is_null() {
            return fail(KlrStatus::NullPointer, "null handle");
        }
        write_string(out, (*h).0.to_string())
    })
}

/// JSON rendering `{"n","terms":[{"word","coeff"}]}`.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn klr_qchar_json(h: *const KlrQChar, out: *mut *mut c_char) -> KlrStatus {
    guard(|| {
        if h.is_null() || out.is_null() {
            return fail(KlrStatus::NullPointer, "null handle");
        }
        write_string(out, serde_json::to_string(&(*h).0).expect("serializable"))
    })
}

/// Writes 1 to `*out` when every coefficient is invariant under `q -> q^-1`, else 0.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn klr_qchar_is_bar_invariant(
    h: *const KlrQChar,
    out: *mut i32,
) -> KlrStatus {
    guard(|| {
        if h.is_null() || out.is_null() {
            return fail(KlrStatus::NullPointer, "null handle");
        }
        *out = (*h).0.is_bar_invariant() as i32;
        KlrStatus::Ok
    })
}

/// # Safety
/// `h` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn klr_qchar_free(h: *mut KlrQChar) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

fn cli_status(code: i32) -> KlrStatus {
    match code {
        0 => KlrStatus::Ok,
        1 => KlrStatus::Invalid,
        _ => KlrStatus::Computation,
    }
}

/// Graded decomposition of the convolution product for the column list
/// `"T_r|...|T_1"`, as the JSON map `{"L(rows)": "laurent"}`.
///
/// # Safety
/// `columns` must be a nul-terminated string; `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn klr_decompose_json(
    n: usize,
    columns: *const c_char,
    out_json: *mut *mut c_char,
) -> KlrStatus {
    guard(|| {
        if columns.is_null() || out_json.is_null() {
            return fail(KlrStatus::NullPointer, "null argument");
        }
        let Ok(cols) = CStr::from_ptr(columns).to_str() else {
            return fail(KlrStatus::Invalid, "columns is not UTF-8");
        };
        let n = n.to_string();
        let o = klr_typea::cli::run([
            "klr",
            "decompose",
            "--n",
            &n,
            "--columns",
            cols,
            "--format",
            "json",
        ]);
        if o.code != 0 {
            return fail(
                cli_status(o.code),
                o.stderr.trim_start_matches("error: ").trim_end(),
            );
        }
        write_string(out_json, o.stdout.trim_end().to_string())
    })
}

/// Runs the golden suite; writes 1 to `*out_passed` when every case passes.
///
/// # Safety
/// `out_passed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn klr_selftest(out_passed: *mut i32) -> KlrStatus {
    guard(|| {
        if out_passed.is_null() {
            return fail(KlrStatus::NullPointer, "out_passed is null");
        }
        *out_passed = klr_typea::golden::run_golden().iter().all(|c| c.passed) as i32;
        KlrStatus::Ok
    })
}
