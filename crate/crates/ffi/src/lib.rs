//! C ABI for `qshell`.
//!
//! Every fallible function returns a [`QsStatus`] and writes its result
//! through an out pointer. On failure, [`qs_last_error`] describes the most
//! recent error on the calling thread. Handles are created by the
//! `*_new`/`qs_complex_*` constructors and released with the matching
//! `*_free` function. Strings returned by the library are released with
//! [`qs_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use qshell::homology::qcomplex_homology;
use qshell::io::{parse_facet_list, parse_generator};
use qshell::ordercx::{betti_formula, chain_order_shells, count_homology_facets_oracle};
use qshell::qmatroid::QMatroid;
use qshell::report::{check_report, homology_outcome, Method};
use qshell::{Error, Field, QComplex};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    Parse = 4,
    NotPure = 5,
    MethodUnavailable = 6,
    TooLarge = 7,
    Io = 8,
    Panic = 9,
}

/// Which computations [`qs_complex_homology_json`] runs.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QsMethod {
    Formula = 0,
    Count = 1,
    Snf = 2,
    All = 3,
}

/// A finite field with its element order.
pub struct QsField(Field);

/// A q-complex.
pub struct QsComplex(QComplex);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> QsStatus {
    match e {
        Error::Parse { .. } => QsStatus::Parse,
        Error::NotPure => QsStatus::NotPure,
        Error::MethodUnavailable(_) => QsStatus::MethodUnavailable,
        Error::TooLarge(_) => QsStatus::TooLarge,
        Error::Io(_) => QsStatus::Io,
        _ => QsStatus::InvalidArgument,
    }
}

struct Fail(QsStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> QsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            QsStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            QsStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(s: *const c_char, name: &str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(Fail(QsStatus::NullPointer, format!("{name} is null")));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail(QsStatus::InvalidUtf8, format!("{name} is not UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, name: &str) -> Result<&'a T, Fail> {
    p.as_ref()
        .ok_or_else(|| Fail(QsStatus::NullPointer, format!("{name} is null")))
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(QsStatus::NullPointer, "output pointer is null".into()));
    }
    out.write(v);
    Ok(())
}

unsafe fn put_complex(out: *mut *mut QsComplex, c: QComplex) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(QsStatus::NullPointer, "output pointer is null".into()));
    }
    out.write(Box::into_raw(Box::new(QsComplex(c))));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(QsStatus::NullPointer, "output pointer is null".into()));
    }
    let c = CString::new(s).map_err(|_| Fail(QsStatus::Panic, "interior NUL in output".into()))?;
    out.write(c.into_raw());
    Ok(())
}

/// Message for the last failed call on this thread, empty after a success.
/// Valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn qs_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn qs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a field such as `gf(2)` or `gf(2^4):x^4+x+1`.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qs_field_new(spec: *const c_char, out: *mut *mut QsField) -> QsStatus {
    guard(|| {
        let f = Field::parse(str_arg(spec, "spec")?)?;
        put(out, Box::into_raw(Box::new(QsField(f))))
    })
}

/// Number of elements of the field, 0 for a null handle.
///
/// # Safety
/// `field` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qs_field_order(field: *const QsField) -> u32 {
    field.as_ref().map_or(0, |f| f.0.order())
}

/// # Safety
/// `field` must be null or a live handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn qs_field_free(field: *mut QsField) {
    if !field.is_null() {
        drop(Box::from_raw(field));
    }
}

/// All `k`-dimensional subspaces of `F_q^n`.
///
/// # Safety
/// `field` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qs_complex_uniform(
    field: *const QsField,
    n: usize,
    k: usize,
    out: *mut *mut QsComplex,
) -> QsStatus {
    guard(|| {
        let f = handle(field, "field")?;
        put_complex(out, QComplex::uniform(&f.0, n, k)?)
    })
}

/// The hyperplanes of `F_q^(r+1)`.
///
/// # Safety
/// `field` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qs_complex_sphere(
    field: *const QsField,
    r: usize,
    out: *mut *mut QsComplex,
) -> QsStatus {
    guard(|| {
        let f = handle(field, "field")?;
        put_complex(out, QComplex::standard_sphere(&f.0, r)?)
    })
}

/// A complex from facet-list text (header `q=<field> n=<n>`, one facet per
/// line).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qs_complex_from_facets(
    text: *const c_char,
    out: *mut *mut QsComplex,
) -> QsStatus {
    guard(|| {
        let fl = parse_facet_list(str_arg(text, "text")?)?;
        put_complex(out, fl.into_complex()?)
    })
}

/// The matroid complex of the rank-metric code in generator-matrix text.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qs_complex_from_code(
    text: *const c_char,
    out: *mut *mut QsComplex,
) -> QsStatus {
    guard(|| {
        let code = parse_generator(str_arg(text, "text")?)?;
        put_complex(out, QMatroid::from_code(&code)?.matroid_complex()?)
    })
}

/// # Safety
/// `complex` must be null or a live handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn qs_complex_free(complex: *mut QsComplex) {
    if !complex.is_null() {
        drop(Box::from_raw(complex));
    }
}

/// # Safety
/// `complex` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qs_complex_facet_count(
    complex: *const QsComplex,
    out: *mut usize,
) -> QsStatus {
    guard(|| put(out, handle(complex, "complex")?.0.facets().len()))
}

/// Largest facet dimension.
///
/// # Safety
/// `complex` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qs_complex_dim(complex: *const QsComplex, out: *mut usize) -> QsStatus {
    guard(|| put(out, handle(complex, "complex")?.0.dim()))
}

/// Whether the `cmp_q`-sorted facets form a shelling.
///
/// # Safety
/// `complex` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qs_complex_is_lex_shellable(
    complex: *const QsComplex,
    out: *mut bool,
) -> QsStatus {
    guard(|| {
        let c = &handle(complex, "complex")?.0;
        put(out, c.is_lex_shellable()?.is_shelling())
    })
}

/// Whether the `cmp_l` order on maximal chains shells the punctured order
/// complex.
///
/// # Safety
/// `complex` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qs_complex_chain_order_shells(
    complex: *const QsComplex,
    out: *mut bool,
) -> QsStatus {
    guard(|| put(out, chain_order_shells(&handle(complex, "complex")?.0)?))
}

/// The closed-form count in the complex's own coordinates.
///
/// # Safety
/// `complex` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qs_complex_betti_formula(
    complex: *const QsComplex,
    out: *mut u64,
) -> QsStatus {
    guard(|| {
        let c = handle(complex, "complex")?.0.lex_sorted();
        put(out, betti_formula(&c)?.betti_rank)
    })
}

/// Maximal chains whose restriction is the whole chain, in the complex's own
/// coordinates.
///
/// # Safety
/// `complex` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qs_complex_restriction_count(
    complex: *const QsComplex,
    out: *mut u64,
) -> QsStatus {
    guard(|| {
        let c = handle(complex, "complex")?.0.lex_sorted();
        put(out, count_homology_facets_oracle(&c)?)
    })
}

/// Rank of the reduced homology of the punctured order complex in `degree`,
/// by Smith normal form.
///
/// # Safety
/// `complex` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qs_complex_homology_rank(
    complex: *const QsComplex,
    degree: i64,
    out: *mut u64,
) -> QsStatus {
    guard(|| {
        put(
            out,
            qcomplex_homology(&handle(complex, "complex")?.0)?.rank_at(degree),
        )
    })
}

/// Homology report as JSON. Release the string with [`qs_string_free`].
///
/// # Safety
/// `complex` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qs_complex_homology_json(
    complex: *const QsComplex,
    method: QsMethod,
    out: *mut *mut c_char,
) -> QsStatus {
    guard(|| {
        let method = match method {
            QsMethod::Formula => Method::Formula,
            QsMethod::Count => Method::Count,
            QsMethod::Snf => Method::Snf,
            QsMethod::All => Method::All,
        };
        let h = homology_outcome(&handle(complex, "complex")?.0, method)?;
        put_string(out, serde_json::to_string(&h).expect("report serializes"))
    })
}

/// Shelling report as JSON. Release the string with [`qs_string_free`].
///
/// # Safety
/// `complex` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qs_complex_check_json(
    complex: *const QsComplex,
    out: *mut *mut c_char,
) -> QsStatus {
    guard(|| {
        let r = check_report(&handle(complex, "complex")?.0)?;
        put_string(out, serde_json::to_string(&r).expect("report serializes"))
    })
}
