//! C ABI over `srw-core`.
//!
//! Complexes and ideals cross the boundary as opaque heap handles that the
//! caller releases with the matching `*_free` function. Every fallible call
//! returns an [`SrwStatus`]; on failure a message is available from
//! [`srw_last_error_message`] until the next call on the same thread.
//! Strings returned through out-pointers are owned by the caller and must be
//! released with [`srw_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use srw_core::lp::format_rational;
use srw_core::symbolic::{containment_check_within, symbolic_power_within, verify_els_hh_within};
use srw_core::{Error, MonomialIdeal, SimplicialComplex};

/// Status codes. Domain and resource errors use the same numbers as the
/// command-line exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SrwStatus {
    Ok = 0,
    /// Null pointer or non-UTF-8 text.
    InvalidArgument = 1,
    Domain = 2,
    Resource = 3,
    /// A Rust panic was caught at the boundary.
    Internal = 5,
}

/// Opaque simplicial complex.
pub struct SrwComplex(SimplicialComplex);

/// Opaque monomial ideal.
pub struct SrwIdeal(MonomialIdeal);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

enum Failure {
    Core(Error),
    Argument(&'static str),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn guard<F>(f: F) -> SrwStatus
where
    F: FnOnce() -> Result<(), Failure>,
{
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SrwStatus::Ok,
        Ok(Err(Failure::Argument(msg))) => {
            set_error(msg.to_string());
            SrwStatus::InvalidArgument
        }
        Ok(Err(Failure::Core(e))) => {
            set_error(e.to_string());
            match e {
                Error::Resource(_) => SrwStatus::Resource,
                _ => SrwStatus::Domain,
            }
        }
        Err(_) => {
            set_error("internal error: panic in srw".to_string());
            SrwStatus::Internal
        }
    }
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(Failure::Argument("null string argument"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure::Argument("string argument is not UTF-8"))
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or(Failure::Argument("null handle"))
}

unsafe fn store<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Argument("null output pointer"));
    }
    *out = value;
    Ok(())
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s)
        .map(CString::into_raw)
        .unwrap_or(ptr::null_mut())
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next `srw_*` call on the same thread.
#[no_mangle]
pub extern "C" fn srw_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn srw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `out` must be a valid pointer to write a handle to.
#[no_mangle]
pub unsafe extern "C" fn srw_complex_bipyramid(n: usize, out: *mut *mut SrwComplex) -> SrwStatus {
    guard(|| {
        let c = SimplicialComplex::bipyramid(n)?;
        store(out, Box::into_raw(Box::new(SrwComplex(c))))
    })
}

/// # Safety
/// `out` must be a valid pointer to write a handle to.
#[no_mangle]
pub unsafe extern "C" fn srw_complex_bipyramidal_graph(
    n: usize,
    out: *mut *mut SrwComplex,
) -> SrwStatus {
    guard(|| {
        let c = SimplicialComplex::bipyramidal_graph(n)?;
        store(out, Box::into_raw(Box::new(SrwComplex(c))))
    })
}

/// Parses `{"vertices": N, "facets": [[...], ...]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn srw_complex_from_json(
    json: *const c_char,
    out: *mut *mut SrwComplex,
) -> SrwStatus {
    guard(|| {
        let c = SimplicialComplex::from_json(text(json)?)?;
        store(out, Box::into_raw(Box::new(SrwComplex(c))))
    })
}

/// # Safety
/// `c` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn srw_complex_num_vertices(c: *const SrwComplex) -> usize {
    c.as_ref().map_or(0, |c| c.0.num_vertices())
}

/// # Safety
/// `c` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn srw_complex_free(c: *mut SrwComplex) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// # Safety
/// `c` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn srw_ideal_stanley_reisner(
    c: *const SrwComplex,
    out: *mut *mut SrwIdeal,
) -> SrwStatus {
    guard(|| {
        let i = MonomialIdeal::stanley_reisner(&deref(c)?.0)?;
        store(out, Box::into_raw(Box::new(SrwIdeal(i))))
    })
}

/// Parses a comma-separated generator list such as `x0*x5, x1*x3`.
///
/// # Safety
/// `generators` must be a NUL-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn srw_ideal_parse(
    generators: *const c_char,
    num_variables: usize,
    out: *mut *mut SrwIdeal,
) -> SrwStatus {
    guard(|| {
        let i = MonomialIdeal::parse(text(generators)?, num_variables)?;
        store(out, Box::into_raw(Box::new(SrwIdeal(i))))
    })
}

/// # Safety
/// `i` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn srw_ideal_free(i: *mut SrwIdeal) {
    if !i.is_null() {
        drop(Box::from_raw(i));
    }
}

/// # Safety
/// `i` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn srw_ideal_num_generators(i: *const SrwIdeal) -> usize {
    i.as_ref().map_or(0, |i| i.0.generators().len())
}

/// Canonical generator list, e.g. `x0*x5, x1*x3, x2*x4`.
///
/// # Safety
/// `i` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn srw_ideal_to_string(
    i: *const SrwIdeal,
    out: *mut *mut c_char,
) -> SrwStatus {
    guard(|| {
        let s = deref(i)?.0.to_string();
        store(out, owned_string(s))
    })
}

/// # Safety
/// `i` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn srw_ideal_symbolic_power(
    i: *const SrwIdeal,
    m: u32,
    max_generators: usize,
    out: *mut *mut SrwIdeal,
) -> SrwStatus {
    guard(|| {
        let s = symbolic_power_within(&deref(i)?.0, m, max_generators)?;
        store(out, Box::into_raw(Box::new(SrwIdeal(s))))
    })
}

/// Minimal primes as text, one `<x0,x1,x2>` per line.
///
/// # Safety
/// `i` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn srw_primary_decomposition(
    i: *const SrwIdeal,
    out: *mut *mut c_char,
) -> SrwStatus {
    guard(|| {
        let primes = srw_core::primary_decomposition(&deref(i)?.0)?;
        let s: String = primes.iter().map(|p| format!("{p}\n")).collect();
        store(out, owned_string(s))
    })
}

/// `α(I^(m))`; the witness monomial is written to `witness` when non-null.
///
/// # Safety
/// `i` must be a live handle, `value` a valid pointer, `witness` null or valid.
#[no_mangle]
pub unsafe extern "C" fn srw_alpha_symbolic(
    i: *const SrwIdeal,
    m: u32,
    value: *mut u64,
    witness: *mut *mut c_char,
) -> SrwStatus {
    guard(|| {
        let cert = srw_core::alpha_symbolic(&deref(i)?.0, m)?;
        store(value, cert.value)?;
        if !witness.is_null() {
            *witness = owned_string(cert.witness.to_string());
        }
        Ok(())
    })
}

/// Exact Waldschmidt constant as `p/q` text.
///
/// # Safety
/// `i` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn srw_waldschmidt(i: *const SrwIdeal, out: *mut *mut c_char) -> SrwStatus {
    guard(|| {
        let q = srw_core::waldschmidt(&deref(i)?.0)?;
        store(out, owned_string(format_rational(&q)))
    })
}

/// # Safety
/// `i` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn srw_big_height(i: *const SrwIdeal, out: *mut usize) -> SrwStatus {
    guard(|| {
        let h = srw_core::big_height(&deref(i)?.0)?;
        store(out, h)
    })
}

/// Whether `I^(m) ⊆ I^r`.
///
/// # Safety
/// `i` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn srw_containment_check(
    i: *const SrwIdeal,
    m: u32,
    r: u32,
    max_generators: usize,
    out: *mut bool,
) -> SrwStatus {
    guard(|| {
        let c = containment_check_within(&deref(i)?.0, m, r, max_generators)?;
        store(out, c)
    })
}

/// Whether `I^(h·r) ⊆ I^r` for `h` the big height.
///
/// # Safety
/// `i` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn srw_verify_els_hh(
    i: *const SrwIdeal,
    r: u32,
    max_generators: usize,
    out: *mut bool,
) -> SrwStatus {
    guard(|| {
        let c = verify_els_hh_within(&deref(i)?.0, r, max_generators)?;
        store(out, c)
    })
}
