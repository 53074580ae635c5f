//! C interface to `contadj`.
//!
//! Spaces and functions are opaque heap handles created by the
//! `contadj_*_new` / `contadj_*_from_*` functions and released with the
//! matching `_free`. Fallible calls return a [`ContadjStatus`]; on failure a
//! description is available from [`contadj_last_error_message`] on the same
//! thread. Subsets are `uint64_t` bitmasks over the points of a space.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use contadj::continuity::{is_continuous, verify_theorem, SetFunction};
use contadj::{
    enumerate_spaces, from_open_family, induced_direct, induced_inverse, io, is_adjoint,
    run_campaign, validate_space, Error, FiniteSpace,
};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ContadjStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed JSON, unknown labels, bad mappings.
    InvalidInput = 3,
    /// The family of closed sets violates a topology axiom.
    InvalidSpace = 4,
    ArityMismatch = 5,
    UnsupportedSize = 6,
    NotClosed = 7,
    SpaceMismatch = 8,
    /// Caller-provided buffer is too small; the required length is reported.
    BufferTooSmall = 9,
    /// A theorem cross-check failed.
    Violation = 10,
    Internal = 99,
}

/// Opaque handle to a finite topological space.
pub struct ContadjSpace(Arc<FiniteSpace>);

/// Opaque handle to a set function between two spaces.
pub struct ContadjFunction(SetFunction);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(err: &Error) -> ContadjStatus {
    match err {
        Error::MissingEmptySet
        | Error::MissingFullSet
        | Error::NotClosedUnderUnion(..)
        | Error::NotClosedUnderIntersection(..) => ContadjStatus::InvalidSpace,
        Error::ArityMismatch { .. } | Error::MaskOutOfRange { .. } => ContadjStatus::ArityMismatch,
        Error::UnsupportedSize(_) | Error::TooManyPoints { .. } => ContadjStatus::UnsupportedSize,
        Error::NotClosed(_) => ContadjStatus::NotClosed,
        Error::SpaceMismatch => ContadjStatus::SpaceMismatch,
        Error::TheoremViolation(_) => ContadjStatus::Violation,
        _ => ContadjStatus::InvalidInput,
    }
}

struct Failure(ContadjStatus, String);

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure(status_of(&err), err.to_string())
    }
}

fn fail(status: ContadjStatus, message: &str) -> Failure {
    Failure(status, message.to_owned())
}

fn guard<F: FnOnce() -> Result<(), Failure>>(body: F) -> ContadjStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_last_error("");
            ContadjStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_last_error(&message);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            ContadjStatus::Internal
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| fail(ContadjStatus::NullPointer, &format!("{what} is null")))
}

unsafe fn write_out<T>(p: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if p.is_null() {
        return Err(fail(ContadjStatus::NullPointer, &format!("{what} is null")));
    }
    p.write(value);
    Ok(())
}

unsafe fn slice<'a, T>(p: *const T, len: usize, what: &str) -> Result<&'a [T], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(fail(ContadjStatus::NullPointer, &format!("{what} is null")));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn c_str<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(fail(ContadjStatus::NullPointer, "string is null"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(ContadjStatus::InvalidUtf8, "string is not valid UTF-8"))
}

/// Why the most recent fallible call on this thread failed, or an empty
/// string if it succeeded. The pointer stays valid until the next `contadj_*`
/// call on the same thread.
#[no_mangle]
pub extern "C" fn contadj_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Build a space on `point_count` points from `len` closed-set masks.
///
/// # Safety
/// `closed` must point to `len` readable masks (or be null when `len` is 0);
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn contadj_space_new(
    point_count: usize,
    closed: *const u64,
    len: usize,
    out: *mut *mut ContadjSpace,
) -> ContadjStatus {
    guard(|| {
        let family = slice(closed, len, "closed")?;
        let space = validate_space(point_count, family)?;
        write_out(
            out,
            Box::into_raw(Box::new(ContadjSpace(Arc::new(space)))),
            "out",
        )
    })
}

/// Build a space from its open sets.
///
/// # Safety
/// Same as [`contadj_space_new`].
#[no_mangle]
pub unsafe extern "C" fn contadj_space_from_open(
    point_count: usize,
    open: *const u64,
    len: usize,
    out: *mut *mut ContadjSpace,
) -> ContadjStatus {
    guard(|| {
        let family = slice(open, len, "open")?;
        let space = from_open_family(point_count, family)?;
        write_out(
            out,
            Box::into_raw(Box::new(ContadjSpace(Arc::new(space)))),
            "out",
        )
    })
}

/// Parse a space JSON document (`points` plus `closed_sets` or `open_sets`).
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn contadj_space_from_json(
    json: *const c_char,
    out: *mut *mut ContadjSpace,
) -> ContadjStatus {
    guard(|| {
        let space = io::parse_space(c_str(json)?)?;
        write_out(
            out,
            Box::into_raw(Box::new(ContadjSpace(Arc::new(space)))),
            "out",
        )
    })
}

/// Release a space. Null is ignored.
///
/// # Safety
/// `space` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn contadj_space_free(space: *mut ContadjSpace) {
    if !space.is_null() {
        drop(Box::from_raw(space));
    }
}

/// Number of points; 0 for null.
///
/// # Safety
/// `space` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn contadj_space_point_count(space: *const ContadjSpace) -> usize {
    space.as_ref().map_or(0, |s| s.0.point_count())
}

/// Number of closed sets; 0 for null.
///
/// # Safety
/// `space` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn contadj_space_closed_count(space: *const ContadjSpace) -> usize {
    space.as_ref().map_or(0, |s| s.0.closed_count())
}

/// Copy the closed sets, ascending, into `buf`. `out_len` receives the
/// number of closed sets even when `capacity` is too small.
///
/// # Safety
/// `buf` must have room for `capacity` masks; `out_len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn contadj_space_closed_sets(
    space: *const ContadjSpace,
    buf: *mut u64,
    capacity: usize,
    out_len: *mut usize,
) -> ContadjStatus {
    guard(|| {
        let space = deref(space, "space")?;
        let closed = space.0.closed_sets();
        write_out(out_len, closed.len(), "out_len")?;
        if capacity < closed.len() {
            return Err(fail(
                ContadjStatus::BufferTooSmall,
                &format!("need room for {} masks", closed.len()),
            ));
        }
        if !closed.is_empty() {
            if buf.is_null() {
                return Err(fail(ContadjStatus::NullPointer, "buf is null"));
            }
            ptr::copy_nonoverlapping(closed.as_ptr(), buf, closed.len());
        }
        Ok(())
    })
}

/// Closure of `mask`.
///
/// # Safety
/// `space` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn contadj_space_closure(
    space: *const ContadjSpace,
    mask: u64,
    out: *mut u64,
) -> ContadjStatus {
    guard(|| {
        let space = &deref(space, "space")?.0;
        let closure = space.closure(&space.subset(mask)?)?;
        write_out(out, closure.mask(), "out")
    })
}

/// # Safety
/// `space` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn contadj_space_is_closed(
    space: *const ContadjSpace,
    mask: u64,
    out: *mut bool,
) -> ContadjStatus {
    guard(|| {
        let space = &deref(space, "space")?.0;
        let closed = space.is_closed(&space.subset(mask)?)?;
        write_out(out, closed, "out")
    })
}

/// Number of topologies on `point_count` labeled points (`point_count <= 4`).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn contadj_enumerate_spaces_count(
    point_count: usize,
    out: *mut usize,
) -> ContadjStatus {
    guard(|| write_out(out, enumerate_spaces(point_count)?.count(), "out"))
}

/// Build `φ: domain -> codomain` with `mapping[p]` the image of point `p`.
/// Both spaces are shared, not consumed.
///
/// # Safety
/// Handles must be live; `mapping` must point to `len` readable values.
#[no_mangle]
pub unsafe extern "C" fn contadj_function_new(
    domain: *const ContadjSpace,
    codomain: *const ContadjSpace,
    mapping: *const usize,
    len: usize,
    out: *mut *mut ContadjFunction,
) -> ContadjStatus {
    guard(|| {
        let domain = deref(domain, "domain")?.0.clone();
        let codomain = deref(codomain, "codomain")?.0.clone();
        let mapping = slice(mapping, len, "mapping")?.to_vec();
        let phi = SetFunction::new(domain, codomain, mapping)?;
        write_out(out, Box::into_raw(Box::new(ContadjFunction(phi))), "out")
    })
}

/// Parse a function JSON document (`domain`, `codomain`, `map`).
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn contadj_function_from_json(
    json: *const c_char,
    out: *mut *mut ContadjFunction,
) -> ContadjStatus {
    guard(|| {
        let phi = io::parse_function(c_str(json)?)?;
        write_out(out, Box::into_raw(Box::new(ContadjFunction(phi))), "out")
    })
}

/// Release a function. Null is ignored.
///
/// # Safety
/// `function` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn contadj_function_free(function: *mut ContadjFunction) {
    if !function.is_null() {
        drop(Box::from_raw(function));
    }
}

/// Continuity verdict. When discontinuous, `out_witness` receives the
/// smallest closed set whose preimage is not closed; otherwise 0.
///
/// # Safety
/// `function` must be live; outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn contadj_function_is_continuous(
    function: *const ContadjFunction,
    out_continuous: *mut bool,
    out_witness: *mut u64,
) -> ContadjStatus {
    guard(|| {
        let phi = &deref(function, "function")?.0;
        let verdict = is_continuous(phi);
        write_out(out_continuous, verdict.continuous, "out_continuous")?;
        write_out(
            out_witness,
            verdict.witness.map_or(0, |v| v.mask()),
            "out_witness",
        )
    })
}

/// Adjointness of the induced pair `(T_φ, T^φ)`. When not adjoint,
/// `(out_u, out_v)` is the smallest violating pair; otherwise both are 0.
///
/// # Safety
/// `function` must be live; outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn contadj_function_is_adjoint(
    function: *const ContadjFunction,
    out_adjoint: *mut bool,
    out_u: *mut u64,
    out_v: *mut u64,
) -> ContadjStatus {
    guard(|| {
        let phi = &deref(function, "function")?.0;
        let verdict = is_adjoint(&induced_direct(phi), &induced_inverse(phi))?;
        let (u, v) = verdict
            .witness
            .map_or((0, 0), |(u, v)| (u.mask(), v.mask()));
        write_out(out_adjoint, verdict.adjoint, "out_adjoint")?;
        write_out(out_u, u, "out_u")?;
        write_out(out_v, v, "out_v")
    })
}

/// Full theorem report as a JSON string. Free it with
/// [`contadj_string_free`].
///
/// # Safety
/// `function` must be live; `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn contadj_function_verify_json(
    function: *const ContadjFunction,
    out_json: *mut *mut c_char,
) -> ContadjStatus {
    guard(|| {
        let phi = &deref(function, "function")?.0;
        let report = verify_theorem(phi)?;
        let json = serde_json::to_string(&io::theorem_to_doc(phi, &report))
            .map_err(|e| fail(ContadjStatus::Internal, &e.to_string()))?;
        let json = CString::new(json).map_err(|e| fail(ContadjStatus::Internal, &e.to_string()))?;
        write_out(out_json, json.into_raw(), "out_json")
    })
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn contadj_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Run the exhaustive campaign. `max_points` is 1..=3, or 4 when
/// `include_four` is set.
///
/// # Safety
/// Outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn contadj_campaign_run(
    max_points: usize,
    include_four: bool,
    out_functions: *mut u64,
    out_continuous: *mut u64,
    out_mismatches: *mut u64,
) -> ContadjStatus {
    guard(|| {
        let report = run_campaign(max_points, include_four)?;
        write_out(out_functions, report.functions_checked, "out_functions")?;
        write_out(out_continuous, report.continuous_count, "out_continuous")?;
        write_out(
            out_mismatches,
            report.mismatches.len() as u64,
            "out_mismatches",
        )
    })
}
