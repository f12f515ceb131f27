//! C ABI over the `centaut` library.
//!
//! Groups are opaque [`CtGroup`] handles. Every fallible function returns a
//! [`CtStatus`] and writes its result through an out-pointer; on failure the
//! message is available from [`ct_last_error`] on the same thread. Strings
//! returned by the library are owned by the caller and released with
//! [`ct_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use centaut::catalog::{load_catalog, CatalogEntry, LoadOptions};
use centaut::profile::GroupProfile;
use centaut::report::{InvariantReport, VerifyReport};
use centaut::theorems::TheoremSelection;
use centaut::Error;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CtStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Io = 3,
    Parse = 4,
    Inconsistent = 5,
    NotApplicable = 6,
    ScopeExceeded = 7,
    UnknownTheorem = 8,
    Internal = 9,
}

impl From<&Error> for CtStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Syntax { .. }
            | Error::Index { .. }
            | Error::NonPrime(_)
            | Error::UnsupportedPrime(_) => CtStatus::Parse,
            Error::InconsistentPresentation { .. } | Error::ExpectationFailed { .. } => {
                CtStatus::Inconsistent
            }
            Error::NotApplicable(_)
            | Error::NotAbelian
            | Error::NotNormal
            | Error::NotRegular
            | Error::NotPurelyNonabelian => CtStatus::NotApplicable,
            Error::ScopeExceeded { .. } => CtStatus::ScopeExceeded,
            Error::UnknownTheoremId(_) => CtStatus::UnknownTheorem,
            Error::Io { .. } => CtStatus::Io,
        }
    }
}

/// A realized group with its cached invariants.
pub struct CtGroup {
    profile: GroupProfile,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: impl Into<String>) {
    let message = message.into().replace('\0', " ");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = CString::new(message).ok());
}

struct Failure(CtStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(CtStatus::from(&e), e.to_string())
    }
}

/// Runs `body`, converting errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> CtStatus {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => CtStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_last_error(message);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            CtStatus::Internal
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(CtStatus::NullArgument, format!("{what} is null"))
}

/// # Safety
/// `s` is null or a valid NUL-terminated string.
unsafe fn str_arg<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure(CtStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

/// # Safety
/// `g` is null or a handle returned by this library and not yet freed.
unsafe fn group_arg<'a>(g: *const CtGroup) -> Result<&'a CtGroup, Failure> {
    g.as_ref().ok_or_else(|| null("group"))
}

/// # Safety
/// `out` is null or valid for writes.
unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .expect("NULs replaced")
        .into_raw()
}

fn load_group(entry: CatalogEntry, out: *mut *mut CtGroup) -> Result<(), Failure> {
    let profile = entry.load()?.profile;
    let handle = Box::into_raw(Box::new(CtGroup { profile }));
    // SAFETY: caller guarantees `out` is valid when non-null.
    unsafe { write_out(out, handle) }.inspect_err(|_| {
        // SAFETY: just allocated above and never shared.
        drop(unsafe { Box::from_raw(handle) });
    })
}

/// Message of the last failed call on this thread, or null. The pointer is
/// valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn ct_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn ct_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses and realizes a presentation given as text.
///
/// # Safety
/// `text` is a NUL-terminated string; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ct_group_from_text(
    text: *const c_char,
    out: *mut *mut CtGroup,
) -> CtStatus {
    guard(|| {
        let text = str_arg(text, "text")?;
        load_group(CatalogEntry::parse("<text>", text)?, out)
    })
}

/// Reads, realizes and checks the expectations of a presentation file.
///
/// # Safety
/// `path` is a NUL-terminated string; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ct_group_from_file(
    path: *const c_char,
    out: *mut *mut CtGroup,
) -> CtStatus {
    guard(|| {
        let path = str_arg(path, "path")?;
        load_group(CatalogEntry::read(Path::new(path))?, out)
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `g` is null or a live handle from this library; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn ct_group_free(g: *mut CtGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` is null or a live handle; `out` is null or valid for writes.
unsafe fn getter<T>(
    g: *const CtGroup,
    out: *mut T,
    f: impl FnOnce(&GroupProfile) -> centaut::Result<T>,
) -> CtStatus {
    guard(|| {
        let value = f(&group_arg(g)?.profile)?;
        write_out(out, value)
    })
}

/// `|G|`.
///
/// # Safety
/// `g` is a live handle; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ct_group_order(g: *const CtGroup, out: *mut u64) -> CtStatus {
    getter(g, out, |p| Ok(p.order() as u64))
}

/// Nilpotency class.
///
/// # Safety
/// `g` is a live handle; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ct_group_class(g: *const CtGroup, out: *mut u32) -> CtStatus {
    getter(g, out, |p| Ok(p.class() as u32))
}

/// Minimal number of generators.
///
/// # Safety
/// `g` is a live handle; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ct_group_rank(g: *const CtGroup, out: *mut u32) -> CtStatus {
    getter(g, out, |p| Ok(p.rank() as u32))
}

/// `|Z(G)|`.
///
/// # Safety
/// `g` is a live handle; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ct_group_center_order(g: *const CtGroup, out: *mut u64) -> CtStatus {
    getter(g, out, |p| Ok(p.center().order() as u64))
}

/// Number of central automorphisms, by enumeration.
///
/// # Safety
/// `g` is a live handle; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ct_group_autz_order(g: *const CtGroup, out: *mut u64) -> CtStatus {
    getter(g, out, |p| Ok(p.autz()?.order() as u64))
}

/// `|Z(Inn(G))|`.
///
/// # Safety
/// `g` is a live handle; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ct_group_zinn_order(g: *const CtGroup, out: *mut u64) -> CtStatus {
    getter(g, out, |p| Ok(p.zinn_order()? as u64))
}

/// Whether the central automorphisms are exactly the central inner ones.
///
/// # Safety
/// `g` is a live handle; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ct_group_autz_equals_zinn(g: *const CtGroup, out: *mut bool) -> CtStatus {
    getter(g, out, |p| Ok(p.equality()?.equal))
}

/// Full invariant report as text. Free the result with [`ct_string_free`].
///
/// # Safety
/// `g` is a live handle; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ct_group_report_text(
    g: *const CtGroup,
    out: *mut *mut c_char,
) -> CtStatus {
    guard(|| {
        let report = InvariantReport::from_profile(&group_arg(g)?.profile);
        let s = into_c_string(report.to_text());
        write_out(out, s).inspect_err(|_| drop(CString::from_raw(s)))
    })
}

/// Checks `theorem` (an id or `all`) over every entry of `dir`. Writes the
/// text report and the command-line exit code (0 pass, 1 verdict failed,
/// 2 input error).
///
/// # Safety
/// `theorem` and `dir` are NUL-terminated strings; `report` and `exit_code`
/// are valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ct_verify(
    theorem: *const c_char,
    dir: *const c_char,
    include_p5: bool,
    report: *mut *mut c_char,
    exit_code: *mut i32,
) -> CtStatus {
    guard(|| {
        let selection: TheoremSelection = str_arg(theorem, "theorem")?.parse()?;
        let dir = str_arg(dir, "dir")?;
        if report.is_null() || exit_code.is_null() {
            return Err(null("output pointer"));
        }
        let catalog = load_catalog(Path::new(dir), LoadOptions { include_p5 })?;
        let result = VerifyReport::run(&catalog, selection);
        write_out(exit_code, result.exit_code())?;
        write_out(report, into_c_string(result.to_text()))
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` is null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ct_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
