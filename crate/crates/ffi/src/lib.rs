//! C interface. A workspace is parsed once into an opaque handle; commands
//! run against it and return JSON reports. Every function returns a
//! `LefconStatus`; on failure `lefcon_last_error` describes the problem.
//!
//! Strings returned through out-parameters are owned by the caller and must be
//! released with `lefcon_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use clap::Parser;
use lefcon::cli::{execute, parse_workspace, Cli, Workspace};
use lefcon::simplicial::Homology;

/// Status codes. The first four agree with the exit codes of the `lefcon`
/// command line tool.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LefconStatus {
    /// A value was computed or a certificate holds.
    Ok = 0,
    /// The certificate vanishes; nothing is claimed.
    NotCertified = 1,
    /// Malformed workspace, unknown name, bad arguments or a failed precondition.
    InputError = 2,
    /// A nonzero certificate whose oracle found no witness.
    SoundnessViolation = 3,
    /// A required pointer argument was null.
    NullArgument = 10,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 11,
    /// The output buffer is too small; the required length was written.
    BufferTooSmall = 12,
    /// An internal panic was caught at the boundary.
    Internal = 13,
}

/// Parsed workspace. Opaque to C.
pub struct LefconWorkspace {
    inner: Workspace,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let text = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(CString::new(text).expect("nul bytes removed")));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

struct Failure(LefconStatus, String);

fn guard(body: impl FnOnce() -> Result<LefconStatus, Failure>) -> LefconStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(status)) => status,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal error");
            LefconStatus::Internal
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(LefconStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(LefconStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn handle<'a>(ws: *const LefconWorkspace) -> Result<&'a Workspace, Failure> {
    ws.as_ref()
        .map(|w| &w.inner)
        .ok_or_else(|| Failure(LefconStatus::NullArgument, "workspace is null".into()))
}

fn input_error(message: impl ToString) -> Failure {
    Failure(LefconStatus::InputError, message.to_string())
}

fn status_of(exit_code: i32) -> LefconStatus {
    match exit_code {
        0 => LefconStatus::Ok,
        1 => LefconStatus::NotCertified,
        3 => LefconStatus::SoundnessViolation,
        _ => LefconStatus::InputError,
    }
}

fn into_raw_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .expect("nul bytes removed")
        .into_raw()
}

fn publish(out: *mut *mut LefconWorkspace, ws: Workspace) {
    let boxed = Box::new(LefconWorkspace { inner: ws });
    // SAFETY: `out` was checked for null by the caller.
    unsafe { *out = Box::into_raw(boxed) };
}

/// Parses workspace text. On success `*out` receives a handle to release
/// with `lefcon_workspace_free`.
///
/// # Safety
/// `source` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lefcon_workspace_parse(source: *const c_char, out: *mut *mut LefconWorkspace) -> LefconStatus {
    guard(|| {
        if out.is_null() {
            return Err(Failure(LefconStatus::NullArgument, "out is null".into()));
        }
        *out = ptr::null_mut();
        let ws = parse_workspace(text(source, "source")?).map_err(input_error)?;
        publish(out, ws);
        Ok(LefconStatus::Ok)
    })
}

/// Reads and parses a workspace file.
///
/// # Safety
/// `path` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lefcon_workspace_load(path: *const c_char, out: *mut *mut LefconWorkspace) -> LefconStatus {
    guard(|| {
        if out.is_null() {
            return Err(Failure(LefconStatus::NullArgument, "out is null".into()));
        }
        *out = ptr::null_mut();
        let path = text(path, "path")?;
        let source = std::fs::read_to_string(path).map_err(|e| input_error(format!("{path}: {e}")))?;
        let ws = parse_workspace(&source).map_err(|e| input_error(format!("{path}: {e}")))?;
        publish(out, ws);
        Ok(LefconStatus::Ok)
    })
}

/// Releases a workspace. Null is ignored.
///
/// # Safety
/// `ws` must come from `lefcon_workspace_parse` or `lefcon_workspace_load`
/// and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn lefcon_workspace_free(ws: *mut LefconWorkspace) {
    if !ws.is_null() {
        drop(Box::from_raw(ws));
    }
}

/// Runs one command, given as arguments without the program name (for
/// example `{"betti", "torus7"}`), and writes its JSON report to `*out_json`.
/// The status follows the report outcome. `--workspace` must not be passed.
///
/// # Safety
/// `argv` must point to `argc` nul-terminated strings; `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lefcon_run(
    ws: *const LefconWorkspace,
    argv: *const *const c_char,
    argc: usize,
    out_json: *mut *mut c_char,
) -> LefconStatus {
    guard(|| {
        if out_json.is_null() {
            return Err(Failure(LefconStatus::NullArgument, "out_json is null".into()));
        }
        *out_json = ptr::null_mut();
        let ws = handle(ws)?;
        if argv.is_null() && argc > 0 {
            return Err(Failure(LefconStatus::NullArgument, "argv is null".into()));
        }
        let mut args = vec!["lefcon".to_string()];
        for i in 0..argc {
            args.push(text(*argv.add(i), "argument")?.to_string());
        }
        let cli = Cli::try_parse_from(&args).map_err(|e| input_error(e.render()))?;
        if cli.workspace.is_some() {
            return Err(input_error("--workspace is not accepted here"));
        }
        let report = execute(ws, &cli.command).map_err(input_error)?;
        *out_json = into_raw_string(report.to_json());
        Ok(status_of(report.outcome.exit_code()))
    })
}

/// Betti numbers of a named pair or complex. Writes the count to `*len`; the
/// numbers themselves go to `out` when `capacity` suffices.
///
/// # Safety
/// `name` must be nul-terminated; `out` must have room for `capacity`
/// values (it may be null when `capacity` is 0); `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lefcon_betti(
    ws: *const LefconWorkspace,
    name: *const c_char,
    out: *mut usize,
    capacity: usize,
    len: *mut usize,
) -> LefconStatus {
    guard(|| {
        let ws = handle(ws)?;
        if len.is_null() || (out.is_null() && capacity > 0) {
            return Err(Failure(LefconStatus::NullArgument, "output pointer is null".into()));
        }
        let name = text(name, "name")?;
        let entry = ws
            .pair(name)
            .ok_or_else(|| input_error(format!("unknown pair or complex `{name}`")))?;
        let betti = Homology::compute(&entry.pair).betti_numbers();
        *len = betti.len();
        if capacity < betti.len() {
            return Err(Failure(
                LefconStatus::BufferTooSmall,
                format!("need room for {} values", betti.len()),
            ));
        }
        ptr::copy_nonoverlapping(betti.as_ptr(), out, betti.len());
        Ok(LefconStatus::Ok)
    })
}

/// Euler characteristic of a named pair or complex.
///
/// # Safety
/// `name` must be nul-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lefcon_euler(ws: *const LefconWorkspace, name: *const c_char, out: *mut i64) -> LefconStatus {
    guard(|| {
        let ws = handle(ws)?;
        if out.is_null() {
            return Err(Failure(LefconStatus::NullArgument, "out is null".into()));
        }
        let name = text(name, "name")?;
        let entry = ws
            .pair(name)
            .ok_or_else(|| input_error(format!("unknown pair or complex `{name}`")))?;
        *out = Homology::compute(&entry.pair).euler_characteristic();
        Ok(LefconStatus::Ok)
    })
}

/// Message for the last failure on this thread, or null. The pointer stays
/// valid until the next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn lefcon_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn lefcon_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn lefcon_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
