//! C ABI for genschur.
//!
//! Every fallible call returns a [`GsStatus`]; on anything other than
//! `GS_STATUS_OK` a message is available from [`gs_last_error`] on the same
//! thread. Strings handed out by this library must be released with
//! [`gs_string_free`], bases with [`gs_basis_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::str::FromStr;

use genschur::cli::schema::BasisSpec;
use genschur::cli::{self, CliError, Command, Options};
use genschur::kernel::Rational;
use genschur::partitions::Partition;
use genschur::polybasis::PolyBasis;
use genschur::schurgen::{bialternant, EvalPoint};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GsStatus {
    Ok = 0,
    /// A mathematical precondition failed (truncation, length, singularity).
    Domain = 1,
    /// Malformed input: bad JSON, unknown fields, unparsable rationals.
    Schema = 2,
    /// A requested identity check evaluated to false.
    IdentityFailed = 3,
    NullPointer = 4,
    InvalidUtf8 = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GsBasisKind {
    Monomial = 0,
    Sp = 1,
    SoEven = 2,
    SoOdd = 3,
}

/// Opaque handle to a truncated polynomial basis.
pub struct GsBasis {
    inner: PolyBasis,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

struct Failure(GsStatus, String);

type FfiResult<T> = Result<T, Failure>;

impl From<genschur::error::Error> for Failure {
    fn from(e: genschur::error::Error) -> Self {
        Failure(GsStatus::Domain, e.to_string())
    }
}

impl From<CliError> for Failure {
    fn from(e: CliError) -> Self {
        match e {
            CliError::Domain(e) => e.into(),
            CliError::Schema { pointer, message } => Failure(GsStatus::Schema, format!("{pointer}: {message}")),
        }
    }
}

/// Runs `f`, records any failure for `gs_last_error` and turns panics into
/// `GS_STATUS_PANIC`.
fn guard(f: impl FnOnce() -> FfiResult<()>) -> GsStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => GsStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            GsStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> FfiResult<&'a str> {
    if p.is_null() {
        return Err(Failure(GsStatus::NullPointer, format!("{what} is NULL")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(GsStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

fn non_null<T>(p: *const T, what: &str) -> FfiResult<()> {
    if p.is_null() {
        Err(Failure(GsStatus::NullPointer, format!("{what} is NULL")))
    } else {
        Ok(())
    }
}

fn to_c_string(s: String) -> *mut c_char {
    // Output is JSON or a rational, never containing NUL.
    CString::new(s).expect("no interior NUL").into_raw()
}

/// Creates one of the built-in bases truncated at `n`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn gs_basis_new(kind: GsBasisKind, n: usize, out: *mut *mut GsBasis) -> GsStatus {
    guard(|| {
        non_null(out, "out")?;
        let inner = match kind {
            GsBasisKind::Monomial => PolyBasis::monomial(n),
            GsBasisKind::Sp => PolyBasis::sp(n),
            GsBasisKind::SoEven => PolyBasis::so_even(n),
            GsBasisKind::SoOdd => PolyBasis::so_odd(n),
        };
        *out = Box::into_raw(Box::new(GsBasis { inner }));
        Ok(())
    })
}

/// Builds a basis from the JSON form used by the command line tool, e.g.
/// `{"kind":"coeffs","data":[["1"],["1/2","1"]]}`.
///
/// # Safety
/// `spec` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gs_basis_from_json(spec: *const c_char, out: *mut *mut GsBasis) -> GsStatus {
    guard(|| {
        non_null(out, "out")?;
        let text = read_str(spec, "spec")?;
        let parsed: BasisSpec =
            serde_json::from_str(text).map_err(|e| Failure(GsStatus::Schema, format!("basis spec: {e}")))?;
        let inner = parsed.build("", None)?;
        *out = Box::into_raw(Box::new(GsBasis { inner }));
        Ok(())
    })
}

/// Releases a basis. NULL is accepted.
///
/// # Safety
/// `basis` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn gs_basis_free(basis: *mut GsBasis) {
    if !basis.is_null() {
        drop(Box::from_raw(basis));
    }
}

/// The truncation `N` of the basis, or 0 for NULL.
///
/// # Safety
/// `basis` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gs_basis_truncation(basis: *const GsBasis) -> usize {
    basis.as_ref().map_or(0, |b| b.inner.truncation())
}

/// Evaluates the generalized Schur function `S_λ(x)` of `basis` by the
/// bi-alternant formula. `x` holds `x_len` rationals written as `"p/q"` or
/// integers; the result is written to `*out` in the same form.
///
/// # Safety
/// `lambda` must point to `lambda_len` values (may be NULL when the length is
/// 0), `x` to `x_len` NUL-terminated strings, `out` to writable storage.
#[no_mangle]
pub unsafe extern "C" fn gs_schur(
    basis: *const GsBasis,
    lambda: *const usize,
    lambda_len: usize,
    x: *const *const c_char,
    x_len: usize,
    out: *mut *mut c_char,
) -> GsStatus {
    guard(|| {
        non_null(out, "out")?;
        let basis = basis
            .as_ref()
            .ok_or_else(|| Failure(GsStatus::NullPointer, "basis is NULL".into()))?;
        let parts = if lambda_len == 0 {
            Vec::new()
        } else {
            non_null(lambda, "lambda")?;
            std::slice::from_raw_parts(lambda, lambda_len).to_vec()
        };
        let lambda = Partition::new(parts)?;
        if x_len > 0 {
            non_null(x, "x")?;
        }
        let mut values = Vec::with_capacity(x_len);
        for i in 0..x_len {
            let s = read_str(*x.add(i), "x entry")?;
            let q = Rational::from_str(s.trim())
                .map_err(|_| Failure(GsStatus::Schema, format!("x[{i}]: not a rational: {s:?}")))?;
            values.push(q);
        }
        let point = EvalPoint::new(values)?;
        let value = bialternant(&basis.inner, &lambda, &point)?;
        *out = to_c_string(value.to_string());
        Ok(())
    })
}

/// Runs one command line request. `command` is a subcommand name such as
/// `"schur"` or `"walk"`; `request` is the JSON document. The JSON response,
/// including error documents, is always written to `*out` when the inputs
/// themselves are readable.
///
/// # Safety
/// `command` and `request` must be NUL-terminated strings, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gs_run_json(
    command: *const c_char,
    request: *const c_char,
    seed: u64,
    out: *mut *mut c_char,
) -> GsStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = ptr::null_mut();
        let name = read_str(command, "command")?;
        let input = read_str(request, "request")?;
        let cmd = Command::ALL
            .into_iter()
            .find(|c| c.name() == name)
            .ok_or_else(|| Failure(GsStatus::Schema, format!("unknown command {name:?}")))?;
        let opts = Options { seed, ..Options::default() };
        let outcome = cli::run(cmd, input, &opts);
        *out = to_c_string(outcome.output);
        match outcome.code {
            cli::EXIT_OK => Ok(()),
            cli::EXIT_DOMAIN => Err(Failure(GsStatus::Domain, "domain error; see response".into())),
            cli::EXIT_SCHEMA => Err(Failure(GsStatus::Schema, "schema error; see response".into())),
            _ => Err(Failure(GsStatus::IdentityFailed, "identity check failed".into())),
        }
    })
}

/// Releases a string returned by this library. NULL is accepted.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn gs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or NULL. The pointer stays
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn gs_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn gs_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
