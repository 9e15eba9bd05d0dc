//! C ABI for `graded-descent`.
//!
//! Every fallible function returns a [`GdStatus`]; on failure the message is
//! available from [`gd_last_error`] on the same thread. Strings handed out
//! through `out` parameters are owned by the caller and released with
//! [`gd_string_free`]. Handles are released with their `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use graded_descent::cli;
use graded_descent::russell::{FormDescriptor, RussellForm, RussellSpec};
use graded_descent::skew::{self, SkewPoly};
use graded_descent::{Degree, Error, Field};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Domain = 4,
    Panic = 5,
}

/// Opaque coefficient field.
pub struct GdField {
    inner: Field,
}

/// Opaque Russell-type form.
pub struct GdRussellForm {
    inner: RussellForm,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(GdStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = if e.is_parse() { GdStatus::Parse } else { GdStatus::Domain };
        Failure(status, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> GdStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => GdStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            GdStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(Failure(GdStatus::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(s).to_str().map_err(|_| Failure(GdStatus::InvalidUtf8, "argument is not UTF-8".into()))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(GdStatus::NullPointer, "null output pointer".into()));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure(GdStatus::Domain, "output contains a nul byte".into()))?;
    write_out(out, c.into_raw())
}

unsafe fn handle<'a, T>(h: *const T) -> Result<&'a T, Failure> {
    h.as_ref().ok_or_else(|| Failure(GdStatus::NullPointer, "null handle".into()))
}

/// Message of the last failed call on this thread (empty after a success).
/// The pointer stays valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn gd_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn gd_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a field such as `GF(4)` or `GF(2)(u)`.
///
/// # Safety
/// `spec` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gd_field_new(spec: *const c_char, out: *mut *mut GdField) -> GdStatus {
    guard(|| {
        let field = Field::parse(read_str(spec)?)?;
        write_out(out, Box::into_raw(Box::new(GdField { inner: field })))
    })
}

/// # Safety
/// `field` must be null or a handle from [`gd_field_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gd_field_free(field: *mut GdField) {
    if !field.is_null() {
        drop(Box::from_raw(field));
    }
}

/// The presentation of the field, e.g. the modulus fixed for `GF(p^m)`.
///
/// # Safety
/// `field` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gd_field_presentation(field: *const GdField, out: *mut *mut c_char) -> GdStatus {
    guard(|| write_string(out, handle(field)?.inner.presentation()))
}

/// Decides triviality of the form attached to the skew polynomial `tau`.
///
/// # Safety
/// `field` must be a live handle, `tau` a nul-terminated string and
/// `out_trivial` writable.
#[no_mangle]
pub unsafe extern "C" fn gd_triviality_test(
    field: *const GdField,
    tau: *const c_char,
    n: u32,
    out_trivial: *mut bool,
) -> GdStatus {
    guard(|| {
        let field = &handle(field)?.inner;
        let tau = SkewPoly::parse(read_str(tau)?, field)?;
        let t = skew::triviality_test(&tau, n, field)?;
        write_out(out_trivial, t.trivial)
    })
}

/// Builds a form from a JSON descriptor with keys `p, n, field, stride, r,
/// s, f_coeffs` and optionally `t_degree`, `coeff_extension`.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gd_form_from_json(json: *const c_char, out: *mut *mut GdRussellForm) -> GdStatus {
    guard(|| {
        let desc: FormDescriptor = serde_json::from_str(read_str(json)?)
            .map_err(|e| Failure(GdStatus::Parse, format!("descriptor: {e}")))?;
        let form = RussellForm::new(RussellSpec::from_descriptor(&desc)?)?;
        write_out(out, Box::into_raw(Box::new(GdRussellForm { inner: form })))
    })
}

/// Builds a form over `field` from a `p`-polynomial `f` in `T1`, with
/// `k~ = k_1[t^{±stride}]`, `deg t = q` and radii `r`, `s`.
///
/// # Safety
/// `field` must be a live handle, the strings nul-terminated and `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn gd_form_new(
    field: *const GdField,
    stride: i64,
    n: u32,
    r: *const c_char,
    s: *const c_char,
    f: *const c_char,
    out: *mut *mut GdRussellForm,
) -> GdStatus {
    guard(|| {
        let field = &handle(field)?.inner;
        let r: Degree = read_str(r)?.parse()?;
        let s: Degree = read_str(s)?.parse()?;
        let spec = RussellSpec::parse(field, &Degree::generator("q"), stride, n, &r, &s, read_str(f)?)?;
        let form = RussellForm::new(spec)?;
        write_out(out, Box::into_raw(Box::new(GdRussellForm { inner: form })))
    })
}

/// # Safety
/// `form` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gd_form_free(form: *mut GdRussellForm) {
    if !form.is_null() {
        drop(Box::from_raw(form));
    }
}

/// The form's JSON descriptor.
///
/// # Safety
/// `form` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gd_form_descriptor_json(form: *const GdRussellForm, out: *mut *mut c_char) -> GdStatus {
    guard(|| {
        let desc = handle(form)?.inner.spec().descriptor();
        write_string(out, serde_json::to_string(&desc).expect("descriptor serializes"))
    })
}

/// Runs the trivialization and returns its report as JSON.
///
/// # Safety
/// `form` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gd_form_trivialize_json(form: *const GdRussellForm, out: *mut *mut c_char) -> GdStatus {
    guard(|| {
        let form = &handle(form)?.inner;
        let report = form.trivialize()?.report(form);
        write_string(out, serde_json::to_string(&report).expect("report serializes"))
    })
}

/// Whether the coproduct, counit and antipode respect the relation.
///
/// # Safety
/// `form` must be a live handle; `out_passed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gd_form_hopf_check(form: *const GdRussellForm, out_passed: *mut bool) -> GdStatus {
    guard(|| write_out(out_passed, handle(form)?.inner.hopf_check().passed()))
}

/// Runs a command-line invocation (without the program name) and returns
/// its standard output; `out_exit_code` receives the CLI exit code.
///
/// # Safety
/// `argv` must point to `argc` nul-terminated strings; the outputs must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn gd_cli_run(
    argv: *const *const c_char,
    argc: usize,
    out_stdout: *mut *mut c_char,
    out_exit_code: *mut i32,
) -> GdStatus {
    guard(|| {
        if argv.is_null() && argc > 0 {
            return Err(Failure(GdStatus::NullPointer, "null argv".into()));
        }
        let mut args = vec!["graded-descent".to_string()];
        for i in 0..argc {
            args.push(read_str(*argv.add(i))?.to_string());
        }
        let outcome = cli::run(args);
        if outcome.code != cli::EXIT_OK {
            set_error(outcome.stderr.trim_end());
        }
        write_out(out_exit_code, outcome.code)?;
        write_string(out_stdout, outcome.stdout)
    })
}
