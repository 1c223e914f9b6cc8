//! C ABI over `ftr-core`.
//!
//! Every fallible function returns an [`FtrStatus`] and writes its result
//! through an out pointer. On failure the message is kept per thread and can
//! be fetched with [`ftr_last_error`]. Handles are opaque and must be released
//! with their matching `_free` function; strings returned to the caller are
//! released with [`ftr_string_free`].

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ftr_core::chain::{derive_g, run_chain, theoretical_n, ChainOptions};
use ftr_core::montecarlo::mc_centroid;
use ftr_core::numeric::{load_constants, ConstantSet, MIN_DIGITS};
use ftr_core::report::{derive_rows, emit, Format, Report};
use ftr_core::zoo::{max_family, Gender};
use ftr_core::FtrError;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FtrStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    MissingConstant = 4,
    DimensionMismatch = 5,
    Domain = 6,
    Config = 7,
    CheckFailed = 8,
    Internal = 9,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FtrFormat {
    Table = 0,
    Csv = 1,
    Json = 2,
}

/// Opaque set of named constants.
pub struct FtrConstants(ConstantSet);

/// Opaque derivation report.
pub struct FtrReport(Report);

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct FtrMcResult {
    pub empirical_std: f64,
    pub predicted_std: f64,
    pub standard_error: f64,
    pub z_score: f64,
    pub passed: bool,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FtrZooResult {
    pub size: u32,
    pub boys: u32,
    pub girls: u32,
    pub winner_score: u32,
    pub winner_is_boy: bool,
    pub families: u32,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &FtrError) -> FtrStatus {
    match e {
        FtrError::Parse { .. } | FtrError::DuplicateName(_) | FtrError::UnknownClass(_) => {
            FtrStatus::Parse
        }
        FtrError::MissingConstant(_) => FtrStatus::MissingConstant,
        FtrError::DimensionMismatch { .. } => FtrStatus::DimensionMismatch,
        FtrError::Config(_) | FtrError::Io(_) => FtrStatus::Config,
        _ => FtrStatus::Domain,
    }
}

enum Fail {
    Status(FtrStatus, String),
    Core(FtrError),
}

impl From<FtrError> for Fail {
    fn from(e: FtrError) -> Self {
        Fail::Core(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> FtrStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => FtrStatus::Ok,
        Ok(Err(Fail::Core(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Ok(Err(Fail::Status(s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("internal panic".into());
            FtrStatus::Internal
        }
    }
}

fn null(what: &str) -> Fail {
    Fail::Status(FtrStatus::NullPointer, format!("null pointer: {what}"))
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail::Status(FtrStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn out<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| null(what))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

fn check_digits(digits: u32) -> Result<(), Fail> {
    if digits < MIN_DIGITS {
        return Err(Fail::Status(
            FtrStatus::Config,
            format!("precision must be at least {MIN_DIGITS}"),
        ));
    }
    Ok(())
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .unwrap_or_default()
        .into_raw()
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn ftr_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the last failure on this thread, or null. The string is newly
/// allocated; release it with [`ftr_string_free`].
#[no_mangle]
pub extern "C" fn ftr_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| match &*e.borrow() {
        Some(c) => c.clone().into_raw(),
        None => ptr::null_mut(),
    })
}

#[no_mangle]
pub unsafe extern "C" fn ftr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[no_mangle]
pub unsafe extern "C" fn ftr_constants_modern(
    digits: u32,
    out_set: *mut *mut FtrConstants,
) -> FtrStatus {
    guard(|| {
        let slot = out(out_set, "out_set")?;
        check_digits(digits)?;
        *slot = Box::into_raw(Box::new(FtrConstants(ConstantSet::modern(digits))));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn ftr_constants_paper_era(
    digits: u32,
    out_set: *mut *mut FtrConstants,
) -> FtrStatus {
    guard(|| {
        let slot = out(out_set, "out_set")?;
        check_digits(digits)?;
        *slot = Box::into_raw(Box::new(FtrConstants(ConstantSet::paper_era(digits))));
        Ok(())
    })
}

/// Parses dataset text in the `.cst` format.
#[no_mangle]
pub unsafe extern "C" fn ftr_constants_parse(
    text: *const c_char,
    digits: u32,
    out_set: *mut *mut FtrConstants,
) -> FtrStatus {
    guard(|| {
        let slot = out(out_set, "out_set")?;
        let text = str_arg(text, "text")?;
        check_digits(digits)?;
        let set = load_constants(text.as_bytes(), digits)?;
        *slot = Box::into_raw(Box::new(FtrConstants(set)));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn ftr_constants_free(set: *mut FtrConstants) {
    if !set.is_null() {
        drop(Box::from_raw(set));
    }
}

/// Value of a named constant in cgs-Gaussian units.
#[no_mangle]
pub unsafe extern "C" fn ftr_constants_get(
    set: *const FtrConstants,
    name: *const c_char,
    out_value: *mut f64,
) -> FtrStatus {
    guard(|| {
        let set = handle(set, "set")?;
        let name = str_arg(name, "name")?;
        let slot = out(out_value, "out_value")?;
        *slot = set.0.get(name)?.mag.to_f64();
        Ok(())
    })
}

/// N = 204·2²⁵⁶
#[no_mangle]
pub unsafe extern "C" fn ftr_theoretical_n(out_value: *mut f64) -> FtrStatus {
    guard(|| {
        *out(out_value, "out_value")? = theoretical_n(MIN_DIGITS).decimal.to_f64();
        Ok(())
    })
}

/// G in cm³ g⁻¹ s⁻² from the theoretical N and the set's h, c and m_h.
#[no_mangle]
pub unsafe extern "C" fn ftr_derive_g(set: *const FtrConstants, out_value: *mut f64) -> FtrStatus {
    guard(|| {
        let set = handle(set, "set")?;
        let slot = out(out_value, "out_value")?;
        let n = theoretical_n(set.0.digits());
        *slot = derive_g(&n.exact, &set.0)?.computed.mag.to_f64();
        Ok(())
    })
}

/// Number of derivation rows whose checks fail; zero when the chain passes.
#[no_mangle]
pub unsafe extern "C" fn ftr_chain_failures(
    set: *const FtrConstants,
    out_count: *mut u32,
) -> FtrStatus {
    guard(|| {
        let set = handle(set, "set")?;
        let slot = out(out_count, "out_count")?;
        let rows = run_chain(&set.0, &ChainOptions::default())?;
        *slot = rows
            .iter()
            .filter(|r| r.verdict == ftr_core::chain::Verdict::Fail)
            .count() as u32;
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn ftr_mc_centroid(
    n_particles: u64,
    trials: u64,
    seed: u64,
    r0: f64,
    out_result: *mut FtrMcResult,
) -> FtrStatus {
    guard(|| {
        let slot = out(out_result, "out_result")?;
        let r = mc_centroid(n_particles, trials, seed, r0)?;
        *slot = FtrMcResult {
            empirical_std: r.empirical_std,
            predicted_std: r.predicted_std,
            standard_error: r.standard_error,
            z_score: r.z_score,
            passed: r.passed,
        };
        Ok(())
    })
}

/// Largest mixed family in the zoo puzzle.
#[no_mangle]
pub unsafe extern "C" fn ftr_zoo_solve(out_result: *mut FtrZooResult) -> FtrStatus {
    guard(|| {
        let slot = out(out_result, "out_result")?;
        let sol = max_family(true);
        let first = sol
            .families
            .first()
            .ok_or_else(|| Fail::Status(FtrStatus::Internal, "no family found".into()))?;
        let (w, g) = first.winners()[0];
        *slot = FtrZooResult {
            size: sol.size as u32,
            boys: first.boys() as u32,
            girls: first.girls() as u32,
            winner_score: w.score(),
            winner_is_boy: g == Gender::Boy,
            families: sol.families.len() as u32,
        };
        Ok(())
    })
}

/// Runs the constants chain into a report handle.
#[no_mangle]
pub unsafe extern "C" fn ftr_report_derive(
    set: *const FtrConstants,
    sig_digits: u32,
    out_report: *mut *mut FtrReport,
) -> FtrStatus {
    guard(|| {
        let set = handle(set, "set")?;
        let slot = out(out_report, "out_report")?;
        if sig_digits == 0 {
            return Err(Fail::Status(
                FtrStatus::Config,
                "sig_digits must be positive".into(),
            ));
        }
        let rows = derive_rows(&set.0, &ChainOptions::default(), sig_digits as usize)?;
        let report = Report::from_rows("derive", &set.0, rows);
        *slot = Box::into_raw(Box::new(FtrReport(report)));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn ftr_report_free(report: *mut FtrReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

#[no_mangle]
pub unsafe extern "C" fn ftr_report_row_count(
    report: *const FtrReport,
    out_count: *mut usize,
) -> FtrStatus {
    guard(|| {
        let r = handle(report, "report")?;
        *out(out_count, "out_count")? = r.0.rows.len();
        Ok(())
    })
}

/// `FTR_STATUS_OK` when every check passed, `FTR_STATUS_CHECK_FAILED` otherwise.
#[no_mangle]
pub unsafe extern "C" fn ftr_report_passed(report: *const FtrReport) -> FtrStatus {
    guard(|| {
        let r = handle(report, "report")?;
        if r.0.passed {
            Ok(())
        } else {
            Err(Fail::Status(
                FtrStatus::CheckFailed,
                "some checks failed".into(),
            ))
        }
    })
}

/// Renders the report; release the string with [`ftr_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ftr_report_emit(
    report: *const FtrReport,
    format: FtrFormat,
    out_text: *mut *mut c_char,
) -> FtrStatus {
    guard(|| {
        let r = handle(report, "report")?;
        let slot = out(out_text, "out_text")?;
        let f = match format {
            FtrFormat::Table => Format::Table,
            FtrFormat::Csv => Format::Csv,
            FtrFormat::Json => Format::Json,
        };
        *slot = to_c_string(emit(&r.0, f)?);
        Ok(())
    })
}
