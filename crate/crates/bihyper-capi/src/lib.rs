//! C ABI over the bihyper library.
//!
//! Every function returns a [`Status`] code and writes its result through an
//! out-pointer; values never travel through errno or exceptions. The
//! verification report is an opaque handle with explicit free functions, so
//! bindings in other languages can run the same seeded checks and compare
//! reports byte for byte.

use bihyper::bilateral::{h22_term, sum_h22, ParamSet};
use bihyper::error::Error;
use bihyper::gamma::{gamma, limit_ratio_defect, log_gamma};
use bihyper::hyperseries::{SeriesResult, Verdict};
use bihyper::identities::{
    dougall_rhs, saalschutz_lhs, saalschutz_rhs, semifinite_first_term, semifinite_lhs,
    semifinite_rhs, IdentityCase,
};
use bihyper::pochhammer::{pochhammer, pochhammer_reflect};
use bihyper::report::{emit_report, run_verification, Identity, OutputFormat, RunConfig};
use bihyper::Complex64;
use std::ffi::CString;
use std::os::raw::c_char;

/// Status code returned by every API function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    /// An argument sits on a gamma pole.
    PoleError = 1,
    /// A magnitude left the double-precision range.
    OverflowError = 2,
    /// A denominator shifted factorial vanished.
    DivisionByZero = 3,
    /// Series shape does not admit the requested operation.
    ShapeError = 4,
    /// A series denominator parameter is a nonpositive integer.
    DegenerateDenominator = 5,
    /// Input violates the convergence condition.
    DivergentInput = 6,
    /// An identity pivot is too close to zero.
    NearSingular = 7,
    /// A parameter lies outside the supported envelope.
    OutOfRange = 8,
    /// Invalid configuration value.
    ConfigError = 9,
    /// A required pointer argument was null.
    NullPointer = 10,
}

impl From<&Error> for Status {
    fn from(err: &Error) -> Self {
        match err {
            Error::Pole { .. } => Status::PoleError,
            Error::Overflow { .. } => Status::OverflowError,
            Error::DivisionByZero { .. } => Status::DivisionByZero,
            Error::Shape { .. } => Status::ShapeError,
            Error::DegenerateDenominator { .. } => Status::DegenerateDenominator,
            Error::DivergentInput { .. } => Status::DivergentInput,
            Error::NearSingular { .. } => Status::NearSingular,
            Error::OutOfRange { .. } => Status::OutOfRange,
            Error::Config(_) => Status::ConfigError,
        }
    }
}

/// Complex double, layout-compatible with C99 `double _Complex` pairs.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Complex {
    pub re: f64,
    pub im: f64,
}

impl From<Complex> for Complex64 {
    fn from(z: Complex) -> Self {
        Complex64::new(z.re, z.im)
    }
}

impl From<Complex64> for Complex {
    fn from(z: Complex64) -> Self {
        Complex { re: z.re, im: z.im }
    }
}

/// The (a, b, c, d) quadruple of every identity in the library.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Params {
    pub a: Complex,
    pub b: Complex,
    pub c: Complex,
    pub d: Complex,
}

impl From<Params> for ParamSet {
    fn from(p: Params) -> Self {
        ParamSet::new(p.a.into(), p.b.into(), p.c.into(), p.d.into())
    }
}

/// How a series summation ended.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesVerdict {
    Converged = 0,
    Terminated = 1,
    MaxTermsExceeded = 2,
    Diverged = 3,
}

impl From<Verdict> for SeriesVerdict {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Converged => SeriesVerdict::Converged,
            Verdict::Terminated => SeriesVerdict::Terminated,
            Verdict::MaxTermsExceeded => SeriesVerdict::MaxTermsExceeded,
            Verdict::Diverged => SeriesVerdict::Diverged,
        }
    }
}

/// Value, error estimate, and bookkeeping of one summation.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesOutcome {
    pub value: Complex,
    pub abs_error_estimate: f64,
    pub terms_used: usize,
    pub verdict: SeriesVerdict,
}

impl From<SeriesResult> for SeriesOutcome {
    fn from(r: SeriesResult) -> Self {
        SeriesOutcome {
            value: r.value.into(),
            abs_error_estimate: r.abs_error_estimate,
            terms_used: r.terms_used,
            verdict: r.verdict.into(),
        }
    }
}

/// Identity selector for verification runs.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityKind {
    Dougall = 0,
    Saalschutz = 1,
    Semifinite = 2,
    LimitDecay = 3,
}

impl From<IdentityKind> for Identity {
    fn from(k: IdentityKind) -> Self {
        match k {
            IdentityKind::Dougall => Identity::Dougall,
            IdentityKind::Saalschutz => Identity::Saalschutz,
            IdentityKind::Semifinite => Identity::Semifinite,
            IdentityKind::LimitDecay => Identity::LimitDecay,
        }
    }
}

fn write_complex(out: *mut Complex, result: bihyper::error::Result<Complex64>) -> Status {
    if out.is_null() {
        return Status::NullPointer;
    }
    match result {
        Ok(v) => {
            unsafe { *out = v.into() };
            Status::Ok
        }
        Err(e) => Status::from(&e),
    }
}

fn write_series(out: *mut SeriesOutcome, result: bihyper::error::Result<SeriesResult>) -> Status {
    if out.is_null() {
        return Status::NullPointer;
    }
    match result {
        Ok(v) => {
            unsafe { *out = v.into() };
            Status::Ok
        }
        Err(e) => Status::from(&e),
    }
}

/// Principal-branch log Γ(z).
#[no_mangle]
pub extern "C" fn bh_log_gamma(z: Complex, out: *mut Complex) -> Status {
    write_complex(out, log_gamma(z.into()))
}

/// Γ(z).
#[no_mangle]
pub extern "C" fn bh_gamma(z: Complex, out: *mut Complex) -> Status {
    write_complex(out, gamma(z.into()))
}

/// Shifted factorial (x)ₙ for integer n of either sign.
#[no_mangle]
pub extern "C" fn bh_pochhammer(x: Complex, n: i64, out: *mut Complex) -> Status {
    write_complex(out, pochhammer(x.into(), n))
}

/// Reflection form (x)₋ₘ = (−1)ᵐ/(1−x)ₘ.
#[no_mangle]
pub extern "C" fn bh_pochhammer_reflect(x: Complex, m: u64, out: *mut Complex) -> Status {
    write_complex(out, pochhammer_reflect(x.into(), m))
}

/// |Γ(n+x)/Γ(n+y)·n^(y−x) − 1|.
#[no_mangle]
pub extern "C" fn bh_limit_ratio_defect(x: Complex, y: Complex, n: u64, out: *mut f64) -> Status {
    if out.is_null() {
        return Status::NullPointer;
    }
    match limit_ratio_defect(x.into(), y.into(), n) {
        Ok(v) => {
            unsafe { *out = v };
            Status::Ok
        }
        Err(e) => Status::from(&e),
    }
}

/// Single bilateral term (a)ₖ(b)ₖ/[(c)ₖ(d)ₖ], any integer k.
#[no_mangle]
pub extern "C" fn bh_h22_term(params: Params, k: i64, out: *mut Complex) -> Status {
    write_complex(out, h22_term(&params.into(), k))
}

/// Bilateral ₂H₂ sum over all integers k.
#[no_mangle]
pub extern "C" fn bh_sum_h22(
    params: Params,
    tol: f64,
    max_terms: usize,
    out: *mut SeriesOutcome,
) -> Status {
    write_series(out, sum_h22(&params.into(), tol, max_terms))
}

/// Dougall's closed form for the bilateral sum.
#[no_mangle]
pub extern "C" fn bh_dougall_rhs(params: Params, out: *mut Complex) -> Status {
    write_complex(out, dougall_rhs(&params.into()))
}

/// Left side of the nonterminating Saalschütz identity (a ₃F₂ at 1).
#[no_mangle]
pub extern "C" fn bh_saalschutz_lhs(
    params: Params,
    tol: f64,
    max_terms: usize,
    out: *mut SeriesOutcome,
) -> Status {
    write_series(out, saalschutz_lhs(&params.into(), tol, max_terms))
}

/// Right side of the nonterminating Saalschütz identity (two terms).
#[no_mangle]
pub extern "C" fn bh_saalschutz_rhs(
    params: Params,
    tol: f64,
    max_terms: usize,
    out: *mut Complex,
) -> Status {
    write_complex(out, saalschutz_rhs(&params.into(), tol, max_terms))
}

/// Left side of the semi-finite identity at shift n.
#[no_mangle]
pub extern "C" fn bh_semifinite_lhs(
    params: Params,
    shift_n: u32,
    tol: f64,
    max_terms: usize,
    out: *mut SeriesOutcome,
) -> Status {
    let case = IdentityCase::new(params.into(), shift_n, tol);
    write_series(out, semifinite_lhs(&case, max_terms))
}

/// Right side of the semi-finite identity at shift n.
#[no_mangle]
pub extern "C" fn bh_semifinite_rhs(
    params: Params,
    shift_n: u32,
    tol: f64,
    max_terms: usize,
    out: *mut Complex,
) -> Status {
    let case = IdentityCase::new(params.into(), shift_n, tol);
    write_complex(out, semifinite_rhs(&case, max_terms))
}

/// First right-hand term of the semi-finite identity alone.
#[no_mangle]
pub extern "C" fn bh_semifinite_first_term(
    params: Params,
    shift_n: u32,
    tol: f64,
    max_terms: usize,
    out: *mut Complex,
) -> Status {
    let case = IdentityCase::new(params.into(), shift_n, tol);
    write_complex(out, semifinite_first_term(&case, max_terms))
}

/// Opaque verification report handle.
pub struct Report {
    inner: bihyper::report::VerificationReport,
}

/// Run a seeded verification. `n_list`/`n_len` may be null/0 to use the
/// identity's default shift list. On success `*out` owns a report that must
/// be released with [`bh_report_free`].
///
/// # Safety
/// `n_list`, when non-null, must point to `n_len` readable u32 values;
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bh_verify_run(
    identity: IdentityKind,
    samples: usize,
    seed: u64,
    tol: f64,
    n_list: *const u32,
    n_len: usize,
    parallelism: usize,
    max_terms: usize,
    out: *mut *mut Report,
) -> Status {
    if out.is_null() {
        return Status::NullPointer;
    }
    let identity: Identity = identity.into();
    let shifts = if n_list.is_null() || n_len == 0 {
        identity.default_shifts()
    } else {
        std::slice::from_raw_parts(n_list, n_len).to_vec()
    };
    let config = RunConfig {
        identity,
        samples,
        seed,
        tol: if tol > 0.0 {
            tol
        } else {
            identity.default_tolerance()
        },
        n_list: shifts,
        format: OutputFormat::Json,
        parallelism: parallelism.max(1),
        max_terms,
    };
    match run_verification(&config) {
        Ok(report) => {
            *out = Box::into_raw(Box::new(Report { inner: report }));
            Status::Ok
        }
        Err(e) => Status::from(&e),
    }
}

/// Copy the report's headline counts.
///
/// # Safety
/// `report` must be a live handle from [`bh_verify_run`]; out-pointers may
/// be null to skip a field.
#[no_mangle]
pub unsafe extern "C" fn bh_report_summary(
    report: *const Report,
    total: *mut usize,
    passed: *mut usize,
    max_rel_dev: *mut f64,
) -> Status {
    let Some(report) = report.as_ref() else {
        return Status::NullPointer;
    };
    if !total.is_null() {
        *total = report.inner.summary.total;
    }
    if !passed.is_null() {
        *passed = report.inner.summary.passed;
    }
    if !max_rel_dev.is_null() {
        *max_rel_dev = report.inner.summary.max_rel_dev;
    }
    Status::Ok
}

/// Render the report as JSON into a NUL-terminated string owned by the
/// caller; release it with [`bh_string_free`].
///
/// # Safety
/// `report` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn bh_report_to_json(report: *const Report, out: *mut *mut c_char) -> Status {
    let Some(report) = report.as_ref() else {
        return Status::NullPointer;
    };
    if out.is_null() {
        return Status::NullPointer;
    }
    let json = emit_report(&report.inner, OutputFormat::Json);
    match CString::new(json) {
        Ok(s) => {
            *out = s.into_raw();
            Status::Ok
        }
        Err(_) => Status::ConfigError,
    }
}

/// Release a string returned by [`bh_report_to_json`].
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn bh_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Release a report handle.
///
/// # Safety
/// `report` must come from [`bh_verify_run`] and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn bh_report_free(report: *mut Report) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}
