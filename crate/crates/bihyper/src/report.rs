//! The verification harness: seeded case sampling, parallel evaluation,
//! and machine-readable reports.
//!
//! A report is a pure function of (identity, seed, config): sampling uses
//! the counter-based generator from [`crate::sampling`], rejected draws are
//! resampled deterministically, and parallel workers write results into
//! their case's slot so the output order never depends on scheduling.

use crate::bilateral::{sum_h22, ParamSet};
use crate::error::{Error, Result};
use crate::hyperseries::DEFAULT_MAX_TERMS;
use crate::identities::{
    dougall_rhs, relative_deviation, saalschutz_lhs, saalschutz_rhs, semifinite_first_term,
    semifinite_lhs, semifinite_rhs, IdentityCase,
};
use crate::sampling::{draw_params, integer_distance, pole_distance, CounterRng};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Which identity a run verifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
#[clap(rename_all = "snake_case")]
pub enum Identity {
    Dougall,
    Saalschutz,
    Semifinite,
    LimitDecay,
}

impl Identity {
    pub fn default_tolerance(self) -> f64 {
        match self {
            // identity checks compare relative deviation; the decay check
            // compares a fitted log-log slope against its prediction
            Identity::LimitDecay => 0.15,
            _ => 1e-8,
        }
    }

    pub fn default_shifts(self) -> Vec<u32> {
        match self {
            Identity::Semifinite => vec![0, 1, 2, 3, 5, 8, 13, 21],
            Identity::LimitDecay => vec![64, 128, 256, 512, 1024],
            _ => vec![0],
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Identity::Dougall => "dougall",
            Identity::Saalschutz => "saalschutz",
            Identity::Semifinite => "semifinite",
            Identity::LimitDecay => "limit_decay",
        }
    }
}

/// Output format of [`emit_report`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
#[clap(rename_all = "snake_case")]
pub enum OutputFormat {
    Json,
    Csv,
    Human,
}

/// Full configuration of one verification run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub identity: Identity,
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
    pub n_list: Vec<u32>,
    pub format: OutputFormat,
    pub parallelism: usize,
    pub max_terms: usize,
}

impl RunConfig {
    pub fn new(identity: Identity, samples: usize, seed: u64) -> Self {
        Self {
            identity,
            samples,
            seed,
            tol: identity.default_tolerance(),
            n_list: identity.default_shifts(),
            format: OutputFormat::Human,
            parallelism: 1,
            max_terms: DEFAULT_MAX_TERMS,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(Error::Config("--samples must be at least 1".into()));
        }
        if !(self.tol > 0.0) {
            return Err(Error::Config(format!(
                "--tol must be positive, got {}",
                self.tol
            )));
        }
        if self.parallelism == 0 {
            return Err(Error::Config("--parallelism must be at least 1".into()));
        }
        if self.max_terms == 0 {
            return Err(Error::Config("max_terms must be at least 1".into()));
        }
        if self.n_list.is_empty() {
            return Err(Error::Config("--n list must not be empty".into()));
        }
        Ok(())
    }
}

/// JSON mirror of a complex number with the {"re": …, "im": …} layout.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Cx {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for Cx {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl From<Cx> for Complex64 {
    fn from(z: Cx) -> Self {
        Complex64::new(z.re, z.im)
    }
}

/// Serializable parameter quadruple.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CaseParams {
    pub a: Cx,
    pub b: Cx,
    pub c: Cx,
    pub d: Cx,
}

impl From<ParamSet> for CaseParams {
    fn from(p: ParamSet) -> Self {
        Self {
            a: p.a.into(),
            b: p.b.into(),
            c: p.c.into(),
            d: p.d.into(),
        }
    }
}

impl From<CaseParams> for ParamSet {
    fn from(p: CaseParams) -> Self {
        ParamSet::new(p.a.into(), p.b.into(), p.c.into(), p.d.into())
    }
}

/// One verified case.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseResult {
    pub params: CaseParams,
    pub shift_n: u32,
    pub lhs: Cx,
    pub rhs: Cx,
    pub rel_dev: f64,
    pub terms_used: usize,
    pub pass: bool,
    /// Present only when evaluation failed; such a case never passes.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Aggregates over all cases. Wall time is informational and excluded from
/// the serialized report so byte-identical output depends only on
/// (seed, config).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub max_rel_dev: f64,
    #[serde(skip)]
    pub wall_time_seconds: f64,
}

/// The full machine-readable verification report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: Identity,
    pub seed: u64,
    pub tolerance: f64,
    pub cases: Vec<CaseResult>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.summary.passed == self.summary.total
    }
}

/// Minimum distance any Γ argument may keep from a pole during sampling.
const POLE_MARGIN: f64 = 1e-3;

/// Collect every Γ argument and series parameter the identity evaluates,
/// so the sampler can enforce pole margins uniformly.
fn gamma_arguments(identity: Identity, p: &ParamSet, n_list: &[u32]) -> Vec<Complex64> {
    let ParamSet { a, b, c, d } = *p;
    let excess = c + d - a - b;
    let mut args = vec![
        a,
        b,
        c,
        d,
        1.0 - a,
        1.0 - b,
        c - a,
        c - b,
        d - a,
        d - b,
        excess,
        excess - 1.0,
    ];
    match identity {
        Identity::Dougall => {}
        Identity::Saalschutz | Identity::Semifinite | Identity::LimitDecay => {
            args.push(c - a - b);
            args.push(d - a - b);
            args.push(c - a - b + 1.0);
            for &n in n_list {
                let nf = n as f64;
                args.push(c - a - b + nf);
                args.push(d - a - b + nf);
                args.push(c - a - b + 1.0 + nf);
                args.push(1.0 - a + nf);
                args.push(1.0 - b + nf);
                args.push(excess - 1.0 + nf);
                args.push(excess + nf);
            }
        }
    }
    args
}

/// Margin-based admissibility for one identity; rejected draws are
/// resampled by the caller.
fn admissible(identity: Identity, p: &ParamSet, n_list: &[u32]) -> bool {
    let ParamSet { a, b, c, d } = *p;
    let excess = (c + d - a - b).re;
    let ok_margins = match identity {
        Identity::Dougall => excess >= 1.5,
        Identity::Saalschutz => (d - a - b).re >= 0.3 && (a + b - c).norm() >= 0.1,
        Identity::Semifinite => {
            excess >= 1.5
                && (d - a - b).re >= 0.3
                && n_list
                    .iter()
                    .all(|&n| (a + b - c - n as f64).norm() >= 1e-3)
                && (a + b - c).norm() >= 0.1
                // negative-k factors divide by (c-j), (d-j)
                && integer_distance(c) >= POLE_MARGIN
                && integer_distance(d) >= POLE_MARGIN
        }
        Identity::LimitDecay => excess >= 1.5,
    };
    ok_margins
        && gamma_arguments(identity, p, n_list)
            .into_iter()
            .all(|z| pole_distance(z) >= POLE_MARGIN)
}

/// Draw the deterministic case list for a run: one admissible parameter set
/// per sample (resampling on margin violations), crossed with the shift
/// list for the semi-finite identity.
pub fn sample_cases(config: &RunConfig) -> Vec<(ParamSet, u32)> {
    let mut rng = CounterRng::new(config.seed);
    let mut cases = Vec::new();
    for _ in 0..config.samples {
        let params = loop {
            let candidate = draw_params(&mut rng);
            if admissible(config.identity, &candidate, &config.n_list) {
                break candidate;
            }
        };
        match config.identity {
            Identity::Semifinite => {
                for &n in &config.n_list {
                    cases.push((params, n));
                }
            }
            // the decay fit consumes the whole shift list inside one case
            _ => cases.push((params, 0)),
        }
    }
    cases
}

fn failed_case(params: ParamSet, shift_n: u32, err: &Error) -> CaseResult {
    CaseResult {
        params: params.into(),
        shift_n,
        lhs: Complex64::new(0.0, 0.0).into(),
        rhs: Complex64::new(0.0, 0.0).into(),
        rel_dev: f64::MAX,
        terms_used: 0,
        pass: false,
        error: Some(err.to_string()),
    }
}

/// Evaluate a single case.
fn evaluate_case(config: &RunConfig, params: ParamSet, shift_n: u32) -> CaseResult {
    // the series must be tighter than the comparison tolerance
    let series_tol = (config.tol * 1e-2).clamp(1e-13, 1e-3);
    let mt = config.max_terms;
    let outcome: Result<(Complex64, Complex64, usize, f64)> = match config.identity {
        Identity::Dougall => (|| {
            let lhs = sum_h22(&params, series_tol, mt)?;
            let rhs = dougall_rhs(&params)?;
            let dev = relative_deviation(lhs.value, rhs);
            Ok((lhs.value, rhs, lhs.terms_used, dev))
        })(),
        Identity::Saalschutz => (|| {
            let lhs = saalschutz_lhs(&params, series_tol, mt)?;
            let rhs = saalschutz_rhs(&params, series_tol, mt)?;
            let dev = relative_deviation(lhs.value, rhs);
            Ok((lhs.value, rhs, lhs.terms_used, dev))
        })(),
        Identity::Semifinite => (|| {
            let case = IdentityCase::new(params, shift_n, series_tol);
            let lhs = semifinite_lhs(&case, mt)?;
            let rhs = semifinite_rhs(&case, mt)?;
            let dev = relative_deviation(lhs.value, rhs);
            Ok((lhs.value, rhs, lhs.terms_used, dev))
        })(),
        Identity::LimitDecay => (|| {
            // fitted log-log decay slope of the first right-hand term
            // against the predicted exponent 1 − Re(c+d−a−b)
            let mut points = Vec::with_capacity(config.n_list.len());
            for &n in &config.n_list {
                let case = IdentityCase::new(params, n, series_tol);
                let t = semifinite_first_term(&case, mt)?;
                points.push(((n as f64).ln(), t.norm().ln()));
            }
            let slope = fit_slope(&points);
            let predicted = 1.0 - params.excess().re;
            let dev = (slope - predicted).abs();
            Ok((
                Complex64::new(slope, 0.0),
                Complex64::new(predicted, 0.0),
                config.n_list.len(),
                dev,
            ))
        })(),
    };
    match outcome {
        Ok((lhs, rhs, terms_used, rel_dev)) => CaseResult {
            params: params.into(),
            shift_n,
            lhs: lhs.into(),
            rhs: rhs.into(),
            rel_dev,
            terms_used,
            pass: rel_dev <= config.tol,
            error: None,
        },
        Err(err) => failed_case(params, shift_n, &err),
    }
}

fn fit_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let sx: f64 = points.iter().map(|p| p.0).sum();
    let sy: f64 = points.iter().map(|p| p.1).sum();
    let sxx: f64 = points.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = points.iter().map(|p| p.0 * p.1).sum();
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}

/// Run a full verification: deterministic given (seed, config), regardless
/// of the parallelism level — workers fill indexed slots and the report
/// keeps sampling order.
pub fn run_verification(config: &RunConfig) -> Result<VerificationReport> {
    config.validate()?;
    let started = std::time::Instant::now();
    let case_inputs = sample_cases(config);
    let workers = config.parallelism.min(case_inputs.len().max(1));

    let mut results: Vec<Option<CaseResult>> = vec![None; case_inputs.len()];
    if workers <= 1 {
        for (slot, &(params, n)) in results.iter_mut().zip(case_inputs.iter()) {
            *slot = Some(evaluate_case(config, params, n));
        }
    } else {
        let next = std::sync::atomic::AtomicUsize::new(0);
        let slots: Vec<std::sync::Mutex<Option<CaseResult>>> = results
            .iter()
            .map(|_| std::sync::Mutex::new(None))
            .collect();
        std::thread::scope(|scope| {
            for _ in 0..workers {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                    if i >= case_inputs.len() {
                        break;
                    }
                    let (params, n) = case_inputs[i];
                    *slots[i].lock().unwrap() = Some(evaluate_case(config, params, n));
                });
            }
        });
        for (slot, cell) in results.iter_mut().zip(slots) {
            *slot = cell.into_inner().unwrap();
        }
    }

    let cases: Vec<CaseResult> = results.into_iter().map(|r| r.unwrap()).collect();
    let passed = cases.iter().filter(|c| c.pass).count();
    let max_rel_dev = cases.iter().map(|c| c.rel_dev).fold(0.0f64, f64::max);
    Ok(VerificationReport {
        identity: config.identity,
        seed: config.seed,
        tolerance: config.tol,
        summary: Summary {
            total: cases.len(),
            passed,
            max_rel_dev,
            wall_time_seconds: started.elapsed().as_secs_f64(),
        },
        cases,
    })
}

/// Render a report. JSON keeps a stable field order and round-trips through
/// [`parse_report`]; CSV is one row per case; the human format is an
/// aligned table with a summary line.
pub fn emit_report(report: &VerificationReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        OutputFormat::Csv => emit_csv(report),
        OutputFormat::Human => emit_human(report),
    }
}

/// Parse a JSON report produced by [`emit_report`].
pub fn parse_report(json: &str) -> Result<VerificationReport> {
    serde_json::from_str(json).map_err(|e| Error::Config(format!("invalid report JSON: {e}")))
}

fn emit_csv(report: &VerificationReport) -> String {
    let mut out = String::from(
        "identity,seed,case_index,a_re,a_im,b_re,b_im,c_re,c_im,d_re,d_im,\
         shift_n,lhs_re,lhs_im,rhs_re,rhs_im,rel_dev,terms_used,pass\n",
    );
    for (i, case) in report.cases.iter().enumerate() {
        let p = &case.params;
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
            report.identity.as_str(),
            report.seed,
            i,
            p.a.re,
            p.a.im,
            p.b.re,
            p.b.im,
            p.c.re,
            p.c.im,
            p.d.re,
            p.d.im,
            case.shift_n,
            case.lhs.re,
            case.lhs.im,
            case.rhs.re,
            case.rhs.im,
            case.rel_dev,
            case.terms_used,
            case.pass
        ));
    }
    out
}

fn emit_human(report: &VerificationReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "identity: {}   seed: {}   tolerance: {:.3e}\n",
        report.identity.as_str(),
        report.seed,
        report.tolerance
    ));
    out.push_str(&format!(
        "{:>5} {:>3} {:>44} {:>12} {:>9} {:>6}\n",
        "case", "n", "params (re parts a,b,c,d)", "rel_dev", "terms", "pass"
    ));
    for (i, case) in report.cases.iter().enumerate() {
        let p = &case.params;
        out.push_str(&format!(
            "{:>5} {:>3} {:>44} {:>12.3e} {:>9} {:>6}\n",
            i,
            case.shift_n,
            format!(
                "({:+.3},{:+.3},{:+.3},{:+.3})",
                p.a.re, p.b.re, p.c.re, p.d.re
            ),
            case.rel_dev,
            case.terms_used,
            if case.pass { "ok" } else { "FAIL" }
        ));
        if let Some(err) = &case.error {
            out.push_str(&format!("      error: {err}\n"));
        }
    }
    out.push_str(&format!(
        "summary: {}/{} passed, max_rel_dev {:.3e}, wall time {:.2}s\n",
        report.summary.passed,
        report.summary.total,
        report.summary.max_rel_dev,
        report.summary.wall_time_seconds
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick_config(identity: Identity, samples: usize) -> RunConfig {
        let mut config = RunConfig::new(identity, samples, 42);
        config.tol = 1e-8;
        config
    }

    #[test]
    fn invalid_configs_rejected() {
        let config = quick_config(Identity::Dougall, 0);
        assert!(matches!(run_verification(&config), Err(Error::Config(_))));
        let mut config = quick_config(Identity::Dougall, 1);
        config.tol = -1.0;
        assert!(matches!(run_verification(&config), Err(Error::Config(_))));
        let mut config = quick_config(Identity::Semifinite, 1);
        config.n_list.clear();
        assert!(matches!(run_verification(&config), Err(Error::Config(_))));
    }

    #[test]
    fn sampling_is_deterministic_and_admissible() {
        let config = quick_config(Identity::Dougall, 25);
        let c1 = sample_cases(&config);
        let c2 = sample_cases(&config);
        assert_eq!(c1.len(), 25);
        for ((p1, n1), (p2, n2)) in c1.iter().zip(&c2) {
            assert_eq!(p1, p2);
            assert_eq!(n1, n2);
            assert!(p1.excess().re >= 1.5);
        }
    }

    #[test]
    fn semifinite_cases_cross_samples_with_shifts() {
        let mut config = quick_config(Identity::Semifinite, 4);
        config.n_list = vec![0, 2, 5];
        let cases = sample_cases(&config);
        assert_eq!(cases.len(), 12);
        assert_eq!(cases[0].1, 0);
        assert_eq!(cases[1].1, 2);
        assert_eq!(cases[2].1, 5);
        // same params within one sample block
        assert_eq!(cases[0].0, cases[1].0);
        assert_ne!(cases[0].0, cases[3].0);
    }

    #[test]
    fn dougall_run_passes_and_is_deterministic() {
        let mut config = quick_config(Identity::Dougall, 12);
        config.format = OutputFormat::Json;
        let r1 = run_verification(&config).unwrap();
        let r2 = run_verification(&config).unwrap();
        assert!(r1.all_passed(), "max dev {}", r1.summary.max_rel_dev);
        assert_eq!(
            emit_report(&r1, OutputFormat::Json),
            emit_report(&r2, OutputFormat::Json)
        );
    }

    #[test]
    fn parallel_run_matches_serial_bytes() {
        let mut serial = quick_config(Identity::Saalschutz, 10);
        serial.parallelism = 1;
        let mut parallel = serial.clone();
        parallel.parallelism = 4;
        let r1 = run_verification(&serial).unwrap();
        let r2 = run_verification(&parallel).unwrap();
        assert_eq!(
            emit_report(&r1, OutputFormat::Json),
            emit_report(&r2, OutputFormat::Json)
        );
        assert_eq!(
            emit_report(&r1, OutputFormat::Csv),
            emit_report(&r2, OutputFormat::Csv)
        );
    }

    #[test]
    fn json_round_trip() {
        let config = quick_config(Identity::Semifinite, 2);
        let report = run_verification(&config).unwrap();
        let json = emit_report(&report, OutputFormat::Json);
        let parsed = parse_report(&json).unwrap();
        // wall time is presentation-only and not serialized
        let mut expected = report.clone();
        expected.summary.wall_time_seconds = 0.0;
        assert_eq!(parsed, expected);
    }

    #[test]
    fn empty_outcomes_render() {
        let report = VerificationReport {
            identity: Identity::Dougall,
            seed: 0,
            tolerance: 1e-8,
            cases: vec![],
            summary: Summary {
                total: 0,
                passed: 0,
                max_rel_dev: 0.0,
                wall_time_seconds: 0.0,
            },
        };
        for format in [OutputFormat::Json, OutputFormat::Csv, OutputFormat::Human] {
            assert!(!emit_report(&report, format).is_empty());
        }
        let parsed = parse_report(&emit_report(&report, OutputFormat::Json)).unwrap();
        assert_eq!(parsed.summary.total, 0);
    }

    #[test]
    fn limit_decay_slope_fits() {
        let mut config = quick_config(Identity::LimitDecay, 3);
        config.tol = 0.15;
        config.n_list = vec![64, 128, 256, 512];
        let report = run_verification(&config).unwrap();
        assert!(report.all_passed(), "{:#?}", report.summary);
    }

    #[test]
    fn complex_json_shape() {
        let z = Cx { re: 1.5, im: -2.5 };
        assert_eq!(
            serde_json::to_string(&z).unwrap(),
            r#"{"re":1.5,"im":-2.5}"#
        );
    }
}
