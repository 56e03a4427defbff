//! Unilateral generalized hypergeometric series ₁₊ᵣFₛ(z), with convergence
//! classification and tail completion at unit argument.
//!
//! Terms follow the ratio recurrence
//! t₀ = 1, tₖ₊₁ = tₖ · z · ∏(aᵢ+k) / [(1+k) · ∏(bⱼ+k)].
//!
//! At z = 1 a balanced shape decays like k^(−1−e) where e is the parameter
//! excess, so truncation alone cannot reach tight tolerances within a sane
//! term budget once Re(e) is small. The partial sums satisfy
//! S(K) = S(∞) − K^(−e)·g(1/K) with g analytic, so the engine applies
//! Richardson extrapolation over checkpoints K, 2K, 4K, … with the exponent
//! ladder e, e+1, e+2, …; the reported error estimate is the difference of
//! successive extrapolants.

use crate::error::{Error, Result};
use num_complex::Complex64;

/// Default summation budget; the `verify` CLI can override it through the
/// VERIFY_MAX_TERMS environment variable.
pub const DEFAULT_MAX_TERMS: usize = 200_000;

/// Unit-argument series below this excess margin are refused as divergent:
/// convergence still holds for any positive excess, but the budget to reach
/// useful tolerances stops being desk-scale.
pub const MIN_EXCESS_MARGIN: f64 = 0.05;

/// First Richardson checkpoint (then doubling).
const FIRST_CHECKPOINT: usize = 32;

const LN_2: f64 = std::f64::consts::LN_2;

/// Parameters of ₁₊ᵣFₛ(numerators; denominators; z). The factorial slot
/// (1)ₖ = k! of the classical definition is implicit and never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesSpec {
    pub numerators: Vec<Complex64>,
    pub denominators: Vec<Complex64>,
    pub argument: Complex64,
}

impl SeriesSpec {
    pub fn new(
        numerators: Vec<Complex64>,
        denominators: Vec<Complex64>,
        argument: Complex64,
    ) -> Self {
        Self {
            numerators,
            denominators,
            argument,
        }
    }

    /// Unit-argument shorthand.
    pub fn at_unit(numerators: Vec<Complex64>, denominators: Vec<Complex64>) -> Self {
        Self::new(numerators, denominators, Complex64::new(1.0, 0.0))
    }

    /// Smallest m such that some numerator is the nonpositive integer −m
    /// (within factor tolerance), making the series a degree-m polynomial.
    fn termination_order(&self) -> Option<usize> {
        let mut order: Option<usize> = None;
        for &a in &self.numerators {
            let r = a.re.round();
            if r <= 0.0 && (a - r).norm() < 1e-12 * (1.0 + a.norm()) {
                let m = (-r) as usize;
                order = Some(order.map_or(m, |cur| cur.min(m)));
            }
        }
        order
    }

    /// Term ratio tₖ₊₁/tₖ at index k (factorial slot included, argument not).
    /// Products accumulate before the single division, so permuting either
    /// parameter list leaves the result bit-identical.
    fn bare_ratio(&self, k: f64) -> Complex64 {
        let mut num = Complex64::new(1.0, 0.0);
        for &a in &self.numerators {
            num *= a + k;
        }
        let mut den = Complex64::new(1.0 + k, 0.0);
        for &b in &self.denominators {
            den *= b + k;
        }
        num / den
    }
}

/// How a summation ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Converged,
    /// A numerator parameter hit a nonpositive integer; the series is a
    /// polynomial and the value is exact.
    Terminated,
    MaxTermsExceeded,
    Diverged,
}

/// Value, error estimate, and bookkeeping for one summation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    pub value: Complex64,
    pub abs_error_estimate: f64,
    pub terms_used: usize,
    pub verdict: Verdict,
}

impl SeriesResult {
    fn diverged() -> Self {
        Self {
            value: Complex64::new(0.0, 0.0),
            abs_error_estimate: f64::INFINITY,
            terms_used: 0,
            verdict: Verdict::Diverged,
        }
    }
}

/// Parameter excess (Σ denominators − Σ numerators) of a unit-argument
/// series; a positive real part guarantees convergence at z = 1 and the
/// terms decay like k^(−1−excess).
pub fn convergence_excess(spec: &SeriesSpec) -> Result<Complex64> {
    if spec.numerators.len() != spec.denominators.len() + 1 {
        return Err(Error::Shape {
            numerators: spec.numerators.len(),
            denominators: spec.denominators.len(),
        });
    }
    let num_sum: Complex64 = spec.numerators.iter().sum();
    let den_sum: Complex64 = spec.denominators.iter().sum();
    Ok(den_sum - num_sum)
}

/// Sum the series to the requested tolerance.
///
/// The verdict is `Terminated` for polynomial cases, `Diverged` when z = 1
/// and the excess is below [`MIN_EXCESS_MARGIN`] (or |z| > 1), `Converged`
/// when the stopping rule fired with the error estimate inside
/// tol·(1+|value|), and `MaxTermsExceeded` otherwise.
pub fn sum_series(spec: &SeriesSpec, tol: f64, max_terms: usize) -> Result<SeriesResult> {
    if !(tol > 0.0) {
        return Err(Error::Config(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    if max_terms == 0 {
        return Err(Error::Config("max_terms must be positive".into()));
    }
    for &b in &spec.denominators {
        let r = b.re.round();
        if r <= 0.0 && (b - r).norm() < 1e-12 * (1.0 + b.norm()) && (-r) as usize <= max_terms {
            return Err(Error::DegenerateDenominator { parameter: b });
        }
    }
    if let Some(m) = spec.termination_order() {
        if m < max_terms {
            return Ok(sum_terminating(spec, m));
        }
    }
    let z = spec.argument;
    if z == Complex64::new(1.0, 0.0) {
        let excess = convergence_excess(spec)?;
        if excess.re < MIN_EXCESS_MARGIN {
            return Ok(SeriesResult::diverged());
        }
        Ok(sum_unit_argument(spec, excess, tol, max_terms))
    } else if z.norm() > 1.0 {
        Ok(SeriesResult::diverged())
    } else {
        Ok(sum_geometric(spec, tol, max_terms))
    }
}

/// Polynomial case: exactly m+1 terms, no tail.
fn sum_terminating(spec: &SeriesSpec, m: usize) -> SeriesResult {
    let z = spec.argument;
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for k in 0..m {
        term *= spec.bare_ratio(k as f64) * z;
        sum += term;
    }
    SeriesResult {
        value: sum,
        abs_error_estimate: 1e-13 * sum.norm(),
        terms_used: m + 1,
        verdict: Verdict::Terminated,
    }
}

/// z = 1 engine: checkpointed summation with Richardson tail completion.
fn sum_unit_argument(
    spec: &SeriesSpec,
    excess: Complex64,
    tol: f64,
    max_terms: usize,
) -> SeriesResult {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut k = 1usize;

    if max_terms < 4 * FIRST_CHECKPOINT {
        // budget too small for a ladder; plain summation plus algebraic bound
        while k < max_terms {
            term *= spec.bare_ratio((k - 1) as f64);
            sum += term;
            k += 1;
        }
        let bound = 2.0 * term.norm() * (k as f64) / excess.re.max(1e-6);
        let verdict = if bound <= tol * (1.0 + sum.norm()) {
            Verdict::Converged
        } else {
            Verdict::MaxTermsExceeded
        };
        return SeriesResult {
            value: sum,
            abs_error_estimate: bound,
            terms_used: k,
            verdict,
        };
    }

    let mut checkpoint = FIRST_CHECKPOINT;
    let mut prev_diag: Vec<Complex64> = Vec::new();
    let mut prev_top: Option<Complex64> = None;
    let mut best: Option<(f64, Complex64)> = None;

    loop {
        while k < checkpoint {
            term *= spec.bare_ratio((k - 1) as f64);
            sum += term;
            k += 1;
            if term.norm() == 0.0 {
                // underflow: every later term is zero, the sum is final
                return SeriesResult {
                    value: sum,
                    abs_error_estimate: 1e-15 * (1.0 + sum.norm()),
                    terms_used: k,
                    verdict: Verdict::Converged,
                };
            }
        }

        // Neville row: eliminate K^(−e), K^(−e−1), … successively
        let mut diag = Vec::with_capacity(prev_diag.len() + 1);
        diag.push(sum);
        for p in 0..prev_diag.len() {
            let ladder_exp = excess + p as f64;
            let factor = (ladder_exp * LN_2).exp() - 1.0;
            let refined = diag[p] + (diag[p] - prev_diag[p]) / factor;
            diag.push(refined);
        }
        let top = *diag.last().unwrap();
        if let Some(prev) = prev_top {
            if diag.len() >= 3 {
                let err = (top - prev).norm();
                if best.map_or(true, |(b, _)| err < b) {
                    best = Some((err, top));
                }
                if err <= 0.5 * tol * (1.0 + top.norm()) {
                    return SeriesResult {
                        value: top,
                        abs_error_estimate: (2.0 * err).max(1e-15 * (1.0 + top.norm())),
                        terms_used: k,
                        verdict: Verdict::Converged,
                    };
                }
            }
        }
        prev_top = Some(top);
        prev_diag = diag;

        let next = checkpoint * 2;
        if next > max_terms {
            let (err, value) = best.unwrap_or((f64::INFINITY, sum));
            return SeriesResult {
                value,
                abs_error_estimate: err,
                terms_used: k,
                verdict: Verdict::MaxTermsExceeded,
            };
        }
        checkpoint = next;
    }
}

/// |z| ≤ 1, z ≠ 1: plain summation with the geometric stopping rule — stop
/// after the first k ≥ 8 where |tₖ| ≤ tol·|Sₖ| held for 3 consecutive terms
/// and the geometric tail estimate fits inside the tolerance.
fn sum_geometric(spec: &SeriesSpec, tol: f64, max_terms: usize) -> SeriesResult {
    let z = spec.argument;
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut prev_norm = 1.0f64;
    let mut consecutive = 0u32;
    let mut k = 1usize;
    let mut estimate = f64::INFINITY;
    while k < max_terms {
        term *= spec.bare_ratio((k - 1) as f64) * z;
        sum += term;
        k += 1;
        let tn = term.norm();
        if tn == 0.0 {
            return SeriesResult {
                value: sum,
                abs_error_estimate: 1e-15 * (1.0 + sum.norm()),
                terms_used: k,
                verdict: Verdict::Converged,
            };
        }
        let measured_rho = tn / prev_norm;
        prev_norm = tn;
        // the measured ratio climbs toward |z| from below, so floor it there
        let rho = measured_rho.max(z.norm()).min(0.99);
        estimate = tn * rho / (1.0 - rho);
        if tn <= tol * sum.norm() {
            consecutive += 1;
        } else {
            consecutive = 0;
        }
        if k >= 8 && consecutive >= 3 && estimate <= tol * (1.0 + sum.norm()) {
            return SeriesResult {
                value: sum,
                abs_error_estimate: estimate,
                terms_used: k,
                verdict: Verdict::Converged,
            };
        }
    }
    SeriesResult {
        value: sum,
        abs_error_estimate: estimate,
        terms_used: k,
        verdict: Verdict::MaxTermsExceeded,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::{gamma_ratio, GammaRatioSpec};
    use crate::pochhammer::pochhammer;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn naive_sum(spec: &SeriesSpec, terms: usize) -> Complex64 {
        let mut term = c(1.0, 0.0);
        let mut sum = term;
        for k in 0..terms - 1 {
            term *= spec.bare_ratio(k as f64) * spec.argument;
            sum += term;
        }
        sum
    }

    #[test]
    fn excess_of_balanced_saalschutz_shape_is_one() {
        // numerators (c+d−a−b−1, a, b), denominators (c, d): algebraic cancellation
        for (a, b, cc, d) in [
            (0.3, 0.4, 1.2, 1.5),
            (-0.2, 0.55, 2.1, 1.05),
            (0.11, -0.47, 1.9, 2.45),
        ] {
            let spec = SeriesSpec::at_unit(
                vec![c(cc + d - a - b - 1.0, 0.0), c(a, 0.0), c(b, 0.0)],
                vec![c(cc, 0.0), c(d, 0.0)],
            );
            let e = convergence_excess(&spec).unwrap();
            assert_relative_eq!(e.re, 1.0, epsilon = 1e-12);
            assert!(e.im.abs() < 1e-12);
        }
    }

    #[test]
    fn excess_of_gauss_shape() {
        let (a, b, d) = (0.3, 0.4, 1.5);
        let spec = SeriesSpec::at_unit(vec![c(a, 0.0), c(b, 0.0)], vec![c(d, 0.0)]);
        let e = convergence_excess(&spec).unwrap();
        assert_relative_eq!(e.re, d - a - b, epsilon = 1e-14);
    }

    #[test]
    fn excess_of_saalschutz_rhs_embedded_shape() {
        // numerators (c−a, c−b, 1), denominators (c−a−b+1, c+d−a−b): excess d−a−b
        let (a, b, cc, d) = (0.3, 0.4, 1.2, 1.5);
        let spec = SeriesSpec::at_unit(
            vec![c(cc - a, 0.0), c(cc - b, 0.0), c(1.0, 0.0)],
            vec![c(cc - a - b + 1.0, 0.0), c(cc + d - a - b, 0.0)],
        );
        let e = convergence_excess(&spec).unwrap();
        assert_relative_eq!(e.re, d - a - b, epsilon = 1e-12);
    }

    #[test]
    fn excess_shape_error() {
        let spec = SeriesSpec::at_unit(vec![c(0.3, 0.0)], vec![c(1.2, 0.0)]);
        assert!(matches!(
            convergence_excess(&spec),
            Err(Error::Shape { .. })
        ));
    }

    #[test]
    fn excess_invariant_under_permutation() {
        let spec1 = SeriesSpec::at_unit(
            vec![c(0.3, 0.1), c(0.4, -0.2), c(1.0, 0.0)],
            vec![c(1.2, 0.3), c(1.5, -0.1)],
        );
        let spec2 = SeriesSpec::at_unit(
            vec![c(1.0, 0.0), c(0.3, 0.1), c(0.4, -0.2)],
            vec![c(1.5, -0.1), c(1.2, 0.3)],
        );
        let e1 = convergence_excess(&spec1).unwrap();
        let e2 = convergence_excess(&spec2).unwrap();
        assert!((e1 - e2).norm() < 1e-15);
    }

    #[test]
    fn zero_numerator_terminates_immediately() {
        let spec = SeriesSpec::at_unit(
            vec![c(0.0, 0.0), c(0.4, 0.0), c(1.0, 0.0)],
            vec![c(1.2, 0.0), c(1.5, 0.0)],
        );
        let r = sum_series(&spec, 1e-10, DEFAULT_MAX_TERMS).unwrap();
        assert_eq!(r.verdict, Verdict::Terminated);
        assert_eq!(r.terms_used, 1);
        assert_relative_eq!(r.value.re, 1.0);
    }

    #[test]
    fn gauss_summation_cross_check() {
        // ₂F₁(a,b;d;1) = Γ(d)Γ(d−a−b) / (Γ(d−a)Γ(d−b))
        let (a, b, d) = (0.3, 0.4, 1.5);
        let spec = SeriesSpec::at_unit(vec![c(a, 0.0), c(b, 0.0)], vec![c(d, 0.0)]);
        let r = sum_series(&spec, 1e-11, DEFAULT_MAX_TERMS).unwrap();
        assert_eq!(r.verdict, Verdict::Converged);
        let closed = gamma_ratio(&GammaRatioSpec::new(
            vec![c(d, 0.0), c(d - a - b, 0.0)],
            vec![c(d - a, 0.0), c(d - b, 0.0)],
        ))
        .unwrap();
        assert!((r.value - closed).norm() <= 1e-10 * closed.norm());
        // and the independent high-precision value
        assert_relative_eq!(r.value.re, 1.181_191_851_094_815_8, max_relative = 1e-11);
    }

    #[test]
    fn saalschutz_lhs_value_matches_reference() {
        // ₃F₂(1.0, 0.3, 0.4; 1.2, 1.5; 1), high-precision reference
        let spec = SeriesSpec::at_unit(
            vec![c(1.0, 0.0), c(0.3, 0.0), c(0.4, 0.0)],
            vec![c(1.2, 0.0), c(1.5, 0.0)],
        );
        let r = sum_series(&spec, 1e-11, DEFAULT_MAX_TERMS).unwrap();
        assert_eq!(r.verdict, Verdict::Converged);
        assert_relative_eq!(r.value.re, 1.131_202_304_812_786_7, max_relative = 1e-11);
        assert!(r.value.im.abs() < 1e-13);
    }

    #[test]
    fn terminating_saalschutz_matches_closed_form() {
        // ₃F₂(−m, a, b; c, 1+a+b−c−m; 1) = (c−a)ₘ(c−b)ₘ / [(c)ₘ(c−a−b)ₘ]
        let (a, b, cc) = (c(0.3, 0.0), c(0.4, 0.0), c(1.2, 0.0));
        let m = 3i64;
        let d = 1.0 + a + b - cc - m as f64;
        let spec = SeriesSpec::at_unit(vec![c(-(m as f64), 0.0), a, b], vec![cc, d]);
        let r = sum_series(&spec, 1e-12, DEFAULT_MAX_TERMS).unwrap();
        assert_eq!(r.verdict, Verdict::Terminated);
        assert_eq!(r.terms_used, 4);
        let closed = (pochhammer(cc - a, m).unwrap() * pochhammer(cc - b, m).unwrap())
            / (pochhammer(cc, m).unwrap() * pochhammer(cc - a - b, m).unwrap());
        assert!((r.value - closed).norm() <= 1e-12 * closed.norm());
        // brute-force reference value
        assert_relative_eq!(r.value.re, 1.262_290_909_090_909_1, max_relative = 1e-12);
    }

    #[test]
    fn termination_exactness_against_brute_force() {
        for m in [1i64, 2, 5, 11, 20] {
            let spec = SeriesSpec::at_unit(
                vec![c(-(m as f64), 0.0), c(0.7, 0.3), c(-1.4, -0.2)],
                vec![c(2.2, 0.1), c(1.7, -0.4)],
            );
            let r = sum_series(&spec, 1e-12, DEFAULT_MAX_TERMS).unwrap();
            assert_eq!(r.verdict, Verdict::Terminated);
            // brute force through shifted factorials
            let mut brute = c(0.0, 0.0);
            for k in 0..=m {
                let mut t = c(1.0, 0.0);
                for &num in &spec.numerators {
                    t *= pochhammer(num, k).unwrap();
                }
                for &den in &spec.denominators {
                    t /= pochhammer(den, k).unwrap();
                }
                t /= pochhammer(c(1.0, 0.0), k).unwrap();
                brute += t;
            }
            assert!(
                (r.value - brute).norm() <= 1e-12 * brute.norm().max(1.0),
                "m={m}: {} vs {}",
                r.value,
                brute
            );
        }
    }

    #[test]
    fn divergent_when_excess_below_margin() {
        let spec = SeriesSpec::at_unit(
            vec![c(0.9, 0.0), c(0.8, 0.0), c(1.0, 0.0)],
            vec![c(1.2, 0.0), c(1.49, 0.0)],
        );
        let r = sum_series(&spec, 1e-10, DEFAULT_MAX_TERMS).unwrap();
        assert_eq!(r.verdict, Verdict::Diverged);
    }

    #[test]
    fn divergent_outside_unit_disk() {
        let spec = SeriesSpec::new(
            vec![c(0.5, 0.0), c(1.0, 0.0)],
            vec![c(2.0, 0.0)],
            c(1.5, 0.0),
        );
        let r = sum_series(&spec, 1e-10, DEFAULT_MAX_TERMS).unwrap();
        assert_eq!(r.verdict, Verdict::Diverged);
    }

    #[test]
    fn degenerate_denominator_rejected() {
        let spec = SeriesSpec::at_unit(
            vec![c(0.5, 0.0), c(0.7, 0.0), c(1.0, 0.0)],
            vec![c(-2.0, 0.0), c(4.5, 0.0)],
        );
        assert!(matches!(
            sum_series(&spec, 1e-10, DEFAULT_MAX_TERMS),
            Err(Error::DegenerateDenominator { .. })
        ));
    }

    #[test]
    fn slow_series_converges_with_tail_completion() {
        // excess 0.05: naive truncation would need astronomically many terms
        let spec = SeriesSpec::at_unit(
            vec![c(0.3, 0.0), c(0.4, 0.0), c(1.0, 0.0)],
            vec![c(0.32, 0.0), c(1.43, 0.0)],
        );
        let r = sum_series(&spec, 1e-10, DEFAULT_MAX_TERMS).unwrap();
        assert_eq!(r.verdict, Verdict::Converged);
        assert!(r.terms_used < 20_000, "took {} terms", r.terms_used);
        // high-precision reference (3F2(0.3,0.4,1; 0.32,1.43; 1))
        let reference = 8.487_858_456_344_352;
        assert_relative_eq!(r.value.re, reference, max_relative = 1e-9);
    }

    #[test]
    fn complex_parameters_converge() {
        let spec = SeriesSpec::at_unit(
            vec![c(0.25, -0.31), c(-0.2, 0.17), c(1.0, 0.0)],
            vec![c(1.1, 0.4), c(1.45, -0.22)],
        );
        let r = sum_series(&spec, 1e-10, DEFAULT_MAX_TERMS).unwrap();
        assert_eq!(r.verdict, Verdict::Converged);
        // frozen high-precision value of this 3F2
        assert_relative_eq!(r.value.re, 1.024_747_061_353_018, max_relative = 1e-9);
        assert_relative_eq!(r.value.im, 0.080_596_021_175_101_84, max_relative = 1e-8);
    }

    #[test]
    fn reported_estimate_bounds_error_against_deep_reference() {
        // fast-decaying spec: a 10^6-term naive sum is the truth to ~1e-18
        let spec = SeriesSpec::at_unit(
            vec![c(0.1, 0.0), c(0.2, 0.0), c(1.0, 0.0)],
            vec![c(2.0, 0.0), c(2.3, 0.0)],
        );
        let r = sum_series(&spec, 1e-10, DEFAULT_MAX_TERMS).unwrap();
        assert_eq!(r.verdict, Verdict::Converged);
        let reference = naive_sum(&spec, 1_000_000);
        assert!(
            (r.value - reference).norm() <= r.abs_error_estimate.max(1e-12),
            "error {} vs estimate {}",
            (r.value - reference).norm(),
            r.abs_error_estimate
        );
    }

    #[test]
    fn partial_sum_oracle_geometric() {
        // |z| < 1: value must agree with a 4x-deeper naive sum within the estimate
        let spec = SeriesSpec::new(
            vec![c(0.5, 0.1), c(1.1, -0.3)],
            vec![c(1.9, 0.2)],
            c(0.6, 0.2),
        );
        let r = sum_series(&spec, 1e-10, DEFAULT_MAX_TERMS).unwrap();
        assert_eq!(r.verdict, Verdict::Converged);
        let deeper = naive_sum(&spec, 4 * r.terms_used);
        assert!((r.value - deeper).norm() <= r.abs_error_estimate);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn unit_argument_matches_deep_naive_sum(
            a_re in -0.5f64..0.8, a_im in -0.5f64..0.5,
            b_re in -0.5f64..0.8, b_im in -0.5f64..0.5,
            c_re in 1.0f64..2.5, c_im in -0.5f64..0.5,
            d_re in 1.6f64..2.5, d_im in -0.5f64..0.5,
        ) {
            // excess = c+d−a−b−1; restrict to Re ≥ 1.3 so a 300k-term naive
            // sum is itself accurate enough to serve as the reference
            let spec = SeriesSpec::at_unit(
                vec![c(a_re, a_im), c(b_re, b_im), c(1.0, 0.0)],
                vec![c(c_re, c_im), c(d_re, d_im)],
            );
            let e = convergence_excess(&spec).unwrap();
            prop_assume!(e.re >= 1.3);
            let r = sum_series(&spec, 1e-10, DEFAULT_MAX_TERMS).unwrap();
            prop_assert_eq!(r.verdict, Verdict::Converged);
            let reference = naive_sum(&spec, 300_000);
            // the reference carries its own truncation tail plus f64
            // recurrence drift over 3e5 terms
            let naive_tail = 2.0 * 300_000f64.powf(-e.re) / e.re;
            let naive_drift = 1e-10 * (1.0 + reference.norm());
            prop_assert!(
                (r.value - reference).norm() <= r.abs_error_estimate + naive_tail + naive_drift,
                "value {} reference {} estimate {}", r.value, reference, r.abs_error_estimate
            );
        }
    }
}
