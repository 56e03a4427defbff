//! The bilateral series ₂H₂(a, b; c, d | 1) = Σₖ₌₋∞^∞ (a)ₖ(b)ₖ/[(c)ₖ(d)ₖ].
//!
//! Convergence requires Re(c+d−a−b) > 1. The two-sided sum splits into a
//! nonnegative-k unilateral series and a reflected negative-k series, each
//! summed independently:
//!
//! - k ≥ 0 half: ₃F₂(a, b, 1; c, d; 1), since the appended (1)ₖ cancels
//!   the implicit factorial.
//! - k = −m half: (a)₋ₘ(b)₋ₘ/[(c)₋ₘ(d)₋ₘ] = (1−c)ₘ(1−d)ₘ/[(1−a)ₘ(1−b)ₘ],
//!   i.e. ₃F₂(1−c, 1−d, 1; 1−a, 1−b; 1) minus its m = 0 term.

use crate::error::{Error, PoleSite, Result};
use crate::gamma::{log_gamma, nearest_pole};
use crate::hyperseries::{sum_series, SeriesResult, SeriesSpec, Verdict};
use crate::pochhammer::{pochhammer_ratio, PochhammerRatioSpec};
use num_complex::Complex64;

/// Convergence margin on Re(c+d−a−b); below this the two halves would need
/// more than the desk-scale term budget.
pub const H22_EXCESS_MARGIN: f64 = 1.05;

/// Largest |Im| component accepted, keeping the Γ kernel inside its
/// accuracy-tested envelope.
pub const MAX_IMAGINARY: f64 = 50.0;

/// The parameter quadruple (a, b, c, d) naming a ₂H₂ instance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamSet {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

impl ParamSet {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        Self { a, b, c, d }
    }

    /// Re(c+d−a−b), the quantity Theorem-level convergence conditions bound.
    pub fn excess(&self) -> Complex64 {
        self.c + self.d - self.a - self.b
    }

    /// Check pole-freeness of the term factors (1−a, 1−b, c, d) and the
    /// imaginary-part envelope. Convergence is checked by the summators.
    pub fn validate(&self) -> Result<()> {
        for (v, name) in [(self.a, "a"), (self.b, "b"), (self.c, "c"), (self.d, "d")] {
            if v.im.abs() > MAX_IMAGINARY {
                return Err(Error::OutOfRange {
                    field: name,
                    value: v.im,
                    limit: MAX_IMAGINARY,
                });
            }
        }
        for (i, v) in [1.0 - self.a, 1.0 - self.b, self.c, self.d]
            .into_iter()
            .enumerate()
        {
            if nearest_pole(v).is_some() {
                return Err(Error::Pole {
                    argument: v,
                    site: PoleSite::Denominator(i),
                });
            }
        }
        Ok(())
    }
}

/// A single bilateral term (a)ₖ(b)ₖ/[(c)ₖ(d)ₖ], reflected for k < 0.
///
/// Beyond the direct-product range the whole ratio is assembled in log
/// space: the individual shifted factorials overflow long before the
/// O(k^(−Re(c+d−a−b))) ratio does.
pub fn h22_term(params: &ParamSet, k: i64) -> Result<Complex64> {
    let (numerators, denominators, index) = if k >= 0 {
        ([params.a, params.b], [params.c, params.d], k)
    } else {
        (
            [1.0 - params.c, 1.0 - params.d],
            [1.0 - params.a, 1.0 - params.b],
            -k,
        )
    };
    if index <= 64 {
        return pochhammer_ratio(&PochhammerRatioSpec::new(
            numerators.to_vec(),
            denominators.to_vec(),
            index,
        ));
    }
    bracket_ratio_log(&numerators, &denominators, index)
}

/// ∏(numᵢ)ₖ / ∏(denⱼ)ₖ for large k ≥ 0 as a single exponential of summed
/// log-gamma differences.
fn bracket_ratio_log(
    numerators: &[Complex64],
    denominators: &[Complex64],
    k: i64,
) -> Result<Complex64> {
    let kf = k as f64;
    let mut num_log = Complex64::new(0.0, 0.0);
    for &x in numerators {
        match nearest_pole(x) {
            Some(pole) if -pole < k => return Ok(Complex64::new(0.0, 0.0)),
            Some(_) => {
                // integer base below the zero window: (x)ₖ has no zero factor
                for j in 0..k {
                    num_log += (x + j as f64).ln();
                }
            }
            None => num_log += log_gamma(x + kf)? - log_gamma(x)?,
        }
    }
    let mut den_log = Complex64::new(0.0, 0.0);
    for &y in denominators {
        match nearest_pole(y) {
            Some(pole) if -pole < k => {
                return Err(Error::DivisionByZero {
                    denominator: y,
                    index: k,
                })
            }
            Some(_) => {
                for j in 0..k {
                    den_log += (y + j as f64).ln();
                }
            }
            None => den_log += log_gamma(y + kf)? - log_gamma(y)?,
        }
    }
    let log_sum = num_log - den_log;
    if log_sum.re > 709.0 {
        return Err(Error::Overflow {
            log_magnitude: log_sum.re,
        });
    }
    Ok(log_sum.exp())
}

/// Sum the bilateral series: both halves with their own stopping rules,
/// added at the end.
pub fn sum_h22(params: &ParamSet, tol: f64, max_terms: usize) -> Result<SeriesResult> {
    params.validate()?;
    let excess = params.excess();
    if excess.re < H22_EXCESS_MARGIN {
        return Err(Error::DivergentInput { excess });
    }
    let one = Complex64::new(1.0, 0.0);
    let positive = sum_series(
        &SeriesSpec::at_unit(vec![params.a, params.b, one], vec![params.c, params.d]),
        tol,
        max_terms,
    )?;
    let negative = sum_series(
        &SeriesSpec::at_unit(
            vec![one - params.c, one - params.d, one],
            vec![one - params.a, one - params.b],
        ),
        tol,
        max_terms,
    )?;
    let verdict = match (positive.verdict, negative.verdict) {
        (Verdict::Diverged, _) | (_, Verdict::Diverged) => Verdict::Diverged,
        (Verdict::MaxTermsExceeded, _) | (_, Verdict::MaxTermsExceeded) => {
            Verdict::MaxTermsExceeded
        }
        _ => Verdict::Converged,
    };
    Ok(SeriesResult {
        value: positive.value + negative.value - 1.0,
        abs_error_estimate: positive.abs_error_estimate + negative.abs_error_estimate,
        terms_used: positive.terms_used + negative.terms_used,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::{gamma_ratio, GammaRatioSpec};
    use approx::assert_relative_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn params(a: f64, b: f64, cc: f64, d: f64) -> ParamSet {
        ParamSet::new(c(a, 0.0), c(b, 0.0), c(cc, 0.0), c(d, 0.0))
    }

    #[test]
    fn term_trivial_indices() {
        let p = params(0.3, 0.4, 1.2, 1.5);
        assert_eq!(h22_term(&p, 0).unwrap(), c(1.0, 0.0));
        let t1 = h22_term(&p, 1).unwrap();
        assert_relative_eq!(t1.re, 0.3 * 0.4 / (1.2 * 1.5), max_relative = 1e-14);
        let tm1 = h22_term(&p, -1).unwrap();
        let expect = (1.0 - 1.2) * (1.0 - 1.5) / ((1.0 - 0.3) * (1.0 - 0.4));
        assert_relative_eq!(tm1.re, expect, max_relative = 1e-14);
    }

    #[test]
    fn sum_matches_closed_form_oracle() {
        // independent high-precision value of the bilateral sum
        let p = params(0.3, 0.4, 1.2, 1.5);
        let r = sum_h22(&p, 1e-11, 200_000).unwrap();
        assert_eq!(r.verdict, Verdict::Converged);
        assert_relative_eq!(r.value.re, 1.447_380_527_739_203_6, max_relative = 1e-9);
        assert!(r.value.im.abs() < 1e-12);
    }

    #[test]
    fn sum_matches_complex_oracle() {
        let p = ParamSet::new(c(0.25, -0.31), c(-0.2, 0.17), c(1.1, 0.4), c(1.45, -0.22));
        let r = sum_h22(&p, 1e-11, 200_000).unwrap();
        assert_eq!(r.verdict, Verdict::Converged);
        assert_relative_eq!(r.value.re, 1.248_816_398_554_832_3, max_relative = 1e-9);
        assert_relative_eq!(r.value.im, 0.222_345_007_893_897, max_relative = 1e-8);
    }

    #[test]
    fn gauss_reduction_when_c_is_one() {
        // c = 1 kills every k < 0 term, leaving ₂F₁(a,b;d;1)
        let p = params(0.3, 0.4, 1.0, 1.5);
        let r = sum_h22(&p, 1e-11, 200_000).unwrap();
        let gauss = gamma_ratio(&GammaRatioSpec::new(
            vec![c(1.5, 0.0), c(1.5 - 0.7, 0.0)],
            vec![c(1.2, 0.0), c(1.1, 0.0)],
        ))
        .unwrap();
        assert!((r.value - gauss).norm() <= 1e-9 * gauss.norm());
        // term-by-term: the negative half really is zero
        for m in 1..6 {
            assert_eq!(h22_term(&p, -m).unwrap(), c(0.0, 0.0));
        }
    }

    #[test]
    fn swap_symmetry_is_exact() {
        let p = ParamSet::new(c(0.25, -0.31), c(-0.2, 0.17), c(1.1, 0.4), c(1.45, -0.22));
        let ab = ParamSet::new(p.b, p.a, p.c, p.d);
        let cd = ParamSet::new(p.a, p.b, p.d, p.c);
        let r = sum_h22(&p, 1e-10, 200_000).unwrap();
        let r_ab = sum_h22(&ab, 1e-10, 200_000).unwrap();
        let r_cd = sum_h22(&cd, 1e-10, 200_000).unwrap();
        // identical term sequences up to commuting factor products
        assert_eq!(r.value, r_ab.value);
        assert_eq!(r.value, r_cd.value);
    }

    #[test]
    fn divergent_input_rejected() {
        let p = params(0.9, 0.8, 1.2, 1.5); // excess = 1.0 < 1.05
        assert!(matches!(
            sum_h22(&p, 1e-10, 200_000),
            Err(Error::DivergentInput { .. })
        ));
    }

    #[test]
    fn pole_and_envelope_validation() {
        // 1−a = 0 pole
        let p = params(1.0, 0.4, 2.2, 1.5);
        assert!(matches!(
            sum_h22(&p, 1e-10, 200_000),
            Err(Error::Pole { .. })
        ));
        // imaginary part outside the envelope
        let p = ParamSet::new(c(0.3, 60.0), c(0.4, 0.0), c(1.2, 0.0), c(61.5, 0.0));
        assert!(matches!(
            sum_h22(&p, 1e-10, 200_000),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn shift_covariance_of_partial_sums() {
        // reindexing a window [−K, K] to [−K+1, K+1] changes the sum by no
        // more than the two boundary terms
        let p = params(0.3, 0.4, 1.2, 1.5);
        let window =
            |lo: i64, hi: i64| -> Complex64 { (lo..=hi).map(|k| h22_term(&p, k).unwrap()).sum() };
        let k = 24i64;
        let s0 = window(-k, k);
        let s1 = window(-k + 1, k + 1);
        let bound = h22_term(&p, -k).unwrap().norm() + h22_term(&p, k + 1).unwrap().norm() + 1e-15;
        assert!((s1 - s0).norm() <= bound);
    }

    #[test]
    fn term_decay_rate_matches_excess() {
        // |term(k)| = O(|k|^{−Re(c+d−a−b)}) both ways; log-log slope fit
        let p = ParamSet::new(c(0.3, 0.1), c(0.4, -0.2), c(1.2, 0.2), c(1.5, -0.1));
        let s = p.excess().re;
        let ks: Vec<i64> = vec![64, 128, 256, 512, 1024, 2048, 4096];
        let slope = |signed: i64| -> f64 {
            let pts: Vec<(f64, f64)> = ks
                .iter()
                .map(|&k| {
                    let t = h22_term(&p, signed * k).unwrap();
                    ((k as f64).ln(), t.norm().ln())
                })
                .collect();
            fit_slope(&pts)
        };
        assert!(
            (slope(1) + s).abs() < 0.15,
            "positive side slope {}",
            slope(1)
        );
        assert!(
            (slope(-1) + s).abs() < 0.15,
            "negative side slope {}",
            slope(-1)
        );
    }

    #[test]
    fn truncated_sum_oracle() {
        // direct summation over k ∈ [−10^5, 10^5] agrees within combined estimates
        let p = params(0.25, -0.2, 1.6, 1.45);
        let r = sum_h22(&p, 1e-10, 200_000).unwrap();
        let big = 100_000i64;
        let mut direct = c(0.0, 0.0);
        // sum small-to-large magnitude for accuracy
        for k in (1..=big).rev() {
            direct += h22_term(&p, k).unwrap() + h22_term(&p, -k).unwrap();
        }
        direct += c(1.0, 0.0);
        let s = p.excess().re;
        let truncation_tail = 4.0 * (big as f64).powf(1.0 - s) / (s - 1.0);
        let drift = 1e-10;
        assert!(
            (r.value - direct).norm() <= r.abs_error_estimate + truncation_tail + drift,
            "accel {} direct {} tail_allow {}",
            r.value,
            direct,
            truncation_tail
        );
    }

    fn fit_slope(points: &[(f64, f64)]) -> f64 {
        let n = points.len() as f64;
        let sx: f64 = points.iter().map(|p| p.0).sum();
        let sy: f64 = points.iter().map(|p| p.1).sum();
        let sxx: f64 = points.iter().map(|p| p.0 * p.0).sum();
        let sxy: f64 = points.iter().map(|p| p.0 * p.1).sum();
        (n * sxy - sx * sy) / (n * sxx - sx * sx)
    }
}
