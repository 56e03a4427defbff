//! Closed forms and both sides of the identity chain: Dougall's ₂H₂
//! summation, the nonterminating form of Saalschütz's theorem, and the
//! semi-finite identity that interpolates between them.
//!
//! The semi-finite form at shift n sums the bracket ratio
//! [c+d−a−b−1+n, a, b; 1+n, c, d]ₖ over k = −n … ∞. At n = 0 it reduces
//! to the Saalschütz ₃F₂; as n → ∞ the first right-hand term vanishes
//! (for Re(c+d−a−b) > 1) and the second tends to Dougall's closed form
//! through three applications of the Γ limiting relation.

use crate::bilateral::ParamSet;
use crate::error::{Error, Result};
use crate::gamma::{gamma_ratio, gamma_ratio_pole_aware, GammaRatioSpec};
use crate::hyperseries::{sum_series, SeriesResult, SeriesSpec, Verdict};
use crate::pochhammer::{pochhammer_ratio, PochhammerRatioSpec};
use num_complex::Complex64;

/// A parameter set together with the semi-finite shift n and the series
/// tolerance used when evaluating either side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityCase {
    pub params: ParamSet,
    pub shift_n: u32,
    pub tol: f64,
}

impl IdentityCase {
    pub fn new(params: ParamSet, shift_n: u32, tol: f64) -> Self {
        Self {
            params,
            shift_n,
            tol,
        }
    }
}

/// Relative deviation metric used for every identity check; the floor keeps
/// the ratio meaningful when an identity value passes through a zero.
pub fn relative_deviation(lhs: Complex64, rhs: Complex64) -> f64 {
    (lhs - rhs).norm() / lhs.norm().max(rhs.norm()).max(1e-30)
}

/// Dougall's closed form Γ[1−a, 1−b, c, d, c+d−a−b−1; c−a, c−b, d−a, d−b].
///
/// Pole-aware: a pole in one of the denominator arguments legitimately
/// makes the bilateral sum vanish, so it yields exactly 0; a numerator
/// pole is an error.
pub fn dougall_rhs(params: &ParamSet) -> Result<Complex64> {
    let ParamSet { a, b, c, d } = *params;
    let spec = GammaRatioSpec::new(
        vec![1.0 - a, 1.0 - b, c, d, c + d - a - b - 1.0],
        vec![c - a, c - b, d - a, d - b],
    );
    gamma_ratio_pole_aware(&spec)
}

/// Left side of the nonterminating Saalschütz identity:
/// ₃F₂(c+d−a−b−1, a, b; c, d; 1).
pub fn saalschutz_lhs(params: &ParamSet, tol: f64, max_terms: usize) -> Result<SeriesResult> {
    let ParamSet { a, b, c, d } = *params;
    let balanced = c + d - a - b - 1.0;
    sum_series(
        &SeriesSpec::at_unit(vec![balanced, a, b], vec![c, d]),
        tol,
        max_terms,
    )
}

/// Right side of the nonterminating Saalschütz identity (two terms):
///
/// ₃F₂(c−a, c−b, 1; c−a−b+1, c+d−a−b; 1) · Γ[c, d; a, b, c+d−a−b] / (a+b−c)
///   + Γ[c, d, c−a−b, d−a−b; c−a, c−b, d−a, d−b]
pub fn saalschutz_rhs(params: &ParamSet, tol: f64, max_terms: usize) -> Result<Complex64> {
    let ParamSet { a, b, c, d } = *params;
    let pivot = a + b - c;
    if pivot.norm() < 1e-8 {
        return Err(Error::NearSingular {
            quantity: "a+b-c",
            value: pivot,
        });
    }
    let series = embedded_f32(params, 0, tol, max_terms)?;
    let first =
        series * gamma_ratio(&GammaRatioSpec::new(vec![c, d], vec![a, b, c + d - a - b]))? / pivot;
    let second = gamma_ratio(&GammaRatioSpec::new(
        vec![c, d, c - a - b, d - a - b],
        vec![c - a, c - b, d - a, d - b],
    ))?;
    Ok(first + second)
}

/// The ₃F₂(c−a, c−b, 1; c−a−b+1+n, c+d−a−b; 1) embedded in the right-hand
/// sides; its convergence excess is d−a−b+n.
fn embedded_f32(params: &ParamSet, shift_n: u32, tol: f64, max_terms: usize) -> Result<Complex64> {
    let ParamSet { a, b, c, d } = *params;
    let nf = shift_n as f64;
    let spec = SeriesSpec::at_unit(
        vec![c - a, c - b, Complex64::new(1.0, 0.0)],
        vec![c - a - b + 1.0 + nf, c + d - a - b],
    );
    let result = sum_series(&spec, tol, max_terms)?;
    if result.verdict == Verdict::Diverged {
        return Err(Error::DivergentInput {
            excess: d - a - b + nf,
        });
    }
    Ok(result.value)
}

/// Left side of the semi-finite identity at shift n:
/// Σ_{k=−n}^{∞} [c+d−a−b−1+n, a, b; 1+n, c, d]ₖ.
///
/// The finitely many negative-k terms are evaluated through signed-index
/// shifted factorials; the k ≥ 0 tail is the unilateral series with the
/// appended unit numerator cancelling the implicit factorial.
pub fn semifinite_lhs(case: &IdentityCase, max_terms: usize) -> Result<SeriesResult> {
    let ParamSet { a, b, c, d } = case.params;
    let n = case.shift_n as i64;
    let nf = n as f64;
    let balanced = c + d - a - b - 1.0;
    let one = Complex64::new(1.0, 0.0);

    let mut head = Complex64::new(0.0, 0.0);
    for k in -n..0 {
        head += pochhammer_ratio(&PochhammerRatioSpec::new(
            vec![balanced + nf, a, b],
            vec![one + nf, c, d],
            k,
        ))?;
    }
    let tail = sum_series(
        &SeriesSpec::at_unit(vec![balanced + nf, a, b, one], vec![one + nf, c, d]),
        case.tol,
        max_terms,
    )?;
    Ok(SeriesResult {
        value: head + tail.value,
        abs_error_estimate: tail.abs_error_estimate + 1e-15 * head.norm(),
        terms_used: tail.terms_used + n as usize,
        verdict: tail.verdict,
    })
}

/// Right side of the semi-finite identity at shift n (two terms):
///
/// ₃F₂(c−a, c−b, 1; c−a−b+1+n, c+d−a−b; 1)
///     · Γ[1+n; c+d−a−b+n] · Γ[c, d; a, b]
///     · (c+d−a−b−1+n) / [(a+b−c−n)(c+d−a−b−1)]
///   + Γ[1+n, c−a−b+n, d−a−b+n; 1−a+n, 1−b+n, c+d−a−b−1+n]
///     · Γ[1−a, 1−b, c, d, c+d−a−b−1; c−a, c−b, d−a, d−b]
pub fn semifinite_rhs(case: &IdentityCase, max_terms: usize) -> Result<Complex64> {
    let ParamSet { a, b, c, d } = case.params;
    let nf = case.shift_n as f64;
    let first = semifinite_first_term(case, max_terms)?;
    let second = gamma_ratio(&GammaRatioSpec::new(
        vec![
            Complex64::new(1.0 + nf, 0.0),
            c - a - b + nf,
            d - a - b + nf,
        ],
        vec![1.0 - a + nf, 1.0 - b + nf, c + d - a - b - 1.0 + nf],
    ))? * gamma_ratio(&GammaRatioSpec::new(
        vec![1.0 - a, 1.0 - b, c, d, c + d - a - b - 1.0],
        vec![c - a, c - b, d - a, d - b],
    ))?;
    Ok(first + second)
}

/// The first right-hand term of the semi-finite identity alone. Under
/// Re(c+d−a−b) > 1 its modulus decays like n^(1−Re(c+d−a−b)), which is the
/// step that turns the finite-n identity into the bilateral theorem.
pub fn semifinite_first_term(case: &IdentityCase, max_terms: usize) -> Result<Complex64> {
    let ParamSet { a, b, c, d } = case.params;
    let nf = case.shift_n as f64;
    let pivot = a + b - c - nf;
    if pivot.norm() < 1e-8 {
        return Err(Error::NearSingular {
            quantity: "a+b-c-n",
            value: pivot,
        });
    }
    let balanced = c + d - a - b - 1.0;
    if balanced.norm() < 1e-8 {
        return Err(Error::NearSingular {
            quantity: "c+d-a-b-1",
            value: balanced,
        });
    }
    let series = embedded_f32(&case.params, case.shift_n, case.tol, max_terms)?;
    let ratio_shifted = gamma_ratio(&GammaRatioSpec::new(
        vec![Complex64::new(1.0 + nf, 0.0)],
        vec![c + d - a - b + nf],
    ))?;
    let ratio_base = gamma_ratio(&GammaRatioSpec::new(vec![c, d], vec![a, b]))?;
    Ok(series * ratio_shifted * ratio_base * (balanced + nf) / (pivot * balanced))
}
