//! Shifted factorials (x)ₙ = Γ(x+n)/Γ(x) for integer n of either sign, and
//! the bracketed ratio form [a, b, …; α, β, …]ₙ.
//!
//! Small indices go through direct products so zeros stay exact; large
//! indices go through log-gamma so nothing overflows.

use crate::error::{Error, PoleSite, Result};
use crate::gamma::{log_gamma, nearest_pole};
use num_complex::Complex64;

/// Indices up to this magnitude use the direct product.
const DIRECT_PRODUCT_LIMIT: i64 = 64;

/// A factor counts as zero when its modulus is below 1e-12·(1+|x|).
fn factor_zero_tolerance(x: Complex64) -> f64 {
    1e-12 * (1.0 + x.norm())
}

/// Rising product x(x+1)…(x+m−1). Zeros propagate exactly.
fn rising(x: Complex64, m: u64) -> Complex64 {
    let mut p = Complex64::new(1.0, 0.0);
    for j in 0..m {
        p *= x + j as f64;
    }
    p
}

/// Rising product accumulated as a sum of principal logs, for factor counts
/// where the plain product could overflow. All factors must be nonzero.
fn rising_log(x: Complex64, m: u64) -> Result<Complex64> {
    let mut log_sum = Complex64::new(0.0, 0.0);
    for j in 0..m {
        log_sum += (x + j as f64).ln();
    }
    exp_checked(log_sum)
}

fn exp_checked(log_value: Complex64) -> Result<Complex64> {
    if log_value.re > 709.0 {
        return Err(Error::Overflow {
            log_magnitude: log_value.re,
        });
    }
    Ok(log_value.exp())
}

/// The shifted factorial (x)ₙ.
///
/// For n ≥ 0 this is the rising product x(x+1)…(x+n−1) (empty product = 1);
/// for n < 0 it is 1/((x−1)(x−2)…(x−|n|)), an error when a factor vanishes.
pub fn pochhammer(x: Complex64, n: i64) -> Result<Complex64> {
    if n == 0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    if n > 0 {
        let m = n as u64;
        if n <= DIRECT_PRODUCT_LIMIT {
            return Ok(rising(x, m));
        }
        // large rising index: route around Γ only where Γ itself degenerates
        if let Some(pole) = nearest_pole(x) {
            // x ≈ -r: the product hits the factor (x + r) = 0 when r < n
            let r = -pole;
            if r < n {
                return Ok(Complex64::new(0.0, 0.0));
            }
            return rising_log(x, m);
        }
        return exp_checked(log_gamma(x + n as f64)? - log_gamma(x)?);
    }
    // n < 0: falling factors (x-1)…(x-|n|)
    let m = (-n) as u64;
    let tol = factor_zero_tolerance(x);
    if -n <= DIRECT_PRODUCT_LIMIT {
        let mut p = Complex64::new(1.0, 0.0);
        for k in 1..=m {
            let factor = x - k as f64;
            if factor.norm() < tol {
                return Err(Error::Pole {
                    argument: x,
                    site: PoleSite::NegativeIndexFactor(k as i64),
                });
            }
            p *= factor;
        }
        return Ok(1.0 / p);
    }
    // large falling index
    let nearest = x.re.round();
    if (x - nearest).norm() < tol {
        let k = nearest as i64;
        if k >= 1 && k <= -n {
            return Err(Error::Pole {
                argument: x,
                site: PoleSite::NegativeIndexFactor(k),
            });
        }
        // integer x outside the factor range: Γ(x+n)/Γ(x) is a ratio of two
        // poles there, so multiply the factors out in log space instead
        let mut log_sum = Complex64::new(0.0, 0.0);
        for k in 1..=m {
            log_sum += (x - k as f64).ln();
        }
        return exp_checked(-log_sum);
    }
    exp_checked(log_gamma(x + n as f64)? - log_gamma(x)?)
}

/// Reflection form of the negative-index shifted factorial:
/// (x)₋ₘ = (−1)ᵐ / (1−x)ₘ.
pub fn pochhammer_reflect(x: Complex64, m: u64) -> Result<Complex64> {
    if m == 0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let base = 1.0 - x;
    let tol = factor_zero_tolerance(x);
    let mut p = Complex64::new(1.0, 0.0);
    for j in 0..m {
        let factor = base + j as f64;
        if factor.norm() < tol {
            return Err(Error::Pole {
                argument: x,
                site: PoleSite::NegativeIndexFactor(j as i64 + 1),
            });
        }
        p *= factor;
    }
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    Ok(sign / p)
}

/// The bracket fraction [a, b, …; α, β, …]ₙ = ∏(numᵢ)ₙ / ∏(denⱼ)ₙ.
#[derive(Debug, Clone, PartialEq)]
pub struct PochhammerRatioSpec {
    pub numerators: Vec<Complex64>,
    pub denominators: Vec<Complex64>,
    pub index: i64,
}

impl PochhammerRatioSpec {
    pub fn new(numerators: Vec<Complex64>, denominators: Vec<Complex64>, index: i64) -> Self {
        Self {
            numerators,
            denominators,
            index,
        }
    }
}

/// Evaluate the bracket fraction with exact-zero propagation: a numerator
/// factorial that vanishes makes the whole ratio exactly 0 (provided no
/// denominator vanishes, which is a [`Error::DivisionByZero`]).
pub fn pochhammer_ratio(spec: &PochhammerRatioSpec) -> Result<Complex64> {
    let n = spec.index;
    let mut denominator = Complex64::new(1.0, 0.0);
    for &d in &spec.denominators {
        let v = pochhammer(d, n)?;
        if v.norm() == 0.0 {
            return Err(Error::DivisionByZero {
                denominator: d,
                index: n,
            });
        }
        denominator *= v;
    }
    let mut numerator = Complex64::new(1.0, 0.0);
    for &a in &spec.numerators {
        let v = pochhammer(a, n)?;
        if v.norm() == 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        numerator *= v;
    }
    Ok(safe_div(numerator, denominator))
}

/// Complex division that survives operands whose squared modulus would
/// overflow: falls back to log space once either side leaves the safe range.
pub(crate) fn safe_div(numerator: Complex64, denominator: Complex64) -> Complex64 {
    const SAFE: f64 = 1e150;
    if numerator.norm() < SAFE && denominator.norm() < SAFE && denominator.norm() > 1e-150 {
        numerator / denominator
    } else {
        (numerator.ln() - denominator.ln()).exp()
    }
}
