//! Error types shared across the crate.

use num_complex::Complex64;
use thiserror::Error;

/// Where a gamma-function pole was encountered.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PoleSite {
    /// The argument of a direct `log_gamma`/`gamma` call.
    Argument,
    /// Numerator argument of a Γ-ratio or Pochhammer-ratio (0-based position).
    Numerator(usize),
    /// Denominator argument of a Γ-ratio or Pochhammer-ratio (0-based position).
    Denominator(usize),
    /// Vanishing factor (x − k) in a negative-index shifted factorial.
    NegativeIndexFactor(i64),
}

impl std::fmt::Display for PoleSite {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PoleSite::Argument => write!(f, "argument"),
            PoleSite::Numerator(i) => write!(f, "numerator {i}"),
            PoleSite::Denominator(i) => write!(f, "denominator {i}"),
            PoleSite::NegativeIndexFactor(k) => write!(f, "factor x-{k}"),
        }
    }
}

/// Unified error type for series and closed-form evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument sits at (or within tolerance of) a nonpositive integer,
    /// where Γ has a pole.
    #[error("gamma pole at {argument} ({site})")]
    Pole { argument: Complex64, site: PoleSite },

    /// exp(log Γ) would exceed the double-precision range.
    #[error("gamma overflow: |log Gamma| = {log_magnitude}")]
    Overflow { log_magnitude: f64 },

    /// A denominator shifted factorial evaluated to exactly zero.
    #[error("division by zero: ({denominator})_{index} = 0")]
    DivisionByZero { denominator: Complex64, index: i64 },

    /// Series shape does not admit a unit-argument balance check.
    #[error("shape error: {numerators} numerator(s) with {denominators} denominator(s) is not a unit-argument p+1Fp shape")]
    Shape {
        numerators: usize,
        denominators: usize,
    },

    /// A series denominator parameter is a nonpositive integer reachable
    /// within the term budget.
    #[error("degenerate series denominator parameter {parameter}")]
    DegenerateDenominator { parameter: Complex64 },

    /// Input violates the convergence condition (with margin).
    #[error("divergent input: convergence excess {excess} has real part below the margin")]
    DivergentInput { excess: Complex64 },

    /// A quantity the identity divides by is too close to zero.
    #[error("near-singular input: {quantity} = {value}")]
    NearSingular {
        quantity: &'static str,
        value: Complex64,
    },

    /// A parameter lies outside the accuracy-tested envelope.
    #[error("parameter out of range: {field} = {value} exceeds |{limit}|")]
    OutOfRange {
        field: &'static str,
        value: f64,
        limit: f64,
    },

    /// Invalid run configuration (CLI).
    #[error("config error: {0}")]
    Config(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
