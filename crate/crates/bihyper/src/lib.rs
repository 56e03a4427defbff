//! Numerical evaluation of unilateral and bilateral hypergeometric series
//! with complex parameters, plus the closed forms they sum to.
//!
//! The crate is organized around the chain of identities connecting the
//! nonterminating form of Saalschütz's theorem to Dougall's bilateral
//! ₂H₂ summation:
//!
//! - [`gamma`]: complex log-gamma kernel, stable Γ-ratio fractions, and the
//!   limiting relation Γ(n+x)/Γ(n+y)·n^(y−x) → 1.
//! - [`pochhammer`]: shifted factorials (x)ₙ for integer n of either sign,
//!   and bracketed Pochhammer-ratio fractions.
//! - [`hyperseries`]: ₁₊ᵣFₛ series evaluation at unit argument with
//!   convergence classification and tail completion.
//! - [`bilateral`]: the two-sided ₂H₂ sum, split into unilateral halves.
//! - [`identities`]: both sides of each identity — Dougall's closed form,
//!   the two-term Saalschütz expression, and the semi-finite form that
//!   interpolates between them.
//! - [`sampling`], [`report`]: the seeded verification harness behind the
//!   `verify` binary.

pub mod bilateral;
pub mod error;
pub mod gamma;
pub mod hyperseries;
pub mod identities;
pub mod pochhammer;
pub mod report;
pub mod sampling;

pub use error::Error;
pub use num_complex::Complex64;

/// Convenience constructor for the crate's universal scalar.
pub fn cx(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}
