//! Seeded, counter-based parameter sampling for the verification harness.
//!
//! The generator is SplitMix64: the state advances by the 64-bit golden
//! ratio and each output is a fixed avalanche hash of the counter, so a
//! (seed, draw-index) pair maps to the same double on every platform.
//! Reports produced from the same seed are therefore byte-reproducible
//! across implementations.

use crate::bilateral::ParamSet;
use num_complex::Complex64;

/// SplitMix64 counter generator.
#[derive(Debug, Clone)]
pub struct CounterRng {
    state: u64,
}

impl CounterRng {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1) with the full 53-bit mantissa.
    pub fn next_unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_unit()
    }
}

/// Sampling box for the numerator-side parameters a, b.
pub const AB_RE_RANGE: (f64, f64) = (-0.5, 0.8);
/// Sampling box for the denominator-side parameters c, d.
pub const CD_RE_RANGE: (f64, f64) = (1.0, 2.5);
/// Imaginary range shared by all four parameters.
pub const IM_RANGE: (f64, f64) = (-0.5, 0.5);

/// One raw draw from the sampling box (no admissibility margins applied).
pub fn draw_params(rng: &mut CounterRng) -> ParamSet {
    let mut part = |range: (f64, f64)| {
        let re = rng.uniform(range.0, range.1);
        let im = rng.uniform(IM_RANGE.0, IM_RANGE.1);
        Complex64::new(re, im)
    };
    let a = part(AB_RE_RANGE);
    let b = part(AB_RE_RANGE);
    let c = part(CD_RE_RANGE);
    let d = part(CD_RE_RANGE);
    ParamSet::new(a, b, c, d)
}

/// Distance from z to the nearest nonpositive integer (a Γ pole).
pub fn pole_distance(z: Complex64) -> f64 {
    let m = z.re.round().min(0.0);
    (z - m).norm()
}

/// Distance from z to the nearest integer of either sign.
pub fn integer_distance(z: Complex64) -> f64 {
    (z - z.re.round()).norm()
}
