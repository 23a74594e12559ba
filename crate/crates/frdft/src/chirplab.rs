//! Chirped test signals and localization sweeps.
//!
//! A linear chirp is a tone whose frequency drifts at a constant rate. In
//! the time-frequency plane it occupies a slanted line, so no ordinary
//! DFT bin captures it; but the fractional transform rotates the plane,
//! and at the angle that turns the line vertical the chirp collapses to a
//! sharp peak. The 2x2 model predicts that angle in closed form:
//!
//! ```text
//! alpha* = pi/2 - atan(rate)
//! ```
//!
//! ([`predicted_angle`]). [`localization_sweep`] measures it empirically
//! by scanning a grid of angles and scoring each output with the
//! windowed-energy [`concentration`] metric, giving a signal-level check
//! of the plane model.

use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, TAU};

use crate::error::{FrdftError, Result};
use crate::signal::energy;
use crate::transform::{frdft_apply, quadratic_phase, Mode};

/// Result of a localization sweep over an angle grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    /// The swept angles, strictly increasing.
    pub grid: Vec<f64>,
    /// Concentration per grid point; `None` where the transform failed
    /// (for example outside the raw-mode angle range).
    pub concentration: Vec<Option<f64>>,
    /// Grid angle with the highest concentration. Ties resolve to the
    /// smallest angle.
    pub argmax: f64,
}

/// Complex tone x_j = exp(-2*pi*i*freq*j/n) of unit magnitude per sample.
///
/// An integer `freq` lands exactly on a DFT bin. Panics if `n == 0`.
pub fn make_tone(n: usize, freq: f64) -> Vec<Complex64> {
    assert!(n >= 1, "make_tone needs n >= 1");
    let nf = n as f64;
    (0..n)
        .map(|j| Complex64::from_polar(1.0, -TAU * freq * j as f64 / nf))
        .collect()
}

/// Linear chirp: the tone of [`make_tone`] with an extra quadratic phase
/// at the given rate, exactly `quadratic_phase(make_tone(n, freq), rate)`.
///
/// Its instantaneous frequency drifts by `rate` bins per sample, tracing
/// a line of slope `rate` in the time-frequency plane.
pub fn make_chirp(n: usize, freq: f64, rate: f64) -> Vec<Complex64> {
    quadratic_phase(&make_tone(n, freq), rate)
}

/// Fraction of total energy inside the best cyclic window of `window`
/// consecutive samples. 1.0 means fully concentrated; a flat signal
/// scores window/n.
///
/// Invariant under scaling and global phase. Errors on an empty or
/// zero-energy signal and on window widths outside 1..=len.
pub fn concentration(x: &[Complex64], window: usize) -> Result<f64> {
    if x.is_empty() {
        return Err(FrdftError::EmptySignal);
    }
    let n = x.len();
    if window == 0 || window > n {
        return Err(FrdftError::WindowOutOfRange { w: window, len: n });
    }
    let powers: Vec<f64> = x.iter().map(|c| c.norm_sqr()).collect();
    let total: f64 = powers.iter().sum();
    if total <= 0.0 {
        return Err(FrdftError::ZeroEnergy);
    }
    let mut sum: f64 = powers[..window].iter().sum();
    let mut best = sum;
    for start in 1..n {
        sum += powers[(start + window - 1) % n] - powers[start - 1];
        if sum > best {
            best = sum;
        }
    }
    Ok((best / total).min(1.0))
}

/// Angle at which a chirp of the given rate should localize: the
/// rotation that makes its time-frequency line vertical.
pub fn predicted_angle(rate: f64) -> f64 {
    FRAC_PI_2 - rate.atan()
}

/// Inclusive uniform grid of `count` angles from `start` to `stop`.
/// A single-point grid is just `[start]`.
pub fn uniform_grid(start: f64, stop: f64, count: usize) -> Vec<f64> {
    if count <= 1 {
        return vec![start; count];
    }
    let step = (stop - start) / (count - 1) as f64;
    (0..count).map(|i| start + step * i as f64).collect()
}

/// Score the raw-mode transform of `x` at every grid angle with
/// [`concentration`].
///
/// Grid points where the transform fails (ill-conditioned or
/// out-of-range angles) are recorded as `None` rather than aborting the
/// sweep. Errors only when the input or the whole grid is unusable.
pub fn localization_sweep(x: &[Complex64], grid: &[f64], window: usize) -> Result<SweepResult> {
    if x.is_empty() {
        return Err(FrdftError::EmptySignal);
    }
    if window == 0 || window > x.len() {
        return Err(FrdftError::WindowOutOfRange {
            w: window,
            len: x.len(),
        });
    }
    if energy(x) <= 0.0 {
        return Err(FrdftError::ZeroEnergy);
    }
    if grid.is_empty() || !grid.windows(2).all(|pair| pair[0] < pair[1]) {
        return Err(FrdftError::BadGrid);
    }

    let scores: Vec<Option<f64>> = grid
        .iter()
        .map(|&alpha| {
            frdft_apply(x, alpha, Mode::Raw)
                .ok()
                .and_then(|y| concentration(&y, window).ok())
        })
        .collect();

    // Strict improvement keeps the earliest (smallest) angle on ties.
    let mut argmax = None;
    let mut best = f64::NEG_INFINITY;
    for (&alpha, score) in grid.iter().zip(&scores) {
        if let Some(v) = *score {
            if v > best {
                best = v;
                argmax = Some(alpha);
            }
        }
    }
    let argmax = argmax.ok_or(FrdftError::EmptySweep)?;

    Ok(SweepResult {
        grid: grid.to_vec(),
        concentration: scores,
        argmax,
    })
}
