//! Fractional powers of the unitary discrete Fourier transform.
//!
//! The DFT rotates the time-frequency plane by a quarter turn; this crate
//! provides the transform of an arbitrary rotation angle alpha, evaluated
//! as a sandwich of quadratic-phase (chirp) multiplies around an FFT and
//! an inverse FFT. Alongside the O(n log n) apply path it carries the
//! tools needed to trust it:
//!
//! * a dense closed-form matrix oracle ([`frdft_matrix`]) the fast path
//!   is checked against,
//! * windowed sums of quadratic root-of-unity powers ([`root_sum`],
//!   [`sigma`]) that pin down the exact phase relating the quarter-turn
//!   transform to the plain DFT on even lengths,
//! * an exact 2x2 plane model ([`tfmodel`]) predicting the transform's
//!   geometric action without touching samples,
//! * chirped test signals and localization sweeps ([`chirplab`])
//!   connecting the plane model to measurable spectra.
//!
//! ```
//! use frdft::{frdft_apply, make_chirp, concentration, predicted_angle, Mode};
//!
//! let x = make_chirp(256, 8.0, 0.5);
//! let y = frdft_apply(&x, predicted_angle(0.5), Mode::Raw).unwrap();
//! assert!(concentration(&y, 3).unwrap() > 0.7);
//! ```

#![forbid(unsafe_code)]

pub mod chirplab;
pub mod dft;
pub mod error;
pub mod roots;
pub mod signal;
pub mod tfmodel;
pub mod transform;

pub use chirplab::{
    concentration, localization_sweep, make_chirp, make_tone, predicted_angle, uniform_grid,
    SweepResult,
};
pub use dft::{dft, dft_direct, idft};
pub use error::{FrdftError, Result};
pub use roots::{root_sum, sigma, RootSum};
pub use signal::{energy, parity};
pub use tfmodel::{compose_garcia, quarter_rotation, rotation, shear, TimeFrequencyMatrix};
pub use transform::{
    chirp_rates, chirp_rates_with_bound, frdft_apply, frdft_matrix, frdft_matrix_with_cap,
    quadratic_phase, reduce_angle, AngleDecomposition, ChirpRates, Mode, TransformMatrix,
    CHIRP_RATE_BOUND, MATRIX_CAP,
};
