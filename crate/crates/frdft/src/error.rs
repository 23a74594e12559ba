//! Error type shared by all transform and analysis routines.

use thiserror::Error;

/// Errors produced by the transform, matrix, and analysis routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum FrdftError {
    /// An operation that needs at least one sample received an empty slice.
    #[error("empty signal")]
    EmptySignal,

    /// A matrix was asked for with dimension zero.
    #[error("matrix dimension must be at least 1")]
    ZeroDimension,

    /// A matrix-vector product was attempted with mismatched lengths.
    #[error("dimension mismatch: matrix is {n}x{n} but signal has {len} samples")]
    DimensionMismatch { n: usize, len: usize },

    /// The angle sits too close to +/-pi for the chirp factorization:
    /// the leading chirp rate tan(alpha/2) blows up there.
    #[error(
        "angle {alpha} is ill-conditioned: |tan(alpha/2)| = {rate:.3e} exceeds the bound {bound:.1e}"
    )]
    IllConditionedAngle { alpha: f64, rate: f64, bound: f64 },

    /// Raw-mode angles must lie strictly inside (-pi, pi).
    #[error("angle {alpha} is outside (-pi, pi); reduce it or use decomposed mode")]
    AngleOutOfRange { alpha: f64 },

    /// Dense-matrix construction was refused to bound memory and time.
    #[error("matrix size {n} exceeds the configured cap {cap}")]
    MatrixCapExceeded { n: usize, cap: usize },

    /// The spectral phase constant is only defined for even lengths.
    #[error("length {n} is odd; the root-of-unity phase constant needs an even length")]
    OddLength { n: usize },

    /// Concentration of an all-zero signal is undefined.
    #[error("signal has zero energy; concentration is undefined")]
    ZeroEnergy,

    /// A window width outside 1..=len was requested.
    #[error("window width {w} is invalid for a signal of {len} samples")]
    WindowOutOfRange { w: usize, len: usize },

    /// A sweep needs a nonempty, strictly increasing angle grid.
    #[error("sweep grid must be nonempty and strictly increasing")]
    BadGrid,

    /// Every grid point of a sweep failed, so there is no argmax.
    #[error("every sweep point failed; no concentration maximum exists")]
    EmptySweep,
}

pub type Result<T> = std::result::Result<T, FrdftError>;
