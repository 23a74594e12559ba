//! Exact 2x2 model of how the transform moves time-frequency coordinates.
//!
//! Every factor of the chirp factorization has a simple area-preserving
//! action on the (time, frequency) plane: a chirp multiply is a vertical
//! shear, the DFT is a quarter rotation. Multiplying the five factor
//! models therefore predicts, in closed form and without touching any
//! signal data, what the composed transform does to the plane: a rotation
//! by alpha. [`compose_garcia`] performs that multiplication literally so
//! it can be compared against [`rotation`] built directly from cos/sin.
//!
//! Everything here is plain f64 arithmetic on 2x2 matrices; it serves as
//! the analytic cross-check for the signal-level transform and for the
//! chirp-localization predictions.

use std::ops::Mul;

use crate::error::Result;
use crate::transform::{check_raw_angle, chirp_rates};

/// Area-preserving linear map of the (time, frequency) plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeFrequencyMatrix {
    entries: [[f64; 2]; 2],
}

impl TimeFrequencyMatrix {
    /// Build from rows.
    pub fn new(entries: [[f64; 2]; 2]) -> Self {
        TimeFrequencyMatrix { entries }
    }

    /// The identity map.
    pub fn identity() -> Self {
        Self::new([[1.0, 0.0], [0.0, 1.0]])
    }

    /// Row-major entries.
    pub fn entries(&self) -> [[f64; 2]; 2] {
        self.entries
    }

    /// Entry at row j, column k (0 or 1).
    pub fn get(&self, j: usize, k: usize) -> f64 {
        self.entries[j][k]
    }

    /// Transpose; for the rotations used here this is also the inverse.
    pub fn transposed(&self) -> Self {
        let m = &self.entries;
        Self::new([[m[0][0], m[1][0]], [m[0][1], m[1][1]]])
    }

    /// Determinant. All maps built by this module have determinant 1.
    pub fn det(&self) -> f64 {
        let m = &self.entries;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    /// Apply to a (time, frequency) coordinate pair.
    pub fn apply(&self, v: [f64; 2]) -> [f64; 2] {
        let m = &self.entries;
        [
            m[0][0] * v[0] + m[0][1] * v[1],
            m[1][0] * v[0] + m[1][1] * v[1],
        ]
    }

    /// Largest entrywise distance to another map.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst = 0.0f64;
        for j in 0..2 {
            for k in 0..2 {
                worst = worst.max((self.entries[j][k] - other.entries[j][k]).abs());
            }
        }
        worst
    }
}

impl Mul for TimeFrequencyMatrix {
    type Output = TimeFrequencyMatrix;

    fn mul(self, rhs: Self) -> Self {
        let a = &self.entries;
        let b = &rhs.entries;
        let mut out = [[0.0; 2]; 2];
        for j in 0..2 {
            for k in 0..2 {
                out[j][k] = a[j][0] * b[0][k] + a[j][1] * b[1][k];
            }
        }
        Self::new(out)
    }
}

/// Vertical shear: time stays put, frequency gains `rate` times the time
/// coordinate. This is the plane action of a quadratic phase multiply.
pub fn shear(rate: f64) -> TimeFrequencyMatrix {
    TimeFrequencyMatrix::new([[1.0, 0.0], [rate, 1.0]])
}

/// Rotation by exactly 90 degrees, the plane action of the DFT.
pub fn quarter_rotation() -> TimeFrequencyMatrix {
    TimeFrequencyMatrix::new([[0.0, -1.0], [1.0, 0.0]])
}

/// Rotation by alpha, built directly from cos and sin.
pub fn rotation(alpha: f64) -> TimeFrequencyMatrix {
    let (s, c) = alpha.sin_cos();
    TimeFrequencyMatrix::new([[c, -s], [s, c]])
}

/// Plane model of the five-step chirp factorization: the literal product
///
/// ```text
/// shear(t) . quarter^-1 . shear(s) . quarter . shear(t)
/// ```
///
/// with t = tan(alpha/2) and s = sin(alpha). Multiplying out gives
/// [[1 - t*s, -s], [t*(2 - t*s), 1 - t*s]], which the angle-sum
/// identities collapse to [`rotation`]`(alpha)`; the product is kept
/// unsimplified on purpose so the two routes stay independent.
///
/// Accepts alpha in (-pi, pi), minus the ill-conditioned rim where
/// tan(alpha/2) exceeds the chirp rate bound.
pub fn compose_garcia(alpha: f64) -> Result<TimeFrequencyMatrix> {
    check_raw_angle(alpha)?;
    let rates = chirp_rates(alpha)?;
    let outer = shear(rates.outer);
    let turn = quarter_rotation();
    Ok(outer * turn.transposed() * shear(rates.inner) * turn * outer)
}
