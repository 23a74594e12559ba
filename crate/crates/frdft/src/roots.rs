//! Windowed sums of quadratic powers of a primitive 2n-th root of unity.
//!
//! For zeta = exp(-i*pi/n), the window sum starting at k is
//!
//! ```text
//! S_k = sum_{s=k}^{k+n-1} zeta^(s^2)
//! ```
//!
//! For even n the summand is periodic in s with period n, because
//! (s+n)^2 = s^2 + 2sn + n^2 and both extra terms vanish modulo 2n. Every
//! window of n consecutive integers then sums the same multiset, so S_k is
//! independent of k. For odd n the n^2 term survives and the invariance
//! breaks; n = 3 already gives S_1 - S_0 = -2.
//!
//! The normalized constant sigma = S_0 / sqrt(n) has unit modulus for even n
//! and is exactly the scalar phase by which the quarter-turn fractional
//! transform differs from the plain DFT.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{FrdftError, Result};

/// One evaluated window sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootSum {
    /// Order of the root: the summand is exp(-i*pi*s^2/n).
    pub n: usize,
    /// First index of the n-term window.
    pub start: i64,
    /// The sum itself.
    pub value: Complex64,
}

impl RootSum {
    /// True when the order is even, i.e. when the window position is
    /// guaranteed not to matter.
    pub fn is_even_order(&self) -> bool {
        self.n.is_multiple_of(2)
    }
}

/// Sum the n-term window of quadratic root powers starting at `start`.
///
/// Terms are accumulated one by one; only the integer exponent s^2 is
/// reduced modulo 2n (an exact operation, since zeta^(2n) = 1) so the
/// evaluation stays accurate for windows far from the origin.
///
/// Panics if `n == 0`.
pub fn root_sum(n: usize, start: i64) -> RootSum {
    assert!(n >= 1, "root_sum needs n >= 1");
    let period = 2 * n as i64;
    let nf = n as f64;
    let mut value = Complex64::new(0.0, 0.0);
    for s in start..start + n as i64 {
        let e = (s * s).rem_euclid(period);
        value += Complex64::from_polar(1.0, -PI * e as f64 / nf);
    }
    RootSum { n, start, value }
}

/// The unit-modulus phase constant sigma(n) = S_0 / sqrt(n).
///
/// Only defined for even n; odd orders are refused because their window
/// sums are not shift invariant and the quarter-turn identity that sigma
/// feeds does not hold there.
pub fn sigma(n: usize) -> Result<Complex64> {
    assert!(n >= 1, "sigma needs n >= 1");
    if !n.is_multiple_of(2) {
        return Err(FrdftError::OddLength { n });
    }
    Ok(root_sum(n, 0).value / (n as f64).sqrt())
}
