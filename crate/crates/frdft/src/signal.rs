//! Small helpers on complex sample buffers: energy and the index-reversal
//! (parity) operator that the double DFT reduces to.

use num_complex::Complex64;

/// Sum of squared magnitudes of all samples.
///
/// An empty slice has energy zero.
pub fn energy(x: &[Complex64]) -> f64 {
    x.iter().map(|c| c.norm_sqr()).sum()
}

/// Index reversal y_j = x_{(n - j) mod n}.
///
/// Sample 0 stays fixed, the rest of the buffer is reversed. Applying the
/// forward DFT twice yields exactly this reordering, and parity is its own
/// inverse.
pub fn parity(x: &[Complex64]) -> Vec<Complex64> {
    let n = x.len();
    (0..n).map(|j| x[(n - j) % n]).collect()
}
