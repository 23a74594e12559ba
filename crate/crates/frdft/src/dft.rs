//! Unitary discrete Fourier transform.
//!
//! Both directions carry the symmetric 1/sqrt(n) normalization, so `dft` and
//! `idft` are exact inverses and both preserve energy. With the forward kernel
//!
//! ```text
//! y_j = (1/sqrt(n)) * sum_k exp(-2*pi*i*j*k/n) * x_k
//! ```
//!
//! the transform is a fourth root of the identity: applying it twice reverses
//! the buffer (see [`crate::signal::parity`]), applying it four times gives
//! the input back.
//!
//! Power-of-two lengths run on an iterative radix-2 FFT in O(n log n); every
//! other length falls back to direct O(n^2) summation of the kernel. The
//! direct path is kept public as [`dft_direct`] so the two routes can be
//! checked against each other.

use num_complex::Complex64;
use std::f64::consts::TAU;

use crate::error::{FrdftError, Result};

/// Table of forward kernel roots t[u] = exp(-2*pi*i*u/n) for u in 0..n.
pub(crate) fn unit_roots(n: usize) -> Vec<Complex64> {
    let nf = n as f64;
    (0..n)
        .map(|u| Complex64::from_polar(1.0, -TAU * u as f64 / nf))
        .collect()
}

/// Iterative radix-2 decimation-in-time FFT, unnormalized.
/// `buf.len()` must be a power of two.
fn fft_inplace(buf: &mut [Complex64], inverse: bool) {
    let n = buf.len();
    if n <= 1 {
        return;
    }
    debug_assert!(n.is_power_of_two());

    // Bit-reversal permutation.
    let mut j = 0usize;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j |= bit;
        if i < j {
            buf.swap(i, j);
        }
    }

    let roots = unit_roots(n);
    let mut len = 2;
    while len <= n {
        let stride = n / len;
        let half = len / 2;
        for start in (0..n).step_by(len) {
            for k in 0..half {
                let mut w = roots[k * stride];
                if inverse {
                    w = w.conj();
                }
                let a = buf[start + k];
                let b = buf[start + k + half] * w;
                buf[start + k] = a + b;
                buf[start + k + half] = a - b;
            }
        }
        len <<= 1;
    }
}

/// Direct kernel summation, unnormalized. Works for any length.
fn direct_unscaled(x: &[Complex64], inverse: bool) -> Vec<Complex64> {
    let n = x.len();
    let roots = unit_roots(n);
    (0..n)
        .map(|j| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (k, &xk) in x.iter().enumerate() {
                let mut w = roots[j * k % n];
                if inverse {
                    w = w.conj();
                }
                acc += w * xk;
            }
            acc
        })
        .collect()
}

fn transform(x: &[Complex64], inverse: bool) -> Result<Vec<Complex64>> {
    if x.is_empty() {
        return Err(FrdftError::EmptySignal);
    }
    let n = x.len();
    let mut y = if n.is_power_of_two() {
        let mut buf = x.to_vec();
        fft_inplace(&mut buf, inverse);
        buf
    } else {
        direct_unscaled(x, inverse)
    };
    let scale = 1.0 / (n as f64).sqrt();
    for v in &mut y {
        *v *= scale;
    }
    Ok(y)
}

/// Forward unitary DFT.
///
/// Errors on an empty input; any other length is accepted.
pub fn dft(x: &[Complex64]) -> Result<Vec<Complex64>> {
    transform(x, false)
}

/// Inverse unitary DFT, the conjugate-kernel twin of [`dft`].
pub fn idft(x: &[Complex64]) -> Result<Vec<Complex64>> {
    transform(x, true)
}

/// Forward unitary DFT by direct O(n^2) summation, regardless of length.
///
/// Same contract as [`dft`]; exists so the fast path has an independent
/// reference route to agree with.
pub fn dft_direct(x: &[Complex64]) -> Result<Vec<Complex64>> {
    if x.is_empty() {
        return Err(FrdftError::EmptySignal);
    }
    let mut y = direct_unscaled(x, false);
    let scale = 1.0 / (x.len() as f64).sqrt();
    for v in &mut y {
        *v *= scale;
    }
    Ok(y)
}
