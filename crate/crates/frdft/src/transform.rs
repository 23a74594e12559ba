//! Fractional power of the unitary DFT.
//!
//! The transform of order alpha is the operator
//!
//! ```text
//! F(alpha) = C(t) . DFT^-1 . C(s) . DFT . C(t)
//! ```
//!
//! where C(q) multiplies sample j by exp(-i*pi*q*j^2/n) (a discrete chirp),
//! t = tan(alpha/2) and s = sin(alpha). At alpha = pi/2 this reduces to the
//! plain DFT times a unit phase, and as alpha -> 0 it tends to the identity,
//! so alpha interpolates continuously between "time domain" and "frequency
//! domain". Applying the five factors costs two FFTs plus three O(n)
//! passes.
//!
//! Two evaluation paths are provided and checked against each other:
//!
//! * [`frdft_apply`] runs the factorization above on a signal,
//!   in O(n log n) for power-of-two lengths;
//! * [`frdft_matrix`] assembles the same operator entry by entry from its
//!   closed form, an O(n^3) construction that serves as the oracle the
//!   fast path must agree with.
//!
//! The outer chirp rate tan(alpha/2) diverges as alpha approaches +/-pi,
//! so the raw path restricts alpha to (-pi, pi) and additionally rejects
//! angles whose rate exceeds [`CHIRP_RATE_BOUND`]. [`Mode::Decomposed`]
//! lifts both restrictions by splitting any real angle into exact quarter
//! turns (DFT and index-reversal powers) plus a residual in [-pi/4, pi/4),
//! keeping every chirp rate it ever evaluates at most tan(pi/8).

use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_4, PI};

use crate::dft::{dft, idft, unit_roots};
use crate::error::{FrdftError, Result};
use crate::signal::parity;

/// Largest |tan(alpha/2)| the raw path accepts before declaring the angle
/// ill-conditioned. Beyond this the outer chirp oscillates so fast that
/// its sampled phase is meaningless.
pub const CHIRP_RATE_BOUND: f64 = 1e8;

/// Default upper bound on the dimension of dense transform matrices.
/// An n x n build costs O(n^3) time and 16*n^2 bytes; 4096 keeps both
/// within reason for an oracle path.
pub const MATRIX_CAP: usize = 4096;

/// Chirp rates of the five-step factorization for one angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChirpRates {
    /// Rate tan(alpha/2) of the first and last chirp multiplies.
    pub outer: f64,
    /// Rate sin(alpha) of the chirp between the two transforms.
    /// Always within [-1, 1].
    pub inner: f64,
}

/// Evaluation strategy for [`frdft_apply`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// The five-step factorization exactly as written. Reference path;
    /// requires alpha in (-pi, pi) and a well-conditioned outer rate.
    Raw,
    /// Quarter-turn reduction first, then the raw path on the small
    /// residual. Accepts any finite angle.
    Decomposed,
}

/// Result of [`reduce_angle`]: alpha = quarter_turns * pi/2 + residual,
/// modulo full turns.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleDecomposition {
    /// Number of exact quarter turns, already reduced mod 4.
    pub quarter_turns: u32,
    /// Leftover angle in [-pi/4, pi/4).
    pub residual: f64,
}

/// Compute the two chirp rates for an angle, using the default
/// conditioning bound.
pub fn chirp_rates(alpha: f64) -> Result<ChirpRates> {
    chirp_rates_with_bound(alpha, CHIRP_RATE_BOUND)
}

/// Compute the two chirp rates, rejecting angles whose outer rate
/// exceeds `bound` in magnitude or is not finite.
pub fn chirp_rates_with_bound(alpha: f64, bound: f64) -> Result<ChirpRates> {
    let outer = (alpha / 2.0).tan();
    if !outer.is_finite() || outer.abs() > bound {
        return Err(FrdftError::IllConditionedAngle {
            alpha,
            rate: outer,
            bound,
        });
    }
    Ok(ChirpRates {
        outer,
        inner: alpha.sin(),
    })
}

/// Multiply sample j by the unit phase exp(-i*pi*rate*j^2/n).
///
/// A rate of exactly zero returns the input unchanged. Sample 0 is never
/// altered and magnitudes are always preserved.
pub fn quadratic_phase(x: &[Complex64], rate: f64) -> Vec<Complex64> {
    if rate == 0.0 {
        return x.to_vec();
    }
    let nf = x.len() as f64;
    x.iter()
        .enumerate()
        .map(|(j, &v)| {
            let jf = j as f64;
            v * Complex64::from_polar(1.0, -PI * rate * jf * jf / nf)
        })
        .collect()
}

/// Split an arbitrary angle into quarter turns plus a small residual.
///
/// The returned pair satisfies alpha = quarter_turns * (pi/2) + residual
/// up to whole turns, with the residual in [-pi/4, pi/4). Exact quarter
/// multiples come back with residual exactly 0.0.
pub fn reduce_angle(alpha: f64) -> AngleDecomposition {
    let half_pi = PI / 2.0;
    let mut turns = ((alpha + FRAC_PI_4) / half_pi).floor() as i64;
    let mut residual = alpha - turns as f64 * half_pi;
    // Guard the half-open interval against rounding at the seams.
    if residual >= FRAC_PI_4 {
        residual -= half_pi;
        turns += 1;
    } else if residual < -FRAC_PI_4 {
        residual += half_pi;
        turns -= 1;
    }
    AngleDecomposition {
        quarter_turns: turns.rem_euclid(4) as u32,
        residual,
    }
}

pub(crate) fn check_raw_angle(alpha: f64) -> Result<()> {
    if alpha > -PI && alpha < PI {
        Ok(())
    } else {
        Err(FrdftError::AngleOutOfRange { alpha })
    }
}

/// The factorization itself: chirp, transform, chirp, inverse transform,
/// chirp.
fn five_step(x: &[Complex64], rates: ChirpRates) -> Result<Vec<Complex64>> {
    let y = quadratic_phase(x, rates.outer);
    let y = dft(&y)?;
    let y = quadratic_phase(&y, rates.inner);
    let y = idft(&y)?;
    Ok(quadratic_phase(&y, rates.outer))
}

/// Apply the order-alpha fractional transform to a signal.
///
/// [`Mode::Raw`] evaluates the five-step chirp factorization directly and
/// is the reference everything else is measured against; it requires
/// alpha in (-pi, pi) and errors out near the ends of that interval where
/// tan(alpha/2) blows up. [`Mode::Decomposed`] first strips exact quarter
/// turns, so it accepts any finite angle; in particular a decomposed
/// quarter turn at pi/2 is bit-for-bit the plain [`dft`] with no extra
/// phase, and pi is exactly the index reversal.
///
/// Both modes preserve energy up to roundoff.
pub fn frdft_apply(x: &[Complex64], alpha: f64, mode: Mode) -> Result<Vec<Complex64>> {
    if x.is_empty() {
        return Err(FrdftError::EmptySignal);
    }
    match mode {
        Mode::Raw => {
            check_raw_angle(alpha)?;
            five_step(x, chirp_rates(alpha)?)
        }
        Mode::Decomposed => {
            let split = reduce_angle(alpha);
            let y = if split.residual == 0.0 {
                x.to_vec()
            } else {
                five_step(x, chirp_rates(split.residual)?)?
            };
            match split.quarter_turns {
                0 => Ok(y),
                1 => dft(&y),
                2 => Ok(parity(&y)),
                3 => idft(&y),
                _ => unreachable!("quarter turns reduced mod 4"),
            }
        }
    }
}

/// Dense n x n complex operator, row major.
///
/// Holds the DFT kernel, fractional-transform matrices, and anything
/// assembled from them. Fractional matrices built by [`frdft_matrix`] are
/// unitary up to roundoff.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformMatrix {
    n: usize,
    entries: Vec<Complex64>,
}

impl TransformMatrix {
    fn from_entries(n: usize, entries: Vec<Complex64>) -> Self {
        debug_assert_eq!(entries.len(), n * n);
        TransformMatrix { n, entries }
    }

    /// Matrix dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry at row j, column k.
    pub fn get(&self, j: usize, k: usize) -> Complex64 {
        assert!(j < self.n && k < self.n, "index out of range");
        self.entries[j * self.n + k]
    }

    /// Row-major view of all entries.
    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// Identity operator.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1);
        let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
        for j in 0..n {
            entries[j * n + j] = Complex64::new(1.0, 0.0);
        }
        Self::from_entries(n, entries)
    }

    /// The unitary DFT kernel (1/sqrt(n)) * exp(-2*pi*i*j*k/n).
    pub fn dft_kernel(n: usize) -> Self {
        assert!(n >= 1);
        let roots = unit_roots(n);
        let scale = 1.0 / (n as f64).sqrt();
        let mut entries = Vec::with_capacity(n * n);
        for j in 0..n {
            for k in 0..n {
                entries.push(roots[j * k % n] * scale);
            }
        }
        Self::from_entries(n, entries)
    }

    /// Matrix-vector product.
    pub fn apply(&self, x: &[Complex64]) -> Result<Vec<Complex64>> {
        if x.len() != self.n {
            return Err(FrdftError::DimensionMismatch {
                n: self.n,
                len: x.len(),
            });
        }
        Ok((0..self.n)
            .map(|j| {
                let row = &self.entries[j * self.n..(j + 1) * self.n];
                row.iter()
                    .zip(x)
                    .map(|(&m, &v)| m * v)
                    .sum::<Complex64>()
            })
            .collect())
    }

    /// Matrix-matrix product; both operands must have the same dimension.
    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
        for j in 0..n {
            for m in 0..n {
                let a = self.entries[j * n + m];
                let rrow = &rhs.entries[m * n..(m + 1) * n];
                let orow = &mut entries[j * n..(j + 1) * n];
                for (o, &r) in orow.iter_mut().zip(rrow) {
                    *o += a * r;
                }
            }
        }
        Self::from_entries(n, entries)
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        let n = self.n;
        let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
        for j in 0..n {
            for k in 0..n {
                entries[k * n + j] = self.entries[j * n + k].conj();
            }
        }
        Self::from_entries(n, entries)
    }

    /// Multiply every entry by a scalar.
    pub fn scaled(&self, factor: Complex64) -> Self {
        Self::from_entries(self.n, self.entries.iter().map(|&e| e * factor).collect())
    }

    /// Largest entrywise distance to another matrix of the same dimension.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.n, other.n, "dimension mismatch");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest entrywise deviation of M * M^dagger from the identity.
    pub fn unitarity_defect(&self) -> f64 {
        self.matmul(&self.dagger()).max_abs_diff(&Self::identity(self.n))
    }
}

/// Build the dense order-alpha transform matrix with the default size cap.
pub fn frdft_matrix(n: usize, alpha: f64) -> Result<TransformMatrix> {
    frdft_matrix_with_cap(n, alpha, MATRIX_CAP)
}

/// Build the dense order-alpha transform matrix, refusing n above `cap`.
///
/// Entry (j, k) is evaluated from the closed form of the five-factor
/// product,
///
/// ```text
/// F_jk = (1/n) * exp(-i*pi*t*(j^2+k^2)/n)
///              * sum_m exp(-i*pi*(s*m^2 + 2*m*(k-j))/n)
/// ```
///
/// with t = tan(alpha/2) and s = sin(alpha). The m-sum is accumulated
/// term by term for every entry, an O(n^3) build; this path exists to be
/// trusted, not to be fast. The integer part of each term's exponent is
/// reduced modulo 2n exactly before evaluation, so entries stay accurate
/// for every j, k.
pub fn frdft_matrix_with_cap(n: usize, alpha: f64, cap: usize) -> Result<TransformMatrix> {
    if n == 0 {
        return Err(FrdftError::ZeroDimension);
    }
    if n > cap {
        return Err(FrdftError::MatrixCapExceeded { n, cap });
    }
    check_raw_angle(alpha)?;
    let rates = chirp_rates(alpha)?;
    let nf = n as f64;

    // Diagonal chirp factors shared by rows and columns, and the inner
    // chirp samples of the m-sum.
    let outer: Vec<Complex64> = (0..n)
        .map(|j| {
            let jf = j as f64;
            Complex64::from_polar(1.0, -PI * rates.outer * jf * jf / nf)
        })
        .collect();
    let inner: Vec<Complex64> = (0..n)
        .map(|m| {
            let mf = m as f64;
            Complex64::from_polar(1.0, -PI * rates.inner * mf * mf / nf)
        })
        .collect();
    let roots = unit_roots(n);

    let inv_n = 1.0 / nf;
    let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
    for j in 0..n {
        for k in 0..n {
            // exp(-2*pi*i*m*(k-j)/n) walks the root table with stride
            // (k-j) mod n; the index arithmetic is exact.
            let stride = (k + n - j) % n;
            let mut idx = 0usize;
            let mut acc = Complex64::new(0.0, 0.0);
            for &p in &inner {
                acc += p * roots[idx];
                idx += stride;
                if idx >= n {
                    idx -= n;
                }
            }
            entries[j * n + k] = outer[j] * outer[k] * acc * inv_n;
        }
    }
    Ok(TransformMatrix::from_entries(n, entries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::sigma;
    use crate::signal::energy;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn max_abs_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
        assert_eq!(a.len(), b.len());
        a.iter()
            .zip(b)
            .map(|(p, q)| (p - q).norm())
            .fold(0.0, f64::max)
    }

    fn probe(n: usize) -> Vec<Complex64> {
        (0..n)
            .map(|j| {
                let t = j as f64;
                c((0.9 * t).sin() - 0.1, (1.7 * t).cos() + 0.3)
            })
            .collect()
    }

    #[test]
    fn rates_at_zero_and_quarter_turn() {
        let r = chirp_rates(0.0).unwrap();
        assert_eq!(r, ChirpRates { outer: 0.0, inner: 0.0 });
        let r = chirp_rates(PI / 2.0).unwrap();
        assert!((r.outer - 1.0).abs() <= 1e-15);
        assert!((r.inner - 1.0).abs() <= 1e-15);
    }

    #[test]
    fn rates_at_a_third_turn() {
        let r = chirp_rates(PI / 3.0).unwrap();
        assert!((r.outer - 0.5773502691896257).abs() <= 1e-12);
        assert!((r.inner - 0.8660254037844386).abs() <= 1e-12);
    }

    #[test]
    fn rates_blow_up_near_half_turn() {
        let err = chirp_rates(PI - 1e-8).unwrap_err();
        match err {
            FrdftError::IllConditionedAngle { bound, .. } => {
                assert_eq!(bound, CHIRP_RATE_BOUND)
            }
            other => panic!("unexpected error {other:?}"),
        }
        // A custom bound moves the threshold.
        assert!(chirp_rates_with_bound(PI - 1e-8, 1e12).is_ok());
        assert!(chirp_rates_with_bound(1.0, 0.5).is_err());
    }

    #[test]
    fn inner_rate_is_always_within_unit_range() {
        for i in 0..200 {
            let alpha = -3.0 + 6.0 * i as f64 / 199.0;
            let r = chirp_rates(alpha).unwrap();
            assert!(r.inner.abs() <= 1.0);
            assert!((r.outer - (alpha / 2.0).tan()).abs() <= 1e-12);
        }
    }

    #[test]
    fn zero_rate_chirp_is_the_identity() {
        let x = probe(9);
        assert_eq!(quadratic_phase(&x, 0.0), x);
    }

    #[test]
    fn unit_rate_chirp_on_flat_input() {
        // Phases -pi*j^2/4 for j = 0..3: 0, -pi/4, -pi, -9*pi/4.
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let x = vec![c(1.0, 0.0); 4];
        let y = quadratic_phase(&x, 1.0);
        let want = [c(1.0, 0.0), c(s, -s), c(-1.0, 0.0), c(s, -s)];
        assert!(max_abs_diff(&y, &want) <= 1e-12);
    }

    #[test]
    fn chirp_leaves_sample_zero_and_magnitudes_alone() {
        let x = probe(33);
        let y = quadratic_phase(&x, 0.7321);
        assert_eq!(y[0], x[0]);
        for (a, b) in x.iter().zip(&y) {
            assert!((a.norm() - b.norm()).abs() <= 1e-14);
        }
    }

    #[test]
    fn angle_reduction_basics() {
        let d = reduce_angle(0.3);
        assert_eq!(d.quarter_turns, 0);
        assert_eq!(d.residual, 0.3);

        let d = reduce_angle(PI / 2.0);
        assert_eq!(d.quarter_turns, 1);
        assert_eq!(d.residual, 0.0);

        let d = reduce_angle(2.0);
        assert_eq!(d.quarter_turns, 1);
        assert!((d.residual - 0.4292036732051034).abs() <= 1e-15);

        let d = reduce_angle(PI);
        assert_eq!(d.quarter_turns, 2);
        assert_eq!(d.residual, 0.0);

        let d = reduce_angle(-PI);
        assert_eq!(d.quarter_turns, 2);
        assert_eq!(d.residual, 0.0);
    }

    #[test]
    fn angle_reduction_covers_the_seams() {
        let d = reduce_angle(FRAC_PI_4);
        assert_eq!(d.quarter_turns, 1);
        assert!((d.residual + FRAC_PI_4).abs() <= 1e-15);

        let d = reduce_angle(-FRAC_PI_4);
        assert_eq!(d.quarter_turns, 0);
        assert_eq!(d.residual, -FRAC_PI_4);

        for i in 0..500 {
            let alpha = -10.0 + 20.0 * i as f64 / 499.0;
            let d = reduce_angle(alpha);
            assert!((-FRAC_PI_4..FRAC_PI_4).contains(&d.residual), "alpha = {alpha}");
            let rebuilt = d.quarter_turns as f64 * (PI / 2.0) + d.residual;
            let wraps = ((alpha - rebuilt) / (2.0 * PI)).round();
            assert!(
                (alpha - rebuilt - wraps * 2.0 * PI).abs() <= 1e-9,
                "alpha = {alpha}"
            );
        }
    }

    #[test]
    fn zero_order_transform_is_the_identity() {
        let x = probe(16);
        let y = frdft_apply(&x, 0.0, Mode::Raw).unwrap();
        assert!(max_abs_diff(&y, &x) <= 1e-12);
        let y = frdft_apply(&x, 0.0, Mode::Decomposed).unwrap();
        assert_eq!(y, x);
    }

    #[test]
    fn quarter_turn_raw_matches_phased_dft() {
        let x = probe(16);
        let y = frdft_apply(&x, PI / 2.0, Mode::Raw).unwrap();
        let phase = sigma(16).unwrap();
        let want: Vec<Complex64> = dft(&x).unwrap().iter().map(|&v| v * phase).collect();
        assert!(max_abs_diff(&y, &want) <= 1e-10);
    }

    #[test]
    fn decomposed_quarter_turns_are_exact_operator_powers() {
        let x = probe(32);
        assert_eq!(
            frdft_apply(&x, PI / 2.0, Mode::Decomposed).unwrap(),
            dft(&x).unwrap()
        );
        assert_eq!(frdft_apply(&x, PI, Mode::Decomposed).unwrap(), parity(&x));
        assert_eq!(
            frdft_apply(&x, -PI / 2.0, Mode::Decomposed).unwrap(),
            idft(&x).unwrap()
        );
    }

    #[test]
    fn decomposed_accepts_angles_raw_refuses() {
        let x = probe(8);
        assert!(matches!(
            frdft_apply(&x, 3.5, Mode::Raw),
            Err(FrdftError::AngleOutOfRange { .. })
        ));
        let y = frdft_apply(&x, 3.5, Mode::Decomposed).unwrap();
        let e = energy(&x);
        assert!((energy(&y) - e).abs() <= 1e-10 * e);
        // Near pi the raw chirp rate explodes but the decomposed route
        // only ever sees the small residual.
        assert!(frdft_apply(&x, PI - 1e-9, Mode::Raw).is_err());
        assert!(frdft_apply(&x, PI - 1e-9, Mode::Decomposed).is_ok());
    }

    #[test]
    fn both_modes_agree_inside_the_residual_band() {
        // For |alpha| < pi/4 the decomposition is trivial, so the two
        // modes run the identical computation.
        let x = probe(16);
        let a = frdft_apply(&x, 0.5, Mode::Raw).unwrap();
        let b = frdft_apply(&x, 0.5, Mode::Decomposed).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn transforms_preserve_energy() {
        let x = probe(64);
        let e = energy(&x);
        for alpha in [-2.0, -0.7, 0.3, 1.2, 2.2] {
            let y = frdft_apply(&x, alpha, Mode::Raw).unwrap();
            assert!((energy(&y) - e).abs() <= 1e-10 * e, "alpha = {alpha}");
        }
    }

    #[test]
    fn raw_transform_inverts_with_the_opposite_angle() {
        let x = probe(50);
        for alpha in [0.25, 0.9, 2.0] {
            let y = frdft_apply(&x, alpha, Mode::Raw).unwrap();
            let back = frdft_apply(&y, -alpha, Mode::Raw).unwrap();
            assert!(max_abs_diff(&back, &x) <= 1e-9, "alpha = {alpha}");
        }
    }

    #[test]
    fn empty_signal_is_rejected_in_both_modes() {
        assert_eq!(
            frdft_apply(&[], 0.3, Mode::Raw),
            Err(FrdftError::EmptySignal)
        );
        assert_eq!(
            frdft_apply(&[], 0.0, Mode::Decomposed),
            Err(FrdftError::EmptySignal)
        );
    }

    #[test]
    fn matrix_at_zero_order_is_the_identity() {
        let m = frdft_matrix(4, 0.0).unwrap();
        assert!(m.max_abs_diff(&TransformMatrix::identity(4)) <= 1e-13);
    }

    #[test]
    fn matrix_at_quarter_turn_is_the_phased_dft_kernel() {
        let m = frdft_matrix(4, PI / 2.0).unwrap();
        // sigma(4) = exp(-i*pi/4).
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let want = TransformMatrix::dft_kernel(4).scaled(c(s, -s));
        assert!(m.max_abs_diff(&want) <= 1e-12);
    }

    #[test]
    fn matrix_is_unitary() {
        let m = frdft_matrix(8, 0.3).unwrap();
        assert!(m.unitarity_defect() <= 1e-10);
    }

    #[test]
    fn matrix_columns_match_the_apply_path() {
        let n = 16;
        let m = frdft_matrix(n, 0.7).unwrap();
        for k in 0..n {
            let mut e = vec![c(0.0, 0.0); n];
            e[k] = c(1.0, 0.0);
            let col = frdft_apply(&e, 0.7, Mode::Raw).unwrap();
            let got: Vec<Complex64> = (0..n).map(|j| m.get(j, k)).collect();
            assert!(max_abs_diff(&col, &got) <= 1e-10, "column {k}");
        }
    }

    #[test]
    fn matrix_apply_matches_fast_path_on_dense_input() {
        let x = probe(16);
        let m = frdft_matrix(16, 0.7).unwrap();
        let via_matrix = m.apply(&x).unwrap();
        let via_chirps = frdft_apply(&x, 0.7, Mode::Raw).unwrap();
        assert!(max_abs_diff(&via_matrix, &via_chirps) <= 1e-10);
    }

    #[test]
    fn matrix_size_guards() {
        assert_eq!(frdft_matrix(0, 0.3), Err(FrdftError::ZeroDimension));
        assert_eq!(
            frdft_matrix(MATRIX_CAP + 1, 0.3),
            Err(FrdftError::MatrixCapExceeded {
                n: MATRIX_CAP + 1,
                cap: MATRIX_CAP
            })
        );
        assert_eq!(
            frdft_matrix_with_cap(9, 0.3, 8),
            Err(FrdftError::MatrixCapExceeded { n: 9, cap: 8 })
        );
        assert!(frdft_matrix_with_cap(9, 0.3, 9).is_ok());
    }

    #[test]
    fn matrix_rejects_bad_angles() {
        assert!(matches!(
            frdft_matrix(8, 3.5),
            Err(FrdftError::AngleOutOfRange { .. })
        ));
        assert!(matches!(
            frdft_matrix(8, PI - 1e-9),
            Err(FrdftError::IllConditionedAngle { .. })
        ));
    }

    #[test]
    fn dft_kernel_agrees_with_the_fast_transform() {
        let x = probe(12);
        let b = TransformMatrix::dft_kernel(12);
        let via_matrix = b.apply(&x).unwrap();
        let via_fft = dft(&x).unwrap();
        assert!(max_abs_diff(&via_matrix, &via_fft) <= 1e-12);
    }

    #[test]
    fn matrix_helpers_behave() {
        let i4 = TransformMatrix::identity(4);
        let b = TransformMatrix::dft_kernel(4);
        assert!(b.matmul(&i4).max_abs_diff(&b) <= 1e-15);
        assert!(b.matmul(&b.dagger()).max_abs_diff(&i4) <= 1e-12);
        assert_eq!(i4.get(2, 2), c(1.0, 0.0));
        assert_eq!(i4.get(2, 1), c(0.0, 0.0));
        assert_eq!(
            b.apply(&probe(3)),
            Err(FrdftError::DimensionMismatch { n: 4, len: 3 })
        );
        let z = vec![c(0.0, 0.0); 4];
        assert_eq!(b.apply(&z).unwrap(), z);
    }
}
