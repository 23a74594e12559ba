//! Randomized property checks for the transform algebra.

use frdft::*;
use num_complex::Complex64;
use proptest::prelude::*;
use std::f64::consts::PI;

fn max_abs_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(p, q)| (p - q).norm())
        .fold(0.0, f64::max)
}

fn signals(max_len: usize) -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1..=max_len)
        .prop_map(|v| v.into_iter().map(|(re, im)| Complex64::new(re, im)).collect())
}

// Well inside (-3*pi/4, 3*pi/4), clear of the conditioning rim.
fn angles() -> impl Strategy<Value = f64> {
    -2.35f64..2.35
}

proptest! {
    #[test]
    fn dft_roundtrips(x in signals(64)) {
        let back = idft(&dft(&x).unwrap()).unwrap();
        prop_assert!(max_abs_diff(&back, &x) <= 1e-12);
    }

    #[test]
    fn dft_preserves_energy(x in signals(64)) {
        let e = energy(&x);
        prop_assert!((energy(&dft(&x).unwrap()) - e).abs() <= 1e-10 * e);
    }

    #[test]
    fn double_dft_is_parity(x in signals(48)) {
        let twice = dft(&dft(&x).unwrap()).unwrap();
        prop_assert!(max_abs_diff(&twice, &parity(&x)) <= 1e-12);
    }

    #[test]
    fn fourth_dft_power_is_identity(x in signals(48)) {
        let mut y = x.clone();
        for _ in 0..4 {
            y = dft(&y).unwrap();
        }
        prop_assert!(max_abs_diff(&y, &x) <= 1e-10);
    }

    #[test]
    fn fast_path_matches_direct_kernel(p in 0u32..=8, seed in any::<u32>()) {
        let n = 1usize << p;
        let x: Vec<Complex64> = (0..n)
            .map(|j| {
                let t = j as f64 + seed as f64 * 1e-3;
                Complex64::new((1.1 * t).sin(), (0.6 * t).cos())
            })
            .collect();
        prop_assert!(max_abs_diff(&dft(&x).unwrap(), &dft_direct(&x).unwrap()) <= 1e-10);
    }

    #[test]
    fn quadratic_phase_preserves_magnitudes(x in signals(64), rate in -2.0f64..2.0) {
        let y = quadratic_phase(&x, rate);
        for (a, b) in x.iter().zip(&y) {
            prop_assert!((a.norm() - b.norm()).abs() <= 1e-13);
        }
    }

    #[test]
    fn raw_transform_preserves_energy(x in signals(64), alpha in angles()) {
        let e = energy(&x);
        let y = frdft_apply(&x, alpha, Mode::Raw).unwrap();
        prop_assert!((energy(&y) - e).abs() <= 1e-10 * e);
    }

    #[test]
    fn decomposed_transform_preserves_energy(x in signals(64), alpha in -12.0f64..12.0) {
        let e = energy(&x);
        let y = frdft_apply(&x, alpha, Mode::Decomposed).unwrap();
        prop_assert!((energy(&y) - e).abs() <= 1e-10 * e);
    }

    #[test]
    fn opposite_angles_invert(x in signals(64), alpha in angles()) {
        let y = frdft_apply(&x, alpha, Mode::Raw).unwrap();
        let back = frdft_apply(&y, -alpha, Mode::Raw).unwrap();
        prop_assert!(max_abs_diff(&back, &x) <= 1e-9);
    }

    #[test]
    fn decomposed_quarter_turn_is_exactly_the_dft(x in signals(48)) {
        let turned = frdft_apply(&x, PI / 2.0, Mode::Decomposed).unwrap();
        prop_assert_eq!(turned, dft(&x).unwrap());
        let half = frdft_apply(&x, PI, Mode::Decomposed).unwrap();
        prop_assert_eq!(half, parity(&x));
    }

    #[test]
    fn angle_reduction_reconstructs_mod_full_turns(alpha in -50.0f64..50.0) {
        let d = reduce_angle(alpha);
        prop_assert!(d.quarter_turns < 4);
        prop_assert!((-PI / 4.0..PI / 4.0).contains(&d.residual));
        let rebuilt = d.quarter_turns as f64 * (PI / 2.0) + d.residual;
        let wraps = ((alpha - rebuilt) / (2.0 * PI)).round();
        prop_assert!((alpha - rebuilt - wraps * 2.0 * PI).abs() <= 1e-9);
    }

    #[test]
    fn window_sums_of_even_order_ignore_their_start(half in 1usize..=32, start in -128i64..=128) {
        let n = 2 * half;
        let shifted = root_sum(n, start).value;
        let base = root_sum(n, 0).value;
        prop_assert!((shifted - base).norm() <= 1e-12);
    }

    #[test]
    fn concentration_lies_in_the_unit_interval(
        x in signals(64).prop_filter("needs energy", |x| energy(x) > 1e-6),
        wsel in 0usize..64,
    ) {
        let w = 1 + wsel % x.len();
        let c = concentration(&x, w).unwrap();
        prop_assert!(c > 0.0 && c <= 1.0);
    }

    #[test]
    fn plane_model_tracks_rotations(alpha in -3.0f64..3.0) {
        let m = compose_garcia(alpha).unwrap();
        prop_assert!(m.max_abs_diff(&rotation(alpha)) <= 1e-12);
        prop_assert!((m.det() - 1.0).abs() <= 1e-12);
    }
}
