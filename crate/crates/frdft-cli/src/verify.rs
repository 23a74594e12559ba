//! Self-checking invariant suite behind `frdft verify`.
//!
//! Every check draws its inputs from one seeded RNG in a fixed order, so a
//! given `--seed` always produces a byte-identical report. Checks print one
//! `[PASS]`/`[FAIL]` line each with the worst observed deviation and the
//! tolerance it was held to; `[INFO]` lines report measured quantities that
//! are diagnostic only and never fail the run.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::{FRAC_PI_2, PI};

use frdft::{
    compose_garcia, dft, dft_direct, energy, frdft_apply, frdft_matrix, parity, root_sum,
    rotation, shear, sigma, Mode, TransformMatrix,
};

/// Deliberate defects that can be injected to prove the suite has teeth.
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Scale the forward transform output by 1.001 inside the unitarity
    /// check, breaking energy preservation.
    Normalization,
}

pub struct Options {
    pub max_n: usize,
    pub seed: u64,
    pub fault: Option<Fault>,
}

pub struct Report {
    pub lines: Vec<String>,
    pub failed: usize,
}

struct Suite {
    rng: ChaCha8Rng,
    max_n: usize,
    fault: Option<Fault>,
    lines: Vec<String>,
    checked: usize,
    failed: usize,
}

fn random_signal(rng: &mut ChaCha8Rng, n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect()
}

fn max_abs_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

impl Suite {
    fn sizes(&self, base: &[usize]) -> Vec<usize> {
        base.iter().copied().filter(|&n| n <= self.max_n).collect()
    }

    fn record(&mut self, name: &str, worst: f64, tol: f64) {
        self.record_with(name, worst, tol, worst <= tol);
    }

    fn record_with(&mut self, name: &str, worst: f64, tol: f64, pass: bool) {
        self.checked += 1;
        let tag = if pass {
            "[PASS]"
        } else {
            self.failed += 1;
            "[FAIL]"
        };
        self.lines
            .push(format!("{tag} {name:<42} worst {worst:9.1e}   tol {tol:.1e}"));
    }

    fn info(&mut self, name: &str, detail: &str) {
        self.lines.push(format!("[INFO] {name:<42} {detail}"));
    }

    /// One random signal per length: the transform must preserve energy.
    /// This is where an injected normalization fault lands.
    fn unitarity(&mut self) {
        let mut worst = 0.0f64;
        for n in 1..=self.max_n {
            let x = random_signal(&mut self.rng, n);
            let mut y = dft(&x).unwrap();
            if self.fault == Some(Fault::Normalization) {
                for v in &mut y {
                    *v *= 1.001;
                }
            }
            let (ex, ey) = (energy(&x), energy(&y));
            worst = worst.max((ey - ex).abs() / ex.max(1e-300));
        }
        self.record("core-numeric/unitarity", worst, 1e-10);
    }

    fn fourth_root(&mut self) {
        let sizes = self.sizes(&[1, 2, 3, 4, 5, 8, 12, 16, 27, 32, 64, 100, 128, 256, 512, 1000, 1024]);
        let mut worst = 0.0f64;
        for n in sizes {
            let x = random_signal(&mut self.rng, n);
            let mut y = x.clone();
            for _ in 0..4 {
                y = dft(&y).unwrap();
            }
            let peak = x.iter().map(|v| v.norm()).fold(1e-300, f64::max);
            worst = worst.max(max_abs_diff(&x, &y) / peak);
        }
        self.record("core-numeric/fourth-power-identity", worst, 1e-10);
    }

    fn double_dft_parity(&mut self) {
        let sizes = self.sizes(&[1, 2, 3, 4, 5, 8, 12, 16, 27, 32, 64, 100, 128, 256, 512, 1000, 1024]);
        let mut worst = 0.0f64;
        for n in sizes {
            let x = random_signal(&mut self.rng, n);
            let y = dft(&dft(&x).unwrap()).unwrap();
            worst = worst.max(max_abs_diff(&y, &parity(&x)));
        }
        self.record("core-numeric/double-transform-parity", worst, 1e-10);
    }

    fn fast_vs_direct(&mut self) {
        let mut worst = 0.0f64;
        let mut n = 1;
        while n <= self.max_n.min(256) {
            let x = random_signal(&mut self.rng, n);
            worst = worst.max(max_abs_diff(&dft(&x).unwrap(), &dft_direct(&x).unwrap()));
            n *= 2;
        }
        self.record("core-numeric/fast-vs-direct", worst, 1e-10);
    }

    /// Columns of the closed-form matrix must match the chirp pipeline
    /// applied to basis vectors: two independent routes to the same operator.
    fn oracle_equivalence(&mut self) {
        let sizes = self.sizes(&[4, 8, 16, 32, 64, 128]);
        let mut worst = 0.0f64;
        for n in sizes {
            for _ in 0..6 {
                let alpha = self.rng.gen_range(-2.35..2.35);
                let m = frdft_matrix(n, alpha).unwrap();
                let k = self.rng.gen_range(0..n);
                let mut basis = vec![Complex64::new(0.0, 0.0); n];
                basis[k] = Complex64::new(1.0, 0.0);
                let col = frdft_apply(&basis, alpha, Mode::Raw).unwrap();
                let dev = (0..n)
                    .map(|j| (m.get(j, k) - col[j]).norm())
                    .fold(0.0, f64::max);
                worst = worst.max(dev);
            }
        }
        self.record("frdft/oracle-equivalence", worst, 1e-9);
    }

    fn apply_unitarity(&mut self) {
        let sizes = self.sizes(&[4, 16, 64, 256, 1024]);
        let mut worst = 0.0f64;
        for n in sizes {
            for _ in 0..3 {
                let alpha = self.rng.gen_range(-2.35..2.35);
                let x = random_signal(&mut self.rng, n);
                let y = frdft_apply(&x, alpha, Mode::Raw).unwrap();
                let (ex, ey) = (energy(&x), energy(&y));
                worst = worst.max((ey - ex).abs() / ex.max(1e-300));
            }
        }
        self.record("frdft/apply-unitarity", worst, 1e-10);
    }

    fn inverse_pairing(&mut self) {
        let sizes = self.sizes(&[4, 16, 64, 256, 1024]);
        let mut worst = 0.0f64;
        for n in sizes {
            for _ in 0..2 {
                let alpha = self.rng.gen_range(-2.35..2.35);
                let x = random_signal(&mut self.rng, n);
                let y = frdft_apply(&x, alpha, Mode::Raw).unwrap();
                let back = frdft_apply(&y, -alpha, Mode::Raw).unwrap();
                worst = worst.max(max_abs_diff(&x, &back));
            }
        }
        self.record("frdft/inverse-pairing", worst, 1e-9);
    }

    /// Small angles give an operator near the identity. The deviation of
    /// F(1e-6) from I grows like sqrt(n) in the signal length, so the bound
    /// is calibrated per length; raw values are printed for inspection.
    fn zero_angle_continuity(&mut self) {
        let sizes = self.sizes(&[4, 16, 64, 256, 1024]);
        let mut worst_scaled = 0.0f64;
        let mut raw = Vec::new();
        for &n in &sizes {
            let x = random_signal(&mut self.rng, n);
            let scale = energy(&x).sqrt();
            let x: Vec<Complex64> = x.iter().map(|v| v / scale).collect();
            let y = frdft_apply(&x, 1e-6, Mode::Raw).unwrap();
            let dev = max_abs_diff(&x, &y);
            raw.push(format!("n={n}: {dev:.1e}"));
            worst_scaled = worst_scaled.max(dev / (n as f64).sqrt());
        }
        self.record("frdft/zero-angle-continuity", worst_scaled, 4e-5);
        let detail = format!("deviation of F(1e-6) from identity: {}", raw.join(", "));
        self.info("frdft/zero-angle-continuity-raw", &detail);
    }

    /// Even-length quadratic root sums ignore where the window starts;
    /// odd lengths genuinely do not (n=3 shifts the sum by 2).
    fn root_sum_shift(&mut self) {
        let mut worst = 0.0f64;
        for half in 1..=32usize {
            let n = 2 * half;
            let base = root_sum(n, 0).value;
            for k in (-2 * n as i64)..=(2 * n as i64) {
                worst = worst.max((root_sum(n, k).value - base).norm());
            }
        }
        let odd_moves = [3usize, 5, 7].iter().all(|&n| {
            let base = root_sum(n, 0).value;
            (1..n as i64).any(|k| (root_sum(n, k).value - base).norm() > 0.1)
        });
        self.record_with(
            "frdft/root-sum-shift-invariance",
            worst,
            1e-12,
            worst <= 1e-12 && odd_moves,
        );
    }

    fn pi_half_limit(&mut self) {
        let sizes = self.sizes(&[4, 16, 64, 256]);
        let mut worst = 0.0f64;
        for n in sizes {
            let m = frdft_matrix(n, FRAC_PI_2).unwrap();
            let target = TransformMatrix::dft_kernel(n).scaled(sigma(n).unwrap());
            worst = worst.max(m.max_abs_diff(&target));
        }
        self.record("frdft/pi-half-limit", worst, 1e-10);
    }

    fn sigma_unit_modulus(&mut self) {
        let mut worst = 0.0f64;
        let mut n = 2;
        while n <= self.max_n.max(2) && n <= 1024 {
            worst = worst.max((sigma(n).unwrap().norm() - 1.0).abs());
            n += 2;
        }
        self.record("frdft/sigma-unit-modulus", worst, 1e-12);
    }

    /// Decomposed mode must hand quarter turns to the exact operators:
    /// bitwise equality, not a tolerance.
    fn quarter_turn_consistency(&mut self) {
        let mut exact = true;
        for n in self.sizes(&[8, 33]) {
            let x = random_signal(&mut self.rng, n);
            let q = frdft_apply(&x, FRAC_PI_2, Mode::Decomposed).unwrap();
            let h = frdft_apply(&x, PI, Mode::Decomposed).unwrap();
            exact &= q == dft(&x).unwrap() && h == parity(&x);
        }
        self.record_with("frdft/quarter-turn-exactness", 0.0, 0.0, exact);
    }

    fn plane_model(&mut self) {
        let mut worst_rot = 0.0f64;
        let mut worst_det = 0.0f64;
        let mut worst_cos = 0.0f64;
        for _ in 0..1000 {
            let alpha = self.rng.gen_range(-3.0..3.0);
            let m = compose_garcia(alpha).unwrap();
            worst_rot = worst_rot.max(m.max_abs_diff(&rotation(alpha)));
            worst_det = worst_det.max((m.det() - 1.0).abs());
            worst_cos = worst_cos.max((m.get(0, 0) - alpha.cos()).abs());
            let q = self.rng.gen_range(-10.0..10.0);
            worst_det = worst_det.max((shear(q).det() - 1.0).abs());
        }
        self.record("tfmodel/garcia-vs-rotation", worst_rot, 1e-12);
        self.record("tfmodel/determinant-one", worst_det, 1e-12);
        self.record("tfmodel/diagonal-cosine", worst_cos, 1e-12);
    }

    /// Measured, not asserted: the discrete transform is only approximately
    /// additive in the angle, and the defect does not vanish with accuracy.
    fn additivity_diagnostic(&mut self) {
        let n = 64.min(self.max_n.max(4));
        let mut worst = 0.0f64;
        for _ in 0..10 {
            let a = self.rng.gen_range(-3.0 * PI / 8.0..3.0 * PI / 8.0);
            let b = self.rng.gen_range(-3.0 * PI / 8.0..3.0 * PI / 8.0);
            let lhs = frdft_matrix(n, a).unwrap().matmul(&frdft_matrix(n, b).unwrap());
            let rhs = frdft_matrix(n, a + b).unwrap();
            worst = worst.max(lhs.max_abs_diff(&rhs));
        }
        let detail = format!(
            "max |F(a)F(b) - F(a+b)| = {worst:.2e} at n={n} over 10 random pairs (not asserted)"
        );
        self.info("frdft/additivity-defect", &detail);
    }

    /// Measured, not asserted: at odd lengths the quarter-turn limit does
    /// not collapse to a phased transform kernel the way even lengths do.
    fn odd_length_diagnostic(&mut self) {
        let devs: Vec<String> = [3usize, 5, 7]
            .iter()
            .map(|&n| {
                let m = frdft_matrix(n, FRAC_PI_2).unwrap();
                let phase = root_sum(n, 0).value / (n as f64).sqrt();
                let target = TransformMatrix::dft_kernel(n).scaled(phase);
                format!("n={n}: {:.2e}", m.max_abs_diff(&target))
            })
            .collect();
        let detail = format!(
            "quarter-turn deviation from phased kernel at odd lengths: {} (not asserted)",
            devs.join(", ")
        );
        self.info("frdft/odd-length-quarter-turn", &detail);
    }
}

pub fn run(opts: &Options) -> Report {
    let mut suite = Suite {
        rng: ChaCha8Rng::seed_from_u64(opts.seed),
        max_n: opts.max_n,
        fault: opts.fault,
        lines: vec![format!(
            "invariant suite: seed={} max-n={}",
            opts.seed, opts.max_n
        )],
        checked: 0,
        failed: 0,
    };

    suite.unitarity();
    suite.fourth_root();
    suite.double_dft_parity();
    suite.fast_vs_direct();
    suite.oracle_equivalence();
    suite.apply_unitarity();
    suite.inverse_pairing();
    suite.zero_angle_continuity();
    suite.root_sum_shift();
    suite.pi_half_limit();
    suite.sigma_unit_modulus();
    suite.quarter_turn_consistency();
    suite.plane_model();
    suite.additivity_diagnostic();
    suite.odd_length_diagnostic();

    let verdict = if suite.failed == 0 { "ok" } else { "FAILED" };
    suite.lines.push(format!(
        "result: {} — {} checked, {} passed, {} failed",
        verdict,
        suite.checked,
        suite.checked - suite.failed,
        suite.failed
    ));
    Report {
        lines: suite.lines,
        failed: suite.failed,
    }
}
