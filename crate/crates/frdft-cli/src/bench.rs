//! Timing harness behind `frdft bench`.
//!
//! Times the chirp apply path across the requested power-of-two sizes, and
//! the dense matrix path (build plus one application) at sizes the matrix
//! cap admits. Reports the median of `repeats` runs after one warmup, plus
//! the log-log slope between consecutive sizes on the same path, as CSV on
//! stdout.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

use frdft::{frdft_apply, frdft_matrix_with_cap, Mode, MATRIX_CAP};

use crate::AppError;

/// Largest size the matrix path is ever timed at, regardless of the cap.
const MATRIX_BENCH_LIMIT: usize = 4096;
const BENCH_ALPHA: f64 = 0.7;

pub struct Options {
    pub sizes: Vec<usize>,
    pub repeats: usize,
    pub cap: usize,
}

fn median(mut times: Vec<f64>) -> f64 {
    times.sort_by(f64::total_cmp);
    times[times.len() / 2]
}

fn seeded_signal(n: usize) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(7 + n as u64);
    (0..n)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect()
}

fn time_runs<F: FnMut() -> Complex64>(repeats: usize, mut work: F) -> f64 {
    let mut sink = Complex64::new(0.0, 0.0);
    sink += work(); // warmup
    let times: Vec<f64> = (0..repeats)
        .map(|_| {
            let start = Instant::now();
            sink += work();
            start.elapsed().as_secs_f64()
        })
        .collect();
    // Keep the accumulated value observable so the work is not optimized out.
    std::hint::black_box(sink);
    median(times)
}

struct Row {
    path: &'static str,
    n: usize,
    seconds: f64,
    slope: Option<f64>,
}

pub fn run(opts: &Options) -> Result<String, AppError> {
    if opts.sizes.is_empty() {
        return Err(AppError::usage("bench needs at least one size".into()));
    }
    if let Some(bad) = opts.sizes.iter().find(|&&n| !n.is_power_of_two()) {
        return Err(AppError::usage(format!(
            "bench sizes must be powers of two, got {bad}"
        )));
    }
    if opts.repeats == 0 {
        return Err(AppError::usage("bench needs at least one repeat".into()));
    }

    let mut sizes = opts.sizes.clone();
    sizes.sort_unstable();
    sizes.dedup();

    let mut rows: Vec<Row> = Vec::new();
    let push = |rows: &mut Vec<Row>, path: &'static str, n: usize, seconds: f64| {
        let slope = rows
            .iter()
            .rev()
            .find(|r| r.path == path)
            .map(|prev| (seconds.ln() - prev.seconds.ln()) / ((n as f64).ln() - (prev.n as f64).ln()));
        rows.push(Row { path, n, seconds, slope });
    };

    for &n in &sizes {
        let x = seeded_signal(n);
        let seconds = time_runs(opts.repeats, || {
            frdft_apply(&x, BENCH_ALPHA, Mode::Raw).unwrap()[0]
        });
        push(&mut rows, "apply", n, seconds);
    }

    let matrix_limit = opts.cap.min(MATRIX_BENCH_LIMIT);
    for &n in sizes.iter().filter(|&&n| n <= matrix_limit) {
        let x = seeded_signal(n);
        let seconds = time_runs(opts.repeats, || {
            let m = frdft_matrix_with_cap(n, BENCH_ALPHA, opts.cap).unwrap();
            m.apply(&x).unwrap()[0]
        });
        push(&mut rows, "matrix", n, seconds);
    }

    let mut out = String::from("path,n,seconds,slope\n");
    for row in &rows {
        let slope = row
            .slope
            .map_or_else(|| "nan".into(), |s| format!("{s:.4}"));
        out.push_str(&format!("{},{},{:.6e},{}\n", row.path, row.n, row.seconds, slope));
    }
    Ok(out)
}

/// Default cap for the matrix path when `FRFT_MATRIX_CAP` is not set.
pub fn default_cap() -> usize {
    MATRIX_CAP
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn median_of_odd_and_even_lists() {
        assert_eq!(median(vec![3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(vec![4.0, 1.0, 3.0, 2.0]), 3.0);
    }

    #[test]
    fn rejects_bad_requests() {
        let empty = Options { sizes: vec![], repeats: 3, cap: MATRIX_CAP };
        assert!(run(&empty).is_err());
        let odd = Options { sizes: vec![48], repeats: 3, cap: MATRIX_CAP };
        assert!(run(&odd).is_err());
        let zero = Options { sizes: vec![64], repeats: 0, cap: MATRIX_CAP };
        assert!(run(&zero).is_err());
    }

    #[test]
    fn reports_both_paths_with_slopes() {
        let opts = Options { sizes: vec![64, 16], repeats: 1, cap: MATRIX_CAP };
        let out = run(&opts).unwrap();
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "path,n,seconds,slope");
        assert_eq!(lines.len(), 5);
        assert!(lines[1].starts_with("apply,16,"));
        assert!(lines[1].ends_with(",nan"));
        assert!(lines[2].starts_with("apply,64,"));
        assert!(!lines[2].ends_with(",nan"));
        assert!(lines[3].starts_with("matrix,16,"));
        assert!(lines[4].starts_with("matrix,64,"));
    }

    #[test]
    fn cap_of_one_skips_the_matrix_path() {
        let opts = Options { sizes: vec![16], repeats: 1, cap: 1 };
        let out = run(&opts).unwrap();
        assert!(out.contains("apply,16,"));
        assert!(!out.contains("matrix"));
    }
}
