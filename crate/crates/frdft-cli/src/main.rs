//! Command line front end for the fractional transform toolkit.
//!
//! Exit codes: 0 success, 1 verification failure, 2 parse or usage error,
//! 3 ill-conditioned or out-of-range angle, 4 resource cap exceeded.

mod bench;
mod io;
mod verify;

use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

use frdft::{
    frdft_apply, frdft_matrix_with_cap, localization_sweep, uniform_grid, FrdftError, Mode,
};

#[derive(Debug)]
pub struct AppError {
    code: u8,
    message: String,
}

impl AppError {
    pub fn usage(message: String) -> Self {
        AppError { code: 2, message }
    }
}

impl From<FrdftError> for AppError {
    fn from(err: FrdftError) -> Self {
        let code = match err {
            FrdftError::IllConditionedAngle { .. } | FrdftError::AngleOutOfRange { .. } => 3,
            FrdftError::MatrixCapExceeded { .. } => 4,
            _ => 2,
        };
        AppError {
            code,
            message: err.to_string(),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "frdft",
    version,
    about = "Fractional discrete Fourier transforms: apply, tabulate, sweep, verify, bench"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    /// Single five-step chirp pipeline; angle must lie in (-pi, pi) away
    /// from the conditioning limits.
    Raw,
    /// Reduce the angle to a quarter-turn count plus a small residual;
    /// accepts any finite angle.
    Decomposed,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Raw => Mode::Raw,
            ModeArg::Decomposed => Mode::Decomposed,
        }
    }
}

/// Angles are radians by default; a `deg:` prefix switches to degrees.
fn parse_angle(s: &str) -> Result<f64, String> {
    let (body, degrees) = match s.strip_prefix("deg:") {
        Some(rest) => (rest, true),
        None => (s, false),
    };
    let value: f64 = body
        .trim()
        .parse()
        .map_err(|_| format!("'{s}' is not a number"))?;
    if !value.is_finite() {
        return Err(format!("angle '{s}' is not finite"));
    }
    Ok(if degrees { value.to_radians() } else { value })
}

/// Grid specs are `start:stop:count` in radians with an inclusive stop.
fn parse_grid(s: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("grid '{s}' is not of the form start:stop:count"));
    }
    let bound = |part: &str| -> Result<f64, String> {
        let v: f64 = part
            .trim()
            .parse()
            .map_err(|_| format!("grid bound '{part}' is not a number"))?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(format!("grid bound '{part}' is not finite"))
        }
    };
    let start = bound(parts[0])?;
    let stop = bound(parts[1])?;
    let count: usize = parts[2]
        .parse()
        .map_err(|_| format!("grid count '{}' is not a whole number", parts[2]))?;
    if count < 2 {
        return Err("grid needs at least two points".into());
    }
    if stop <= start {
        return Err(format!("grid stop {stop} must exceed start {start}"));
    }
    Ok(uniform_grid(start, stop, count))
}

#[derive(Subcommand)]
enum Command {
    /// Apply the order-alpha transform to a signal file.
    Transform {
        /// Input signal CSV (`index,re,im` with a header row).
        #[arg(long)]
        input: PathBuf,
        /// Transform angle in radians, or degrees with a `deg:` prefix.
        #[arg(long, value_parser = parse_angle, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, value_enum, default_value_t = ModeArg::Raw)]
        mode: ModeArg,
        /// Output signal CSV.
        #[arg(long)]
        output: PathBuf,
    },
    /// Tabulate the dense transform matrix as CSV (`j,k,re,im`).
    Matrix {
        /// Matrix dimension.
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_angle, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long)]
        output: PathBuf,
    },
    /// Sweep transform angles and report spectral concentration per angle.
    Sweep {
        #[arg(long)]
        input: PathBuf,
        /// Angle grid as start:stop:count, in radians.
        #[arg(long, default_value = "0.01:3.131592653589793:181")]
        grid: String,
        /// Window width, in samples, for the concentration score.
        #[arg(long, default_value_t = 1)]
        window: usize,
        /// Output CSV: one `alpha,concentration` row per grid point,
        /// then a final `argmax` row.
        #[arg(long)]
        output: PathBuf,
    },
    /// Run the seeded invariant suite; exits 1 if any check fails.
    Verify {
        /// Largest signal length exercised.
        #[arg(long, default_value_t = 1024, value_parser = clap::value_parser!(u64).range(1..=4096))]
        max_n: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Inject a known defect to confirm the suite catches it.
        #[arg(long, hide = true, value_enum)]
        fault: Option<FaultArg>,
    },
    /// Time the apply and matrix paths; CSV on stdout.
    Bench {
        /// Comma-separated power-of-two sizes.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        /// Timed runs per size (median is reported).
        #[arg(long, default_value_t = 5)]
        repeats: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultArg {
    Normalization,
}

/// The matrix cap guards against accidental O(n^2) memory / O(n^3) time
/// requests; `FRFT_MATRIX_CAP` overrides the built-in default.
fn matrix_cap() -> Result<usize, AppError> {
    match std::env::var("FRFT_MATRIX_CAP") {
        Ok(raw) => raw.trim().parse().map_err(|_| {
            AppError::usage(format!("FRFT_MATRIX_CAP='{raw}' is not a whole number"))
        }),
        Err(_) => Ok(bench::default_cap()),
    }
}

fn run(cli: Cli) -> Result<u8, AppError> {
    match cli.command {
        Command::Transform {
            input,
            alpha,
            mode,
            output,
        } => {
            let x = io::read_signal(&input)?;
            let y = frdft_apply(&x, alpha, mode.into())?;
            io::write_signal(&output, &y)?;
            Ok(0)
        }
        Command::Matrix { n, alpha, output } => {
            let m = frdft_matrix_with_cap(n, alpha, matrix_cap()?)?;
            io::write_matrix(&output, &m)?;
            Ok(0)
        }
        Command::Sweep {
            input,
            grid,
            window,
            output,
        } => {
            let x = io::read_signal(&input)?;
            let grid = parse_grid(&grid).map_err(AppError::usage)?;
            let result = localization_sweep(&x, &grid, window)?;
            io::write_sweep(&output, &result)?;
            Ok(0)
        }
        Command::Verify { max_n, seed, fault } => {
            let opts = verify::Options {
                max_n: max_n as usize,
                seed,
                fault: fault.map(|FaultArg::Normalization| verify::Fault::Normalization),
            };
            let report = verify::run(&opts);
            for line in &report.lines {
                println!("{line}");
            }
            Ok(if report.failed == 0 { 0 } else { 1 })
        }
        Command::Bench { sizes, repeats } => {
            let opts = bench::Options {
                sizes,
                repeats,
                cap: matrix_cap()?,
            };
            print!("{}", bench::run(&opts)?);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn angles_parse_in_radians_and_degrees() {
        assert_eq!(parse_angle("1.25").unwrap(), 1.25);
        assert_eq!(parse_angle("-0.5").unwrap(), -0.5);
        assert!((parse_angle("deg:90").unwrap() - PI / 2.0).abs() < 1e-15);
        assert!((parse_angle("deg:-45").unwrap() + PI / 4.0).abs() < 1e-15);
        assert!(parse_angle("fast").is_err());
        assert!(parse_angle("inf").is_err());
        assert!(parse_angle("deg:nan").is_err());
    }

    #[test]
    fn grid_specs_expand_to_inclusive_ranges() {
        let g = parse_grid("0:1:5").unwrap();
        assert_eq!(g, vec![0.0, 0.25, 0.5, 0.75, 1.0]);
        assert!(parse_grid("0:1").is_err());
        assert!(parse_grid("0:inf:5").is_err());
        assert!(parse_grid("1:0:5").is_err());
        assert!(parse_grid("0:1:1").is_err());
        assert!(parse_grid("0:1:x").is_err());
    }

    #[test]
    fn default_sweep_grid_matches_the_documented_span() {
        let g = parse_grid("0.01:3.131592653589793:181").unwrap();
        assert_eq!(g.len(), 181);
        assert!((g[0] - 0.01).abs() < 1e-15);
        assert!((g[180] - (PI - 0.01)).abs() < 1e-12);
    }
}
