//! CSV formats for signals, matrices, and sweep results.
//!
//! Signals are `index,re,im` with a header row, indices contiguous from 0,
//! UTF-8 with LF line endings. Floats are written with 17 significant
//! digits so a write/read roundtrip reproduces every sample bit for bit.

use num_complex::Complex64;
use std::fs;
use std::path::Path;

use frdft::{SweepResult, TransformMatrix};

use crate::AppError;

pub const SIGNAL_HEADER: &str = "index,re,im";
pub const MATRIX_HEADER: &str = "j,k,re,im";
pub const SWEEP_HEADER: &str = "alpha,concentration";

/// 17 significant digits: exact f64 roundtrip.
fn fmt(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn format_signal(x: &[Complex64]) -> String {
    let mut out = String::with_capacity(32 * (x.len() + 1));
    out.push_str(SIGNAL_HEADER);
    out.push('\n');
    for (j, v) in x.iter().enumerate() {
        out.push_str(&format!("{j},{},{}\n", fmt(v.re), fmt(v.im)));
    }
    out
}

/// Parse a signal file body, reporting the offending line on failure.
pub fn parse_signal(text: &str) -> Result<Vec<Complex64>, String> {
    let mut lines = text.lines().map(|l| l.strip_suffix('\r').unwrap_or(l));
    match lines.next() {
        Some(header) if header == SIGNAL_HEADER => {}
        Some(header) => {
            return Err(format!(
                "line 1: expected header '{SIGNAL_HEADER}', found '{header}'"
            ))
        }
        None => return Err("line 1: empty file".into()),
    }

    let mut samples = Vec::new();
    for (offset, line) in lines.enumerate() {
        let lineno = offset + 2;
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 3 {
            return Err(format!(
                "line {lineno}: expected 3 comma-separated fields, found {}",
                fields.len()
            ));
        }
        let index: usize = fields[0]
            .parse()
            .map_err(|_| format!("line {lineno}: bad index '{}'", fields[0]))?;
        if index != samples.len() {
            return Err(format!(
                "line {lineno}: index {index} out of order (expected {}); \
                 indices must be 0..n-1 without gaps or duplicates",
                samples.len()
            ));
        }
        let re: f64 = fields[1]
            .parse()
            .map_err(|_| format!("line {lineno}: bad real part '{}'", fields[1]))?;
        let im: f64 = fields[2]
            .parse()
            .map_err(|_| format!("line {lineno}: bad imaginary part '{}'", fields[2]))?;
        if !re.is_finite() || !im.is_finite() {
            return Err(format!("line {lineno}: sample is not finite"));
        }
        samples.push(Complex64::new(re, im));
    }
    if samples.is_empty() {
        return Err("file holds a header but no samples".into());
    }
    Ok(samples)
}

pub fn read_signal(path: &Path) -> Result<Vec<Complex64>, AppError> {
    let text = fs::read_to_string(path)
        .map_err(|e| AppError::usage(format!("cannot read {}: {e}", path.display())))?;
    parse_signal(&text).map_err(|e| AppError::usage(format!("{}: {e}", path.display())))
}

pub fn write_signal(path: &Path, x: &[Complex64]) -> Result<(), AppError> {
    fs::write(path, format_signal(x))
        .map_err(|e| AppError::usage(format!("cannot write {}: {e}", path.display())))
}

pub fn format_matrix(m: &TransformMatrix) -> String {
    let n = m.n();
    let mut out = String::with_capacity(48 * (n * n + 1));
    out.push_str(MATRIX_HEADER);
    out.push('\n');
    for j in 0..n {
        for k in 0..n {
            let v = m.get(j, k);
            out.push_str(&format!("{j},{k},{},{}\n", fmt(v.re), fmt(v.im)));
        }
    }
    out
}

pub fn write_matrix(path: &Path, m: &TransformMatrix) -> Result<(), AppError> {
    fs::write(path, format_matrix(m))
        .map_err(|e| AppError::usage(format!("cannot write {}: {e}", path.display())))
}

pub fn format_sweep(s: &SweepResult) -> String {
    let mut out = String::new();
    out.push_str(SWEEP_HEADER);
    out.push('\n');
    for (alpha, score) in s.grid.iter().zip(&s.concentration) {
        match score {
            Some(v) => out.push_str(&format!("{},{}\n", fmt(*alpha), fmt(*v))),
            None => out.push_str(&format!("{},nan\n", fmt(*alpha))),
        }
    }
    out.push_str(&format!("argmax,{}\n", fmt(s.argmax)));
    out
}

pub fn write_sweep(path: &Path, s: &SweepResult) -> Result<(), AppError> {
    fs::write(path, format_sweep(s))
        .map_err(|e| AppError::usage(format!("cannot write {}: {e}", path.display())))
}
