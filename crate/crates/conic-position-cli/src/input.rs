//! Input parsing: conic equations from files or stdin.
//!
//! One conic per line as six whitespace-separated scalars
//! `A B C D E F` for the equation
//!
//! ```text
//! A x^2 + B xy + C y^2 + D x + E y + F = 0
//! ```
//!
//! Note that `B`, `D`, `E` are the *full* equation coefficients; the
//! symmetric matrix stores their halves, and the conversion happens here.
//! Scalars may be integers, fractions `p/q`, or decimals (optionally with
//! an exponent); all are parsed into exact rationals. Blank lines and lines
//! starting with `#` are skipped.

use std::io::Read;

use conic_position::numeric::parse_rational;
use conic_position::{conic_from_equation, Conic, Rational};

use crate::error::CliError;

// ── Line and file parsing ───────────────────────────────────────────────────

/// Parse one conic from six whitespace-separated scalars.
pub fn parse_conic_line(line: &str) -> Result<Conic<Rational>, CliError> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 6 {
        return Err(CliError::Parse(format!(
            "expected 6 coefficients (A B C D E F), found {} in {line:?}",
            fields.len()
        )));
    }
    let mut vals = Vec::with_capacity(6);
    for field in fields {
        let v = parse_rational(field).map_err(|e| CliError::Parse(e.to_string()))?;
        vals.push(v);
    }
    let [a, b, c, d, e, f]: [Rational; 6] = vals.try_into().expect("length checked");
    Ok(conic_from_equation(a, b, c, d, e, f))
}

/// All conics in the file at `path`, in order. `-` reads stdin.
pub fn read_conics(path: &str) -> Result<Vec<Conic<Rational>>, CliError> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("cannot read {path}: {e}")))?
    };
    let mut out = Vec::new();
    for line in text.lines() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        out.push(parse_conic_line(trimmed)?);
    }
    Ok(out)
}

/// Exactly two conics from the file at `path`.
pub fn read_pair(path: &str) -> Result<(Conic<Rational>, Conic<Rational>), CliError> {
    let conics = read_conics(path)?;
    if conics.len() != 2 {
        return Err(CliError::Parse(format!(
            "{path}: expected exactly 2 conics (one per line), found {}",
            conics.len()
        )));
    }
    let mut it = conics.into_iter();
    Ok((it.next().unwrap(), it.next().unwrap()))
}

// ── Tests ───────────────────────────────────────────────────────────────────
