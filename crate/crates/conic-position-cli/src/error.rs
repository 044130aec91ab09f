//! Process-level error type and its exit-code mapping.
//!
//! The four outcomes scripts need to distinguish get fixed codes: `0` for a
//! successful classification, `2` for malformed input, `3` for conics that
//! do not form a supported (parabola|hyperbola, ellipse) pair, and `4` when
//! float arithmetic cannot certify a needed sign. Everything else (I/O,
//! internal invariant violations, a failed `--verify` cross-check) exits `1`.

use std::fmt;

use conic_position::{ClassifyError, ConicClass, ConicError};

// ── Error type ──────────────────────────────────────────────────────────────

#[derive(Debug)]
pub enum CliError {
    /// Malformed coefficients, flags, or files. Exit code 2.
    Parse(String),
    /// The conics exist but are not a supported pair. Exit code 3.
    Degenerate(String),
    /// Float mode could not certify the sign of the named quantity. Exit
    /// code 4.
    Indeterminate(String),
    /// Reading or writing a file failed. Exit code 1.
    Io(String),
    /// An invariant the library guarantees was violated. Exit code 1.
    Internal(String),
    /// `--verify` found a disagreement between classifier routes. Exit
    /// code 1; the report has already been printed when this is raised.
    VerificationFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Degenerate(_) => 3,
            CliError::Indeterminate(_) => 4,
            CliError::Io(_) | CliError::Internal(_) | CliError::VerificationFailed(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(msg) => write!(f, "parse error: {msg}"),
            CliError::Degenerate(msg) => write!(f, "degenerate input: {msg}"),
            CliError::Indeterminate(msg) => write!(f, "indeterminate sign: {msg}"),
            CliError::Io(msg) => write!(f, "i/o error: {msg}"),
            CliError::Internal(msg) => write!(f, "internal error: {msg}"),
            CliError::VerificationFailed(msg) => write!(f, "verification failed: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

// ── Library error mapping ───────────────────────────────────────────────────

/// Map a classification failure onto the exit-code taxonomy. Role mismatches
/// and parameter violations are input problems; an unmatched condition set
/// is a bug by construction and is reported as such.
pub fn from_classify(e: ClassifyError) -> CliError {
    match e {
        ClassifyError::RoleMismatch { .. } | ClassifyError::InvalidParams(_) => {
            CliError::Degenerate(e.to_string())
        }
        ClassifyError::NoCaseMatched(_) => CliError::Internal(e.to_string()),
    }
}

pub fn from_conic(e: ConicError) -> CliError {
    match e {
        ConicError::Degenerate(_) => CliError::Degenerate(e.to_string()),
        ConicError::IndeterminateSign(q) => {
            CliError::Indeterminate(format!("sign of {q} is below the tolerance"))
        }
    }
}

/// Phrase a role failure for the fixed pair orders the explicit modes
/// expect.
pub fn role_failure(expected: &'static str, found: ConicClass) -> CliError {
    CliError::Degenerate(format!("expected a {expected}, found a {found}"))
}

// ── Tests ───────────────────────────────────────────────────────────────────
