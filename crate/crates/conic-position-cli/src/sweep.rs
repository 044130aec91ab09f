//! Coefficient sweeps: classify a linearly interpolated family of pairs.
//!
//! Both conics of the starting pair are interpolated entrywise toward the
//! ending pair, `C(t) = (1 - t) C_start + t C_end`, at `t = k/n` for
//! `k = 0..=n`. The parameter is an exact rational, so every sample is an
//! exact instance and repeated runs produce identical output. A sample
//! whose conics stop forming a supported pair (or whose signs float mode
//! cannot certify) is marked and skipped; the sweep never aborts on an
//! interior degeneracy.

use conic_position::numeric::rat;
use conic_position::{Conic, Rational};

use crate::engine::{self, ClassifyFailure, Family};
use crate::error::CliError;
use crate::report::{SweepChange, SweepSample};

// ── Interpolation ───────────────────────────────────────────────────────────

/// Entrywise linear interpolation of the symmetric matrices.
pub fn interpolate(
    start: &Conic<Rational>,
    end: &Conic<Rational>,
    t: &Rational,
) -> Conic<Rational> {
    let one_minus = rat(1, 1) - t.clone();
    Conic {
        m11: start.m11.clone() * one_minus.clone() + end.m11.clone() * t.clone(),
        m12: start.m12.clone() * one_minus.clone() + end.m12.clone() * t.clone(),
        m13: start.m13.clone() * one_minus.clone() + end.m13.clone() * t.clone(),
        m22: start.m22.clone() * one_minus.clone() + end.m22.clone() * t.clone(),
        m23: start.m23.clone() * one_minus.clone() + end.m23.clone() * t.clone(),
        m33: start.m33.clone() * one_minus + end.m33.clone() * t.clone(),
    }
}

// ── Sweep driver ────────────────────────────────────────────────────────────

pub struct SweepRequest<'a> {
    pub start: (&'a Conic<Rational>, &'a Conic<Rational>),
    pub end: (&'a Conic<Rational>, &'a Conic<Rational>),
    pub steps: u32,
    pub family: Option<Family>,
    pub float_tol: Option<f64>,
    pub verify: bool,
}

pub struct SweepResult {
    pub samples: Vec<SweepSample>,
    pub changes: Vec<SweepChange>,
}

/// Classify every sample and collect the case-change intervals between
/// adjacent classified samples.
pub fn run_sweep(req: &SweepRequest<'_>) -> Result<SweepResult, CliError> {
    if req.steps == 0 {
        return Err(CliError::Parse("--steps must be at least 1".into()));
    }
    let n = req.steps;
    let mut samples = Vec::with_capacity(n as usize + 1);
    for k in 0..=n {
        let t = rat(k as i64, n as i64);
        let label = format!("{k}/{n}");
        let a = interpolate(req.start.0, req.end.0, &t);
        let b = interpolate(req.start.1, req.end.1, &t);
        samples.push(classify_sample(req, label, &a, &b)?);
    }

    let mut changes = Vec::new();
    for pair in samples.windows(2) {
        let (prev, next) = (&pair[0], &pair[1]);
        if let (Some(from), Some(to)) = (prev.case_number, next.case_number) {
            if from != to {
                changes.push(SweepChange {
                    record: "change".into(),
                    from_t: prev.t.clone(),
                    to_t: next.t.clone(),
                    from_case: from,
                    to_case: to,
                    from_name: prev.case_name.clone().unwrap_or_default(),
                    to_name: next.case_name.clone().unwrap_or_default(),
                });
            }
        }
    }
    Ok(SweepResult { samples, changes })
}

fn classify_sample(
    req: &SweepRequest<'_>,
    t: String,
    a: &Conic<Rational>,
    b: &Conic<Rational>,
) -> Result<SweepSample, CliError> {
    let mut sample = SweepSample {
        record: "sample".into(),
        t,
        case_number: None,
        case_name: None,
        error: None,
        detail: None,
        oracle_agrees: None,
    };

    let (family, n, m) = match engine::resolve_roles(req.family, a, b) {
        Ok(resolved) => resolved,
        Err(CliError::Degenerate(msg)) => {
            sample.error = Some("DegenerateInput".into());
            sample.detail = Some(msg);
            return Ok(sample);
        }
        Err(other) => return Err(other),
    };

    let outcome = match req.float_tol {
        None => engine::classify_with_trace(family, &n, &m),
        Some(tol) => {
            engine::classify_with_trace(family, &engine::to_float(&n, tol), &engine::to_float(&m, tol))
        }
    };
    match outcome {
        Ok(outcome) => {
            sample.case_number = Some(outcome.case_number);
            sample.case_name = Some(outcome.case_name.to_string());
            if req.verify {
                let verdict = engine::verify(family, &n, &m, outcome.case_number)?;
                sample.oracle_agrees = Some(verdict.agrees);
            }
        }
        Err(ClassifyFailure::Indeterminate(quantity)) => {
            sample.error = Some("IndeterminateSign".into());
            sample.detail = Some(format!("sign of {quantity} is below the tolerance"));
        }
        Err(ClassifyFailure::Error(e)) => {
            sample.error = Some("DegenerateInput".into());
            sample.detail = Some(e.to_string());
        }
    }
    Ok(sample)
}

// ── Tests ───────────────────────────────────────────────────────────────────
