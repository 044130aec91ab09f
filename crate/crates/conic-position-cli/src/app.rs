//! Flag surface and orchestration of a single run.

use std::io::Write;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use conic_position::numeric::DEFAULT_TOL;
use conic_position::ConicClass;

use crate::engine::{self, ClassifyFailure, Family};
use crate::error::{self, CliError};
use crate::input;
use crate::render;
use crate::report::Report;
use crate::sweep::{run_sweep, SweepRequest};

// ── Command line ────────────────────────────────────────────────────────────

/// Classify the relative position of a parabola or a hyperbola against a
/// coplanar ellipse from coefficient signs alone, without computing
/// intersection points.
///
/// The input file holds two conics, one per line, each as the six
/// whitespace-separated coefficients `A B C D E F` of
///
///   A x^2 + B xy + C y^2 + D x + E y + F = 0.
///
/// B, D and E are full equation coefficients (the symmetric matrix stores
/// their halves). Coefficients may be integers, fractions `p/q`, or
/// decimals; all are read exactly.
#[derive(Parser, Debug)]
#[command(name = "conic-position", version)]
pub struct Cli {
    /// Input file with two conics, one per line; "-" reads stdin
    pub input: String,

    /// Pair family to expect; auto detects and orders the pair itself
    #[arg(long, value_enum, default_value_t = Mode::Auto)]
    pub mode: Mode,

    /// Classify with exact rational arithmetic (the default)
    #[arg(long, conflicts_with = "float")]
    pub exact: bool,

    /// Classify with tolerance-tracked floating point
    #[arg(long)]
    pub float: bool,

    /// Float-mode tolerance; overrides the CONIC_TOL environment variable
    #[arg(long, value_name = "TOL")]
    pub tol: Option<f64>,

    /// Cross-check the result through the canonical reduction and the
    /// intersection geometry
    #[arg(long)]
    pub verify: bool,

    /// Write an SVG figure of the configuration to this path
    #[arg(long, value_name = "PATH", conflicts_with = "sweep")]
    pub svg: Option<String>,

    /// Interpolate the input pair toward the pair in this file
    #[arg(long, value_name = "FILE", requires = "steps")]
    pub sweep: Option<String>,

    /// Number of interpolation steps (samples at t = 0/N .. N/N)
    #[arg(long, value_name = "N", requires = "sweep")]
    pub steps: Option<u32>,

    /// Emit line-delimited JSON instead of text
    #[arg(long)]
    pub json: bool,

    /// Append any disagreement between classifier routes to this file
    #[arg(long, value_name = "PATH")]
    pub counterexample_log: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Auto,
    ParabolaEllipse,
    HyperbolaEllipse,
}

impl Mode {
    fn family(self) -> Option<Family> {
        match self {
            Mode::Auto => None,
            Mode::ParabolaEllipse => Some(Family::ParabolaEllipse),
            Mode::HyperbolaEllipse => Some(Family::HyperbolaEllipse),
        }
    }
}

/// Float tolerance: the `--tol` flag wins, then `CONIC_TOL`, then the
/// library default.
fn effective_tol(cli: &Cli) -> Result<f64, CliError> {
    let validate = |t: f64, origin: &str| {
        if t.is_finite() && t >= 0.0 {
            Ok(t)
        } else {
            Err(CliError::Parse(format!(
                "{origin} must be a finite nonnegative number, got {t}"
            )))
        }
    };
    if let Some(t) = cli.tol {
        return validate(t, "--tol");
    }
    if let Ok(env) = std::env::var("CONIC_TOL") {
        let t: f64 = env.trim().parse().map_err(|_| {
            CliError::Parse(format!("CONIC_TOL={env:?} is not a number"))
        })?;
        return validate(t, "CONIC_TOL");
    }
    Ok(DEFAULT_TOL)
}

// ── Orchestration ───────────────────────────────────────────────────────────

/// Execute the request, writing reports to `out`. The caller maps the error
/// (if any) to an exit code.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let float_tol = if cli.float {
        Some(effective_tol(cli)?)
    } else {
        None
    };
    let (a, b) = input::read_pair(&cli.input)?;

    if let Some(sweep_path) = &cli.sweep {
        let end = input::read_pair(sweep_path)?;
        return run_sweep_request(cli, out, (&a, &b), (&end.0, &end.1), float_tol);
    }

    let (family, n, m) = engine::resolve_roles(cli.mode.family(), &a, &b)?;
    let started = Instant::now();
    let classified = match float_tol {
        None => engine::classify_with_trace(family, &n, &m),
        Some(tol) => engine::classify_with_trace(
            family,
            &engine::to_float(&n, tol),
            &engine::to_float(&m, tol),
        ),
    };
    let timing_micros = started.elapsed().as_micros() as u64;

    let outcome = match classified {
        Ok(outcome) => outcome,
        Err(ClassifyFailure::Indeterminate(quantity)) => {
            return Err(CliError::Indeterminate(format!(
                "sign of {quantity} is below the tolerance; tighten --tol or use --exact"
            )))
        }
        Err(ClassifyFailure::Error(e)) => {
            let mapped = error::from_classify(e);
            if let CliError::Internal(msg) = &mapped {
                log_counterexample(cli, &engine::counterexample_line(&n, &m, msg, None))?;
            }
            return Err(mapped);
        }
    };

    let mut report = Report {
        mode: family.label().to_string(),
        arithmetic: if cli.float { "float" } else { "exact" }.to_string(),
        case_number: outcome.case_number,
        case_name: outcome.case_name.to_string(),
        sign_trace: outcome.sign_trace,
        oracle_verdict: None,
        timing_micros,
    };
    if cli.verify {
        report.oracle_verdict = Some(engine::verify(family, &n, &m, outcome.case_number)?);
    }

    if cli.json {
        writeln!(
            out,
            "{}",
            serde_json::to_string(&report).expect("report serialization cannot fail")
        )?;
    } else {
        write!(out, "{}", report.human())?;
    }

    if let Some(path) = &cli.svg {
        let n_class = match family {
            Family::ParabolaEllipse => ConicClass::Parabola,
            Family::HyperbolaEllipse => ConicClass::Hyperbola,
        };
        let label = format!("{}: {}", report.case_number, report.case_name);
        render::render_svg(&n, n_class, &m, &label, path)?;
    }

    if let Some(verdict) = &report.oracle_verdict {
        if !verdict.agrees {
            log_counterexample(
                cli,
                &engine::counterexample_line(&n, &m, &report.case_name, Some(verdict)),
            )?;
            return Err(CliError::VerificationFailed(format!(
                "general route found case {} but the canonical route found case {} \
                 (geometry: {} real points)",
                report.case_number, verdict.canonical_case_number, verdict.real_points
            )));
        }
    }
    Ok(())
}

fn run_sweep_request(
    cli: &Cli,
    out: &mut dyn Write,
    start: (&conic_position::Conic<conic_position::Rational>, &conic_position::Conic<conic_position::Rational>),
    end: (&conic_position::Conic<conic_position::Rational>, &conic_position::Conic<conic_position::Rational>),
    float_tol: Option<f64>,
) -> Result<(), CliError> {
    let req = SweepRequest {
        start,
        end,
        steps: cli.steps.expect("clap requires --steps with --sweep"),
        family: cli.mode.family(),
        float_tol,
        verify: cli.verify,
    };
    let result = run_sweep(&req)?;
    if cli.json {
        for sample in &result.samples {
            writeln!(
                out,
                "{}",
                serde_json::to_string(sample).expect("record serialization cannot fail")
            )?;
        }
        for change in &result.changes {
            writeln!(
                out,
                "{}",
                serde_json::to_string(change).expect("record serialization cannot fail")
            )?;
        }
    } else {
        for sample in &result.samples {
            writeln!(out, "{}", sample.human())?;
        }
        if result.changes.is_empty() {
            writeln!(out, "no case changes")?;
        }
        for change in &result.changes {
            writeln!(out, "{}", change.human())?;
        }
    }
    Ok(())
}

fn log_counterexample(cli: &Cli, line: &str) -> Result<(), CliError> {
    if let Some(path) = &cli.counterexample_log {
        let mut file = std::fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(path)
            .map_err(|e| CliError::Io(format!("cannot open {path}: {e}")))?;
        writeln!(file, "{line}")?;
    }
    Ok(())
}

// ── Tests ───────────────────────────────────────────────────────────────────
