//! Role resolution, classification with a sign trace, and the `--verify`
//! cross-checks.
//!
//! The front end always parses exact rationals; role detection and
//! verification therefore run exactly even when the classification itself
//! is requested in float arithmetic. Classification goes through the
//! general-form sign conditions; `--verify` reruns the instance through two
//! independent routes, the canonical reduction (same case table, different
//! quantities) and the elimination-based intersection geometry (point
//! counts, multiplicities, containment).

use conic_position::classify_hyperbola::{self, HyperbolaSignData};
use conic_position::classify_parabola::{self, ClassifyError, ParabolaSignData};
use conic_position::numeric::{AdjoinSqrt, ApproxScalar, Scalar};
use conic_position::oracle::{
    coarse_class, coarse_matches_hyperbola, coarse_matches_parabola, intersect_conics,
};
use conic_position::pencil::invariants;
use conic_position::reduce::{reduce_hyperbola_pair, reduce_parabola_pair};
use conic_position::{
    classify_type, ConicClass, HyperbolaEllipsePosition, ParabolaEllipsePosition,
};
use conic_position::{Conic, Rational};
use serde::Serialize;

use crate::error::{self, CliError};
use crate::report::OracleVerdict;

// ── Pair families and role resolution ───────────────────────────────────────

/// Which classification table applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    ParabolaEllipse,
    HyperbolaEllipse,
}

impl Family {
    pub fn label(&self) -> &'static str {
        match self {
            Family::ParabolaEllipse => "parabola-ellipse",
            Family::HyperbolaEllipse => "hyperbola-ellipse",
        }
    }
}

/// Detect the conic types and order the pair as (parabola|hyperbola,
/// ellipse). `requested = None` accepts either family; a requested family
/// rejects pairs that do not match it. Input order does not matter.
pub fn resolve_roles(
    requested: Option<Family>,
    a: &Conic<Rational>,
    b: &Conic<Rational>,
) -> Result<(Family, Conic<Rational>, Conic<Rational>), CliError> {
    let class_a = classify_type(a).map_err(error::from_conic)?;
    let class_b = classify_type(b).map_err(error::from_conic)?;
    let support = "supported pairs are (parabola, ellipse) and (hyperbola, ellipse)";

    let ellipse_is_b = match (
        class_a == ConicClass::RealEllipse,
        class_b == ConicClass::RealEllipse,
    ) {
        (false, true) => true,
        (true, false) => false,
        (true, true) => {
            return Err(CliError::Degenerate(format!(
                "both conics are real ellipses; {support}"
            )))
        }
        (false, false) => {
            return Err(CliError::Degenerate(format!(
                "no real ellipse in the pair (found {class_a} and {class_b}); {support}"
            )))
        }
    };
    let other_class = if ellipse_is_b { class_a } else { class_b };
    let family = match other_class {
        ConicClass::Parabola => Family::ParabolaEllipse,
        ConicClass::Hyperbola => Family::HyperbolaEllipse,
        other => {
            return Err(CliError::Degenerate(format!(
                "the conic paired with the ellipse is a {other}; {support}"
            )))
        }
    };
    if let Some(want) = requested {
        if want != family {
            return Err(CliError::Degenerate(format!(
                "--mode {} does not match the detected {} pair",
                want.label(),
                family.label()
            )));
        }
    }
    let (n, m) = if ellipse_is_b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    Ok((family, n, m))
}

// ── Classification with a sign trace ────────────────────────────────────────

/// Why a single classification did not produce a case.
pub enum ClassifyFailure {
    /// Float arithmetic could not certify the named quantity's sign.
    Indeterminate(&'static str),
    Error(ClassifyError),
}

pub struct Outcome {
    pub case_number: u8,
    pub case_name: &'static str,
    pub sign_trace: Vec<(String, String)>,
}

fn normalize_failure(e: conic_position::ConicError) -> ClassifyFailure {
    match e {
        conic_position::ConicError::IndeterminateSign(q) => ClassifyFailure::Indeterminate(q),
        conic_position::ConicError::Degenerate(msg) => {
            ClassifyFailure::Error(ClassifyError::InvalidParams(msg))
        }
    }
}

/// Classify an ordered, role-checked pair and record every quantity the
/// decision consulted. Works for exact and approximate scalars alike.
pub fn classify_with_trace<S: AdjoinSqrt>(
    family: Family,
    n: &Conic<S>,
    m: &Conic<S>,
) -> Result<Outcome, ClassifyFailure> {
    let n = conic_position::normalize(n).map_err(normalize_failure)?;
    let m = conic_position::normalize(m).map_err(normalize_failure)?;
    let inv = invariants(&n, &m)
        .map_err(|e| ClassifyFailure::Error(ClassifyError::InvalidParams(e.to_string())))?;
    match family {
        Family::ParabolaEllipse => {
            let sd = classify_parabola::general_sign_data(&inv)
                .map_err(ClassifyFailure::Indeterminate)?;
            let pos = classify_parabola::decide_general(&sd).map_err(ClassifyFailure::Error)?;
            Ok(Outcome {
                case_number: pos.case_number().expect("decided cases are numbered"),
                case_name: pos.case_name(),
                sign_trace: parabola_trace(&sd),
            })
        }
        Family::HyperbolaEllipse => {
            let sd = classify_hyperbola::general_sign_data(&inv)
                .map_err(ClassifyFailure::Indeterminate)?;
            let pos = classify_hyperbola::decide_general(&sd).map_err(ClassifyFailure::Error)?;
            Ok(Outcome {
                case_number: pos.case_number().expect("decided cases are numbered"),
                case_name: pos.case_name(),
                sign_trace: hyperbola_trace(&sd),
            })
        }
    }
}

/// Convert an exact conic into tolerance-tracking float scalars.
pub fn to_float(c: &Conic<Rational>, tol: f64) -> Conic<ApproxScalar> {
    c.map(|x| ApproxScalar::new(Scalar::to_f64(x), tol))
}

fn parabola_trace(sd: &ParabolaSignData) -> Vec<(String, String)> {
    [
        ("Delta", sd.delta),
        ("DeltaPrime", sd.delta_prime),
        ("L1", sd.l1),
        ("L2", sd.l2),
        ("I2", sd.i2),
        ("I3", sd.i3),
        ("I4", sd.i4),
        ("I5", sd.i5),
    ]
    .into_iter()
    .map(|(name, sign)| (name.to_string(), sign.to_string()))
    .collect()
}

fn hyperbola_trace(sd: &HyperbolaSignData) -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = [
        ("Delta", sd.delta),
        ("DeltaPrime", sd.delta_prime),
        ("J3", sd.j3),
        ("J4", sd.j4),
        ("J5", sd.j5),
        ("K3", sd.k3),
        ("K4", sd.k4),
        ("K5", sd.k5),
        ("J1", sd.j1),
    ]
    .into_iter()
    .map(|(name, sign)| (name.to_string(), sign.to_string()))
    .collect();
    for (name, count) in [
        ("VarF", sd.var_f),
        ("VarG", sd.var_g),
        ("VarQ", sd.var_q),
        ("VarGHead", sd.var_g_head),
    ] {
        out.push((name.to_string(), count.to_string()));
    }
    out
}

// ── Verification ────────────────────────────────────────────────────────────

/// Rerun the instance through the canonical reduction and the intersection
/// geometry, and compare both with the reported case.
pub fn verify(
    family: Family,
    n: &Conic<Rational>,
    m: &Conic<Rational>,
    reported_case: u8,
) -> Result<OracleVerdict, CliError> {
    let (canonical_case, canonical_name) = match family {
        Family::ParabolaEllipse => {
            let (canon, _) = reduce_parabola_pair(n, m).map_err(error::from_classify)?;
            let pos =
                classify_parabola::classify_canonical(&canon).map_err(error::from_classify)?;
            (case_number_of(pos.case_number())?, pos.case_name())
        }
        Family::HyperbolaEllipse => {
            let (canon, _) = reduce_hyperbola_pair(n, m).map_err(error::from_classify)?;
            let pos =
                classify_hyperbola::classify_canonical(&canon).map_err(error::from_classify)?;
            (case_number_of(pos.case_number())?, pos.case_name())
        }
    };

    let summary = intersect_conics(n, m).map_err(|e| CliError::Internal(e.to_string()))?;
    let coarse = coarse_class(&summary, n, m).map_err(|e| CliError::Internal(e.to_string()))?;
    let coarse_ok = match family {
        Family::ParabolaEllipse => {
            let case = ParabolaEllipsePosition::from_case_number(reported_case)
                .ok_or_else(|| CliError::Internal(format!("case {reported_case} out of range")))?;
            coarse_matches_parabola(&case, &coarse)
        }
        Family::HyperbolaEllipse => {
            let case = HyperbolaEllipsePosition::from_case_number(reported_case)
                .ok_or_else(|| CliError::Internal(format!("case {reported_case} out of range")))?;
            coarse_matches_hyperbola(&case, &coarse)
        }
    };

    Ok(OracleVerdict {
        agrees: canonical_case == reported_case && coarse_ok,
        canonical_case_number: canonical_case,
        canonical_case_name: canonical_name.to_string(),
        real_points: coarse.real_points,
        multiplicities: coarse.multiplicities,
        center_inside: coarse.center_inside,
    })
}

fn case_number_of(n: Option<u8>) -> Result<u8, CliError> {
    n.ok_or_else(|| {
        CliError::Internal("canonical route returned an unnumbered case on exact data".into())
    })
}

// ── Counterexample records ──────────────────────────────────────────────────

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct CounterexampleRecord<'a> {
    conic_a: Vec<String>,
    conic_b: Vec<String>,
    general_case: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdict: Option<&'a OracleVerdict>,
}

fn equation_strings(c: &Conic<Rational>) -> Vec<String> {
    c.to_equation().iter().map(|v| v.to_string()).collect()
}

/// One line for the counterexample log: the exact input coefficients plus
/// both verdicts (or the failure text when no case matched).
pub fn counterexample_line(
    n: &Conic<Rational>,
    m: &Conic<Rational>,
    general_case: &str,
    verdict: Option<&OracleVerdict>,
) -> String {
    let record = CounterexampleRecord {
        conic_a: equation_strings(n),
        conic_b: equation_strings(m),
        general_case,
        verdict,
    };
    serde_json::to_string(&record).expect("record serialization cannot fail")
}

// ── Tests ───────────────────────────────────────────────────────────────────
