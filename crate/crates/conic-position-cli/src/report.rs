//! Classification reports: the stable machine-readable schema and the
//! human-readable rendering.
//!
//! Machine output is line-delimited JSON with fixed camelCase field names
//! (`caseNumber`, `caseName`, `signTrace`, `oracleVerdict`, `timingMicros`),
//! chosen so that downstream tooling can parse one line per classification
//! and a round trip through serde reproduces the record exactly. The sign
//! trace lists every pencil quantity the matched condition set consulted,
//! as `(name, sign)` pairs with signs written `+`, `-`, `0`; variation
//! counts appear as their digit.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

// ── Report records ──────────────────────────────────────────────────────────

/// One classification outcome.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    /// `parabola-ellipse` or `hyperbola-ellipse`.
    pub mode: String,
    /// `exact` or `float`.
    pub arithmetic: String,
    /// Case number in the classification tables (1..=9 or 1..=11).
    pub case_number: u8,
    pub case_name: String,
    /// `(quantity, sign-or-count)` pairs backing the decision.
    pub sign_trace: Vec<(String, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_verdict: Option<OracleVerdict>,
    pub timing_micros: u64,
}

/// Result of the `--verify` cross-checks.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct OracleVerdict {
    /// Both checks below agree with the reported case.
    pub agrees: bool,
    /// Case reached independently through the canonical reduction.
    pub canonical_case_number: u8,
    pub canonical_case_name: String,
    /// Distinct real intersection points found by elimination.
    pub real_points: usize,
    /// Intersection multiplicities, ascending.
    pub multiplicities: Vec<u32>,
    /// For configurations without real intersections: whether the ellipse's
    /// center lies inside the other conic's convex region.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub center_inside: Option<bool>,
}

/// One sample of a coefficient sweep.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SweepSample {
    /// Always `"sample"`.
    pub record: String,
    /// Interpolation parameter as an exact rational `k/n`.
    pub t: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case_number: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case_name: Option<String>,
    /// `DegenerateInput` or `IndeterminateSign` when the sample could not
    /// be classified; the sweep itself continues.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_agrees: Option<bool>,
}

/// A case change between two adjacent sweep samples.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SweepChange {
    /// Always `"change"`.
    pub record: String,
    pub from_t: String,
    pub to_t: String,
    pub from_case: u8,
    pub to_case: u8,
    pub from_name: String,
    pub to_name: String,
}

// ── Human-readable rendering ────────────────────────────────────────────────

impl Report {
    pub fn human(&self) -> String {
        let mut out = String::new();
        writeln!(out, "case {}: {}", self.case_number, self.case_name).unwrap();
        let signs: Vec<String> = self
            .sign_trace
            .iter()
            .map(|(name, sign)| format!("{name}={sign}"))
            .collect();
        writeln!(out, "  signs: {}", signs.join("  ")).unwrap();
        if let Some(v) = &self.oracle_verdict {
            let agreement = if v.agrees { "agree" } else { "DISAGREE" };
            let mut geometry = format!(
                "{} real intersection{}",
                v.real_points,
                if v.real_points == 1 { "" } else { "s" }
            );
            if !v.multiplicities.is_empty() {
                write!(geometry, " with multiplicities {:?}", v.multiplicities).unwrap();
            }
            if let Some(inside) = v.center_inside {
                write!(
                    geometry,
                    ", center {}",
                    if inside { "inside" } else { "outside" }
                )
                .unwrap();
            }
            writeln!(
                out,
                "  oracle: {agreement} (canonical route case {}: {}; {geometry})",
                v.canonical_case_number, v.canonical_case_name
            )
            .unwrap();
        }
        writeln!(
            out,
            "  arithmetic: {} ({} us)",
            self.arithmetic, self.timing_micros
        )
        .unwrap();
        out
    }
}

impl SweepSample {
    pub fn human(&self) -> String {
        match (&self.case_number, &self.case_name, &self.error) {
            (Some(n), Some(name), _) => {
                let oracle = match self.oracle_agrees {
                    Some(true) => "  [oracle: agree]",
                    Some(false) => "  [oracle: DISAGREE]",
                    None => "",
                };
                format!("t={:<8} case {n}: {name}{oracle}", self.t)
            }
            (_, _, Some(err)) => {
                let detail = self.detail.as_deref().unwrap_or("");
                format!("t={:<8} {err}: {detail}", self.t)
            }
            _ => format!("t={:<8} (no outcome)", self.t),
        }
    }
}

impl SweepChange {
    pub fn human(&self) -> String {
        format!(
            "case change in [{}, {}]: {} {} -> {} {}",
            self.from_t, self.to_t, self.from_case, self.from_name, self.to_case, self.to_name
        )
    }
}

// ── Tests ───────────────────────────────────────────────────────────────────
