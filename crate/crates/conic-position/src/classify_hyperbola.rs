//! Position of an ellipse relative to a hyperbola from sign conditions alone.
//!
//! Mirrors the parabola module but with eleven cases and one extra algebraic
//! layer: the quantities playing the role of shifted-cubic coefficients live
//! in the real quadratic extension `Q(sqrt(d))`, `d = T^2 - 4 T1 T2`, because
//! the pencil roots attached to the hyperbola's asymptotic directions are
//!
//! ```text
//! H0 = (T + sqrt(d)) / (2 T1) > 0,    H2 = (T - sqrt(d)) / (2 T1) < 0.
//! ```
//!
//! With `H5 = L0 / T2 > 0`, the decision quantities are
//!
//! ```text
//! J5 = -3 L0 + L1 H0          K5 = -3 L0 / H2 + L1
//! J4 =  3 L0 - 2 L1 H0 + L2 H0^2      K4 = 3 L0 - 2 H2 L1 + H2^2 L2
//! J3 = -L0 + L1 H0 - L2 H0^2 + L3 H0^3   K3 = L0 - L1 H2 + L2 H2^2 - L3 H2^3
//! ```
//!
//! plus the nested-radical comparison `J1` whose zero set detects the
//! configuration "center ordinate at exactly `b + delta`". All signs are
//! decided exactly over the rationals ([`crate::numeric::QuadExt`]); float
//! inputs flow through the same code and surface `Indeterminate` when a sign
//! cannot be certified.

use crate::classify_parabola::ClassifyError;
use crate::conic::{classify_type, normalize, Conic, ConicClass, ConicError};
use crate::numeric::{AdjoinSqrt, ExtScalar, Scalar, Sign};
use crate::pencil::{invariants, shift, sign_variations, Cubic, PencilInvariants};
use std::fmt;

// ── Position cases ──────────────────────────────────────────────────────────

/// The eleven relative positions of an ellipse and a hyperbola, plus the
/// float-mode `Indeterminate` outcome. "Inner" means the tangency touches
/// from inside a branch; "outer" from the region between the branches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HyperbolaEllipsePosition {
    /// 1: disjoint, ellipse between the branches.
    Separated,
    /// 2: two transversal intersection points.
    TwoIntersections,
    /// 3: a single inner tangent point (including quadruple contact).
    OneInnerTangent,
    /// 4: two inner tangent points.
    TwoInnerTangents,
    /// 5: two transversal points plus one inner tangency.
    TwoIntersectionsAndInnerTangent,
    /// 6: one tangent point reached from between the branches.
    OneOuterTangent,
    /// 7: two outer tangent points.
    TwoOuterTangents,
    /// 8: two transversal points plus one outer tangency.
    TwoIntersectionsAndOuterTangent,
    /// 9: four transversal intersection points.
    FourIntersections,
    /// 10: disjoint, ellipse inside one branch.
    EllipseInsideHyperbola,
    /// 11: one transversal point plus one inner tangency (osculation).
    OneIntersectionAndInnerTangent,
    /// Float mode only: a needed sign could not be certified.
    Indeterminate { quantity: &'static str },
}

impl HyperbolaEllipsePosition {
    /// Case number 1..=11, or `None` for `Indeterminate`.
    pub fn case_number(&self) -> Option<u8> {
        use HyperbolaEllipsePosition::*;
        match self {
            Separated => Some(1),
            TwoIntersections => Some(2),
            OneInnerTangent => Some(3),
            TwoInnerTangents => Some(4),
            TwoIntersectionsAndInnerTangent => Some(5),
            OneOuterTangent => Some(6),
            TwoOuterTangents => Some(7),
            TwoIntersectionsAndOuterTangent => Some(8),
            FourIntersections => Some(9),
            EllipseInsideHyperbola => Some(10),
            OneIntersectionAndInnerTangent => Some(11),
            Indeterminate { .. } => None,
        }
    }

    pub fn from_case_number(case: u8) -> Option<Self> {
        use HyperbolaEllipsePosition::*;
        match case {
            1 => Some(Separated),
            2 => Some(TwoIntersections),
            3 => Some(OneInnerTangent),
            4 => Some(TwoInnerTangents),
            5 => Some(TwoIntersectionsAndInnerTangent),
            6 => Some(OneOuterTangent),
            7 => Some(TwoOuterTangents),
            8 => Some(TwoIntersectionsAndOuterTangent),
            9 => Some(FourIntersections),
            10 => Some(EllipseInsideHyperbola),
            11 => Some(OneIntersectionAndInnerTangent),
            _ => None,
        }
    }

    pub fn case_name(&self) -> &'static str {
        use HyperbolaEllipsePosition::*;
        match self {
            Separated => "Separated",
            TwoIntersections => "TwoIntersections",
            OneInnerTangent => "OneInnerTangent",
            TwoInnerTangents => "TwoInnerTangents",
            TwoIntersectionsAndInnerTangent => "TwoIntersectionsAndInnerTangent",
            OneOuterTangent => "OneOuterTangent",
            TwoOuterTangents => "TwoOuterTangents",
            TwoIntersectionsAndOuterTangent => "TwoIntersectionsAndOuterTangent",
            FourIntersections => "FourIntersections",
            EllipseInsideHyperbola => "EllipseInsideHyperbola",
            OneIntersectionAndInnerTangent => "OneIntersectionAndInnerTangent",
            Indeterminate { .. } => "Indeterminate",
        }
    }
}

impl fmt::Display for HyperbolaEllipsePosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HyperbolaEllipsePosition::Indeterminate { quantity } => {
                write!(f, "Indeterminate (sign of {quantity} not certified)")
            }
            p => f.write_str(p.case_name()),
        }
    }
}

// ── Canonical configuration ─────────────────────────────────────────────────

/// Hyperbola `x^2/a_sq - y^2/b_sq + 1 = 0` (real axis vertical, vertices
/// `(0, +-b)`) together with a circle of center `(x_c, y_c)` and squared
/// radius `delta_sq`.
///
/// Both center coordinates are stored squared: the configuration is
/// symmetric under reflection in either axis, and reductions of general
/// pairs deliver the squares exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct CanonicalHyperbolaCircle<S> {
    pub a_sq: S,
    pub b_sq: S,
    pub xc_sq: S,
    pub yc_sq: S,
    pub delta_sq: S,
}

impl<S: Scalar> CanonicalHyperbolaCircle<S> {
    pub fn new(a_sq: S, b_sq: S, xc_sq: S, yc_sq: S, delta_sq: S) -> Self {
        CanonicalHyperbolaCircle {
            a_sq,
            b_sq,
            xc_sq,
            yc_sq,
            delta_sq,
        }
    }

    /// Build from an actual center point.
    pub fn from_center(a_sq: S, b_sq: S, xc: S, yc: S, delta_sq: S) -> Self {
        CanonicalHyperbolaCircle {
            a_sq,
            b_sq,
            xc_sq: xc.clone() * xc,
            yc_sq: yc.clone() * yc,
            delta_sq,
        }
    }

    fn validate(&self) -> Result<(), ClassifyError> {
        for (value, name) in [
            (&self.a_sq, "a_sq"),
            (&self.b_sq, "b_sq"),
            (&self.delta_sq, "delta_sq"),
        ] {
            if matches!(value.sign(), Sign::Negative | Sign::Zero) {
                return Err(ClassifyError::InvalidParams(format!(
                    "{name} must be positive, got {value}"
                )));
            }
        }
        for (value, name) in [(&self.xc_sq, "xc_sq"), (&self.yc_sq, "yc_sq")] {
            if value.sign() == Sign::Negative {
                return Err(ClassifyError::InvalidParams(format!(
                    "{name} must be nonnegative, got {value}"
                )));
            }
        }
        Ok(())
    }
}

/// Characteristic cubic `det(lambda N + M)` of the canonical pair:
///
/// ```text
/// f(lambda) = -lambda^3/(a^2 b^2)
///             - (a^2 - b^2 - delta^2 + x_c^2 + y_c^2) lambda^2 / (a^2 b^2)
///             + (a^2 b^2 + a^2 delta^2 - a^2 y_c^2 - b^2 delta^2 + b^2 x_c^2)
///               lambda / (a^2 b^2)
///             - delta^2
/// ```
pub fn canonical_cubic<S: Scalar>(h: &CanonicalHyperbolaCircle<S>) -> Cubic<S> {
    let ab = h.a_sq.clone() * h.b_sq.clone();
    let lead = -(S::one() / ab.clone());
    let quad = -((h.a_sq.clone() - h.b_sq.clone() - h.delta_sq.clone()
        + h.xc_sq.clone()
        + h.yc_sq.clone())
        / ab.clone());
    let lin = (ab.clone() + h.a_sq.clone() * h.delta_sq.clone()
        - h.a_sq.clone() * h.yc_sq.clone()
        - h.b_sq.clone() * h.delta_sq.clone()
        + h.b_sq.clone() * h.xc_sq.clone())
        / ab;
    let konst = -h.delta_sq.clone();
    Cubic::new(lead, quad, lin, konst)
}

// ── Sign data ───────────────────────────────────────────────────────────────

/// Signs and variation counts consumed by both hyperbola decision lists.
///
/// In the canonical setting `j5, j4, j3` are the signs of the coefficients
/// of `g(lambda) = f(lambda - a^2)` after the leading one, `k5, k4, k3` the
/// same for `q(lambda) = f(lambda + b^2)`, and `j1` the sign test for
/// `|y_c| - (b + delta)`. In the general setting they are the signs of the
/// `J`/`K` combinations above; those agree with the canonical signs except
/// for `j1`, where only the zero set is shared (which is all the decision
/// lists consult).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HyperbolaSignData {
    pub delta: Sign,
    pub delta_prime: Sign,
    /// Var of the cubic's own coefficients (L0, L1, L2, L3).
    pub var_f: usize,
    /// Var of (L0, J5, J4, J3).
    pub var_g: usize,
    /// Var of (L0, K5, K4, K3).
    pub var_q: usize,
    /// Var of the leading three, (L0, J5, J4).
    pub var_g_head: usize,
    pub j3: Sign,
    pub j4: Sign,
    pub j5: Sign,
    pub k3: Sign,
    pub k4: Sign,
    pub k5: Sign,
    pub j1: Sign,
}

fn known(s: Sign, name: &'static str) -> Result<Sign, &'static str> {
    if s == Sign::Unknown {
        Err(name)
    } else {
        Ok(s)
    }
}

/// Sign of `u - 2 sqrt(prod_sq)` for `prod_sq > 0`, squaring instead of
/// taking the root: nonpositive `u` is decided immediately, otherwise the
/// sign of `u^2 - 4 prod_sq` is returned.
fn sign_minus_double_sqrt<S: Scalar>(u: &S, prod_sq: &S) -> Sign {
    match u.sign() {
        Sign::Negative | Sign::Zero => Sign::Negative,
        Sign::Unknown => Sign::Unknown,
        Sign::Positive => {
            (u.clone() * u.clone() - S::from_int(4) * prod_sq.clone()).sign()
        }
    }
}

/// Extract canonical sign data. `Err` names the first uncertifiable sign.
pub fn canonical_sign_data<S: Scalar>(
    h: &CanonicalHyperbolaCircle<S>,
) -> Result<HyperbolaSignData, &'static str> {
    let f = canonical_cubic(h);
    let g = shift(&f, &(-h.a_sq.clone()));
    let q = shift(&f, &h.b_sq.clone());
    let delta = crate::pencil::discriminant(&f).map_err(|_| "Delta")?;
    let delta_prime = crate::pencil::delta_prime(&f);

    let lead = known(f.c3.sign(), "a3")?;
    let f_signs = [
        lead,
        known(f.c2.sign(), "a2")?,
        known(f.c1.sign(), "a1")?,
        known(f.c0.sign(), "a0")?,
    ];
    let j5 = known(g.c2.sign(), "J5")?;
    let j4 = known(g.c1.sign(), "J4")?;
    let j3 = known(g.c0.sign(), "J3")?;
    let k5 = known(q.c2.sign(), "K5")?;
    let k4 = known(q.c1.sign(), "K4")?;
    let k3 = known(q.c0.sign(), "K3")?;

    // |y_c| vs b + delta without square roots: compare y_c^2 - b^2 - delta^2
    // against 2 b delta.
    let u = h.yc_sq.clone() - h.b_sq.clone() - h.delta_sq.clone();
    let prod = h.b_sq.clone() * h.delta_sq.clone();
    let j1 = known(sign_minus_double_sqrt(&u, &prod), "J1")?;

    Ok(HyperbolaSignData {
        delta: known(delta.sign(), "Delta")?,
        delta_prime: known(delta_prime.sign(), "DeltaPrime")?,
        var_f: sign_variations(&f_signs).expect("signs certified above"),
        var_g: sign_variations(&[lead, j5, j4, j3]).expect("signs certified above"),
        var_q: sign_variations(&[lead, k5, k4, k3]).expect("signs certified above"),
        var_g_head: sign_variations(&[lead, j5, j4]).expect("signs certified above"),
        j3,
        j4,
        j5,
        k3,
        k4,
        k5,
        j1,
    })
}

/// Extract general sign data from pencil invariants of a normalized
/// hyperbola/ellipse pair. All extension arithmetic happens in `S::Ext`
/// (`Q(sqrt(d))` for rationals). `Err` names the first quantity whose sign
/// could not be certified; the divisor guards on `T1`, `T2`, `L0` also
/// surface that way, which for role-checked inputs can only happen in float
/// mode.
pub fn general_sign_data<S: AdjoinSqrt>(
    inv: &PencilInvariants<S>,
) -> Result<HyperbolaSignData, &'static str> {
    let delta = known(inv.delta.sign(), "Delta")?;
    let delta_prime = known(inv.delta_prime.sign(), "DeltaPrime")?;
    let l0 = known(inv.l0.sign(), "L0")?;
    let l1 = known(inv.l1.sign(), "L1")?;
    let l2 = known(inv.l2.sign(), "L2")?;
    let l3 = known(inv.l3.sign(), "L3")?;
    if l0 == Sign::Zero {
        return Err("L0");
    }
    if matches!(inv.t1.sign(), Sign::Zero | Sign::Unknown) {
        return Err("T1");
    }
    if matches!(inv.t2.sign(), Sign::Zero | Sign::Unknown) {
        return Err("T2");
    }

    // Pencil parameters of the asymptotic directions, in Q(sqrt(d)).
    let d = inv.t.clone() * inv.t.clone()
        - S::from_int(4) * inv.t1.clone() * inv.t2.clone();
    let sqrt_d = d.sqrt_nonneg().map_err(|_| "d")?;
    let two_t1 = (inv.t1.clone() + inv.t1.clone()).lift();
    let h0 = (inv.t.lift() + sqrt_d.clone()) / two_t1.clone();
    let h2 = (inv.t.lift() - sqrt_d) / two_t1;
    let h5 = inv.l0.clone() / inv.t2.clone();

    let l0x = inv.l0.lift();
    let l1x = inv.l1.lift();
    let l2x = inv.l2.lift();
    let l3x = inv.l3.lift();
    let three = S::Ext::from_int(3);
    let two = S::Ext::from_int(2);

    let j5_val = -(three.clone() * l0x.clone()) + l1x.clone() * h0.clone();
    let j4_val = three.clone() * l0x.clone() - two.clone() * l1x.clone() * h0.clone()
        + l2x.clone() * h0.clone() * h0.clone();
    let j3_val = -l0x.clone() + l1x.clone() * h0.clone()
        - l2x.clone() * h0.clone() * h0.clone()
        + l3x.clone() * h0.clone() * h0.clone() * h0.clone();

    // K5 = -3 L0 / H2 + L1; multiplying through by H2 < 0 flips the sign,
    // sparing the division.
    let k5_val = -(three.clone() * l0x.clone()) + l1x.clone() * h2.clone();
    let k4_val = three * l0x.clone() - two.clone() * h2.clone() * l1x.clone()
        + h2.clone() * h2.clone() * l2x.clone();
    let k3_val = l0x.clone() - l1x.clone() * h2.clone()
        + l2x.clone() * h2.clone() * h2.clone()
        - l3x.clone() * h2.clone() * h2.clone() * h2.clone();

    let j5 = known(j5_val.sign(), "J5")?;
    let j4 = known(j4_val.sign(), "J4")?;
    let j3 = known(j3_val.sign(), "J3")?;
    let k5 = known(k5_val.sign(), "K5")?.flip();
    let k4 = known(k4_val.sign(), "K4")?;
    let k3 = known(k3_val.sign(), "K3")?;

    // J1 = sqrt(L3 H5 / (H2 T1)) - H5 (H0 L1 - L0) / (2 H0 L0), decided by
    // the radical-free protocol. The radicand is positive for valid roles
    // (L3 < 0, H2 < 0, H5 > 0, T1 > 0).
    let radicand = (l3x * h5.lift() / inv.t1.lift()) / h2;
    let subtrahend =
        h5.lift() * (h0.clone() * l1x - l0x.clone()) / (two * h0 * l0x);
    let j1 = match S::Ext::sign_sqrt_minus(&radicand, &subtrahend) {
        Ok(s) => known(s, "J1")?,
        Err(_) => return Err("J1"),
    };

    Ok(HyperbolaSignData {
        delta,
        delta_prime,
        var_f: sign_variations(&[l0, l1, l2, l3]).expect("signs certified above"),
        var_g: sign_variations(&[l0, j5, j4, j3]).expect("signs certified above"),
        var_q: sign_variations(&[l0, k5, k4, k3]).expect("signs certified above"),
        var_g_head: sign_variations(&[l0, j5, j4]).expect("signs certified above"),
        j3,
        j4,
        j5,
        k3,
        k4,
        k5,
        j1,
    })
}

// ── Decision lists ──────────────────────────────────────────────────────────

/// All cases of the canonical decision list whose condition set holds.
pub fn matching_cases_canonical(sd: &HyperbolaSignData) -> Vec<u8> {
    use Sign::{Negative, Positive, Zero};
    let HyperbolaSignData {
        delta,
        delta_prime,
        var_f,
        var_g,
        var_q,
        var_g_head: _,
        j3,
        j4,
        j5,
        k3,
        k4,
        k5: _,
        j1,
    } = *sd;
    let mut out = Vec::new();

    if delta == Positive && var_f == 2 && var_q == 0 {
        out.push(1);
    }
    if delta == Negative {
        out.push(2);
    }
    {
        let b1 = delta == Zero && var_f == 0 && var_g == 2 && j3 != Zero;
        let b2 = j3 == Zero && j5 != Negative && j1 == Zero;
        if b1 || b2 {
            out.push(3);
        }
    }
    if j3 == Zero && j4 == Zero && j5 == Negative {
        out.push(4);
    }
    {
        let b1 = delta == Zero && delta_prime != Zero && var_g == 0 && j3 != Zero;
        let b2 = j3 == Zero && j1 == Zero && j5 == Negative;
        if b1 || b2 {
            out.push(5);
        }
    }
    if delta == Zero && var_f == 2 && var_q == 0 && k3 != Zero {
        out.push(6);
    }
    if k3 == Zero && k4 == Zero {
        out.push(7);
    }
    if delta == Zero && var_q == 2 && k3 != Zero {
        out.push(8);
    }
    if delta == Positive && (var_g == 0 || var_q > 0) {
        out.push(9);
    }
    if var_f == 0 {
        let b1 = delta == Positive && j3 != Zero && var_g == 2;
        let b2 = delta == Positive && j3 == Zero && j4 != Zero && var_g > 0;
        let b3 = j3 == Zero && j4 == Zero && j5 == Positive;
        if b1 || b2 || b3 {
            out.push(10);
        }
    }
    if delta == Zero && delta_prime == Zero && j3 == Negative && j5 == Negative {
        out.push(11);
    }
    out
}

/// All cases of the general decision list whose condition set holds. The
/// lists differ in the fine structure of cases 3, 5 and 10 (the general one
/// uses `J4 != 0` and the three-term variation count where the canonical one
/// reads shifted coefficients directly); agreement of the outcomes is a
/// tested property.
pub fn matching_cases_general(sd: &HyperbolaSignData) -> Vec<u8> {
    use Sign::{Negative, Positive, Zero};
    let HyperbolaSignData {
        delta,
        delta_prime,
        var_f,
        var_g,
        var_q,
        var_g_head,
        j3,
        j4,
        j5,
        k3,
        k4,
        k5: _,
        j1,
    } = *sd;
    let mut out = Vec::new();

    if delta == Positive && var_f == 2 && var_q == 0 {
        out.push(1);
    }
    if delta == Negative {
        out.push(2);
    }
    {
        let b1 = delta == Zero && var_f == 0 && j3 != Zero && var_g == 2;
        let b2 = j3 == Zero && j4 == Zero && j5 == Zero;
        let b3 = j1 == Zero && j3 == Zero && j4 != Zero && j5 == Positive;
        if b1 || b2 || b3 {
            out.push(3);
        }
    }
    if j3 == Zero && j4 == Zero && j5 == Negative {
        out.push(4);
    }
    {
        let b1 = delta == Zero && delta_prime != Zero && var_g == 0 && j3 != Zero;
        let b2 = delta == Zero
            && var_g_head == 0
            && j3 == Zero
            && j5 == Negative
            && j1 == Zero;
        if b1 || b2 {
            out.push(5);
        }
    }
    if delta == Zero && var_f == 2 && var_q == 0 && k3 != Zero {
        out.push(6);
    }
    if k3 == Zero && k4 == Zero {
        out.push(7);
    }
    if delta == Zero && var_q == 2 && k3 != Zero {
        out.push(8);
    }
    if delta == Positive && (var_g == 0 || var_q > 0) {
        out.push(9);
    }
    {
        let b1 = delta == Positive && var_f == 0 && j3 != Zero && var_g == 2;
        let b2 = delta == Positive
            && var_f == 0
            && j3 == Zero
            && j4 != Zero
            && var_g_head > 0;
        let b3 = j3 == Zero && j4 == Zero && j5 == Positive;
        if b1 || b2 || b3 {
            out.push(10);
        }
    }
    if delta == Zero && delta_prime == Zero && j3 == Negative && j5 == Negative {
        out.push(11);
    }
    out
}

fn first_match(
    cases: Vec<u8>,
    data: String,
) -> Result<HyperbolaEllipsePosition, ClassifyError> {
    match cases.first() {
        Some(&case) => Ok(HyperbolaEllipsePosition::from_case_number(case)
            .expect("case numbers from the decision list are 1..=11")),
        None => Err(ClassifyError::NoCaseMatched(data)),
    }
}

/// Run the canonical decision list on extracted sign data.
pub fn decide_canonical(
    sd: &HyperbolaSignData,
) -> Result<HyperbolaEllipsePosition, ClassifyError> {
    first_match(matching_cases_canonical(sd), format!("{sd:?}"))
}

/// Run the general decision list on extracted sign data.
pub fn decide_general(
    sd: &HyperbolaSignData,
) -> Result<HyperbolaEllipsePosition, ClassifyError> {
    first_match(matching_cases_general(sd), format!("{sd:?}"))
}

// ── Classifiers ─────────────────────────────────────────────────────────────

/// Classify the position of the ellipse `m` relative to the hyperbola `nh`.
pub fn classify_general<S: AdjoinSqrt>(
    nh: &Conic<S>,
    m: &Conic<S>,
) -> Result<HyperbolaEllipsePosition, ClassifyError> {
    let (nh, m) = match check_roles(nh, m) {
        Ok(pair) => pair,
        Err(CheckFailure::Mismatch(e)) => return Err(e),
        Err(CheckFailure::Uncertain(q)) => {
            return Ok(HyperbolaEllipsePosition::Indeterminate { quantity: q })
        }
    };
    let inv = match invariants(&nh, &m) {
        Ok(inv) => inv,
        Err(_) => {
            return Err(ClassifyError::RoleMismatch {
                expected: "hyperbola",
                found: ConicClass::Degenerate,
            })
        }
    };
    match general_sign_data(&inv) {
        Ok(sd) => decide_general(&sd),
        Err(quantity) => Ok(HyperbolaEllipsePosition::Indeterminate { quantity }),
    }
}

/// Classify a canonical hyperbola/circle configuration.
pub fn classify_canonical<S: Scalar>(
    h: &CanonicalHyperbolaCircle<S>,
) -> Result<HyperbolaEllipsePosition, ClassifyError> {
    h.validate()?;
    match canonical_sign_data(h) {
        Ok(sd) => decide_canonical(&sd),
        Err(quantity) => Ok(HyperbolaEllipsePosition::Indeterminate { quantity }),
    }
}

enum CheckFailure {
    Mismatch(ClassifyError),
    Uncertain(&'static str),
}

/// Verify the (hyperbola, ellipse) roles and return both conics normalized.
fn check_roles<S: Scalar>(
    nh: &Conic<S>,
    m: &Conic<S>,
) -> Result<(Conic<S>, Conic<S>), CheckFailure> {
    let classify = |c: &Conic<S>,
                    expected: &'static str|
     -> Result<ConicClass, CheckFailure> {
        match classify_type(c) {
            Ok(class) => Ok(class),
            Err(ConicError::IndeterminateSign(q)) => Err(CheckFailure::Uncertain(q)),
            Err(ConicError::Degenerate(_)) => {
                Err(CheckFailure::Mismatch(ClassifyError::RoleMismatch {
                    expected,
                    found: ConicClass::Degenerate,
                }))
            }
        }
    };
    let nh_class = classify(nh, "hyperbola")?;
    if nh_class != ConicClass::Hyperbola {
        return Err(CheckFailure::Mismatch(ClassifyError::RoleMismatch {
            expected: "hyperbola",
            found: nh_class,
        }));
    }
    let m_class = classify(m, "real ellipse")?;
    if m_class != ConicClass::RealEllipse {
        return Err(CheckFailure::Mismatch(ClassifyError::RoleMismatch {
            expected: "real ellipse",
            found: m_class,
        }));
    }
    let renorm = |c: &Conic<S>, expected: &'static str| -> Result<Conic<S>, CheckFailure> {
        match normalize(c) {
            Ok(c) => Ok(c),
            Err(ConicError::IndeterminateSign(q)) => Err(CheckFailure::Uncertain(q)),
            Err(ConicError::Degenerate(_)) => {
                Err(CheckFailure::Mismatch(ClassifyError::RoleMismatch {
                    expected,
                    found: ConicClass::Degenerate,
                }))
            }
        }
    };
    Ok((renorm(nh, "hyperbola")?, renorm(m, "real ellipse")?))
}

// ── Tests ───────────────────────────────────────────────────────────────────

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conic::{canonical_hyperbola, circle};
    use crate::numeric::{rat, ApproxScalar, Rational};
    use crate::witness::hyperbola_witnesses;

    #[test]
    fn canonical_classification_matches_witness_table() {
        for w in hyperbola_witnesses() {
            let got = classify_canonical(&w.canonical()).unwrap();
            assert_eq!(got, w.expected, "witness {}", w.name);
        }
    }

    #[test]
    fn general_classification_matches_witness_table() {
        for w in hyperbola_witnesses() {
            let (nh, m) = w.conic_pair();
            let got = classify_general(&nh, &m).unwrap();
            assert_eq!(got, w.expected, "witness {}", w.name);
        }
    }

    #[test]
    fn exactly_one_case_matches_each_witness() {
        for w in hyperbola_witnesses() {
            let csd = canonical_sign_data(&w.canonical()).unwrap();
            let canon = matching_cases_canonical(&csd);
            assert_eq!(canon.len(), 1, "witness {}: canonical {:?}", w.name, canon);

            let (nh, m) = w.conic_pair();
            let (nh, m) = (normalize(&nh).unwrap(), normalize(&m).unwrap());
            let gsd = general_sign_data(&invariants(&nh, &m).unwrap()).unwrap();
            let general = matching_cases_general(&gsd);
            assert_eq!(general.len(), 1, "witness {}: general {:?}", w.name, general);
            assert_eq!(canon[0], general[0], "witness {}", w.name);
        }
    }

    #[test]
    fn sign_data_agrees_between_paths_for_canonical_input() {
        // For canonical pairs the general J/K quantities reproduce the
        // shifted-coefficient signs; J1 shares only its zero set.
        for w in hyperbola_witnesses() {
            let csd = canonical_sign_data(&w.canonical()).unwrap();
            let (nh, m) = w.conic_pair();
            let (nh, m) = (normalize(&nh).unwrap(), normalize(&m).unwrap());
            let gsd = general_sign_data(&invariants(&nh, &m).unwrap()).unwrap();
            assert_eq!(csd.delta, gsd.delta, "witness {}", w.name);
            assert_eq!(csd.delta_prime, gsd.delta_prime, "witness {}", w.name);
            assert_eq!(csd.var_f, gsd.var_f, "witness {}", w.name);
            assert_eq!(csd.var_g, gsd.var_g, "witness {}", w.name);
            assert_eq!(csd.var_q, gsd.var_q, "witness {}", w.name);
            for (c, g, name) in [
                (csd.j3, gsd.j3, "j3"),
                (csd.j4, gsd.j4, "j4"),
                (csd.j5, gsd.j5, "j5"),
                (csd.k3, gsd.k3, "k3"),
                (csd.k4, gsd.k4, "k4"),
                (csd.k5, gsd.k5, "k5"),
            ] {
                assert_eq!(c, g, "witness {}, quantity {}", w.name, name);
            }
            assert_eq!(
                csd.j1 == Sign::Zero,
                gsd.j1 == Sign::Zero,
                "witness {}: J1 zero sets differ",
                w.name
            );
        }
    }

    #[test]
    fn classification_is_equation_scale_invariant() {
        for w in hyperbola_witnesses() {
            let (nh, m) = w.conic_pair();
            let scaled_nh = nh.scale(&rat(-5, 3));
            let scaled_m = m.scale(&rat(11, 7));
            let got = classify_general(&scaled_nh, &scaled_m).unwrap();
            assert_eq!(got, w.expected, "witness {}", w.name);
        }
    }

    #[test]
    fn role_mismatches_are_reported() {
        let m = circle(&rat(0, 1), &rat(0, 1), &rat(1, 1));
        let nh = canonical_hyperbola(&rat(1, 1), &rat(1, 1));
        assert!(matches!(
            classify_general(&m, &m),
            Err(ClassifyError::RoleMismatch {
                expected: "hyperbola",
                ..
            })
        ));
        assert!(matches!(
            classify_general(&nh, &nh),
            Err(ClassifyError::RoleMismatch {
                expected: "real ellipse",
                ..
            })
        ));
    }

    #[test]
    fn invalid_canonical_parameters_are_rejected() {
        let bad = CanonicalHyperbolaCircle::new(
            rat(1, 1),
            rat(-1, 1),
            rat(0, 1),
            rat(0, 1),
            rat(1, 1),
        );
        assert!(matches!(
            classify_canonical(&bad),
            Err(ClassifyError::InvalidParams(_))
        ));
        let bad = CanonicalHyperbolaCircle::new(
            rat(1, 1),
            rat(1, 1),
            rat(0, 1),
            rat(-1, 9),
            rat(1, 1),
        );
        assert!(matches!(
            classify_canonical(&bad),
            Err(ClassifyError::InvalidParams(_))
        ));
    }

    fn to_float(c: &Conic<Rational>) -> Conic<ApproxScalar> {
        c.map(|x| ApproxScalar::with_default_tol(x.to_f64()))
    }

    #[test]
    fn float_mode_decides_robust_instances() {
        // A small circle in general position between the branches: every
        // quantity in the sign data is comfortably away from zero.
        let nh = canonical_hyperbola(&rat(1, 1), &rat(1, 1));
        let m = circle(&rat(1, 5), &rat(1, 7), &rat(1, 9));
        assert_eq!(
            classify_general(&nh, &m).unwrap(),
            HyperbolaEllipsePosition::Separated
        );
        let got = classify_general(&to_float(&nh), &to_float(&m)).unwrap();
        assert_eq!(got, HyperbolaEllipsePosition::Separated);
    }

    #[test]
    fn float_mode_reports_indeterminate_on_tangency() {
        // Osculating circle at the vertex (0, 1): Delta = 0 exactly.
        let h = CanonicalHyperbolaCircle::from_center(
            ApproxScalar::with_default_tol(1.0),
            ApproxScalar::with_default_tol(1.0),
            ApproxScalar::with_default_tol(0.0),
            ApproxScalar::with_default_tol(2.0),
            ApproxScalar::with_default_tol(1.0),
        );
        let got = classify_canonical(&h).unwrap();
        assert!(
            matches!(got, HyperbolaEllipsePosition::Indeterminate { .. }),
            "got {got}"
        );
    }

    #[test]
    fn structural_facts_hold_on_witnesses() {
        // The leading and constant coefficients are negative and Var(f) is
        // 0 or 2 for every valid canonical configuration.
        for w in hyperbola_witnesses() {
            let f = canonical_cubic(&w.canonical());
            assert_eq!(f.c3.sign(), Sign::Negative, "witness {}", w.name);
            assert_eq!(f.c0.sign(), Sign::Negative, "witness {}", w.name);
            let sd = canonical_sign_data(&w.canonical()).unwrap();
            assert!(
                sd.var_f == 0 || sd.var_f == 2,
                "witness {}: Var(f) = {}",
                w.name,
                sd.var_f
            );
        }
    }
}
