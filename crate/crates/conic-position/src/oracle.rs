//! Independent verification oracles for the sign-based classifiers.
//!
//! Everything here re-derives positions from scratch, sharing only the conic
//! and polynomial primitives with the classifiers:
//!
//! * [`root_pattern_classify_parabola`] and [`root_pattern_classify_hyperbola`]
//!   isolate the real roots of the characteristic cubic exactly and read the
//!   position off the root pattern: counts, multiplicities, and positions
//!   relative to `0`, `-a^2` and `b^2`.
//! * [`intersect_conics`] eliminates `y` with a resultant and reports the real
//!   intersection points with exact multiplicities. [`coarse_class`] condenses
//!   the result into point counts plus a containment bit, which
//!   [`coarse_matches_parabola`] / [`coarse_matches_hyperbola`] check against a
//!   claimed case.
//! * [`tangency_side`] decides whether a rational contact point is an inner or
//!   an outer tangency from curvature signs along the common tangent.
//!
//! Every decision is made in exact rational arithmetic. Floating point only
//! appears in reported approximations and error messages.

use std::cmp::Ordering;
use std::fmt;

use crate::classify_hyperbola::{CanonicalHyperbolaCircle, HyperbolaEllipsePosition};
use crate::classify_parabola::{CanonicalParabolaCircle, ParabolaEllipsePosition};
use crate::conic::{classify_type, normalize, Conic, ConicClass};
use crate::numeric::{rat, Rational, Scalar, Sign};
use crate::pencil::Cubic;
use crate::poly::{isolate_real_roots, IsolatedRoot, Poly, RootApprox};

// ── Errors ──────────────────────────────────────────────────────────────────

#[derive(Debug, Clone, PartialEq)]
pub enum OracleError {
    /// The cubic degenerates (zero leading coefficient).
    LeadingZero,
    /// The two inputs share a whole component, so "intersection points"
    /// is not a meaningful question.
    CommonComponent,
    /// The isolated roots fit none of the recognized patterns. For valid
    /// canonical configurations this indicates a bug on one side or the other,
    /// which is exactly what the oracle exists to surface.
    PatternUnmatched(String),
    /// Inputs outside the supported geometry (degenerate conics, no ellipse
    /// in the pair, inconsistent fiber multiplicities).
    UnsupportedConfiguration(String),
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::LeadingZero => {
                write!(f, "cubic has a zero leading coefficient")
            }
            OracleError::CommonComponent => {
                write!(f, "the conics share a common component")
            }
            OracleError::PatternUnmatched(what) => {
                write!(f, "root pattern matches no case: {what}")
            }
            OracleError::UnsupportedConfiguration(what) => {
                write!(f, "unsupported configuration: {what}")
            }
        }
    }
}

impl std::error::Error for OracleError {}

// ── Root patterns of the characteristic cubic ───────────────────────────────

/// Location of one real root: exactly rational, or inside an open interval
/// whose endpoints are not roots.
#[derive(Debug, Clone, PartialEq)]
pub enum RootLocation {
    Exact(Rational),
    Interval { lo: Rational, hi: Rational },
}

impl RootLocation {
    /// Floating-point approximation, for display only.
    pub fn approx(&self) -> f64 {
        match self {
            RootLocation::Exact(r) => Scalar::to_f64(r),
            RootLocation::Interval { lo, hi } => {
                (Scalar::to_f64(lo) + Scalar::to_f64(hi)) / 2.0
            }
        }
    }

    fn from_approx(loc: &RootApprox) -> RootLocation {
        match loc {
            RootApprox::Exact(r) => RootLocation::Exact(r.clone()),
            RootApprox::Interval { lo, hi } => RootLocation::Interval {
                lo: lo.clone(),
                hi: hi.clone(),
            },
        }
    }
}

/// One real root with its multiplicity.
#[derive(Debug, Clone, PartialEq)]
pub struct PatternRoot {
    pub location: RootLocation,
    pub multiplicity: u32,
}

/// Real roots of a cubic in increasing order, plus the number of complex
/// conjugate pairs (0 or 1).
#[derive(Debug, Clone, PartialEq)]
pub struct RootPattern {
    pub roots: Vec<PatternRoot>,
    pub complex_pair_count: u8,
}

fn isolation_width() -> Rational {
    // 2^-40
    rat(1, 1 << 40)
}

fn isolated_cubic_roots(f: &Cubic<Rational>) -> Result<Vec<IsolatedRoot>, OracleError> {
    if f.c3.sign() == Sign::Zero {
        return Err(OracleError::LeadingZero);
    }
    let p = Poly::new(vec![
        f.c0.clone(),
        f.c1.clone(),
        f.c2.clone(),
        f.c3.clone(),
    ]);
    let mut roots = isolate_real_roots(&p);
    let width = isolation_width();
    for root in roots.iter_mut() {
        root.refine_to(&width);
    }
    Ok(roots)
}

/// Isolate the real roots of a cubic. Multiple roots of a rational cubic are
/// always rational (their square-free factor is linear), so they are reported
/// exactly; simple roots are either exact or enclosed to width below `2^-40`.
pub fn isolate_cubic_roots(f: &Cubic<Rational>) -> Result<RootPattern, OracleError> {
    let roots = isolated_cubic_roots(f)?;
    let real: u32 = roots.iter().map(|r| r.multiplicity).sum();
    debug_assert!(real == 1 || real == 3);
    Ok(RootPattern {
        roots: roots
            .iter()
            .map(|r| PatternRoot {
                location: RootLocation::from_approx(&r.loc),
                multiplicity: r.multiplicity,
            })
            .collect(),
        complex_pair_count: ((3 - real) / 2) as u8,
    })
}

fn exact_value(root: &IsolatedRoot) -> Result<Rational, OracleError> {
    match &root.loc {
        RootApprox::Exact(r) => Ok(r.clone()),
        RootApprox::Interval { .. } => Err(OracleError::PatternUnmatched(
            "a repeated root came back without an exact rational value".to_string(),
        )),
    }
}

fn pattern_err(what: &str, roots: &[IsolatedRoot]) -> OracleError {
    let approx: Vec<(f64, u32)> = roots
        .iter()
        .map(|r| (r.loc.to_f64(), r.multiplicity))
        .collect();
    OracleError::PatternUnmatched(format!("{what}; roots near {approx:?}"))
}

fn require_positive(value: &Rational, what: &str) -> Result<(), OracleError> {
    if value.sign() == Sign::Positive {
        Ok(())
    } else {
        Err(OracleError::UnsupportedConfiguration(format!(
            "{what} must be positive"
        )))
    }
}

fn require_nonnegative(value: &Rational, what: &str) -> Result<(), OracleError> {
    if value.sign() == Sign::Negative {
        Err(OracleError::UnsupportedConfiguration(format!(
            "{what} must be nonnegative"
        )))
    } else {
        Ok(())
    }
}

// ── Root-pattern classification, parabola vs. circle ────────────────────────

/// Classify a canonical parabola/circle configuration from the isolated roots
/// of its characteristic cubic, without looking at any coefficient sign
/// shortcut. Serves as an independent check of the sign-based route.
///
/// The dictionary between root patterns and positions:
///
/// * complex pair present: two transversal intersections;
/// * two distinct positive roots: separated;
/// * three distinct negative roots, none greater than `-a^2`: four
///   intersections; middle root at least `-a^2` and smallest at most `-a^2`:
///   circle inside the parabola;
/// * positive double root: external tangency;
/// * negative double root `d` with simple root `s`: `d > -a^2` is one inner
///   tangency; `d = -a^2` splits on `a^4` against `delta^2` (inside when
///   larger, two inner tangencies when smaller); `d < -a^2` with `s <= -a^2`
///   and `a^4 <= delta^2` adds two crossings to an inner tangency;
/// * triple root at `-a^2`: one inner (osculating) tangency; triple root
///   below `-a^2`: an inner tangency plus one crossing.
pub fn root_pattern_classify_parabola(
    p: &CanonicalParabolaCircle<Rational>,
) -> Result<ParabolaEllipsePosition, OracleError> {
    require_positive(&p.a_sq, "a^2")?;
    require_positive(&p.delta_sq, "delta^2")?;
    require_nonnegative(&p.xc_sq, "xc^2")?;

    let f = crate::classify_parabola::canonical_cubic(p);
    let mut roots = isolated_cubic_roots(&f)?;
    let real: u32 = roots.iter().map(|r| r.multiplicity).sum();
    if real == 1 {
        return Ok(ParabolaEllipsePosition::TwoIntersections);
    }

    let zero: Rational = Scalar::zero();
    let minus_a2 = -p.a_sq.clone();
    let mults: Vec<u32> = roots.iter().map(|r| r.multiplicity).collect();

    match mults.as_slice() {
        [1, 1, 1] => {
            let mut positives = 0;
            for root in roots.iter_mut() {
                if root.cmp_rational(&zero) == Ordering::Greater {
                    positives += 1;
                }
            }
            match positives {
                2 => Ok(ParabolaEllipsePosition::Separated),
                0 => {
                    if roots[2].cmp_rational(&minus_a2) != Ordering::Greater {
                        return Ok(ParabolaEllipsePosition::FourIntersections);
                    }
                    let mid_ge = roots[1].cmp_rational(&minus_a2) != Ordering::Less;
                    let min_le = roots[0].cmp_rational(&minus_a2) != Ordering::Greater;
                    if mid_ge && min_le {
                        Ok(ParabolaEllipsePosition::EllipseInsideParabola)
                    } else {
                        Err(pattern_err(
                            "three negative simple roots straddle -a^2 the wrong way",
                            &roots,
                        ))
                    }
                }
                _ => Err(pattern_err("impossible sign distribution", &roots)),
            }
        }
        [_, _] => {
            let di = if roots[0].multiplicity == 2 { 0 } else { 1 };
            let d = exact_value(&roots[di])?;
            let s = exact_value(&roots[1 - di])?;
            match d.sign() {
                Sign::Positive => Ok(ParabolaEllipsePosition::ExternallyTangent),
                Sign::Negative => {
                    let a4 = &p.a_sq * &p.a_sq;
                    match d.cmp(&minus_a2) {
                        Ordering::Greater => Ok(ParabolaEllipsePosition::OneInnerTangent),
                        Ordering::Equal => match a4.cmp(&p.delta_sq) {
                            Ordering::Greater => {
                                Ok(ParabolaEllipsePosition::EllipseInsideParabola)
                            }
                            Ordering::Less => Ok(ParabolaEllipsePosition::TwoInnerTangents),
                            Ordering::Equal => Err(pattern_err(
                                "double root at -a^2 with a^4 = delta^2 should be a triple root",
                                &roots,
                            )),
                        },
                        Ordering::Less => {
                            let s_le = s.cmp(&minus_a2) != Ordering::Greater;
                            if s_le && a4.cmp(&p.delta_sq) != Ordering::Greater {
                                Ok(ParabolaEllipsePosition::TwoIntersectionsAndInnerTangent)
                            } else {
                                Err(pattern_err(
                                    "double root below -a^2 with inconsistent companions",
                                    &roots,
                                ))
                            }
                        }
                    }
                }
                _ => Err(pattern_err("a root at zero contradicts delta^2 > 0", &roots)),
            }
        }
        [3] => {
            let t = exact_value(&roots[0])?;
            match t.cmp(&minus_a2) {
                Ordering::Equal => Ok(ParabolaEllipsePosition::OneInnerTangent),
                Ordering::Less => {
                    Ok(ParabolaEllipsePosition::OneIntersectionAndInnerTangent)
                }
                Ordering::Greater => {
                    Err(pattern_err("triple root above -a^2 is impossible", &roots))
                }
            }
        }
        _ => Err(pattern_err("unexpected multiplicity profile", &roots)),
    }
}

// ── Root-pattern classification, hyperbola vs. circle ───────────────────────

/// Classify a canonical hyperbola/circle configuration from the isolated
/// roots of its characteristic cubic. Independent counterpart of the
/// sign-based route, same contract as
/// [`root_pattern_classify_parabola`].
///
/// The dictionary:
///
/// * complex pair present: two transversal intersections;
/// * two distinct positive roots, largest at most `b^2`: separated; both at
///   least `b^2` with `b < delta`: four intersections;
/// * three distinct negative roots, all at most `-a^2`, with `a^2 < b delta`:
///   four intersections; middle at least `-a^2`, smallest at most `-a^2`:
///   circle inside one branch;
/// * positive double root `d`: below `b^2` one outer tangency, at `b^2` with
///   `b <= delta` two outer tangencies, above `b^2` with `b < delta` an outer
///   tangency plus two crossings;
/// * negative double root `d`: above `-a^2` one inner tangency; at `-a^2`
///   split on `a^2` against `b delta` (two inner tangencies when smaller,
///   inside a branch when larger); below `-a^2` with the simple root at most
///   `-a^2` and `a^2 < b delta`, an inner tangency plus two crossings;
/// * triple root at `-a^2`: one (osculating) inner tangency; below `-a^2`:
///   an inner tangency plus one crossing.
pub fn root_pattern_classify_hyperbola(
    h: &CanonicalHyperbolaCircle<Rational>,
) -> Result<HyperbolaEllipsePosition, OracleError> {
    require_positive(&h.a_sq, "a^2")?;
    require_positive(&h.b_sq, "b^2")?;
    require_positive(&h.delta_sq, "delta^2")?;
    require_nonnegative(&h.xc_sq, "xc^2")?;
    require_nonnegative(&h.yc_sq, "yc^2")?;

    let f = crate::classify_hyperbola::canonical_cubic(h);
    let mut roots = isolated_cubic_roots(&f)?;
    let real: u32 = roots.iter().map(|r| r.multiplicity).sum();
    if real == 1 {
        return Ok(HyperbolaEllipsePosition::TwoIntersections);
    }

    let zero: Rational = Scalar::zero();
    let minus_a2 = -h.a_sq.clone();
    let b2 = h.b_sq.clone();
    let a4 = &h.a_sq * &h.a_sq;
    let b2d2 = &h.b_sq * &h.delta_sq;
    let mults: Vec<u32> = roots.iter().map(|r| r.multiplicity).collect();

    match mults.as_slice() {
        [1, 1, 1] => {
            let mut positives = 0;
            for root in roots.iter_mut() {
                if root.cmp_rational(&zero) == Ordering::Greater {
                    positives += 1;
                }
            }
            match positives {
                2 => {
                    if roots[2].cmp_rational(&b2) != Ordering::Greater {
                        return Ok(HyperbolaEllipsePosition::Separated);
                    }
                    let mid_ge = roots[1].cmp_rational(&b2) != Ordering::Less;
                    if mid_ge && h.b_sq < h.delta_sq {
                        Ok(HyperbolaEllipsePosition::FourIntersections)
                    } else {
                        Err(pattern_err(
                            "two positive simple roots straddle b^2 the wrong way",
                            &roots,
                        ))
                    }
                }
                0 => {
                    if roots[2].cmp_rational(&minus_a2) != Ordering::Greater {
                        return if a4 < b2d2 {
                            Ok(HyperbolaEllipsePosition::FourIntersections)
                        } else {
                            Err(pattern_err(
                                "all roots below -a^2 need a^2 < b delta",
                                &roots,
                            ))
                        };
                    }
                    let mid_ge = roots[1].cmp_rational(&minus_a2) != Ordering::Less;
                    let min_le = roots[0].cmp_rational(&minus_a2) != Ordering::Greater;
                    if mid_ge && min_le {
                        Ok(HyperbolaEllipsePosition::EllipseInsideHyperbola)
                    } else {
                        Err(pattern_err(
                            "three negative simple roots straddle -a^2 the wrong way",
                            &roots,
                        ))
                    }
                }
                _ => Err(pattern_err("impossible sign distribution", &roots)),
            }
        }
        [_, _] => {
            let di = if roots[0].multiplicity == 2 { 0 } else { 1 };
            let d = exact_value(&roots[di])?;
            let s = exact_value(&roots[1 - di])?;
            match d.sign() {
                Sign::Positive => match d.cmp(&b2) {
                    Ordering::Less => Ok(HyperbolaEllipsePosition::OneOuterTangent),
                    Ordering::Equal => {
                        if h.b_sq <= h.delta_sq {
                            Ok(HyperbolaEllipsePosition::TwoOuterTangents)
                        } else {
                            Err(pattern_err(
                                "double root at b^2 needs b <= delta",
                                &roots,
                            ))
                        }
                    }
                    Ordering::Greater => {
                        if h.b_sq < h.delta_sq {
                            Ok(HyperbolaEllipsePosition::TwoIntersectionsAndOuterTangent)
                        } else {
                            Err(pattern_err(
                                "double root above b^2 needs b < delta",
                                &roots,
                            ))
                        }
                    }
                },
                Sign::Negative => match d.cmp(&minus_a2) {
                    Ordering::Greater => Ok(HyperbolaEllipsePosition::OneInnerTangent),
                    Ordering::Equal => match a4.cmp(&b2d2) {
                        Ordering::Less => Ok(HyperbolaEllipsePosition::TwoInnerTangents),
                        Ordering::Greater => {
                            Ok(HyperbolaEllipsePosition::EllipseInsideHyperbola)
                        }
                        Ordering::Equal => Err(pattern_err(
                            "double root at -a^2 with a^2 = b delta should be a triple root",
                            &roots,
                        )),
                    },
                    Ordering::Less => {
                        let s_le = s.cmp(&minus_a2) != Ordering::Greater;
                        if s_le && a4 < b2d2 {
                            Ok(HyperbolaEllipsePosition::TwoIntersectionsAndInnerTangent)
                        } else {
                            Err(pattern_err(
                                "double root below -a^2 with inconsistent companions",
                                &roots,
                            ))
                        }
                    }
                },
                _ => Err(pattern_err("a root at zero contradicts delta^2 > 0", &roots)),
            }
        }
        [3] => {
            let t = exact_value(&roots[0])?;
            match t.cmp(&minus_a2) {
                Ordering::Equal => Ok(HyperbolaEllipsePosition::OneInnerTangent),
                Ordering::Less => {
                    Ok(HyperbolaEllipsePosition::OneIntersectionAndInnerTangent)
                }
                Ordering::Greater => {
                    Err(pattern_err("triple root above -a^2 is impossible", &roots))
                }
            }
        }
        _ => Err(pattern_err("unexpected multiplicity profile", &roots)),
    }
}

// ── Rational interval arithmetic (for reported enclosures only) ─────────────

#[derive(Clone, Debug)]
struct Iv {
    lo: Rational,
    hi: Rational,
}

fn iv_point(r: &Rational) -> Iv {
    Iv {
        lo: r.clone(),
        hi: r.clone(),
    }
}

fn iv_of(loc: &RootApprox) -> Iv {
    match loc {
        RootApprox::Exact(r) => iv_point(r),
        RootApprox::Interval { lo, hi } => Iv {
            lo: lo.clone(),
            hi: hi.clone(),
        },
    }
}

fn iv_add(u: &Iv, v: &Iv) -> Iv {
    Iv {
        lo: &u.lo + &v.lo,
        hi: &u.hi + &v.hi,
    }
}

fn iv_neg(u: &Iv) -> Iv {
    Iv {
        lo: -&u.hi,
        hi: -&u.lo,
    }
}

fn iv_sub(u: &Iv, v: &Iv) -> Iv {
    iv_add(u, &iv_neg(v))
}

fn iv_mul(u: &Iv, v: &Iv) -> Iv {
    let cands = [
        &u.lo * &v.lo,
        &u.lo * &v.hi,
        &u.hi * &v.lo,
        &u.hi * &v.hi,
    ];
    Iv {
        lo: cands.iter().min().unwrap().clone(),
        hi: cands.iter().max().unwrap().clone(),
    }
}

/// Requires a sign-stable divisor (zero outside `[v.lo, v.hi]`).
fn iv_div(u: &Iv, v: &Iv) -> Iv {
    let one: Rational = Scalar::one();
    let inv = Iv {
        lo: &one / &v.hi,
        hi: &one / &v.lo,
    };
    iv_mul(u, &inv)
}

fn iv_eval(p: &Poly, x: &Iv) -> Iv {
    let zero: Rational = Scalar::zero();
    let mut acc = iv_point(&zero);
    for c in p.coeffs().iter().rev() {
        acc = iv_add(&iv_mul(&acc, x), &iv_point(c));
    }
    acc
}

fn iv_sign_stable(v: &Iv) -> bool {
    let s = v.lo.sign();
    s == v.hi.sign() && s.is_nonzero()
}

fn seed_sqrt(x: &Rational) -> Rational {
    let approx = Scalar::to_f64(x).sqrt();
    if approx.is_finite() && approx > 0.0 {
        if let Some(r) = Rational::from_float(approx) {
            if r.sign() == Sign::Positive {
                return r;
            }
        }
    }
    Scalar::one()
}

fn sqrt_lower(x: &Rational) -> Rational {
    if x.sign() != Sign::Positive {
        return Scalar::zero();
    }
    let mut s = seed_sqrt(x);
    let shrink = rat(255, 256);
    while (&s * &s).cmp(x) == Ordering::Greater {
        s = &s * &shrink;
    }
    s
}

fn sqrt_upper(x: &Rational) -> Rational {
    if x.sign() != Sign::Positive {
        return Scalar::zero();
    }
    let mut s = seed_sqrt(x);
    let grow = rat(257, 256);
    while (&s * &s).cmp(x) == Ordering::Less {
        s = &s * &grow;
    }
    s
}

/// Certified square root enclosure of a nonnegative interval.
fn iv_sqrt(v: &Iv) -> Iv {
    Iv {
        lo: sqrt_lower(&v.lo),
        hi: sqrt_upper(&v.hi),
    }
}

// ── Intersection of a conic pair ────────────────────────────────────────────

/// One real intersection point. Coordinates are exact when the underlying
/// algebra allows it, otherwise certified enclosures; either way the
/// multiplicity is exact.
#[derive(Debug, Clone, PartialEq)]
pub struct IntersectionPoint {
    pub x: RootLocation,
    pub y: RootLocation,
    pub multiplicity: u32,
}

/// Real intersection points in lexicographic order (by `x`, then `y`), plus
/// the total multiplicity of finite nonreal intersections. For an ellipse
/// paired with a parabola or a hyperbola the grand total is always 4.
#[derive(Debug, Clone, PartialEq)]
pub struct IntersectionSummary {
    pub points: Vec<IntersectionPoint>,
    pub complex_multiplicity: u32,
}

impl IntersectionSummary {
    pub fn real_point_count(&self) -> usize {
        self.points.len()
    }

    /// Multiplicities of the real points, sorted ascending.
    pub fn multiplicity_multiset(&self) -> Vec<u32> {
        let mut mults: Vec<u32> = self.points.iter().map(|p| p.multiplicity).collect();
        mults.sort_unstable();
        mults
    }
}

fn conic_kind(c: &Conic<Rational>) -> Result<ConicClass, OracleError> {
    match classify_type(c) {
        Ok(ConicClass::Degenerate) | Err(_) => Err(OracleError::UnsupportedConfiguration(
            "degenerate conic".to_string(),
        )),
        Ok(kind) => Ok(kind),
    }
}

/// A conic read as a quadratic in `y`: returns `(a, b(x), c(x))` with the
/// equation `a y^2 + b(x) y + c(x) = 0`.
fn quadratic_in_y(c: &Conic<Rational>) -> (Rational, Poly, Poly) {
    let two = rat(2, 1);
    let b = Poly::new(vec![&two * &c.m23, &two * &c.m12]);
    let cc = Poly::new(vec![c.m33.clone(), &two * &c.m13, c.m11.clone()]);
    (c.m22.clone(), b, cc)
}

/// Product of two polynomials that are linear in `y`, written as
/// `(u0(x) + u1(x) y)`, expanded into `y`-power coefficients.
fn lin_mul(u: &(Poly, Poly), v: &(Poly, Poly)) -> [Poly; 3] {
    [
        &u.0 * &v.0,
        &(&u.0 * &v.1) + &(&u.1 * &v.0),
        &u.1 * &v.1,
    ]
}

/// Half the Jacobian determinant of the two quadratic forms, expanded in
/// powers of `y` with coefficients polynomial in `x`. It vanishes exactly
/// where the two gradients are parallel, so a common point is a tangency iff
/// this vanishes there.
fn jacobian_in_y(p: &Conic<Rational>, q: &Conic<Rational>) -> [Poly; 3] {
    let lin = |c0: &Rational, c1: &Rational| Poly::new(vec![c0.clone(), c1.clone()]);
    let px = (lin(&p.m13, &p.m11), Poly::constant(p.m12.clone()));
    let py = (lin(&p.m23, &p.m12), Poly::constant(p.m22.clone()));
    let qx = (lin(&q.m13, &q.m11), Poly::constant(q.m12.clone()));
    let qy = (lin(&q.m23, &q.m12), Poly::constant(q.m22.clone()));
    let pos = lin_mul(&px, &qy);
    let neg = lin_mul(&py, &qx);
    [&pos[0] - &neg[0], &pos[1] - &neg[1], &pos[2] - &neg[2]]
}

/// Resultant in `y` of two quadratics given by ascending `y`-coefficients
/// `[c, b, a]`. When one input has `y`-degree below 2 the formula picks up a
/// constant factor of the other's leading coefficient, which is harmless
/// here: only the roots and their multiplicities are used.
fn resultant_quadratics(p: [&Poly; 3], q: [&Poly; 3]) -> Poly {
    let (pc, pb, pa) = (p[0], p[1], p[2]);
    let (qc, qb, qa) = (q[0], q[1], q[2]);
    let af_cd = &(pa * qc) - &(pc * qa);
    let ae_bd = &(pa * qb) - &(pb * qa);
    let bf_ce = &(pb * qc) - &(pc * qb);
    &(&af_cd * &af_cd) - &(&ae_bd * &bf_ce)
}

/// Everything needed to resolve one vertical fiber of the resultant.
struct FiberEnv {
    /// Ellipse `y^2` coefficient, positive.
    a: Rational,
    /// Ellipse `y` coefficient and constant term.
    pb: Poly,
    pc: Poly,
    neg_pb: Poly,
    two_a: Poly,
    /// Linear part of `d P - a Q` in `y`: common points on a shared fiber
    /// satisfy `beta y + gamma = 0`.
    beta: Poly,
    gamma: Poly,
    neg_gamma: Poly,
    /// Discriminant of the ellipse quadratic in `y`.
    disc: Poly,
    /// Jacobian reduced modulo the ellipse quadratic: `alpha y + beta2`.
    alpha: Poly,
    beta2: Poly,
    /// Resultant of the ellipse quadratic and the Jacobian: zero at `x` iff
    /// some intersection on that fiber is tangential.
    r2: Poly,
    /// `b alpha - 2 a beta2`: its sign against `alpha`'s tells whether the
    /// tangential point is the upper or lower root of the ellipse quadratic.
    pick: Poly,
}

fn halve_enclosure(xi: &mut IsolatedRoot) {
    let target = xi.loc.width() / rat(2, 1);
    xi.refine_to(&target);
}

/// `num/den` evaluated at the root, with `den` nonzero there. Exact when the
/// root is rational, otherwise a certified enclosure obtained by shrinking
/// the root interval until the denominator's interval extension is
/// sign-stable.
fn ratio_at_root(xi: &mut IsolatedRoot, num: &Poly, den: &Poly) -> RootLocation {
    loop {
        if let RootApprox::Exact(r) = &xi.loc {
            return RootLocation::Exact(num.eval(r) / den.eval(r));
        }
        let x_iv = iv_of(&xi.loc);
        let d_iv = iv_eval(den, &x_iv);
        if iv_sign_stable(&d_iv) {
            let q = iv_div(&iv_eval(num, &x_iv), &d_iv);
            return RootLocation::Interval { lo: q.lo, hi: q.hi };
        }
        halve_enclosure(xi);
    }
}

/// Both roots of the ellipse quadratic over a fiber with positive
/// discriminant, in increasing order.
fn vertical_pair(xi: &mut IsolatedRoot, env: &FiberEnv) -> (RootLocation, RootLocation) {
    loop {
        if let RootApprox::Exact(r) = &xi.loc {
            let quad = Poly::new(vec![env.pc.eval(r), env.pb.eval(r), env.a.clone()]);
            let mut ys = isolate_real_roots(&quad);
            debug_assert_eq!(ys.len(), 2);
            let width = isolation_width();
            for y in ys.iter_mut() {
                y.refine_to(&width);
            }
            let hi = ys.pop().expect("two real roots");
            let lo = ys.pop().expect("two real roots");
            return (
                RootLocation::from_approx(&lo.loc),
                RootLocation::from_approx(&hi.loc),
            );
        }
        let x_iv = iv_of(&xi.loc);
        let d_iv = iv_eval(&env.disc, &x_iv);
        if d_iv.lo.sign() == Sign::Positive {
            let root = iv_sqrt(&d_iv);
            let b_iv = iv_eval(&env.pb, &x_iv);
            let neg_b = iv_neg(&b_iv);
            let two_a = iv_point(&(rat(2, 1) * env.a.clone()));
            let lo = iv_div(&iv_sub(&neg_b, &root), &two_a);
            let hi = iv_div(&iv_add(&neg_b, &root), &two_a);
            return (
                RootLocation::Interval { lo: lo.lo, hi: lo.hi },
                RootLocation::Interval { lo: hi.lo, hi: hi.hi },
            );
        }
        halve_enclosure(xi);
    }
}

fn fiber_mismatch(shape: &str, mu: u32) -> OracleError {
    OracleError::UnsupportedConfiguration(format!(
        "fiber multiplicity {mu} is inconsistent with {shape}"
    ))
}

/// Split a shared fiber's multiplicity between its two real points.
/// Returns (lower-point, upper-point) multiplicities.
fn split_tangency(
    xi: &mut IsolatedRoot,
    env: &FiberEnv,
    mu: u32,
) -> Result<(u32, u32), OracleError> {
    if xi.sign_of(&env.r2).is_nonzero() {
        // Jacobian nonzero at both points: two transversal crossings.
        if mu != 2 {
            return Err(fiber_mismatch("two transversal points", mu));
        }
        return Ok((1, 1));
    }
    if xi.sign_of(&env.alpha) == Sign::Zero {
        // The reduced Jacobian vanishes identically on the fiber, so both
        // points are tangencies.
        debug_assert_eq!(xi.sign_of(&env.beta2), Sign::Zero);
        if mu != 4 {
            return Err(fiber_mismatch("two tangential points", mu));
        }
        return Ok((2, 2));
    }
    // Exactly one point is tangential. The ellipse quadratic's derivative
    // `2 a y + b` is negative at the lower root and positive at the upper
    // one; at the tangential point `y = -beta2/alpha` its sign is
    // `sign(b alpha - 2 a beta2) * sign(alpha)`.
    if mu < 3 {
        return Err(fiber_mismatch("one tangential and one transversal point", mu));
    }
    match xi.sign_of(&env.pick).product(xi.sign_of(&env.alpha)) {
        Sign::Positive => Ok((1, mu - 1)),
        Sign::Negative => Ok((mu - 1, 1)),
        _ => Err(OracleError::UnsupportedConfiguration(
            "cannot attribute the tangency within a shared vertical fiber".to_string(),
        )),
    }
}

/// Compute all real intersection points of a real ellipse with another
/// nondegenerate conic, with exact multiplicities.
///
/// The `y` variable is eliminated with a resultant; each real root of the
/// resultant is a vertical fiber whose multiplicity is distributed over the
/// common points above it. On a fiber the common points satisfy the linear
/// equation `beta y + gamma = 0` (the pencil combination that kills `y^2`),
/// which pins a unique point unless `beta` vanishes; in that degenerate case
/// the two conics share the whole pair of ellipse points over that `x`, and
/// tangency tests on the Jacobian decide how the multiplicity splits.
///
/// Exactly one of the inputs must be a real ellipse (either argument order
/// works), the other any nondegenerate conic. Identical point sets are
/// reported as [`OracleError::CommonComponent`].
pub fn intersect_conics(
    c1: &Conic<Rational>,
    c2: &Conic<Rational>,
) -> Result<IntersectionSummary, OracleError> {
    let k1 = conic_kind(c1)?;
    let k2 = conic_kind(c2)?;
    let (ell_raw, oth) = if k1 == ConicClass::RealEllipse {
        (c1, c2)
    } else if k2 == ConicClass::RealEllipse {
        (c2, c1)
    } else {
        return Err(OracleError::UnsupportedConfiguration(
            "the pair must include a real ellipse".to_string(),
        ));
    };
    let ell = normalize(ell_raw).expect("a real ellipse normalizes");

    let (a, pb, pc) = quadratic_in_y(&ell);
    let (d, qb, qc) = quadratic_in_y(oth);
    let pa = Poly::constant(a.clone());
    let qa = Poly::constant(d.clone());
    let res = resultant_quadratics([&pc, &pb, &pa], [&qc, &qb, &qa]);
    if res.is_zero() {
        return Err(OracleError::CommonComponent);
    }
    let total = res.degree().unwrap_or(0) as u32;

    let j = jacobian_in_y(&ell, oth);
    debug_assert!(j[2].degree().unwrap_or(0) == 0);
    let j2 = j[2].coeff(0);
    let gamma = &pc.scale(&d) - &qc.scale(&a);
    let alpha = &j[1].scale(&a) - &pb.scale(&j2);
    let beta2 = &j[0].scale(&a) - &pc.scale(&j2);
    let jq = Poly::constant(j2.clone());
    let env = FiberEnv {
        a: a.clone(),
        pb: pb.clone(),
        pc: pc.clone(),
        neg_pb: -&pb,
        two_a: Poly::constant(rat(2, 1) * a.clone()),
        beta: &pb.scale(&d) - &qb.scale(&a),
        neg_gamma: -&gamma,
        gamma,
        disc: &(&pb * &pb) - &pc.scale(&(rat(4, 1) * a.clone())),
        pick: &(&pb * &alpha) - &beta2.scale(&(rat(2, 1) * a)),
        r2: resultant_quadratics([&pc, &pb, &pa], [&j[0], &j[1], &jq]),
        alpha,
        beta2,
    };

    let mut points: Vec<IntersectionPoint> = Vec::new();
    let mut real_total: u32 = 0;
    let width = isolation_width();
    for mut xi in isolate_real_roots(&res) {
        xi.refine_to(&width);
        let mu = xi.multiplicity;
        if xi.sign_of(&env.beta).is_nonzero() {
            // A real linear relation pins down a single common point. Nonreal
            // common points cannot satisfy it, so the fiber's multiplicity
            // sits entirely on this point.
            let y = ratio_at_root(&mut xi, &env.neg_gamma, &env.beta);
            points.push(IntersectionPoint {
                x: RootLocation::from_approx(&xi.loc),
                y,
                multiplicity: mu,
            });
            real_total += mu;
            continue;
        }
        if xi.sign_of(&env.gamma).is_nonzero() {
            return Err(OracleError::UnsupportedConfiguration(
                "a resultant root has no finite common point".to_string(),
            ));
        }
        // beta and gamma both vanish: the conics agree on the whole fiber,
        // so the common points are exactly the ellipse's points there.
        match xi.sign_of(&env.disc) {
            Sign::Negative => {
                // Conjugate pair; contributes to the nonreal total only.
            }
            Sign::Zero => {
                // The ellipse touches the vertical line: one common point.
                let y = ratio_at_root(&mut xi, &env.neg_pb, &env.two_a);
                points.push(IntersectionPoint {
                    x: RootLocation::from_approx(&xi.loc),
                    y,
                    multiplicity: mu,
                });
                real_total += mu;
            }
            Sign::Positive => {
                let split = split_tangency(&mut xi, &env, mu)?;
                let (y_lo, y_hi) = vertical_pair(&mut xi, &env);
                let x_loc = RootLocation::from_approx(&xi.loc);
                points.push(IntersectionPoint {
                    x: x_loc.clone(),
                    y: y_lo,
                    multiplicity: split.0,
                });
                points.push(IntersectionPoint {
                    x: x_loc,
                    y: y_hi,
                    multiplicity: split.1,
                });
                real_total += mu;
            }
            Sign::Unknown => {
                return Err(OracleError::UnsupportedConfiguration(
                    "could not certify a discriminant sign".to_string(),
                ));
            }
        }
    }
    debug_assert!(real_total <= total && (total - real_total) % 2 == 0);
    Ok(IntersectionSummary {
        points,
        complex_multiplicity: total - real_total,
    })
}

// ── Coarse geometric class ──────────────────────────────────────────────────

/// Count-level view of a configuration: how many real intersection points,
/// with which multiplicities, and (when there are none) whether the ellipse
/// sits inside the other conic.
#[derive(Debug, Clone, PartialEq)]
pub struct CoarseClass {
    pub real_points: usize,
    /// Sorted ascending.
    pub multiplicities: Vec<u32>,
    /// Only meaningful without real intersections: `Some(true)` when the
    /// ellipse's center is strictly inside the parabola (resp. inside one
    /// hyperbola branch), `Some(false)` when strictly outside.
    pub center_inside: Option<bool>,
}

/// Condense an intersection summary into the coarse class. Containment is
/// decided by the sign of the normalized parabola/hyperbola equation at the
/// ellipse's center: normalization fixes the sign convention so that the
/// interior (resp. branch interior) is negative. With no intersection points
/// the whole ellipse shares the center's side, so the center decides.
pub fn coarse_class(
    summary: &IntersectionSummary,
    c1: &Conic<Rational>,
    c2: &Conic<Rational>,
) -> Result<CoarseClass, OracleError> {
    let k1 = conic_kind(c1)?;
    let k2 = conic_kind(c2)?;
    let (ell, oth, oth_kind) = if k1 == ConicClass::RealEllipse {
        (c1, c2, k2)
    } else if k2 == ConicClass::RealEllipse {
        (c2, c1, k1)
    } else {
        return Err(OracleError::UnsupportedConfiguration(
            "the pair must include a real ellipse".to_string(),
        ));
    };
    let center_inside = if summary.points.is_empty()
        && matches!(oth_kind, ConicClass::Parabola | ConicClass::Hyperbola)
    {
        let oth_norm = normalize(oth).expect("nondegenerate conic normalizes");
        let (cx, cy) = ell.center().expect("an ellipse has a center");
        match oth_norm.eval(&cx, &cy).sign() {
            Sign::Negative => Some(true),
            Sign::Positive => Some(false),
            _ => None,
        }
    } else {
        None
    };
    Ok(CoarseClass {
        real_points: summary.real_point_count(),
        multiplicities: summary.multiplicity_multiset(),
        center_inside,
    })
}

/// Is the coarse geometry consistent with a claimed parabola/ellipse case?
/// Tangency multiplicity 4 in the single-tangency case is the osculating
/// contact at the vertex.
pub fn coarse_matches_parabola(case: &ParabolaEllipsePosition, coarse: &CoarseClass) -> bool {
    use ParabolaEllipsePosition as Case;
    let m = &coarse.multiplicities;
    match case {
        Case::Separated => m.is_empty() && coarse.center_inside == Some(false),
        Case::ExternallyTangent => *m == [2],
        Case::EllipseInsideParabola => m.is_empty() && coarse.center_inside == Some(true),
        Case::TwoIntersections => *m == [1, 1],
        Case::FourIntersections => *m == [1, 1, 1, 1],
        Case::TwoIntersectionsAndInnerTangent => *m == [1, 1, 2],
        Case::OneInnerTangent => *m == [2] || *m == [4],
        Case::TwoInnerTangents => *m == [2, 2],
        Case::OneIntersectionAndInnerTangent => *m == [1, 3],
        Case::Indeterminate { .. } => false,
    }
}

/// Is the coarse geometry consistent with a claimed hyperbola/ellipse case?
pub fn coarse_matches_hyperbola(case: &HyperbolaEllipsePosition, coarse: &CoarseClass) -> bool {
    use HyperbolaEllipsePosition as Case;
    let m = &coarse.multiplicities;
    match case {
        Case::Separated => m.is_empty() && coarse.center_inside == Some(false),
        Case::TwoIntersections => *m == [1, 1],
        Case::OneInnerTangent => *m == [2] || *m == [4],
        Case::TwoInnerTangents => *m == [2, 2],
        Case::TwoIntersectionsAndInnerTangent => *m == [1, 1, 2],
        Case::OneOuterTangent => *m == [2],
        Case::TwoOuterTangents => *m == [2, 2],
        Case::TwoIntersectionsAndOuterTangent => *m == [1, 1, 2],
        Case::FourIntersections => *m == [1, 1, 1, 1],
        Case::EllipseInsideHyperbola => m.is_empty() && coarse.center_inside == Some(true),
        Case::OneIntersectionAndInnerTangent => *m == [1, 3],
        Case::Indeterminate { .. } => false,
    }
}

// ── Tangency side at a rational contact point ────────────────────────────────

/// Which side of each other two tangent curves lie on at a contact point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TangencySide {
    /// Both curves bend toward the same side (internal tangency).
    Inner,
    /// The curves bend away from each other (external tangency).
    Outer,
}

/// Decide the side of a tangency at an exact rational common point.
///
/// Writing `g1, g2` for the half-gradients and `t` for the common tangent
/// direction, the second-order deviation `v_i` of curve `i` from the tangent
/// line satisfies `g_i . v_i = -Q_i(t)` where `Q_i` is the quadratic form.
/// Projecting both deviations onto `g1` (using `g1 = rho g2` at a tangency):
/// the curves bend the same way iff
/// `sign(Q1(t)) = sign(g1 . g2) * sign(Q2(t))`.
pub fn tangency_side(
    c1: &Conic<Rational>,
    c2: &Conic<Rational>,
    x: &Rational,
    y: &Rational,
) -> Result<TangencySide, OracleError> {
    if c1.eval(x, y).sign() != Sign::Zero || c2.eval(x, y).sign() != Sign::Zero {
        return Err(OracleError::UnsupportedConfiguration(
            "the point does not lie on both conics".to_string(),
        ));
    }
    let g1 = c1.half_gradient(x, y);
    let g2 = c2.half_gradient(x, y);
    if (g1.0.sign() == Sign::Zero && g1.1.sign() == Sign::Zero)
        || (g2.0.sign() == Sign::Zero && g2.1.sign() == Sign::Zero)
    {
        return Err(OracleError::UnsupportedConfiguration(
            "singular point on one of the conics".to_string(),
        ));
    }
    let cross = g1.0.clone() * g2.1.clone() - g1.1.clone() * g2.0.clone();
    if cross.sign() != Sign::Zero {
        return Err(OracleError::UnsupportedConfiguration(
            "the conics are transversal at the point".to_string(),
        ));
    }
    let dot = (g1.0.clone() * g2.0.clone() + g1.1.clone() * g2.1.clone()).sign();
    debug_assert!(dot.is_nonzero());
    let tx = -g1.1.clone();
    let ty = g1.0.clone();
    let q1 = c1.quad_form(&tx, &ty).sign();
    let q2 = c2.quad_form(&tx, &ty).sign();
    if !q1.is_nonzero() || !q2.is_nonzero() {
        return Err(OracleError::UnsupportedConfiguration(
            "vanishing curvature along the contact direction".to_string(),
        ));
    }
    if q1 == dot.product(q2) {
        Ok(TangencySide::Inner)
    } else {
        Ok(TangencySide::Outer)
    }
}

// ── Tests ────────────────────────────────────────────────────────────────────
