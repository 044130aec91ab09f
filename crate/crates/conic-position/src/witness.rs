//! Hand-checked reference configurations with frozen expected positions.
//!
//! Every entry was verified by factoring its characteristic cubic by hand
//! and, where applicable, exhibiting the tangency point; the expected case
//! is stored as data so that classifier regressions cannot silently
//! re-derive a different answer. Centers are rational, which keeps both the
//! canonical parameters and the matching general conic pair exact.
//!
//! The tables double as coverage witnesses: all nine parabola cases and all
//! eleven hyperbola cases appear, several of them through more than one
//! branch of their condition set.

use crate::classify_hyperbola::{CanonicalHyperbolaCircle, HyperbolaEllipsePosition};
use crate::classify_parabola::{CanonicalParabolaCircle, ParabolaEllipsePosition};
use crate::conic::{canonical_hyperbola, canonical_parabola, circle, Conic};
use crate::numeric::{rat, Rational};

// ── Parabola vs circle ──────────────────────────────────────────────────────

/// Parabola `x^2/a_sq = 2y` against the circle with the stated center and
/// squared radius. Parameters are numerator/denominator pairs.
#[derive(Clone, Copy, Debug)]
pub struct ParabolaWitness {
    pub name: &'static str,
    pub a_sq: (i64, i64),
    pub xc: (i64, i64),
    pub yc: (i64, i64),
    pub delta_sq: (i64, i64),
    pub expected: ParabolaEllipsePosition,
}

impl ParabolaWitness {
    pub fn canonical(&self) -> CanonicalParabolaCircle<Rational> {
        CanonicalParabolaCircle::from_center(
            rat(self.a_sq.0, self.a_sq.1),
            rat(self.xc.0, self.xc.1),
            rat(self.yc.0, self.yc.1),
            rat(self.delta_sq.0, self.delta_sq.1),
        )
    }

    /// The same configuration as a general conic pair (parabola, circle).
    pub fn conic_pair(&self) -> (Conic<Rational>, Conic<Rational>) {
        let n = canonical_parabola(&rat(self.a_sq.0, self.a_sq.1));
        let m = circle(
            &rat(self.xc.0, self.xc.1),
            &rat(self.yc.0, self.yc.1),
            &rat(self.delta_sq.0, self.delta_sq.1),
        );
        (n, m)
    }
}

/// All nine parabola cases; characteristic roots noted for each entry.
pub fn parabola_witnesses() -> Vec<ParabolaWitness> {
    use ParabolaEllipsePosition::*;
    vec![
        // roots -1, 3 +- 2 sqrt(2); circle below the vertex
        ParabolaWitness {
            name: "separated-below-vertex",
            a_sq: (1, 1),
            xc: (0, 1),
            yc: (-3, 1),
            delta_sq: (1, 1),
            expected: Separated,
        },
        // roots 1, 1, -1; tangent at the vertex from outside
        ParabolaWitness {
            name: "externally-tangent-at-vertex",
            a_sq: (1, 1),
            xc: (0, 1),
            yc: (-1, 1),
            delta_sq: (1, 1),
            expected: ExternallyTangent,
        },
        // roots -1, (-16 +- sqrt(240))/8, all distinct negative
        ParabolaWitness {
            name: "inside-off-boundary",
            a_sq: (1, 1),
            xc: (0, 1),
            yc: (2, 1),
            delta_sq: (1, 4),
            expected: EllipseInsideParabola,
        },
        // roots -1, -1, -1/4; the double root is a complex contact, the
        // circle stays strictly inside (second branch of the case)
        ParabolaWitness {
            name: "inside-axis-double-root",
            a_sq: (1, 1),
            xc: (0, 1),
            yc: (5, 8),
            delta_sq: (1, 4),
            expected: EllipseInsideParabola,
        },
        // roots -3, (-4 +- sqrt(7))/3; a simple root sits exactly at -a^2
        // below the other two, the layout the variation count drops
        ParabolaWitness {
            name: "inside-axis-simple-root",
            a_sq: (3, 1),
            xc: (0, 1),
            yc: (4, 3),
            delta_sq: (1, 1),
            expected: EllipseInsideParabola,
        },
        // roots -1 and a complex pair; circle centered at the vertex
        ParabolaWitness {
            name: "two-crossings-vertex-centered",
            a_sq: (1, 1),
            xc: (0, 1),
            yc: (0, 1),
            delta_sq: (1, 1),
            expected: TwoIntersections,
        },
        // roots -1, -5/4, -13/4, distinct and at most -a^2
        ParabolaWitness {
            name: "four-crossings",
            a_sq: (1, 1),
            xc: (0, 1),
            yc: (9, 4),
            delta_sq: (65, 16),
            expected: FourIntersections,
        },
        // roots -1, -2, -2; crossings plus tangency on the axis
        ParabolaWitness {
            name: "two-crossings-inner-tangent",
            a_sq: (1, 1),
            xc: (0, 1),
            yc: (2, 1),
            delta_sq: (4, 1),
            expected: TwoIntersectionsAndInnerTangent,
        },
        // triple root -1 = -a^2; osculating circle at the vertex
        ParabolaWitness {
            name: "osculating-at-vertex",
            a_sq: (1, 1),
            xc: (0, 1),
            yc: (1, 1),
            delta_sq: (1, 1),
            expected: OneInnerTangent,
        },
        // roots -2, -1/4, -1/4; plain inner tangency at (1, 1/2)
        ParabolaWitness {
            name: "inner-tangent-off-axis",
            a_sq: (1, 1),
            xc: (3, 4),
            yc: (3, 4),
            delta_sq: (1, 8),
            expected: OneInnerTangent,
        },
        // roots -1, -1, -12; symmetric pair of tangencies
        ParabolaWitness {
            name: "two-inner-tangents",
            a_sq: (1, 1),
            xc: (0, 1),
            yc: (13, 2),
            delta_sq: (12, 1),
            expected: TwoInnerTangents,
        },
        // triple root -2 < -a^2; osculation away from the vertex
        ParabolaWitness {
            name: "osculating-off-vertex",
            a_sq: (1, 1),
            xc: (-1, 1),
            yc: (5, 2),
            delta_sq: (8, 1),
            expected: OneIntersectionAndInnerTangent,
        },
    ]
}

// ── Hyperbola vs circle ─────────────────────────────────────────────────────

/// Hyperbola `x^2/a_sq - y^2/b_sq + 1 = 0` against the circle with the
/// stated center and squared radius.
#[derive(Clone, Copy, Debug)]
pub struct HyperbolaWitness {
    pub name: &'static str,
    pub a_sq: (i64, i64),
    pub b_sq: (i64, i64),
    pub xc: (i64, i64),
    pub yc: (i64, i64),
    pub delta_sq: (i64, i64),
    pub expected: HyperbolaEllipsePosition,
}

impl HyperbolaWitness {
    pub fn canonical(&self) -> CanonicalHyperbolaCircle<Rational> {
        CanonicalHyperbolaCircle::from_center(
            rat(self.a_sq.0, self.a_sq.1),
            rat(self.b_sq.0, self.b_sq.1),
            rat(self.xc.0, self.xc.1),
            rat(self.yc.0, self.yc.1),
            rat(self.delta_sq.0, self.delta_sq.1),
        )
    }

    /// The same configuration as a general conic pair (hyperbola, circle).
    pub fn conic_pair(&self) -> (Conic<Rational>, Conic<Rational>) {
        let nh = canonical_hyperbola(
            &rat(self.a_sq.0, self.a_sq.1),
            &rat(self.b_sq.0, self.b_sq.1),
        );
        let m = circle(
            &rat(self.xc.0, self.xc.1),
            &rat(self.yc.0, self.yc.1),
            &rat(self.delta_sq.0, self.delta_sq.1),
        );
        (nh, m)
    }
}

/// All eleven hyperbola cases; characteristic roots noted for each entry.
pub fn hyperbola_witnesses() -> Vec<HyperbolaWitness> {
    use HyperbolaEllipsePosition::*;
    vec![
        // roots 1, 1/4, -1; small circle between the branches
        HyperbolaWitness {
            name: "separated-between-branches",
            a_sq: (1, 1),
            b_sq: (1, 1),
            xc: (0, 1),
            yc: (0, 1),
            delta_sq: (1, 4),
            expected: Separated,
        },
        // root -1 plus a complex pair
        HyperbolaWitness {
            name: "two-crossings-high-center",
            a_sq: (1, 1),
            b_sq: (1, 1),
            xc: (0, 1),
            yc: (2, 1),
            delta_sq: (5, 1),
            expected: TwoIntersections,
        },
        // triple root -1 (a^2 = b delta, |y_c| = b + delta); the
        // osculating circle at the vertex (0, 1)
        HyperbolaWitness {
            name: "osculating-at-vertex",
            a_sq: (1, 1),
            b_sq: (1, 1),
            xc: (0, 1),
            yc: (2, 1),
            delta_sq: (1, 1),
            expected: OneInnerTangent,
        },
        // roots -1/5, -1/5, -17/8; plain inner tangency off the axis
        HyperbolaWitness {
            name: "inner-tangent-off-axis",
            a_sq: (1, 1),
            b_sq: (1, 1),
            xc: (3, 5),
            yc: (3, 2),
            delta_sq: (17, 200),
            expected: OneInnerTangent,
        },
        // roots -1, -1, -9 = -a^2, -a^2, -b^2 delta^2/a^2 with a^2 < b delta
        HyperbolaWitness {
            name: "two-inner-tangents",
            a_sq: (1, 1),
            b_sq: (3, 1),
            xc: (0, 1),
            yc: (4, 1),
            delta_sq: (3, 1),
            expected: TwoInnerTangents,
        },
        // roots -1, -2, -2; tangent at the vertex plus two crossings
        HyperbolaWitness {
            name: "two-crossings-inner-tangent",
            a_sq: (1, 1),
            b_sq: (1, 1),
            xc: (0, 1),
            yc: (3, 1),
            delta_sq: (4, 1),
            expected: TwoIntersectionsAndInnerTangent,
        },
        // roots 1/2, 1/2, -17/8; outer tangency at (3/4, 5/4)
        HyperbolaWitness {
            name: "outer-tangent-off-axis",
            a_sq: (1, 1),
            b_sq: (1, 1),
            xc: (9, 8),
            yc: (5, 8),
            delta_sq: (17, 32),
            expected: OneOuterTangent,
        },
        // roots 1, 1, -4 = b^2, b^2, -a^2 delta^2/b^2; symmetric pair of
        // outer tangencies
        HyperbolaWitness {
            name: "two-outer-tangents",
            a_sq: (4, 1),
            b_sq: (1, 1),
            xc: (0, 1),
            yc: (0, 1),
            delta_sq: (1, 1),
            expected: TwoOuterTangents,
        },
        // roots 2, 2, -17/8; outer tangency plus two crossings
        HyperbolaWitness {
            name: "two-crossings-outer-tangent",
            a_sq: (1, 1),
            b_sq: (1, 1),
            xc: (9, 4),
            yc: (-5, 4),
            delta_sq: (17, 2),
            expected: TwoIntersectionsAndOuterTangent,
        },
        // roots 4, 1, -1; big centered circle crosses both branches
        HyperbolaWitness {
            name: "four-crossings",
            a_sq: (1, 1),
            b_sq: (1, 1),
            xc: (0, 1),
            yc: (0, 1),
            delta_sq: (4, 1),
            expected: FourIntersections,
        },
        // roots -1, (-11 +- sqrt(105))/8, all distinct negative
        HyperbolaWitness {
            name: "inside-branch",
            a_sq: (1, 1),
            b_sq: (1, 1),
            xc: (0, 1),
            yc: (2, 1),
            delta_sq: (1, 4),
            expected: EllipseInsideHyperbola,
        },
        // roots -4, -4, -1/4; the double root -a^2 is a complex contact,
        // the circle sits strictly inside the branch (third branch of the
        // case's condition set)
        HyperbolaWitness {
            name: "inside-branch-double-root",
            a_sq: (4, 1),
            b_sq: (1, 1),
            xc: (0, 1),
            yc: (5, 2),
            delta_sq: (1, 1),
            expected: EllipseInsideHyperbola,
        },
        // triple root -17/8 < -a^2; osculation away from the vertex
        HyperbolaWitness {
            name: "hyperosculating",
            a_sq: (1, 1),
            b_sq: (1, 1),
            xc: (27, 32),
            yc: (125, 32),
            delta_sq: (4913, 512),
            expected: OneIntersectionAndInnerTangent,
        },
    ]
}

// ── Tests ───────────────────────────────────────────────────────────────────
