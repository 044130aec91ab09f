//! The pencil of two conics and its characteristic cubic.
//!
//! For conics `N`, `M` the pencil `lambda N + M` degenerates exactly at the
//! roots of the characteristic cubic
//!
//! ```text
//! F(lambda) = det(lambda N + M)
//!           = L0 lambda^3 + L1 lambda^2 + L2 lambda + L3,
//! L0 = det N,             L1 = tr(adj(N) M),
//! L2 = tr(adj(M) N),      L3 = det M,
//! ```
//!
//! computed division-free through adjugate traces. The 2x2 leading blocks
//! contribute the companion quantities `T1 = det M2`, `T2 = det N2` and
//! `T = tr(adj(M2) N2)`, which drive the reduction to canonical form.
//!
//! The real-root layout of `F` is what the position classifiers read off:
//! the cubic's discriminant separates `three distinct real roots / repeated
//! roots / one real root`, and Descartes sign variations of shifted cubics
//! count roots in half-lines exactly (all roots being real in the cases
//! where counts are consulted).

use crate::conic::Conic;
use crate::numeric::{Scalar, Sign};
use std::fmt;

// ── Error type ──────────────────────────────────────────────────────────────

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PencilError {
    /// The cubic has a (certified) zero leading coefficient.
    LeadingZero,
}

impl fmt::Display for PencilError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PencilError::LeadingZero => f.write_str("not a genuine cubic: leading coefficient is zero"),
        }
    }
}

impl std::error::Error for PencilError {}

// ── Cubic ───────────────────────────────────────────────────────────────────

/// `c3 lambda^3 + c2 lambda^2 + c1 lambda + c0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Cubic<S> {
    pub c3: S,
    pub c2: S,
    pub c1: S,
    pub c0: S,
}

impl<S: Scalar> Cubic<S> {
    pub fn new(c3: S, c2: S, c1: S, c0: S) -> Self {
        Cubic { c3, c2, c1, c0 }
    }

    pub fn eval(&self, x: &S) -> S {
        ((self.c3.clone() * x.clone() + self.c2.clone()) * x.clone() + self.c1.clone())
            * x.clone()
            + self.c0.clone()
    }

    /// Coefficient signs from the leading coefficient down.
    pub fn coefficient_signs(&self) -> [Sign; 4] {
        [
            self.c3.sign(),
            self.c2.sign(),
            self.c1.sign(),
            self.c0.sign(),
        ]
    }
}

/// Characteristic cubic `det(lambda N + M)` by adjugate traces.
pub fn char_poly<S: Scalar>(n: &Conic<S>, m: &Conic<S>) -> Cubic<S> {
    Cubic {
        c3: n.det3(),
        c2: adjugate_trace(n, m),
        c1: adjugate_trace(m, n),
        c0: m.det3(),
    }
}

/// `tr(adj(A) B)` for symmetric 3x3 matrices.
fn adjugate_trace<S: Scalar>(a: &Conic<S>, b: &Conic<S>) -> S {
    let two = S::from_int(2);
    // Adjugate entries of A (symmetric).
    let a11 = a.m22.clone() * a.m33.clone() - a.m23.clone() * a.m23.clone();
    let a22 = a.m11.clone() * a.m33.clone() - a.m13.clone() * a.m13.clone();
    let a33 = a.m11.clone() * a.m22.clone() - a.m12.clone() * a.m12.clone();
    let a12 = a.m13.clone() * a.m23.clone() - a.m12.clone() * a.m33.clone();
    let a13 = a.m12.clone() * a.m23.clone() - a.m22.clone() * a.m13.clone();
    let a23 = a.m13.clone() * a.m12.clone() - a.m11.clone() * a.m23.clone();
    a11 * b.m11.clone()
        + a22 * b.m22.clone()
        + a33 * b.m33.clone()
        + two * (a12 * b.m12.clone() + a13 * b.m13.clone() + a23 * b.m23.clone())
}

/// `tr(adj(A2) B2)` for the leading 2x2 blocks.
fn adjugate_trace_2x2<S: Scalar>(a: &Conic<S>, b: &Conic<S>) -> S {
    let two = S::from_int(2);
    a.m22.clone() * b.m11.clone() + a.m11.clone() * b.m22.clone()
        - two * a.m12.clone() * b.m12.clone()
}

/// Discriminant of a genuine cubic:
/// `-27 c0^2 c3^2 + 18 c0 c1 c2 c3 - 4 c0 c2^3 - 4 c1^3 c3 + c1^2 c2^2`.
///
/// Positive iff three distinct real roots, zero iff a repeated root,
/// negative iff one real root and a complex pair.
pub fn discriminant<S: Scalar>(f: &Cubic<S>) -> Result<S, PencilError> {
    if f.c3.sign() == Sign::Zero {
        return Err(PencilError::LeadingZero);
    }
    let c0 = f.c0.clone();
    let c1 = f.c1.clone();
    let c2 = f.c2.clone();
    let c3 = f.c3.clone();
    let t27 = S::from_int(-27) * c0.clone() * c0.clone() * c3.clone() * c3.clone();
    let t18 = S::from_int(18) * c0.clone() * c1.clone() * c2.clone() * c3.clone();
    let t4a = S::from_int(-4) * c0 * c2.clone() * c2.clone() * c2.clone();
    let t4b = S::from_int(-4) * c1.clone() * c1.clone() * c1.clone() * c3;
    let tsq = c1.clone() * c1 * c2.clone() * c2;
    Ok(t27 + t18 + t4a + t4b + tsq)
}

/// Discriminant of the derivative, `4 c2^2 - 12 c3 c1`. Zero together with
/// the cubic's own discriminant characterizes a triple root.
pub fn delta_prime<S: Scalar>(f: &Cubic<S>) -> S {
    S::from_int(4) * f.c2.clone() * f.c2.clone() - S::from_int(12) * f.c3.clone() * f.c1.clone()
}

/// `f(lambda + h)` expanded back into a cubic.
pub fn shift<S: Scalar>(f: &Cubic<S>, h: &S) -> Cubic<S> {
    let three = S::from_int(3);
    let two = S::from_int(2);
    let c3 = f.c3.clone();
    let c2 = f.c2.clone() + three.clone() * f.c3.clone() * h.clone();
    let c1 = f.c1.clone()
        + two * f.c2.clone() * h.clone()
        + three * f.c3.clone() * h.clone() * h.clone();
    let c0 = f.eval(h);
    Cubic { c3, c2, c1, c0 }
}

/// Descartes sign variations of an ordered sequence, zeros dropped.
/// `None` when any entry is [`Sign::Unknown`] (float mode).
pub fn sign_variations(signs: &[Sign]) -> Option<usize> {
    let mut count = 0;
    let mut last = Sign::Zero;
    for &s in signs {
        match s {
            Sign::Unknown => return None,
            Sign::Zero => {}
            s => {
                if last != Sign::Zero && s != last {
                    count += 1;
                }
                last = s;
            }
        }
    }
    Some(count)
}

// ── Pencil invariants ───────────────────────────────────────────────────────

/// Everything the general-position classifiers read from a pair `(N, M)`:
/// the characteristic cubic's coefficients, the 2x2 block quantities, and
/// the two cached discriminants.
#[derive(Clone, Debug)]
pub struct PencilInvariants<S> {
    pub l0: S,
    pub l1: S,
    pub l2: S,
    pub l3: S,
    /// `det M2` (ellipse block).
    pub t1: S,
    /// `det N2` (parabola/hyperbola block).
    pub t2: S,
    /// `tr(adj(M2) N2)`.
    pub t: S,
    pub delta: S,
    pub delta_prime: S,
}

impl<S: Scalar> PencilInvariants<S> {
    pub fn cubic(&self) -> Cubic<S> {
        Cubic {
            c3: self.l0.clone(),
            c2: self.l1.clone(),
            c1: self.l2.clone(),
            c0: self.l3.clone(),
        }
    }
}

/// Compute the invariants of the pencil `lambda N + M`.
///
/// Requires `det N != 0` (certified); the parabola/hyperbola role guarantees
/// it after [`crate::conic::normalize`].
pub fn invariants<S: Scalar>(
    n: &Conic<S>,
    m: &Conic<S>,
) -> Result<PencilInvariants<S>, PencilError> {
    let f = char_poly(n, m);
    let delta = discriminant(&f)?;
    let delta_prime = delta_prime(&f);
    Ok(PencilInvariants {
        l0: f.c3,
        l1: f.c2,
        l2: f.c1,
        l3: f.c0,
        t1: m.minor2(),
        t2: n.minor2(),
        t: adjugate_trace_2x2(m, n),
        delta,
        delta_prime,
    })
}

// ── Tests ───────────────────────────────────────────────────────────────────

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conic::{canonical_hyperbola, canonical_parabola, circle, conic_from_equation};
    use crate::numeric::{rat, Rational};

    fn cubic(c3: i64, c2: i64, c1: i64, c0: i64) -> Cubic<Rational> {
        Cubic::new(
            Rational::from_int(c3),
            Rational::from_int(c2),
            Rational::from_int(c1),
            Rational::from_int(c0),
        )
    }

    #[test]
    fn char_poly_unit_parabola_unit_circle() {
        let n = canonical_parabola(&rat(1, 1));
        let m = circle(&rat(0, 1), &rat(0, 1), &rat(1, 1));
        let f = char_poly(&n, &m);
        assert_eq!(f, cubic(-1, -1, -1, -1));
    }

    #[test]
    fn char_poly_coincident_conics() {
        // N = M = diag(1, 1, -1): det(lambda N + N) = (lambda+1)^3 det N.
        let c = conic_from_equation(
            rat(1, 1),
            rat(0, 1),
            rat(1, 1),
            rat(0, 1),
            rat(0, 1),
            rat(-1, 1),
        );
        let f = char_poly(&c, &c);
        assert_eq!(f, cubic(-1, -3, -3, -1));
    }

    #[test]
    fn char_poly_spec_hyperbola_pair() {
        // x^2/4 - y^2 + 1 vs the unit circle: roots of F are {1, 1, -4}
        // after clearing the -1/4 leading factor.
        let n = canonical_hyperbola(&rat(4, 1), &rat(1, 1));
        let m = circle(&rat(0, 1), &rat(0, 1), &rat(1, 1));
        let f = char_poly(&n, &m);
        assert_eq!(
            f,
            Cubic::new(rat(-1, 4), rat(-1, 2), rat(7, 4), rat(-1, 1))
        );
        // F(1) = 0 (double), F(-4) = 0.
        assert_eq!(f.eval(&rat(1, 1)), rat(0, 1));
        assert_eq!(f.eval(&rat(-4, 1)), rat(0, 1));
        let d = discriminant(&f).unwrap();
        assert_eq!(d.sign(), Sign::Zero);
    }

    #[test]
    fn discriminant_signs() {
        // lambda^3 - lambda: distinct real roots, disc = 4.
        assert_eq!(discriminant(&cubic(1, 0, -1, 0)).unwrap(), rat(4, 1));
        // (lambda + 1)^3: triple root, disc = 0.
        assert_eq!(discriminant(&cubic(1, 3, 3, 1)).unwrap(), rat(0, 1));
        // lambda^3 + lambda: one real root, disc = -4.
        assert_eq!(discriminant(&cubic(1, 0, 1, 0)).unwrap(), rat(-4, 1));
        // Leading zero is rejected.
        assert!(matches!(
            discriminant(&cubic(0, 1, 1, 1)),
            Err(PencilError::LeadingZero)
        ));
    }

    #[test]
    fn delta_prime_detects_critical_structure() {
        // (lambda + 1)^3: derivative 3(lambda+1)^2 has a double root.
        assert_eq!(delta_prime(&cubic(1, 3, 3, 1)), rat(0, 1));
        // lambda^3 - lambda: derivative has two distinct roots.
        assert_eq!(delta_prime(&cubic(1, 0, -1, 0)), rat(12, 1));
    }

    #[test]
    fn shift_matches_expansion() {
        // f = -l^3 - l^2 - l - 1 shifted by h = -1:
        // f(l - 1) = -l^3 + 2l^2 - 2l + 0.
        let f = cubic(-1, -1, -1, -1);
        let g = shift(&f, &rat(-1, 1));
        assert_eq!(g, cubic(-1, 2, -2, 0));
        // Shift is evaluation-consistent at sample points.
        let h = rat(5, 3);
        let g = shift(&f, &h);
        for x in [rat(0, 1), rat(-2, 7), rat(9, 4)] {
            assert_eq!(g.eval(&x), f.eval(&(x.clone() + h.clone())));
        }
    }

    #[test]
    fn sign_variation_counting() {
        use Sign::*;
        assert_eq!(sign_variations(&[Negative, Positive, Zero, Negative, Positive]), Some(3));
        assert_eq!(sign_variations(&[Positive, Positive, Positive]), Some(0));
        assert_eq!(sign_variations(&[Zero, Zero]), Some(0));
        assert_eq!(sign_variations(&[]), Some(0));
        assert_eq!(sign_variations(&[Positive, Unknown]), None);
        // Dropping zeros: (+, 0, -) is one variation.
        assert_eq!(sign_variations(&[Positive, Zero, Negative]), Some(1));
    }

    #[test]
    fn invariants_of_canonical_hyperbola_pair() {
        // The worked reduction example: N = x^2/4 - y^2 + 1, M = unit circle.
        let n = canonical_hyperbola(&rat(4, 1), &rat(1, 1));
        let m = circle(&rat(0, 1), &rat(0, 1), &rat(1, 1));
        let inv = invariants(&n, &m).unwrap();
        assert_eq!(inv.l0, rat(-1, 4));
        assert_eq!(inv.l3, rat(-1, 1));
        assert_eq!(inv.t1, rat(1, 1));
        assert_eq!(inv.t2, rat(-1, 4));
        // T = tr(adj(M2) N2) = n11 + n22 for M = circle.
        assert_eq!(inv.t, rat(-3, 4));
        // d = T^2 - 4 T1 T2 = 9/16 + 1 = 25/16.
        let d = inv.t.clone() * inv.t.clone() - rat(4, 1) * inv.t1.clone() * inv.t2.clone();
        assert_eq!(d, rat(25, 16));
    }

    #[test]
    fn invariants_reject_zero_leading() {
        // N degenerate (det == 0) cannot head a pencil cubic.
        let lines = conic_from_equation(
            rat(0, 1),
            rat(1, 1),
            rat(0, 1),
            rat(0, 1),
            rat(0, 1),
            rat(0, 1),
        );
        let m = circle(&rat(0, 1), &rat(0, 1), &rat(1, 1));
        assert!(invariants(&lines, &m).is_err());
    }
}
