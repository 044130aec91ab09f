//! Conics as symmetric 3x3 matrices.
//!
//! A conic `{ (x, y) : X^T C X = 0, X = (x, y, 1) }` is stored by the six
//! entries of its symmetric matrix
//!
//! ```text
//!     | m11 m12 m13 |
//! C = | m12 m22 m23 |
//!     | m13 m23 m33 |
//! ```
//!
//! so the general equation `A x^2 + B xy + C y^2 + D x + E y + F = 0` maps
//! to `m11 = A, m12 = B/2, m22 = C, m13 = D/2, m23 = E/2, m33 = F`
//! (see [`conic_from_equation`]).

use crate::numeric::{Scalar, Sign};
use std::fmt;

// ── Error type ──────────────────────────────────────────────────────────────

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConicError {
    /// The conic is degenerate (zero determinant), or otherwise outside the
    /// ellipse/parabola/hyperbola family a caller required.
    Degenerate(String),
    /// A sign needed by the classification could not be certified (float
    /// mode only). Carries the name of the first indeterminate quantity.
    IndeterminateSign(&'static str),
}

impl fmt::Display for ConicError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConicError::Degenerate(what) => write!(f, "degenerate conic: {what}"),
            ConicError::IndeterminateSign(q) => {
                write!(f, "cannot certify the sign of {q} at this tolerance")
            }
        }
    }
}

impl std::error::Error for ConicError {}

// ── Conic type ──────────────────────────────────────────────────────────────

/// Symmetric-matrix representation of a conic, generic over the scalar.
#[derive(Clone, Debug, PartialEq)]
pub struct Conic<S> {
    pub m11: S,
    pub m12: S,
    pub m13: S,
    pub m22: S,
    pub m23: S,
    pub m33: S,
}

/// Build a conic from the coefficients of
/// `A x^2 + B xy + C y^2 + D x + E y + F = 0`.
pub fn conic_from_equation<S: Scalar>(a: S, b: S, c: S, d: S, e: S, f: S) -> Conic<S> {
    let two = S::from_int(2);
    Conic {
        m11: a,
        m12: b / two.clone(),
        m13: d / two.clone(),
        m22: c,
        m23: e / two,
        m33: f,
    }
}

impl<S: Scalar> Conic<S> {
    /// Equation coefficients `(A, B, C, D, E, F)` back from the matrix.
    pub fn to_equation(&self) -> [S; 6] {
        let two = S::from_int(2);
        [
            self.m11.clone(),
            two.clone() * self.m12.clone(),
            self.m22.clone(),
            two.clone() * self.m13.clone(),
            two * self.m23.clone(),
            self.m33.clone(),
        ]
    }

    /// Value of the quadratic form at the affine point `(x, y)`.
    pub fn eval(&self, x: &S, y: &S) -> S {
        let two = S::from_int(2);
        self.m11.clone() * x.clone() * x.clone()
            + two.clone() * self.m12.clone() * x.clone() * y.clone()
            + self.m22.clone() * y.clone() * y.clone()
            + two.clone() * self.m13.clone() * x.clone()
            + two * self.m23.clone() * y.clone()
            + self.m33.clone()
    }

    /// Quadratic part evaluated on a direction vector.
    pub fn quad_form(&self, vx: &S, vy: &S) -> S {
        let two = S::from_int(2);
        self.m11.clone() * vx.clone() * vx.clone()
            + two * self.m12.clone() * vx.clone() * vy.clone()
            + self.m22.clone() * vy.clone() * vy.clone()
    }

    /// Half the gradient of the quadratic form at `(x, y)`.
    pub fn half_gradient(&self, x: &S, y: &S) -> (S, S) {
        (
            self.m11.clone() * x.clone() + self.m12.clone() * y.clone() + self.m13.clone(),
            self.m12.clone() * x.clone() + self.m22.clone() * y.clone() + self.m23.clone(),
        )
    }

    /// Determinant of the full 3x3 matrix.
    pub fn det3(&self) -> S {
        let a = self.m11.clone()
            * (self.m22.clone() * self.m33.clone() - self.m23.clone() * self.m23.clone());
        let b = self.m12.clone()
            * (self.m12.clone() * self.m33.clone() - self.m13.clone() * self.m23.clone());
        let c = self.m13.clone()
            * (self.m12.clone() * self.m23.clone() - self.m22.clone() * self.m13.clone());
        a - b + c
    }

    /// Determinant of the leading 2x2 block (the quadratic part).
    pub fn minor2(&self) -> S {
        self.m11.clone() * self.m22.clone() - self.m12.clone() * self.m12.clone()
    }

    /// Center of a central conic (`minor2 != 0`).
    pub fn center(&self) -> Option<(S, S)> {
        let det = self.minor2();
        if !det.sign().is_nonzero() {
            return None;
        }
        let cx = (self.m12.clone() * self.m23.clone() - self.m22.clone() * self.m13.clone())
            / det.clone();
        let cy = (self.m12.clone() * self.m13.clone() - self.m11.clone() * self.m23.clone()) / det;
        Some((cx, cy))
    }

    /// Multiply the whole matrix by a scalar (same point set for `k != 0`).
    pub fn scale(&self, k: &S) -> Conic<S> {
        self.map(|v| v.clone() * k.clone())
    }

    pub fn map<T>(&self, mut f: impl FnMut(&S) -> T) -> Conic<T> {
        Conic {
            m11: f(&self.m11),
            m12: f(&self.m12),
            m13: f(&self.m13),
            m22: f(&self.m22),
            m23: f(&self.m23),
            m33: f(&self.m33),
        }
    }
}

// ── Classification and normalization ────────────────────────────────────────

/// Nondegenerate conic classes over the reals (plus the degenerate bucket).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConicClass {
    RealEllipse,
    /// Positive-definite equation with no real points.
    ImaginaryEllipse,
    Parabola,
    Hyperbola,
    Degenerate,
}

impl fmt::Display for ConicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ConicClass::RealEllipse => "real ellipse",
            ConicClass::ImaginaryEllipse => "imaginary ellipse",
            ConicClass::Parabola => "parabola",
            ConicClass::Hyperbola => "hyperbola",
            ConicClass::Degenerate => "degenerate",
        };
        f.write_str(s)
    }
}

/// Classify by the signs of `det C` and the leading 2x2 minor.
///
/// Errors with [`ConicError::IndeterminateSign`] when a needed sign cannot
/// be certified (float scalars only).
pub fn classify_type<S: Scalar>(c: &Conic<S>) -> Result<ConicClass, ConicError> {
    let det = c.det3().sign();
    if det == Sign::Unknown {
        return Err(ConicError::IndeterminateSign("det"));
    }
    if det == Sign::Zero {
        return Ok(ConicClass::Degenerate);
    }
    let minor = c.minor2().sign();
    match minor {
        Sign::Unknown => Err(ConicError::IndeterminateSign("minor2")),
        Sign::Zero => Ok(ConicClass::Parabola),
        Sign::Negative => Ok(ConicClass::Hyperbola),
        Sign::Positive => {
            // Ellipse family: real when det and the 2x2 trace disagree in
            // sign (the trace is nonzero since m11*m22 > m12^2 >= 0).
            let trace = (c.m11.clone() + c.m22.clone()).sign();
            match trace {
                Sign::Unknown => Err(ConicError::IndeterminateSign("trace2")),
                t if t == det => Ok(ConicClass::ImaginaryEllipse),
                _ => Ok(ConicClass::RealEllipse),
            }
        }
    }
}

/// Scale a nondegenerate conic by -1 if needed so that signs follow the
/// conventions the position tests assume:
///
/// * real ellipse: `m11 > 0` (interior is the negative region);
/// * parabola or hyperbola: `det < 0` (for a parabola this makes the
///   quadratic part positive semidefinite and the interior negative; for a
///   hyperbola it matches the branch-interior-negative orientation).
pub fn normalize<S: Scalar>(c: &Conic<S>) -> Result<Conic<S>, ConicError> {
    let class = classify_type(c)?;
    let flip = match class {
        ConicClass::Degenerate => {
            return Err(ConicError::Degenerate("cannot normalize".to_string()))
        }
        ConicClass::ImaginaryEllipse => {
            return Err(ConicError::Degenerate(
                "imaginary ellipse has no real points".to_string(),
            ))
        }
        ConicClass::RealEllipse => match c.m11.sign() {
            Sign::Positive => false,
            Sign::Negative => true,
            _ => return Err(ConicError::IndeterminateSign("m11")),
        },
        ConicClass::Parabola | ConicClass::Hyperbola => match c.det3().sign() {
            Sign::Negative => false,
            Sign::Positive => true,
            _ => return Err(ConicError::IndeterminateSign("det")),
        },
    };
    if flip {
        Ok(c.map(|v| -v.clone()))
    } else {
        Ok(c.clone())
    }
}

// ── Canonical constructors ──────────────────────────────────────────────────

/// `x^2 / aSq - 2 y = 0`: the canonical parabola (vertex at the origin,
/// opening along +y).
pub fn canonical_parabola<S: Scalar>(a_sq: &S) -> Conic<S> {
    Conic {
        m11: S::one() / a_sq.clone(),
        m12: S::zero(),
        m13: S::zero(),
        m22: S::zero(),
        m23: -S::one(),
        m33: S::zero(),
    }
}

/// `x^2 / aSq - y^2 / bSq + 1 = 0`: the canonical hyperbola (branches
/// opening along +y and -y, vertices at `(0, +-b)`).
pub fn canonical_hyperbola<S: Scalar>(a_sq: &S, b_sq: &S) -> Conic<S> {
    Conic {
        m11: S::one() / a_sq.clone(),
        m12: S::zero(),
        m13: S::zero(),
        m22: -S::one() / b_sq.clone(),
        m23: S::zero(),
        m33: S::one(),
    }
}

/// Circle with center `(xc, yc)` and squared radius `deltaSq`.
pub fn circle<S: Scalar>(xc: &S, yc: &S, delta_sq: &S) -> Conic<S> {
    Conic {
        m11: S::one(),
        m12: S::zero(),
        m13: -xc.clone(),
        m22: S::one(),
        m23: -yc.clone(),
        m33: xc.clone() * xc.clone() + yc.clone() * yc.clone() - delta_sq.clone(),
    }
}

// ── Coordinate changes ──────────────────────────────────────────────────────

/// Pull a conic back through the homogeneous coordinate change
/// `(x, y, 1) = S (x', y', 1)`: the result is `S^T C S`, the same point set
/// expressed in the primed coordinates. `S` is row-major.
pub fn transform_conic<S: Scalar>(c: &Conic<S>, s: &[[S; 3]; 3]) -> Conic<S> {
    let m = [
        [c.m11.clone(), c.m12.clone(), c.m13.clone()],
        [c.m12.clone(), c.m22.clone(), c.m23.clone()],
        [c.m13.clone(), c.m23.clone(), c.m33.clone()],
    ];
    // cs = C * S
    let mut cs: Vec<Vec<S>> = Vec::with_capacity(3);
    for row in &m {
        let mut out_row = Vec::with_capacity(3);
        for j in 0..3 {
            let mut acc = S::zero();
            for (k, entry) in row.iter().enumerate() {
                acc = acc + entry.clone() * s[k][j].clone();
            }
            out_row.push(acc);
        }
        cs.push(out_row);
    }
    // r = S^T * cs
    let dot = |i: usize, j: usize| -> S {
        let mut acc = S::zero();
        for k in 0..3 {
            acc = acc + s[k][i].clone() * cs[k][j].clone();
        }
        acc
    };
    Conic {
        m11: dot(0, 0),
        m12: dot(0, 1),
        m13: dot(0, 2),
        m22: dot(1, 1),
        m23: dot(1, 2),
        m33: dot(2, 2),
    }
}

/// Rigid motion (rotation by the unit direction `(cos, sin)` followed by a
/// translation) as a homogeneous matrix for [`transform_conic`]. Rational
/// unit directions like `(3/5, 4/5)` keep everything exact.
pub fn rigid_motion<S: Scalar>(cos: &S, sin: &S, tx: &S, ty: &S) -> [[S; 3]; 3] {
    [
        [cos.clone(), -sin.clone(), tx.clone()],
        [sin.clone(), cos.clone(), ty.clone()],
        [S::zero(), S::zero(), S::one()],
    ]
}

// ── Tests ───────────────────────────────────────────────────────────────────

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{rat, ApproxScalar, Rational};

    fn r(n: i64, d: i64) -> Rational {
        rat(n, d)
    }

    #[test]
    fn equation_to_matrix_and_back() {
        let c = conic_from_equation(r(1, 1), r(2, 1), r(3, 1), r(4, 1), r(5, 1), r(6, 1));
        assert_eq!(c.m11, r(1, 1));
        assert_eq!(c.m12, r(1, 1));
        assert_eq!(c.m22, r(3, 1));
        assert_eq!(c.m13, r(2, 1));
        assert_eq!(c.m23, r(5, 2));
        assert_eq!(c.m33, r(6, 1));
        let eq = c.to_equation();
        assert_eq!(
            eq,
            [r(1, 1), r(2, 1), r(3, 1), r(4, 1), r(5, 1), r(6, 1)]
        );
    }

    #[test]
    fn classifies_canonical_forms() {
        let parabola = canonical_parabola(&r(4, 1));
        assert_eq!(classify_type(&parabola).unwrap(), ConicClass::Parabola);
        let hyperbola = canonical_hyperbola(&r(4, 1), &r(1, 1));
        assert_eq!(classify_type(&hyperbola).unwrap(), ConicClass::Hyperbola);
        let disc = circle(&r(1, 2), &r(-3, 1), &r(9, 4));
        assert_eq!(classify_type(&disc).unwrap(), ConicClass::RealEllipse);
        // x^2 + y^2 + 1 = 0 has no real points.
        let imaginary = conic_from_equation(r(1, 1), r(0, 1), r(1, 1), r(0, 1), r(0, 1), r(1, 1));
        assert_eq!(
            classify_type(&imaginary).unwrap(),
            ConicClass::ImaginaryEllipse
        );
        // xy = 0: two lines.
        let lines = conic_from_equation(r(0, 1), r(1, 1), r(0, 1), r(0, 1), r(0, 1), r(0, 1));
        assert_eq!(classify_type(&lines).unwrap(), ConicClass::Degenerate);
        // x^2 - y^2 = 0: crossing lines (degenerate "hyperbola").
        let cross = conic_from_equation(r(1, 1), r(0, 1), r(-1, 1), r(0, 1), r(0, 1), r(0, 1));
        assert_eq!(classify_type(&cross).unwrap(), ConicClass::Degenerate);
    }

    #[test]
    fn classification_is_scale_invariant() {
        let c = circle(&r(1, 1), &r(2, 1), &r(1, 1));
        let scaled = c.scale(&r(-7, 3));
        assert_eq!(classify_type(&scaled).unwrap(), ConicClass::RealEllipse);
        let h = canonical_hyperbola(&r(1, 1), &r(2, 1)).scale(&r(-1, 5));
        assert_eq!(classify_type(&h).unwrap(), ConicClass::Hyperbola);
    }

    #[test]
    fn normalization_conventions() {
        // Ellipse: m11 > 0 after normalization, interior negative.
        let e = circle(&r(0, 1), &r(0, 1), &r(4, 1)).scale(&r(-2, 1));
        let en = normalize(&e).unwrap();
        assert_eq!(en.m11.sign(), Sign::Positive);
        assert_eq!(en.eval(&r(0, 1), &r(0, 1)).sign(), Sign::Negative);
        // Parabola: det < 0; canonical form already satisfies it.
        let p = canonical_parabola(&r(1, 1));
        let pn = normalize(&p).unwrap();
        assert_eq!(pn, p);
        assert_eq!(pn.det3().sign(), Sign::Negative);
        let pflip = normalize(&p.scale(&r(-1, 1))).unwrap();
        assert_eq!(pflip, p);
        // Hyperbola: det < 0; branch interior (vertex side) negative.
        let h = canonical_hyperbola(&r(1, 1), &r(1, 1));
        let hn = normalize(&h.scale(&r(-3, 1))).unwrap();
        assert_eq!(hn.det3().sign(), Sign::Negative);
        assert_eq!(hn.eval(&r(0, 1), &r(2, 1)).sign(), Sign::Negative);
        // Degenerate input errors.
        let lines = conic_from_equation(r(0, 1), r(1, 1), r(0, 1), r(0, 1), r(0, 1), r(0, 1));
        assert!(matches!(
            normalize(&lines),
            Err(ConicError::Degenerate(_))
        ));
    }

    #[test]
    fn parabola_normalization_makes_quadratic_part_psd() {
        // For any parabola with det < 0 the quadratic part is PSD (rank 1):
        // check a rotated instance. (x + 2y)^2 - (y - x) = 0.
        let c = conic_from_equation(r(1, 1), r(4, 1), r(4, 1), r(1, 1), r(-1, 1), r(0, 1));
        assert_eq!(classify_type(&c).unwrap(), ConicClass::Parabola);
        let n = normalize(&c).unwrap();
        assert_eq!(n.m11.sign(), Sign::Positive);
        assert_eq!(n.minor2().sign(), Sign::Zero);
    }

    #[test]
    fn center_of_central_conics() {
        let c = circle(&r(3, 2), &r(-5, 4), &r(1, 1));
        let (cx, cy) = c.center().unwrap();
        assert_eq!(cx, r(3, 2));
        assert_eq!(cy, r(-5, 4));
        let p = canonical_parabola(&r(1, 1));
        assert!(p.center().is_none());
    }

    #[test]
    fn float_classification_flags_indeterminacy() {
        // A parabola's zero minor cannot be certified zero in floats, so the
        // minor sign comes out Unknown and classification must say so
        // rather than guess.
        let p = canonical_parabola(&rat(1, 1)).map(|v| ApproxScalar::new(v.to_f64(), 1e-10));
        let perturbed = Conic {
            m11: ApproxScalar::new(1.0 + 1e-15, 1e-10),
            ..p.clone()
        };
        assert!(matches!(
            classify_type(&perturbed),
            Err(ConicError::IndeterminateSign(_)) | Ok(ConicClass::Parabola)
        ));
        // A clean hyperbola classifies fine in floats.
        let h = canonical_hyperbola(&rat(4, 1), &rat(1, 1)).map(|v| ApproxScalar::new(v.to_f64(), 1e-10));
        assert_eq!(classify_type(&h).unwrap(), ConicClass::Hyperbola);
    }

    #[test]
    fn eval_and_gradient() {
        let c = circle(&r(1, 1), &r(2, 1), &r(9, 1));
        // (4, 6): distance^2 from center (1,2) is 9 + 16 = 25, minus 9.
        assert_eq!(c.eval(&r(4, 1), &r(6, 1)), r(16, 1));
        let (gx, gy) = c.half_gradient(&r(4, 1), &r(6, 1));
        assert_eq!((gx, gy), (r(3, 1), r(4, 1)));
    }

    #[test]
    fn rigid_motion_moves_the_center_and_keeps_the_radius() {
        // The motion maps primed to original coordinates, so the circle's
        // center in primed coordinates is the preimage of (1, 2).
        let c = circle(&r(1, 1), &r(2, 1), &r(9, 1));
        let s = rigid_motion(&r(3, 5), &r(4, 5), &r(1, 1), &r(-1, 1));
        let moved = transform_conic(&c, &s);
        assert_eq!(classify_type(&moved).unwrap(), ConicClass::RealEllipse);
        let (cx, cy) = moved.center().unwrap();
        // Preimage of (1,2): R^T ((1,2) - t) with t = (1,-1).
        assert_eq!(cx, r(12, 5));
        assert_eq!(cy, r(9, 5));
        // m33 relation keeps the squared radius: xc^2 + yc^2 - m33 = 9.
        let radius_sq = cx.clone() * cx + cy.clone() * cy - moved.m33.clone();
        assert_eq!(radius_sq, r(9, 1));
        // Determinants are preserved by unimodular congruence.
        assert_eq!(moved.det3(), c.det3());
        assert_eq!(moved.minor2(), c.minor2());
    }
}
