//! Reduction of a general (parabola, ellipse) or (hyperbola, ellipse) pair
//! to the canonical configurations the canonical classifiers consume.
//!
//! The canonical parameters are *not* read off a computed coordinate change.
//! They are forced by pencil invariants alone, which keeps them exact:
//! scaling the ellipse to a circle multiplies the characteristic polynomial
//! by `1/T1`, the rigid alignment leaves it untouched, and rescaling the
//! parabola (by `E2`) or hyperbola (by `H5`) equation rescales the roots,
//! so the canonical cubic is `F(lambda / s) / T1` with a known positive `s`.
//! Matching coefficients with the closed canonical forms pins every
//! parameter:
//!
//! * parabola path, with `w = -L0 T > 0`: `delta^2 = -L3/T1`,
//!   `a^2 = T1 sqrt(w) / T^2`, and the circle center follows from the two
//!   middle coefficients `-L1 T / (T1 L0)` and `-L2 sqrt(w) / (T1 L0)`;
//! * hyperbola path: `a^2 = H5/H0`, `b^2 = -H5/H2`, `delta^2 = -L3/T1`,
//!   and the squared center coordinates solve a 2x2 linear system built
//!   from the rational reduced coefficients `L1/(T1 H5^2)` and
//!   `L2/(T1 H5)`.
//!
//! Everything lives in one quadratic extension (`Q(sqrt(w))` or
//! `Q(sqrt(d))`), so the downstream sign tests stay exact. The homogeneous
//! coordinate change itself is still assembled, in floating point, as a
//! diagnostic: tests check that it really maps the input pair onto the
//! canonical one up to scale.

use crate::classify_hyperbola::CanonicalHyperbolaCircle;
use crate::classify_parabola::{CanonicalParabolaCircle, ClassifyError};
use crate::conic::{classify_type, normalize, Conic, ConicClass, ConicError};
use crate::numeric::{QuadExt, Rational, Scalar, Sign};
use crate::pencil::invariants;

// ── Exact eigenvalues of a symmetric 2x2 block ──────────────────────────────

/// Eigendecomposition of a symmetric 2x2 matrix: exact eigenvalues in
/// `Q(sqrt(nu))`, `nu = (m11 - m22)^2 + 4 m12^2`, and a floating-point
/// eigenvector basis (columns, each with its first nonzero component
/// positive; for `nu = 0` the rotation is the identity).
#[derive(Clone, Debug)]
pub struct Eigen2 {
    pub b0: QuadExt,
    pub b2: QuadExt,
    pub nu: Rational,
    pub rotation: [[f64; 2]; 2],
}

pub fn eigen_2x2(m11: &Rational, m12: &Rational, m22: &Rational) -> Eigen2 {
    let diff = m11.clone() - m22.clone();
    let nu = diff.clone() * diff + Rational::from_int(4) * m12.clone() * m12.clone();
    let sqrt_nu = QuadExt::sqrt_rational(&nu).expect("nu is a sum of squares");
    let half = QuadExt::from_rational(Rational::from_int(1) / Rational::from_int(2));
    let trace = QuadExt::from_rational(m11.clone() + m22.clone());
    let b0 = (trace.clone() + sqrt_nu.clone()) * half.clone();
    let b2 = (trace - sqrt_nu) * half;
    let rotation = sym_eigenvectors_f64(m11.to_f64(), m12.to_f64(), m22.to_f64());
    Eigen2 {
        b0,
        b2,
        nu,
        rotation,
    }
}

/// Eigenvector columns of `[[a11, a12], [a12, a22]]` for the descending
/// eigenvalue order, each column's first nonzero component positive.
fn sym_eigenvectors_f64(a11: f64, a12: f64, a22: f64) -> [[f64; 2]; 2] {
    let nu = (a11 - a22) * (a11 - a22) + 4.0 * a12 * a12;
    let scale = a11.abs().max(a22.abs()).max(a12.abs()).max(1.0);
    if nu.sqrt() <= 1e-14 * scale {
        return [[1.0, 0.0], [0.0, 1.0]];
    }
    let lambda0 = (a11 + a22 + nu.sqrt()) / 2.0;
    // (a12, lambda0 - a11) and (lambda0 - a22, a12) both solve the
    // eigenvector equation; pick the longer for stability.
    let cand1 = (a12, lambda0 - a11);
    let cand2 = (lambda0 - a22, a12);
    let v = if cand1.0 * cand1.0 + cand1.1 * cand1.1
        >= cand2.0 * cand2.0 + cand2.1 * cand2.1
    {
        cand1
    } else {
        cand2
    };
    let norm = (v.0 * v.0 + v.1 * v.1).sqrt();
    let v0 = fix_sign([v.0 / norm, v.1 / norm]);
    let v1 = fix_sign([-v0[1], v0[0]]);
    [[v0[0], v1[0]], [v0[1], v1[1]]]
}

fn fix_sign(v: [f64; 2]) -> [f64; 2] {
    let lead = if v[0].abs() > 1e-12 { v[0] } else { v[1] };
    if lead < 0.0 {
        [-v[0], -v[1]]
    } else {
        v
    }
}

// ── Reduction data ──────────────────────────────────────────────────────────

/// Byproducts of a reduction: the ellipse eigen step, the path-specific
/// scale parameters, and the composed coordinate change (floating point,
/// diagnostic only; the canonical parameters never depend on it).
#[derive(Clone, Debug)]
pub struct ReductionData {
    pub b0: QuadExt,
    pub b2: QuadExt,
    pub nu: Rational,
    /// Parabola path: `E1 = T/T1`, the surviving quadratic eigenvalue.
    pub e1: Option<Rational>,
    /// Parabola path: `E2 = sqrt(-L0 T)/T`, the axis rescale.
    pub e2: Option<QuadExt>,
    /// Hyperbola path: `H0 = (T + sqrt(d))/(2 T1) > 0`.
    pub h0: Option<QuadExt>,
    /// Hyperbola path: `H2 = (T - sqrt(d))/(2 T1) < 0`.
    pub h2: Option<QuadExt>,
    /// Hyperbola path: `H5 = L0/T2 > 0`.
    pub h5: Option<Rational>,
    /// Homogeneous change `(x, y, 1) = transform (x', y', 1)` mapping the
    /// canonical configuration back onto the input pair, up to equation
    /// scale. Row-major.
    pub transform: [[f64; 3]; 3],
}

fn role_error(expected: &'static str, found: ConicClass) -> ClassifyError {
    ClassifyError::RoleMismatch { expected, found }
}

fn checked_normalize(
    c: &Conic<Rational>,
    want: ConicClass,
    expected: &'static str,
) -> Result<Conic<Rational>, ClassifyError> {
    let class = match classify_type(c) {
        Ok(class) => class,
        Err(ConicError::Degenerate(_)) | Err(ConicError::IndeterminateSign(_)) => {
            return Err(role_error(expected, ConicClass::Degenerate))
        }
    };
    if class != want {
        return Err(role_error(expected, class));
    }
    normalize(c).map_err(|_| role_error(expected, ConicClass::Degenerate))
}

// ── Parabola path ───────────────────────────────────────────────────────────

/// Reduce a (parabola, ellipse) pair to the canonical parabola/circle
/// configuration. Accepts arbitrary equation scales.
pub fn reduce_parabola_pair(
    n: &Conic<Rational>,
    m: &Conic<Rational>,
) -> Result<(CanonicalParabolaCircle<QuadExt>, ReductionData), ClassifyError> {
    let n = checked_normalize(n, ConicClass::Parabola, "parabola")?;
    let m = checked_normalize(m, ConicClass::RealEllipse, "real ellipse")?;
    let inv = invariants(&n, &m)
        .map_err(|_| role_error("parabola", ConicClass::Degenerate))?;

    let w = -(inv.l0.clone() * inv.t.clone());
    debug_assert_eq!(w.sign(), Sign::Positive, "normalized roles force w > 0");
    let sqrt_w = QuadExt::sqrt_rational(&w).expect("w > 0");
    let two = QuadExt::from_int(2);

    let a_sq =
        sqrt_w.clone() * QuadExt::from_rational(inv.t1.clone() / (inv.t.clone() * inv.t.clone()));
    let delta_sq = -(inv.l3.clone() / inv.t1.clone());
    let c1 = -(inv.l1.clone() * inv.t.clone() / (inv.t1.clone() * inv.l0.clone()));
    let c2 = -(QuadExt::from_rational(inv.l2.clone()) * sqrt_w.clone()
        / QuadExt::from_rational(inv.t1.clone() * inv.l0.clone()));
    let yc = -(a_sq.clone()
        * QuadExt::from_rational(c1 + Rational::one())
        / two.clone());
    let xc_sq = c2 * a_sq.clone()
        + two * a_sq.clone() * yc.clone()
        + QuadExt::from_rational(delta_sq.clone());
    debug_assert_ne!(Scalar::sign(&xc_sq), Sign::Negative);

    let canonical = CanonicalParabolaCircle {
        a_sq,
        xc_sq,
        yc,
        delta_sq: QuadExt::from_rational(delta_sq),
    };

    let eig = eigen_2x2(&m.m11, &m.m12, &m.m22);
    let transform = parabola_transform(&n, &eig);
    let data = ReductionData {
        b0: eig.b0,
        b2: eig.b2,
        nu: eig.nu,
        e1: Some(inv.t.clone() / inv.t1.clone()),
        e2: Some(sqrt_w / QuadExt::from_rational(inv.t.clone())),
        h0: None,
        h2: None,
        h5: None,
        transform,
    };
    Ok((canonical, data))
}

// ── Hyperbola path ──────────────────────────────────────────────────────────

/// Reduce a (hyperbola, ellipse) pair to the canonical hyperbola/circle
/// configuration. Accepts arbitrary equation scales.
pub fn reduce_hyperbola_pair(
    nh: &Conic<Rational>,
    m: &Conic<Rational>,
) -> Result<(CanonicalHyperbolaCircle<QuadExt>, ReductionData), ClassifyError> {
    let nh = checked_normalize(nh, ConicClass::Hyperbola, "hyperbola")?;
    let m = checked_normalize(m, ConicClass::RealEllipse, "real ellipse")?;
    let inv = invariants(&nh, &m)
        .map_err(|_| role_error("hyperbola", ConicClass::Degenerate))?;

    let d = inv.t.clone() * inv.t.clone()
        - Rational::from_int(4) * inv.t1.clone() * inv.t2.clone();
    debug_assert_eq!(d.sign(), Sign::Positive, "normalized roles force d > 0");
    let sqrt_d = QuadExt::sqrt_rational(&d).expect("d > 0");
    let two_t1 = QuadExt::from_rational(inv.t1.clone() + inv.t1.clone());
    let t_lift = QuadExt::from_rational(inv.t.clone());
    let h0 = (t_lift.clone() + sqrt_d.clone()) / two_t1.clone();
    let h2 = (t_lift - sqrt_d) / two_t1;
    let h5 = inv.l0.clone() / inv.t2.clone();
    let h5_lift = QuadExt::from_rational(h5.clone());

    let a_sq = h5_lift.clone() / h0.clone();
    let b_sq = -(h5_lift / h2.clone());
    let delta_sq = -(inv.l3.clone() / inv.t1.clone());
    let delta_lift = QuadExt::from_rational(delta_sq.clone());

    // Reduced middle coefficients (both rational since H5 is).
    let a2r = inv.l1.clone() / (inv.t1.clone() * h5.clone() * h5.clone());
    let a1r = inv.l2.clone() / (inv.t1.clone() * h5.clone());

    // Solve for the squared center: the quadratic coefficient gives
    // xc^2 + yc^2, the linear one gives b^2 xc^2 - a^2 yc^2.
    let ab = a_sq.clone() * b_sq.clone();
    let s_sum = -(QuadExt::from_rational(a2r) * ab.clone()) - a_sq.clone()
        + b_sq.clone()
        + delta_lift.clone();
    let dv = QuadExt::from_rational(a1r) * ab.clone() - ab
        - a_sq.clone() * delta_lift.clone()
        + b_sq.clone() * delta_lift.clone();
    let denom = a_sq.clone() + b_sq.clone();
    let xc_sq = (a_sq.clone() * s_sum.clone() + dv.clone()) / denom.clone();
    let yc_sq = (b_sq.clone() * s_sum - dv) / denom;
    debug_assert_ne!(Scalar::sign(&xc_sq), Sign::Negative);
    debug_assert_ne!(Scalar::sign(&yc_sq), Sign::Negative);

    let canonical = CanonicalHyperbolaCircle {
        a_sq,
        b_sq,
        xc_sq,
        yc_sq,
        delta_sq: delta_lift,
    };

    let eig = eigen_2x2(&m.m11, &m.m12, &m.m22);
    let transform = hyperbola_transform(&nh, &eig);
    let data = ReductionData {
        b0: eig.b0,
        b2: eig.b2,
        nu: eig.nu,
        e1: None,
        e2: None,
        h0: Some(h0),
        h2: Some(h2),
        h5: Some(h5),
        transform,
    };
    Ok((canonical, data))
}

// ── Transform assembly (floating point, diagnostic) ─────────────────────────

fn mat3_mul(a: &[[f64; 3]; 3], b: &[[f64; 3]; 3]) -> [[f64; 3]; 3] {
    let mut out = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

fn congruence(c: &[[f64; 3]; 3], s: &[[f64; 3]; 3]) -> [[f64; 3]; 3] {
    let mut st = [[0.0; 3]; 3];
    for (i, row) in s.iter().enumerate() {
        for j in 0..3 {
            st[j][i] = row[j];
        }
    }
    mat3_mul(&st, &mat3_mul(c, s))
}

fn conic_to_f64(c: &Conic<Rational>) -> [[f64; 3]; 3] {
    let m = c.map(|v| v.to_f64());
    [
        [m.m11, m.m12, m.m13],
        [m.m12, m.m22, m.m23],
        [m.m13, m.m23, m.m33],
    ]
}

/// Embed the ellipse eigen step as the 3x3 change that turns the ellipse
/// into a circle: rotate to principal axes, then divide each axis by the
/// square root of its eigenvalue.
fn circle_scaling(eig: &Eigen2) -> [[f64; 3]; 3] {
    let s0 = 1.0 / eig.b0.to_f64().sqrt();
    let s2 = 1.0 / eig.b2.to_f64().sqrt();
    let r = &eig.rotation;
    [
        [r[0][0] * s0, r[0][1] * s2, 0.0],
        [r[1][0] * s0, r[1][1] * s2, 0.0],
        [0.0, 0.0, 1.0],
    ]
}

/// After the circle scaling, rigidly align the parabola: rotate its axis
/// direction onto y, orient it to open upward, and translate the vertex to
/// the origin.
fn parabola_transform(n: &Conic<Rational>, eig: &Eigen2) -> [[f64; 3]; 3] {
    let s1 = circle_scaling(eig);
    let n1 = congruence(&conic_to_f64(n), &s1);
    // The quadratic part is rank 1 PSD: its nonzero eigenvector carries the
    // x'^2 term.
    let rot2 = sym_eigenvectors_f64(n1[0][0], n1[0][1], n1[1][1]);
    let mut q = [
        [rot2[0][0], rot2[0][1], 0.0],
        [rot2[1][0], rot2[1][1], 0.0],
        [0.0, 0.0, 1.0],
    ];
    let mut n2 = congruence(&n1, &q);
    // Open toward +y: the canonical linear term is -2y.
    if n2[1][2] > 0.0 {
        for row in &mut q {
            row[1] = -row[1];
        }
        n2 = congruence(&n1, &q);
    }
    let e1 = n2[0][0];
    let ux = -n2[0][2] / e1;
    let c_after = n2[2][2] + 2.0 * n2[0][2] * ux + e1 * ux * ux;
    let ty = -c_after / (2.0 * n2[1][2]);
    let translate = [[1.0, 0.0, ux], [0.0, 1.0, ty], [0.0, 0.0, 1.0]];
    mat3_mul(&mat3_mul(&s1, &q), &translate)
}

/// After the circle scaling, rigidly align the hyperbola: principal axes to
/// the coordinate axes (positive eigenvalue to x), center to the origin.
fn hyperbola_transform(nh: &Conic<Rational>, eig: &Eigen2) -> [[f64; 3]; 3] {
    let s1 = circle_scaling(eig);
    let n1 = congruence(&conic_to_f64(nh), &s1);
    let rot2 = sym_eigenvectors_f64(n1[0][0], n1[0][1], n1[1][1]);
    let q = [
        [rot2[0][0], rot2[0][1], 0.0],
        [rot2[1][0], rot2[1][1], 0.0],
        [0.0, 0.0, 1.0],
    ];
    let n2 = congruence(&n1, &q);
    let ux = -n2[0][2] / n2[0][0];
    let uy = -n2[1][2] / n2[1][1];
    let translate = [[1.0, 0.0, ux], [0.0, 1.0, uy], [0.0, 0.0, 1.0]];
    mat3_mul(&mat3_mul(&s1, &q), &translate)
}

// ── Tests ───────────────────────────────────────────────────────────────────

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify_hyperbola;
    use crate::classify_parabola;
    use crate::conic::{
        canonical_hyperbola, canonical_parabola, circle, rigid_motion, transform_conic,
    };
    use crate::numeric::rat;
    use crate::pencil::char_poly;
    use crate::witness::{hyperbola_witnesses, parabola_witnesses};

    fn rational(q: &QuadExt) -> Rational {
        match q.as_rational() {
            Some(r) => r.clone(),
            None => panic!("expected a rational value, got {q}"),
        }
    }

    fn parabola_f64(a_sq: f64) -> [[f64; 3]; 3] {
        [[1.0 / a_sq, 0.0, 0.0], [0.0, 0.0, -1.0], [0.0, -1.0, 0.0]]
    }

    fn hyperbola_f64(a_sq: f64, b_sq: f64) -> [[f64; 3]; 3] {
        [
            [1.0 / a_sq, 0.0, 0.0],
            [0.0, -1.0 / b_sq, 0.0],
            [0.0, 0.0, 1.0],
        ]
    }

    fn circle_f64(xc: f64, yc: f64, delta_sq: f64) -> [[f64; 3]; 3] {
        [
            [1.0, 0.0, -xc],
            [0.0, 1.0, -yc],
            [-xc, -yc, xc * xc + yc * yc - delta_sq],
        ]
    }

    #[test]
    fn eigen_examples() {
        let e = eigen_2x2(&rat(2, 1), &rat(0, 1), &rat(1, 1));
        assert_eq!(rational(&e.b0), rat(2, 1));
        assert_eq!(rational(&e.b2), rat(1, 1));
        assert_eq!(e.rotation, [[1.0, 0.0], [0.0, 1.0]]);

        let e = eigen_2x2(&rat(1, 1), &rat(1, 1), &rat(1, 1));
        assert_eq!(rational(&e.b0), rat(2, 1));
        assert_eq!(rational(&e.b2), rat(0, 1));
        assert_eq!(e.nu, rat(4, 1));

        let e = eigen_2x2(&rat(0, 1), &rat(1, 1), &rat(0, 1));
        assert_eq!(rational(&e.b0), rat(1, 1));
        assert_eq!(rational(&e.b2), rat(-1, 1));
        let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
        for (got, want) in e.rotation.iter().flatten().zip(
            [[inv_sqrt2, inv_sqrt2], [inv_sqrt2, -inv_sqrt2]]
                .iter()
                .flatten(),
        ) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn eigenvalue_product_is_the_block_determinant() {
        for w in hyperbola_witnesses() {
            let (_, m) = w.conic_pair();
            let m = normalize(&m).unwrap();
            let e = eigen_2x2(&m.m11, &m.m12, &m.m22);
            let product = e.b0.clone() * e.b2.clone();
            assert_eq!(rational(&product), m.minor2(), "witness {}", w.name);
        }
    }

    #[test]
    fn already_canonical_parabola_reduces_to_itself() {
        let n = canonical_parabola(&rat(1, 1));
        let m = circle(&rat(0, 1), &rat(0, 1), &rat(1, 1));
        let (canon, data) = reduce_parabola_pair(&n, &m).unwrap();
        assert_eq!(rational(&canon.a_sq), rat(1, 1));
        assert_eq!(rational(&canon.xc_sq), rat(0, 1));
        assert_eq!(rational(&canon.yc), rat(0, 1));
        assert_eq!(rational(&canon.delta_sq), rat(1, 1));
        assert_eq!(data.e1, Some(rat(1, 1)));
        assert_eq!(rational(data.e2.as_ref().unwrap()), rat(1, 1));
        for (i, row) in data.transform.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((v - want).abs() < 1e-12, "transform {:?}", data.transform);
            }
        }
    }

    #[test]
    fn already_canonical_hyperbola_reduces_to_itself() {
        // Semi-axes a = 2, b = 1 against the unit circle.
        let nh = canonical_hyperbola(&rat(4, 1), &rat(1, 1));
        let m = circle(&rat(0, 1), &rat(0, 1), &rat(1, 1));
        let (canon, data) = reduce_hyperbola_pair(&nh, &m).unwrap();
        assert_eq!(rational(&canon.a_sq), rat(4, 1));
        assert_eq!(rational(&canon.b_sq), rat(1, 1));
        assert_eq!(rational(&canon.xc_sq), rat(0, 1));
        assert_eq!(rational(&canon.yc_sq), rat(0, 1));
        assert_eq!(rational(&canon.delta_sq), rat(1, 1));
        assert_eq!(rational(data.h0.as_ref().unwrap()), rat(1, 4));
        assert_eq!(rational(data.h2.as_ref().unwrap()), rat(-1, 1));
        assert_eq!(data.h5, Some(rat(1, 1)));
    }

    #[test]
    fn witnesses_reduce_to_their_own_parameters() {
        for w in parabola_witnesses() {
            let (n, m) = w.conic_pair();
            let (canon, _) = reduce_parabola_pair(&n, &m).unwrap();
            assert_eq!(
                rational(&canon.a_sq),
                rat(w.a_sq.0, w.a_sq.1),
                "witness {}",
                w.name
            );
            assert_eq!(
                rational(&canon.yc),
                rat(w.yc.0, w.yc.1),
                "witness {}",
                w.name
            );
            let xc = rat(w.xc.0, w.xc.1);
            assert_eq!(rational(&canon.xc_sq), xc.clone() * xc, "witness {}", w.name);
            assert_eq!(
                rational(&canon.delta_sq),
                rat(w.delta_sq.0, w.delta_sq.1),
                "witness {}",
                w.name
            );
        }
        for w in hyperbola_witnesses() {
            let (nh, m) = w.conic_pair();
            let (canon, _) = reduce_hyperbola_pair(&nh, &m).unwrap();
            assert_eq!(
                rational(&canon.a_sq),
                rat(w.a_sq.0, w.a_sq.1),
                "witness {}",
                w.name
            );
            assert_eq!(
                rational(&canon.b_sq),
                rat(w.b_sq.0, w.b_sq.1),
                "witness {}",
                w.name
            );
            let xc = rat(w.xc.0, w.xc.1);
            let yc = rat(w.yc.0, w.yc.1);
            assert_eq!(rational(&canon.xc_sq), xc.clone() * xc, "witness {}", w.name);
            assert_eq!(rational(&canon.yc_sq), yc.clone() * yc, "witness {}", w.name);
        }
    }

    #[test]
    fn reduction_is_rigid_motion_and_scale_invariant() {
        // Rescaling the parabola or hyperbola equation (any nonzero factor)
        // and flipping the ellipse equation's sign leave the canonical
        // parameters untouched. A positive rescale of the ellipse equation
        // does not: it moves the configuration by a similarity, because the
        // "ellipse to circle" step normalizes the quadratic block exactly.
        let motion = rigid_motion(&rat(3, 5), &rat(4, 5), &rat(-2, 1), &rat(1, 2));
        for w in parabola_witnesses() {
            let (n, m) = w.conic_pair();
            let n2 = transform_conic(&n, &motion).scale(&rat(5, 3));
            let m2 = transform_conic(&m, &motion).scale(&rat(-1, 1));
            let (canon, _) = reduce_parabola_pair(&n2, &m2).unwrap();
            let (canon_ref, _) = reduce_parabola_pair(&n, &m).unwrap();
            assert_eq!(canon, canon_ref, "witness {}", w.name);
        }
        for w in hyperbola_witnesses() {
            let (nh, m) = w.conic_pair();
            let nh2 = transform_conic(&nh, &motion).scale(&rat(-2, 9));
            let m2 = transform_conic(&m, &motion).scale(&rat(-1, 1));
            let (canon, _) = reduce_hyperbola_pair(&nh2, &m2).unwrap();
            let (canon_ref, _) = reduce_hyperbola_pair(&nh, &m).unwrap();
            assert_eq!(canon, canon_ref, "witness {}", w.name);
        }
    }

    #[test]
    fn ellipse_rescale_moves_the_configuration_by_a_similarity() {
        let n = canonical_parabola(&rat(1, 1));
        let m = circle(&rat(0, 1), &rat(0, 1), &rat(1, 1));
        let (canon, _) = reduce_parabola_pair(&n, &m.scale(&rat(4, 1))).unwrap();
        // Scaling the circle equation by 4 halves the normalizing map, so
        // the configuration doubles: a^2 = 2, radius 2.
        assert_eq!(rational(&canon.a_sq), rat(2, 1));
        assert_eq!(rational(&canon.delta_sq), rat(4, 1));
        assert_eq!(rational(&canon.xc_sq), rat(0, 1));
        assert_eq!(rational(&canon.yc), rat(0, 1));
    }

    #[test]
    fn reduced_pairs_classify_like_the_originals() {
        // The canonical cubic of the reduced configuration is F(lambda/s)/T1
        // for positive s, so sign patterns and the classification outcome
        // must survive the round trip, including from rotated inputs.
        let motion = rigid_motion(&rat(5, 13), &rat(12, 13), &rat(1, 1), &rat(-3, 1));
        for w in parabola_witnesses() {
            let (n, m) = w.conic_pair();
            let n = transform_conic(&n, &motion);
            let m = transform_conic(&m, &motion);
            let (canon, _) = reduce_parabola_pair(&n, &m).unwrap();
            let got = classify_parabola::classify_canonical(&canon).unwrap();
            assert_eq!(got, w.expected, "witness {}", w.name);

            let f_orig = char_poly(&normalize(&n).unwrap(), &normalize(&m).unwrap());
            let f_reduced = classify_parabola::canonical_cubic(&canon);
            assert_eq!(
                f_orig.coefficient_signs(),
                f_reduced.coefficient_signs(),
                "witness {}",
                w.name
            );
        }
        for w in hyperbola_witnesses() {
            let (nh, m) = w.conic_pair();
            let nh = transform_conic(&nh, &motion);
            let m = transform_conic(&m, &motion);
            let (canon, _) = reduce_hyperbola_pair(&nh, &m).unwrap();
            let got = classify_hyperbola::classify_canonical(&canon).unwrap();
            assert_eq!(got, w.expected, "witness {}", w.name);

            let f_orig = char_poly(&normalize(&nh).unwrap(), &normalize(&m).unwrap());
            let f_reduced = classify_hyperbola::canonical_cubic(&canon);
            assert_eq!(
                f_orig.coefficient_signs(),
                f_reduced.coefficient_signs(),
                "witness {}",
                w.name
            );
        }
    }

    /// Check that `transform` really maps the canonical configuration onto
    /// the input pair up to equation scale, numerically.
    fn assert_transform_consistent(
        input: &Conic<Rational>,
        canonical_f64: &[[f64; 3]; 3],
        transform: &[[f64; 3]; 3],
        label: &str,
    ) {
        let moved = congruence(&conic_to_f64(&normalize(input).unwrap()), transform);
        // Proportionality: find the largest canonical entry and scale by it.
        let mut kappa = 0.0_f64;
        let mut best = 0.0_f64;
        for i in 0..3 {
            for j in 0..3 {
                if canonical_f64[i][j].abs() > best {
                    best = canonical_f64[i][j].abs();
                    kappa = moved[i][j] / canonical_f64[i][j];
                }
            }
        }
        let scale: f64 = moved.iter().flatten().map(|v| v.abs()).sum::<f64>() + 1.0;
        for i in 0..3 {
            for j in 0..3 {
                let want = kappa * canonical_f64[i][j];
                assert!(
                    (moved[i][j] - want).abs() <= 1e-7 * scale,
                    "{label}: transform mismatch at ({i},{j}): {} vs {}",
                    moved[i][j],
                    want
                );
            }
        }
    }

    #[test]
    fn transforms_map_inputs_onto_canonical_configurations() {
        let motion = rigid_motion(&rat(3, 5), &rat(4, 5), &rat(-2, 1), &rat(1, 2));
        for w in parabola_witnesses() {
            let (n, m) = w.conic_pair();
            let n = transform_conic(&n, &motion);
            let m = transform_conic(&m, &motion);
            let (canon, data) = reduce_parabola_pair(&n, &m).unwrap();

            let n_c = parabola_f64(Scalar::to_f64(&canon.a_sq));
            assert_transform_consistent(&n, &n_c, &data.transform, w.name);

            // The circle: the x-reflection is a symmetry of the canonical
            // parabola, so allow either sign of xc.
            let delta = Scalar::to_f64(&canon.delta_sq);
            let yc = Scalar::to_f64(&canon.yc);
            let xc = Scalar::to_f64(&canon.xc_sq).max(0.0).sqrt();
            let moved = congruence(&conic_to_f64(&normalize(&m).unwrap()), &data.transform);
            let scale: f64 = moved.iter().flatten().map(|v| v.abs()).sum::<f64>() + 1.0;
            let ok = [xc, -xc].iter().any(|&x| {
                let m_c = circle_f64(x, yc, delta);
                let kappa = moved[0][0] / m_c[0][0];
                (0..3).all(|i| {
                    (0..3).all(|j| (moved[i][j] - kappa * m_c[i][j]).abs() <= 1e-7 * scale)
                })
            });
            assert!(ok, "witness {}: circle transform mismatch", w.name);
        }
        for w in hyperbola_witnesses() {
            let (nh, m) = w.conic_pair();
            let nh = transform_conic(&nh, &motion);
            let m = transform_conic(&m, &motion);
            let (canon, data) = reduce_hyperbola_pair(&nh, &m).unwrap();

            let n_c = hyperbola_f64(Scalar::to_f64(&canon.a_sq), Scalar::to_f64(&canon.b_sq));
            assert_transform_consistent(&nh, &n_c, &data.transform, w.name);

            // Both axis reflections are symmetries of the canonical
            // hyperbola: allow all four center sign choices.
            let delta = Scalar::to_f64(&canon.delta_sq);
            let xc = Scalar::to_f64(&canon.xc_sq).max(0.0).sqrt();
            let yc = Scalar::to_f64(&canon.yc_sq).max(0.0).sqrt();
            let moved = congruence(&conic_to_f64(&normalize(&m).unwrap()), &data.transform);
            let scale: f64 = moved.iter().flatten().map(|v| v.abs()).sum::<f64>() + 1.0;
            let ok = [(xc, yc), (xc, -yc), (-xc, yc), (-xc, -yc)]
                .iter()
                .any(|&(x, y)| {
                    let m_c = circle_f64(x, y, delta);
                    let kappa = moved[0][0] / m_c[0][0];
                    (0..3).all(|i| {
                        (0..3)
                            .all(|j| (moved[i][j] - kappa * m_c[i][j]).abs() <= 1e-7 * scale)
                    })
                });
            assert!(ok, "witness {}: circle transform mismatch", w.name);
        }
    }

    #[test]
    fn role_mismatch_is_reported() {
        let m = circle(&rat(0, 1), &rat(0, 1), &rat(1, 1));
        assert!(matches!(
            reduce_parabola_pair(&m, &m),
            Err(ClassifyError::RoleMismatch { .. })
        ));
        let nh = canonical_hyperbola(&rat(1, 1), &rat(1, 1));
        assert!(matches!(
            reduce_hyperbola_pair(&nh, &nh),
            Err(ClassifyError::RoleMismatch { .. })
        ));
    }
}
