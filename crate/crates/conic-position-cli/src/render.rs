//! SVG rendering of a classified pair.
//!
//! Curves are sampled as polylines in each conic's own eigenframe: the
//! ellipse by angle, the parabola by abscissa along its axis frame, the
//! hyperbola per branch by a hyperbolic parameter. The viewport is the
//! ellipse's bounding box expanded 3x about its center, which keeps the
//! contact region in view regardless of how far the other conic extends.
//! Rendering works in plain floating point; it is a picture, not a proof.

use std::fmt::Write as _;

use conic_position::numeric::Scalar;
use conic_position::{Conic, ConicClass, Rational};

use crate::error::CliError;

const CURVE_SAMPLES: usize = 512;
const SVG_WIDTH: f64 = 800.0;

// ── Float view of a conic ───────────────────────────────────────────────────

#[derive(Clone, Copy)]
struct Mat {
    a11: f64,
    a12: f64,
    a13: f64,
    a22: f64,
    a23: f64,
    a33: f64,
}

impl Mat {
    fn of(c: &Conic<Rational>) -> Mat {
        Mat {
            a11: Scalar::to_f64(&c.m11),
            a12: Scalar::to_f64(&c.m12),
            a13: Scalar::to_f64(&c.m13),
            a22: Scalar::to_f64(&c.m22),
            a23: Scalar::to_f64(&c.m23),
            a33: Scalar::to_f64(&c.m33),
        }
    }

    fn eval(&self, x: f64, y: f64) -> f64 {
        self.a11 * x * x
            + 2.0 * self.a12 * x * y
            + self.a22 * y * y
            + 2.0 * self.a13 * x
            + 2.0 * self.a23 * y
            + self.a33
    }

    fn quad(&self, vx: f64, vy: f64) -> f64 {
        self.a11 * vx * vx + 2.0 * self.a12 * vx * vy + self.a22 * vy * vy
    }

    /// Center of the quadratic part, where the gradient vanishes.
    fn center(&self) -> Option<(f64, f64)> {
        let det = self.a11 * self.a22 - self.a12 * self.a12;
        if det.abs() < f64::EPSILON {
            return None;
        }
        Some((
            (-self.a13 * self.a22 + self.a23 * self.a12) / det,
            (-self.a11 * self.a23 + self.a12 * self.a13) / det,
        ))
    }

    /// Rotation angle and eigenvalues of the 2x2 block; the direction
    /// `(cos theta, sin theta)` carries the first eigenvalue.
    fn eigenframe(&self) -> (f64, f64, f64) {
        let theta = 0.5 * (2.0 * self.a12).atan2(self.a11 - self.a22);
        let mean = 0.5 * (self.a11 + self.a22);
        let r = (0.25 * (self.a11 - self.a22).powi(2) + self.a12 * self.a12).sqrt();
        (theta, mean + r, mean - r)
    }
}

// ── Curve sampling ──────────────────────────────────────────────────────────

fn ellipse_points(m: &Mat) -> Vec<(f64, f64)> {
    let (cx, cy) = m.center().unwrap_or((0.0, 0.0));
    let level = -m.eval(cx, cy);
    let (theta, l1, l2) = m.eigenframe();
    let (s1, s2) = ((level / l1).abs().sqrt(), (level / l2).abs().sqrt());
    let (e1, e2) = ((theta.cos(), theta.sin()), (-theta.sin(), theta.cos()));
    (0..=CURVE_SAMPLES)
        .map(|i| {
            let phi = 2.0 * std::f64::consts::PI * i as f64 / CURVE_SAMPLES as f64;
            let (u, v) = (s1 * phi.cos(), s2 * phi.sin());
            (cx + u * e1.0 + v * e2.0, cy + u * e1.1 + v * e2.1)
        })
        .collect()
}

/// Axis-aligned bounding box of a point list.
fn bbox(points: &[(f64, f64)]) -> (f64, f64, f64, f64) {
    let mut b = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for &(x, y) in points {
        b.0 = b.0.min(x);
        b.1 = b.1.min(y);
        b.2 = b.2.max(x);
        b.3 = b.3.max(y);
    }
    b
}

/// Coefficients of the conic expressed in the rotated frame `x = R u`.
struct Frame {
    e1: (f64, f64),
    e2: (f64, f64),
    b11: f64,
    b22: f64,
    b13: f64,
    b23: f64,
    b33: f64,
}

impl Frame {
    fn of(m: &Mat) -> Frame {
        let (theta, _, _) = m.eigenframe();
        let e1 = (theta.cos(), theta.sin());
        let e2 = (-theta.sin(), theta.cos());
        Frame {
            e1,
            e2,
            b11: m.quad(e1.0, e1.1),
            b22: m.quad(e2.0, e2.1),
            b13: m.a13 * e1.0 + m.a23 * e1.1,
            b23: m.a13 * e2.0 + m.a23 * e2.1,
            b33: m.a33,
        }
    }

    /// Swap the two frame axes.
    fn swapped(self) -> Frame {
        Frame {
            e1: self.e2,
            e2: self.e1,
            b11: self.b22,
            b22: self.b11,
            b13: self.b23,
            b23: self.b13,
            b33: self.b33,
        }
    }

    fn to_world(&self, u: f64, v: f64) -> (f64, f64) {
        (u * self.e1.0 + v * self.e2.0, u * self.e1.1 + v * self.e2.1)
    }

    /// Frame coordinates of a world point.
    fn from_world(&self, x: f64, y: f64) -> (f64, f64) {
        (x * self.e1.0 + y * self.e1.1, x * self.e2.0 + y * self.e2.1)
    }
}

/// Frame abscissa range that covers the viewport, padded.
fn frame_u_range(frame: &Frame, viewport: (f64, f64, f64, f64)) -> (f64, f64) {
    let corners = [
        (viewport.0, viewport.1),
        (viewport.0, viewport.3),
        (viewport.2, viewport.1),
        (viewport.2, viewport.3),
    ];
    let mut lo = f64::MAX;
    let mut hi = f64::MIN;
    for (x, y) in corners {
        let (u, _) = frame.from_world(x, y);
        lo = lo.min(u);
        hi = hi.max(u);
    }
    let pad = 0.05 * (hi - lo);
    (lo - pad, hi + pad)
}

/// One polyline: the parabola `v = -(b11 u^2 + 2 b13 u + b33) / (2 b23)`,
/// sampled over the viewport's abscissa range in the axis frame.
fn parabola_polylines(m: &Mat, viewport: (f64, f64, f64, f64)) -> Vec<Vec<(f64, f64)>> {
    let mut frame = Frame::of(m);
    if frame.b11.abs() < frame.b22.abs() {
        frame = frame.swapped();
    }
    if frame.b23.abs() < f64::EPSILON {
        return Vec::new();
    }
    let (lo, hi) = frame_u_range(&frame, viewport);
    let points = (0..=CURVE_SAMPLES)
        .map(|i| {
            let u = lo + (hi - lo) * i as f64 / CURVE_SAMPLES as f64;
            let v = -(frame.b11 * u * u + 2.0 * frame.b13 * u + frame.b33) / (2.0 * frame.b23);
            frame.to_world(u, v)
        })
        .filter(|(x, y)| x.is_finite() && y.is_finite())
        .collect();
    vec![points]
}

/// Two polylines, one per hyperbola branch, parameterized by `cosh`/`sinh`.
fn hyperbola_polylines(m: &Mat, viewport: (f64, f64, f64, f64)) -> Vec<Vec<(f64, f64)>> {
    let mut frame = Frame::of(m);
    // Branches open along the axis whose eigenvalue has the sign of the
    // level constant.
    let u0 = -frame.b13 / frame.b11;
    let v0 = -frame.b23 / frame.b22;
    let k = frame.b11 * u0 * u0 + frame.b22 * v0 * v0 - frame.b33;
    if k / frame.b11 < 0.0 {
        frame = frame.swapped();
    }
    let u0 = -frame.b13 / frame.b11;
    let v0 = -frame.b23 / frame.b22;
    let k = frame.b11 * u0 * u0 + frame.b22 * v0 * v0 - frame.b33;
    let semi_u = (k / frame.b11).abs().sqrt();
    let semi_v = (k / frame.b22).abs().sqrt();
    if !(semi_u.is_finite() && semi_v.is_finite()) || semi_u == 0.0 || semi_v == 0.0 {
        return Vec::new();
    }

    let extent = (viewport.2 - viewport.0).hypot(viewport.3 - viewport.1)
        + (u0.abs() + v0.abs());
    let reach_u = (2.0 * extent / semi_u).max(1.0);
    let reach_v = 2.0 * extent / semi_v;
    let s_max = reach_u.acosh().max(reach_v.asinh()).clamp(1.0, 15.0);

    let mut branches = Vec::new();
    for side in [-1.0, 1.0] {
        let points = (0..=CURVE_SAMPLES)
            .map(|i| {
                let s = -s_max + 2.0 * s_max * i as f64 / CURVE_SAMPLES as f64;
                let u = u0 + side * semi_u * s.cosh();
                let v = v0 + semi_v * s.sinh();
                frame.to_world(u, v)
            })
            .filter(|(x, y)| x.is_finite() && y.is_finite())
            .collect();
        branches.push(points);
    }
    branches
}

// ── SVG assembly ────────────────────────────────────────────────────────────

fn polyline(out: &mut String, points: &[(f64, f64)], to_px: &impl Fn(f64, f64) -> (f64, f64), color: &str, width: f64) {
    if points.len() < 2 {
        return;
    }
    let coords: Vec<String> = points
        .iter()
        .map(|&(x, y)| {
            let (px, py) = to_px(x, y);
            format!("{px:.2},{py:.2}")
        })
        .collect();
    writeln!(
        out,
        r#"  <polyline points="{}" fill="none" stroke="{color}" stroke-width="{width:.2}" />"#,
        coords.join(" ")
    )
    .unwrap();
}

/// Render the classified pair to an SVG document.
pub fn render_to_string(
    n: &Conic<Rational>,
    n_class: ConicClass,
    m: &Conic<Rational>,
    label: &str,
) -> String {
    let ellipse = Mat::of(m);
    let other = Mat::of(n);

    let ellipse_pts = ellipse_points(&ellipse);
    let (bx0, by0, bx1, by1) = bbox(&ellipse_pts);
    let (cx, cy) = (0.5 * (bx0 + bx1), 0.5 * (by0 + by1));
    let (hw, hh) = (
        (1.5 * (bx1 - bx0)).max(f64::MIN_POSITIVE),
        (1.5 * (by1 - by0)).max(f64::MIN_POSITIVE),
    );
    let viewport = (cx - hw, cy - hh, cx + hw, cy + hh);

    let other_polylines = match n_class {
        ConicClass::Parabola => parabola_polylines(&other, viewport),
        ConicClass::Hyperbola => hyperbola_polylines(&other, viewport),
        _ => Vec::new(),
    };

    let scale = SVG_WIDTH / (2.0 * hw);
    let height = 2.0 * hh * scale;
    let to_px = |x: f64, y: f64| ((x - viewport.0) * scale, (viewport.3 - y) * scale);
    let stroke = SVG_WIDTH / 400.0;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_WIDTH:.0}" height="{height:.0}" viewBox="0 0 {SVG_WIDTH:.0} {height:.0}">"#
    )
    .unwrap();
    writeln!(
        out,
        r#"  <rect width="100%" height="100%" fill="white" />"#
    )
    .unwrap();
    polyline(&mut out, &ellipse_pts, &to_px, "#1f6fb4", stroke);
    for branch in &other_polylines {
        polyline(&mut out, branch, &to_px, "#c23b22", stroke);
    }
    writeln!(
        out,
        r##"  <text x="16" y="30" font-family="sans-serif" font-size="20" fill="#222">{label}</text>"##
    )
    .unwrap();
    writeln!(out, "</svg>").unwrap();
    out
}

/// Render and write to `path`.
pub fn render_svg(
    n: &Conic<Rational>,
    n_class: ConicClass,
    m: &Conic<Rational>,
    label: &str,
    path: &str,
) -> Result<(), CliError> {
    let svg = render_to_string(n, n_class, m, label);
    std::fs::write(path, svg).map_err(|e| CliError::Io(format!("cannot write {path}: {e}")))
}

// ── Tests ───────────────────────────────────────────────────────────────────
