//! Deterministic random corpora for the acceptance suite.
//!
//! All samplers draw small-denominator rationals so that boundary
//! coincidences (vanishing centers, matched radii, repeated roots) occur with
//! positive probability, and every generator is seeded, so reruns are
//! byte-identical.

use conic_position::classify_hyperbola::CanonicalHyperbolaCircle;
use conic_position::classify_parabola::CanonicalParabolaCircle;
use conic_position::conic::{canonical_hyperbola, canonical_parabola, circle, Conic};
use conic_position::numeric::{rat, Rational, Scalar, Sign};
use conic_position::pencil::Cubic;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x00ab1e ^ (stream << 32))
}

/// Numerator in `[-range, range]`, denominator in `[1, den]`.
pub fn small_rational(rng: &mut ChaCha8Rng, range: i64, den: i64) -> Rational {
    rat(rng.gen_range(-range..=range), rng.gen_range(1..=den))
}

pub fn positive_rational(rng: &mut ChaCha8Rng, range: i64, den: i64) -> Rational {
    rat(rng.gen_range(1..=range), rng.gen_range(1..=den))
}

pub fn nonzero_rational(rng: &mut ChaCha8Rng, range: i64, den: i64) -> Rational {
    loop {
        let r = small_rational(rng, range, den);
        if r.sign() != Sign::Zero {
            return r;
        }
    }
}

// ── Canonical configurations with their conic pairs ─────────────────────────

pub struct ParabolaSample {
    pub config: CanonicalParabolaCircle<Rational>,
    pub parabola: Conic<Rational>,
    pub circle: Conic<Rational>,
}

pub struct HyperbolaSample {
    pub config: CanonicalHyperbolaCircle<Rational>,
    pub hyperbola: Conic<Rational>,
    pub circle: Conic<Rational>,
}

fn parabola_sample(
    a_sq: Rational,
    xc: Rational,
    yc: Rational,
    delta_sq: Rational,
) -> ParabolaSample {
    ParabolaSample {
        parabola: canonical_parabola(&a_sq),
        circle: circle(&xc, &yc, &delta_sq),
        config: CanonicalParabolaCircle::from_center(a_sq, xc, yc, delta_sq),
    }
}

fn hyperbola_sample(
    a_sq: Rational,
    b_sq: Rational,
    xc: Rational,
    yc: Rational,
    delta_sq: Rational,
) -> HyperbolaSample {
    HyperbolaSample {
        hyperbola: canonical_hyperbola(&a_sq, &b_sq),
        circle: circle(&xc, &yc, &delta_sq),
        config: CanonicalHyperbolaCircle::from_center(a_sq, b_sq, xc, yc, delta_sq),
    }
}

pub fn random_parabola_sample(rng: &mut ChaCha8Rng) -> ParabolaSample {
    parabola_sample(
        positive_rational(rng, 6, 4),
        small_rational(rng, 6, 4),
        small_rational(rng, 6, 4),
        positive_rational(rng, 9, 4),
    )
}

pub fn random_hyperbola_sample(rng: &mut ChaCha8Rng) -> HyperbolaSample {
    hyperbola_sample(
        positive_rational(rng, 6, 4),
        positive_rational(rng, 6, 4),
        small_rational(rng, 6, 4),
        small_rational(rng, 6, 4),
        positive_rational(rng, 9, 4),
    )
}

/// Circle exactly tangent to `x^2 = 2 a^2 y`: the center sits on the normal
/// line through a rational curve point, at rational parameter `t` (inside
/// the parabola for `t < 0`, outside for `t > 0`).
pub fn parabola_tangency_sample(rng: &mut ChaCha8Rng) -> ParabolaSample {
    let a_sq = positive_rational(rng, 4, 3);
    let x0 = small_rational(rng, 4, 2);
    let y0 = &(&x0 * &x0) / &(rat(2, 1) * a_sq.clone());
    let gx = &x0 / &a_sq;
    let gy = rat(-1, 1);
    let t = nonzero_rational(rng, 3, 2);
    let xc = &x0 + &(&t * &gx);
    let yc = &y0 + &(&t * &gy);
    let delta_sq = &(&t * &t) * &(&(&gx * &gx) + &(&gy * &gy));
    parabola_sample(a_sq, xc, yc, delta_sq)
}

/// Circle exactly tangent to `x^2/a^2 - y^2/b^2 + 1 = 0`. Squared semi-axes
/// are drawn as perfect squares so the branch parametrization
/// `(a (s^2 - 1) / 2s, b (s^2 + 1) / 2s)` yields a rational tangency point.
pub fn hyperbola_tangency_sample(rng: &mut ChaCha8Rng) -> HyperbolaSample {
    let a = positive_rational(rng, 3, 2);
    let b = positive_rational(rng, 3, 2);
    let a_sq = &a * &a;
    let b_sq = &b * &b;
    let s = nonzero_rational(rng, 3, 2);
    let one = rat(1, 1);
    let two_s = rat(2, 1) * s.clone();
    let s_sq = &s * &s;
    let x0 = &(&a * &(&s_sq - &one)) / &two_s;
    let y0 = &(&b * &(&s_sq + &one)) / &two_s;
    let gx = &x0 / &a_sq;
    let gy = -&(&y0 / &b_sq);
    let t = nonzero_rational(rng, 2, 2);
    let xc = &x0 + &(&t * &gx);
    let yc = &y0 + &(&t * &gy);
    let delta_sq = &(&t * &t) * &(&(&gx * &gx) + &(&gy * &gy));
    hyperbola_sample(a_sq, b_sq, xc, yc, delta_sq)
}

pub fn parabola_corpus(randoms: usize, tangencies: usize) -> Vec<ParabolaSample> {
    let mut out = Vec::with_capacity(randoms + tangencies);
    let mut r = rng(1);
    for _ in 0..randoms {
        out.push(random_parabola_sample(&mut r));
    }
    let mut r = rng(2);
    for _ in 0..tangencies {
        out.push(parabola_tangency_sample(&mut r));
    }
    out
}

pub fn hyperbola_corpus(randoms: usize, tangencies: usize) -> Vec<HyperbolaSample> {
    let mut out = Vec::with_capacity(randoms + tangencies);
    let mut r = rng(3);
    for _ in 0..randoms {
        out.push(random_hyperbola_sample(&mut r));
    }
    let mut r = rng(4);
    for _ in 0..tangencies {
        out.push(hyperbola_tangency_sample(&mut r));
    }
    out
}

// ── Cubics for the discriminant law ─────────────────────────────────────────

pub fn random_cubic(rng: &mut ChaCha8Rng) -> Cubic<Rational> {
    Cubic {
        c3: nonzero_rational(rng, 9, 4),
        c2: small_rational(rng, 9, 4),
        c1: small_rational(rng, 9, 4),
        c0: small_rational(rng, 9, 4),
    }
}

/// `c3 (x - r)^2 (x - s)`: pins the repeated-root branch of the law.
pub fn repeated_root_cubic(rng: &mut ChaCha8Rng) -> Cubic<Rational> {
    let c3 = nonzero_rational(rng, 4, 2);
    let r = small_rational(rng, 4, 2);
    let s = small_rational(rng, 4, 2);
    let e1 = &(&r + &r) + &s;
    let e2 = &(&r * &r) + &(&(rat(2, 1) * r.clone()) * &s);
    let e3 = &(&r * &r) * &s;
    Cubic {
        c2: -&(&c3 * &e1),
        c1: &c3 * &e2,
        c0: -&(&c3 * &e3),
        c3,
    }
}

// ── Similarity transforms ───────────────────────────────────────────────────

/// Rational rotation from the half-angle substitution.
pub fn rational_rotation(rng: &mut ChaCha8Rng) -> (Rational, Rational) {
    let t = small_rational(rng, 4, 3);
    let one = rat(1, 1);
    let t_sq = &t * &t;
    let den = &one + &t_sq;
    (&(&one - &t_sq) / &den, &(rat(2, 1) * t) / &den)
}

/// Random orientation-preserving similarity (rotation, positive scaling,
/// translation) as a homogeneous matrix for `transform_conic`.
pub fn similarity(rng: &mut ChaCha8Rng) -> [[Rational; 3]; 3] {
    let (c, sn) = rational_rotation(rng);
    let s = positive_rational(rng, 3, 2);
    let tx = small_rational(rng, 5, 3);
    let ty = small_rational(rng, 5, 3);
    [
        [&s * &c, -&(&s * &sn), tx],
        [&s * &sn, &s * &c, ty],
        [rat(0, 1), rat(0, 1), rat(1, 1)],
    ]
}
