//! Dense univariate polynomials over the exact rationals.
//!
//! This is the oracle's toolbox: evaluation, exact division, Euclidean gcd,
//! Yun square-free decomposition, Descartes sign-variation counts on
//! arbitrary open intervals (via Taylor shift and coefficient reversal), and
//! bisection-based real root isolation with exact handling of rational roots
//! hit by a midpoint. Roots are reported either exactly or as open isolating
//! intervals whose endpoints are never roots.
//!
//! Everything here is exact; `f64` never enters any decision.

use crate::numeric::{Rational, Scalar, Sign};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial with ascending coefficients (`coeffs[i]` multiplies `x^i`).
/// The representation is trimmed: the last stored coefficient is nonzero,
/// and the zero polynomial stores nothing.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero_val()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Poly {
        Poly::new(vec![c])
    }

    /// Test convenience: integer coefficients, ascending.
    pub fn from_ints(cs: &[i64]) -> Poly {
        Poly::new(cs.iter().map(|&c| Rational::from_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc: Rational = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| Rational::from_int(i as i64) * c.clone())
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lead) => {
                let inv = lead.clone();
                Poly::new(self.coeffs.iter().map(|a| a.clone() / inv.clone()).collect())
            }
        }
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![<Rational as Scalar>::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let q = rem[k].clone() / lead.clone();
            if !q.is_zero_val() {
                for j in 0..dd {
                    let t = q.clone() * divisor.coeffs[j].clone();
                    rem[k - dd + j] = rem[k - dd + j].clone() - t;
                }
            }
            rem[k] = Scalar::zero();
            quot[k - dd] = q;
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Poly {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// `p(x + h)`.
    pub fn taylor_shift(&self, h: &Rational) -> Poly {
        let mut res = Poly::zero();
        for c in self.coeffs.iter().rev() {
            res = res.mul_linear(h);
            res = &res + &Poly::constant(c.clone());
        }
        res
    }

    /// `p(x) * (x + h)`.
    fn mul_linear(&self, h: &Rational) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let n = self.coeffs.len();
        let mut out = vec![<Rational as Scalar>::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i + 1] = out[i + 1].clone() + c.clone();
            out[i] = out[i].clone() + h.clone() * c.clone();
        }
        Poly::new(out)
    }

    /// Coefficient reversal about degree `n`: `x^n p(1/x)`.
    fn reverse_about(&self, n: usize) -> Poly {
        let mut out = vec![<Rational as Scalar>::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            assert!(i <= n, "reversal degree too small");
            out[n - i] = c.clone();
        }
        Poly::new(out)
    }

    /// `p(c * x)`.
    fn stretch(&self, c: &Rational) -> Poly {
        let mut pow: Rational = Scalar::one();
        Poly::new(
            self.coeffs
                .iter()
                .map(|a| {
                    let v = a.clone() * pow.clone();
                    pow = pow.clone() * c.clone();
                    v
                })
                .collect(),
        )
    }

    /// Strict bound `b > 0` with every real root in `(-b, b)`.
    pub fn cauchy_bound(&self) -> Rational {
        let one: Rational = Scalar::one();
        match self.leading() {
            None => one,
            Some(lead) => {
                let mut m: Rational = Scalar::zero();
                for c in &self.coeffs[..self.coeffs.len() - 1] {
                    let a = abs(&(c.clone() / lead.clone()));
                    if a > m {
                        m = a;
                    }
                }
                one + m
            }
        }
    }

    /// Number of sign changes in the coefficient sequence (zeros dropped).
    pub fn descartes_variations(&self) -> usize {
        let mut count = 0;
        let mut last = Sign::Zero;
        for c in &self.coeffs {
            let s = c.sign();
            if s == Sign::Zero {
                continue;
            }
            if last != Sign::Zero && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Descartes bound for the number of roots in the open interval `(l, r)`.
    /// Zero certifies no roots; one certifies exactly one.
    pub fn variations_on(&self, l: &Rational, r: &Rational) -> usize {
        assert!(l < r, "empty interval");
        if self.is_zero() {
            return 0;
        }
        let n = self.degree().unwrap();
        // Move (l, r) to (0, 1), then map (0, 1) to (0, inf).
        let shifted = self.taylor_shift(l);
        let width = r.clone() - l.clone();
        let unit = shifted.stretch(&width);
        let reversed = unit.reverse_about(n);
        let one: Rational = Scalar::one();
        reversed.taylor_shift(&one).descartes_variations()
    }
}

fn abs(x: &Rational) -> Rational {
    if x.sign() == Sign::Negative {
        -x.clone()
    } else {
        x.clone()
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        Poly::new(out)
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![<Rational as Scalar>::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = a.clone() * b.clone();
                out[i + j] = out[i + j].clone() + t;
            }
        }
        Poly::new(out)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero_val())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}*x"),
                _ => format!("{c}*x^{i}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

// ── Gcd and square-free structure ───────────────────────────────────────────

/// Monic greatest common divisor (zero if both inputs are zero).
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let r = x.div_rem(&y).1;
        x = y;
        y = r;
    }
    if x.is_zero() {
        x
    } else {
        x.monic()
    }
}

/// Yun's square-free decomposition: pairwise-coprime monic square-free
/// factors with their multiplicities, `f = lead * prod a_i^(m_i)`.
pub fn squarefree_decomposition(f: &Poly) -> Vec<(Poly, u32)> {
    let deg = f.degree().expect("square-free decomposition of zero");
    if deg == 0 {
        return Vec::new();
    }
    let fp = f.derivative();
    let g = gcd(f, &fp);
    if g.degree() == Some(0) {
        return vec![(f.monic(), 1)];
    }
    let mut out = Vec::new();
    // Yun's recurrence. The running cofactors b, c, d must not be rescaled
    // mid-stream or the invariant d = c - b' breaks; only the emitted gcds
    // are monic.
    let mut b = f.div_exact(&g);
    let c = fp.div_exact(&g);
    let mut d = &c - &b.derivative();
    let mut i = 1u32;
    while b.degree().unwrap_or(0) > 0 {
        let a = gcd(&b, &d);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.clone(), i));
        }
        b = b.div_exact(&a);
        let c_next = d.div_exact(&a);
        d = &c_next - &b.derivative();
        i += 1;
    }
    out
}

// ── Root isolation ──────────────────────────────────────────────────────────

/// A real root, either exactly rational or inside an open interval whose
/// endpoints are not roots.
#[derive(Clone, Debug, PartialEq)]
pub enum RootApprox {
    Exact(Rational),
    Interval { lo: Rational, hi: Rational },
}

impl RootApprox {
    /// Any point of the enclosure (the root itself when exact).
    pub fn witness(&self) -> Rational {
        match self {
            RootApprox::Exact(r) => r.clone(),
            RootApprox::Interval { lo, hi } => (lo.clone() + hi.clone()) / Rational::from_int(2),
        }
    }

    pub fn to_f64(&self) -> f64 {
        Scalar::to_f64(&self.witness())
    }

    pub fn width(&self) -> Rational {
        match self {
            RootApprox::Exact(_) => Scalar::zero(),
            RootApprox::Interval { lo, hi } => hi.clone() - lo.clone(),
        }
    }
}

/// One isolated real root of a polynomial: its enclosure, its multiplicity
/// in the original polynomial, and the square-free factor it is a simple
/// root of (used for refinement and exact sign queries).
#[derive(Clone, Debug)]
pub struct IsolatedRoot {
    pub loc: RootApprox,
    pub multiplicity: u32,
    pub factor: Poly,
}

impl IsolatedRoot {
    /// Compare the root against a rational point, refining as needed.
    pub fn cmp_rational(&mut self, x: &Rational) -> Ordering {
        loop {
            match &self.loc {
                RootApprox::Exact(r) => return r.cmp(x),
                RootApprox::Interval { lo, hi } => {
                    if x <= lo {
                        return Ordering::Greater;
                    }
                    if x >= hi {
                        return Ordering::Less;
                    }
                    let at_x = self.factor.eval(x);
                    if at_x.is_zero_val() {
                        self.loc = RootApprox::Exact(x.clone());
                        return Ordering::Equal;
                    }
                    // x strictly inside: the sign change tells the side.
                    let at_lo = self.factor.eval(lo);
                    debug_assert!(!at_lo.is_zero_val());
                    if at_lo.sign() != at_x.sign() {
                        self.loc = RootApprox::Interval {
                            lo: lo.clone(),
                            hi: x.clone(),
                        };
                        return Ordering::Less;
                    }
                    self.loc = RootApprox::Interval {
                        lo: x.clone(),
                        hi: hi.clone(),
                    };
                    return Ordering::Greater;
                }
            }
        }
    }

    /// Bisect the enclosure until it is narrower than `width` (or exact).
    pub fn refine_to(&mut self, width: &Rational) {
        let two = Rational::from_int(2);
        loop {
            let (lo, hi) = match &self.loc {
                RootApprox::Exact(_) => return,
                RootApprox::Interval { lo, hi } => (lo.clone(), hi.clone()),
            };
            if hi.clone() - lo.clone() < *width {
                return;
            }
            let mid = (lo.clone() + hi.clone()) / two.clone();
            let at_mid = self.factor.eval(&mid);
            if at_mid.is_zero_val() {
                self.loc = RootApprox::Exact(mid);
                return;
            }
            let at_lo = self.factor.eval(&lo);
            if at_lo.sign() != at_mid.sign() {
                self.loc = RootApprox::Interval { lo, hi: mid };
            } else {
                self.loc = RootApprox::Interval { lo: mid, hi };
            }
        }
    }

    /// Exact sign of `u` at this root.
    ///
    /// Zero is decided through `gcd(factor, u)`: the factor is square-free
    /// with exactly one root in the enclosure, so the gcd changes sign over
    /// the enclosure iff that root is shared with `u`. A nonzero sign is
    /// found by shrinking the enclosure until `u` certifiably has no root
    /// in it, at which point any interior evaluation decides.
    pub fn sign_of(&mut self, u: &Poly) -> Sign {
        if u.is_zero() {
            return Sign::Zero;
        }
        if let RootApprox::Exact(r) = &self.loc {
            return u.eval(r).sign();
        }
        let shared = gcd(&self.factor, u);
        if shared.degree().unwrap_or(0) >= 1 {
            let (lo, hi) = self.interval();
            let a = shared.eval(&lo).sign();
            let b = shared.eval(&hi).sign();
            debug_assert!(a.is_nonzero() && b.is_nonzero());
            if a != b {
                return Sign::Zero;
            }
        }
        // u is nonzero at the root; shrink until the enclosure is free of
        // roots of u, then evaluate anywhere inside.
        let u_red = {
            let der_gcd = gcd(u, &u.derivative());
            if der_gcd.degree().unwrap_or(0) >= 1 {
                u.div_exact(&der_gcd)
            } else {
                u.clone()
            }
        };
        loop {
            let (lo, hi) = self.interval();
            if u_red.variations_on(&lo, &hi) == 0 {
                let mid = (lo + hi) / Rational::from_int(2);
                let s = u.eval(&mid).sign();
                debug_assert!(s.is_nonzero());
                return s;
            }
            let target = self.loc.width() / Rational::from_int(4);
            self.refine_to(&target);
            if matches!(self.loc, RootApprox::Exact(_)) {
                let r = self.loc.witness();
                return u.eval(&r).sign();
            }
        }
    }

    fn interval(&self) -> (Rational, Rational) {
        match &self.loc {
            RootApprox::Exact(r) => (r.clone(), r.clone()),
            RootApprox::Interval { lo, hi } => (lo.clone(), hi.clone()),
        }
    }
}

/// Order two isolated roots of coprime (or equal) square-free factors,
/// refining both enclosures until they separate.
pub fn cmp_roots(a: &mut IsolatedRoot, b: &mut IsolatedRoot) -> Ordering {
    loop {
        match (&a.loc, &b.loc) {
            (RootApprox::Exact(x), RootApprox::Exact(y)) => return x.cmp(y),
            (RootApprox::Exact(x), _) => {
                let x = x.clone();
                return b.cmp_rational(&x).reverse();
            }
            (_, RootApprox::Exact(y)) => {
                let y = y.clone();
                return a.cmp_rational(&y);
            }
            (
                RootApprox::Interval { lo: alo, hi: ahi },
                RootApprox::Interval { lo: blo, hi: bhi },
            ) => {
                if ahi <= blo {
                    return Ordering::Less;
                }
                if bhi <= alo {
                    return Ordering::Greater;
                }
                let aw = a.loc.width();
                let bw = b.loc.width();
                if aw >= bw {
                    let target = aw / Rational::from_int(2);
                    a.refine_to(&target);
                } else {
                    let target = bw / Rational::from_int(2);
                    b.refine_to(&target);
                }
            }
        }
    }
}

/// Isolate every real root of a square-free polynomial. Enclosures are
/// pairwise disjoint, sorted in increasing root order, and interval
/// endpoints are never roots of the associated factor.
///
/// When a bisection midpoint lands exactly on a root, the root is reported
/// exactly and divided out; the two child intervals continue with the
/// quotient, which keeps the endpoint invariant intact.
pub fn isolate_squarefree(f: &Poly) -> Vec<IsolatedRoot> {
    let Some(deg) = f.degree() else {
        panic!("root isolation of the zero polynomial");
    };
    let mut out: Vec<IsolatedRoot> = Vec::new();
    if deg == 0 {
        return out;
    }
    let two = Rational::from_int(2);
    let bound = f.cauchy_bound();
    let mut stack = vec![(-bound.clone(), bound, f.clone())];
    while let Some((lo, hi, g)) = stack.pop() {
        match g.degree() {
            None | Some(0) => continue,
            Some(1) => {
                // Linear: the root is rational and may or may not lie in
                // this subinterval.
                let root = -g.coeff(0) / g.coeff(1);
                if lo < root && root < hi {
                    out.push(IsolatedRoot {
                        loc: RootApprox::Exact(root),
                        multiplicity: 1,
                        factor: g,
                    });
                }
                continue;
            }
            _ => {}
        }
        match g.variations_on(&lo, &hi) {
            0 => {}
            1 => out.push(IsolatedRoot {
                loc: RootApprox::Interval { lo, hi },
                multiplicity: 1,
                factor: g,
            }),
            _ => {
                let mid = (lo.clone() + hi.clone()) / two.clone();
                let g_next = if g.eval(&mid).is_zero_val() {
                    let linear = Poly::new(vec![-mid.clone(), Scalar::one()]);
                    let quotient = g.div_exact(&linear);
                    out.push(IsolatedRoot {
                        loc: RootApprox::Exact(mid.clone()),
                        multiplicity: 1,
                        factor: linear,
                    });
                    quotient
                } else {
                    g
                };
                stack.push((lo, mid.clone(), g_next.clone()));
                stack.push((mid, hi, g_next));
            }
        }
    }
    out.sort_by(|a, b| {
        let key = |r: &IsolatedRoot| match &r.loc {
            RootApprox::Exact(x) => (x.clone(), 0u8),
            RootApprox::Interval { lo, .. } => (lo.clone(), 1u8),
        };
        key(a).cmp(&key(b))
    });
    out
}

/// Isolate every real root of an arbitrary nonzero polynomial, with
/// multiplicities, sorted in increasing root order.
pub fn isolate_real_roots(f: &Poly) -> Vec<IsolatedRoot> {
    let mut roots: Vec<IsolatedRoot> = Vec::new();
    for (factor, mult) in squarefree_decomposition(f) {
        for mut root in isolate_squarefree(&factor) {
            root.multiplicity = mult;
            roots.push(root);
        }
    }
    // Factors are pairwise coprime, so roots are distinct and the comparison
    // below terminates.
    let mut i = 1;
    while i < roots.len() {
        let mut j = i;
        while j > 0 {
            let (left, right) = roots.split_at_mut(j);
            if cmp_roots(&mut left[j - 1], &mut right[0]) == Ordering::Greater {
                roots.swap(j - 1, j);
                j -= 1;
            } else {
                break;
            }
        }
        i += 1;
    }
    roots
}

// ── Tests ───────────────────────────────────────────────────────────────────
