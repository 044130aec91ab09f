//! Scalar arithmetic with decidable signs.
//!
//! Every classification decision in this crate reduces to the sign of some
//! expression in the input coefficients. Three scalar kinds cover the needed
//! ground:
//!
//! * [`Rational`]: exact arbitrary-precision rationals (re-exported from
//!   `num`). Signs are always decidable.
//! * [`QuadExt`]: numbers `p + q*sqrt(d)` in a single quadratic extension
//!   `Q(sqrt(d))` with `d >= 0` rational. Signs are decided exactly by
//!   comparing `p^2` against `q^2 * d`.
//! * [`ApproxScalar`]: an `f64` tagged with an accumulated magnitude envelope
//!   and a relative tolerance. Its sign is [`Sign::Unknown`] whenever the
//!   value is too small relative to the envelope, and it never reports
//!   [`Sign::Zero`] for a nontrivially computed quantity.
//!
//! The [`Scalar`] trait is the interface the classifiers are generic over;
//! [`AdjoinSqrt`] is the extra step the hyperbola path needs (adjoining one
//! square root to the base field).

use num::bigint::BigInt;
use num::{Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Exact rational scalar. `FromStr` accepts `"p/q"`; see [`parse_rational`]
/// for the decimal-friendly parser used by the CLI.
pub type Rational = num::BigRational;

/// Convenience constructor for small rationals. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

// ── Sign ────────────────────────────────────────────────────────────────────

/// Four-valued sign. `Unknown` only arises from [`ApproxScalar`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
    Unknown,
}

impl Sign {
    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }

    pub fn is_unknown(self) -> bool {
        self == Sign::Unknown
    }

    /// Definitely nonzero (positive or negative).
    pub fn is_nonzero(self) -> bool {
        matches!(self, Sign::Positive | Sign::Negative)
    }

    /// Sign of the negated quantity.
    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Positive => Sign::Negative,
            other => other,
        }
    }

    /// Sign of a product.
    pub fn product(self, other: Sign) -> Sign {
        match (self, other) {
            (Sign::Unknown, _) | (_, Sign::Unknown) => Sign::Unknown,
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (a, b) if a == b => Sign::Positive,
            _ => Sign::Negative,
        }
    }

    pub fn from_f64(x: f64) -> Sign {
        if x.is_nan() {
            Sign::Unknown
        } else if x > 0.0 {
            Sign::Positive
        } else if x < 0.0 {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Sign::Negative => "-",
            Sign::Zero => "0",
            Sign::Positive => "+",
            Sign::Unknown => "?",
        };
        f.write_str(s)
    }
}

// ── Error type ──────────────────────────────────────────────────────────────

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NumericError {
    /// A square root of a (certainly) negative quantity was requested.
    NegativeRadicand(String),
    /// Two `QuadExt` values from different extensions were combined.
    MixedRadicands(String, String),
}

impl fmt::Display for NumericError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NumericError::NegativeRadicand(what) => {
                write!(f, "square root of negative quantity: {what}")
            }
            NumericError::MixedRadicands(a, b) => {
                write!(f, "incompatible quadratic extensions: sqrt({a}) vs sqrt({b})")
            }
        }
    }
}

impl std::error::Error for NumericError {}

// ── Scalar trait ────────────────────────────────────────────────────────────

/// Field-like scalar with a decidable (four-valued) sign.
///
/// Division by a value whose sign is `Zero` panics, like primitive division;
/// callers guard the denominators (the formulas in this crate only divide by
/// quantities that are nonzero for nondegenerate inputs).
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn sign(&self) -> Sign;

    /// Closest `f64` (diagnostics and rendering only; never decisions).
    fn to_f64(&self) -> f64;

    fn is_zero_val(&self) -> bool {
        self.sign() == Sign::Zero
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        num::Zero::zero()
    }

    fn one() -> Self {
        num::One::one()
    }

    fn from_int(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }

    fn sign(&self) -> Sign {
        if self.is_zero() {
            Sign::Zero
        } else if self.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    fn to_f64(&self) -> f64 {
        num::ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

/// Sign of an exact rational (free-function form).
pub fn sign_rational(x: &Rational) -> Sign {
    Scalar::sign(x)
}

// ── Quadratic extension ─────────────────────────────────────────────────────

/// `p + q * sqrt(d)` with `p, q, d` rational and `d >= 0`.
///
/// Invariants kept by every constructor and operation:
/// * if `q == 0` then `d == 0` (pure rationals are normalized);
/// * if `q != 0` then `d` is positive and not a square of a rational (square
///   radicands are folded away at construction, so conjugate norms
///   `p^2 - q^2 d` vanish only for the value zero).
///
/// Binary operations require both operands to live in the same extension;
/// mixing `sqrt(2)` with `sqrt(3)` panics (it is a programming error, not an
/// input condition: each classification path adjoins exactly one root).
#[derive(Clone, Debug, PartialEq)]
pub struct QuadExt {
    p: Rational,
    q: Rational,
    d: Rational,
}

impl QuadExt {
    pub fn from_rational(p: Rational) -> Self {
        QuadExt {
            p,
            q: Scalar::zero(),
            d: Scalar::zero(),
        }
    }

    /// `sqrt(d)` for rational `d >= 0`. Folds to a rational when `d` is a
    /// perfect square (including `d = 0`).
    pub fn sqrt_rational(d: &Rational) -> Result<Self, NumericError> {
        match Scalar::sign(d) {
            Sign::Negative => Err(NumericError::NegativeRadicand(d.to_string())),
            Sign::Zero => Ok(QuadExt::from_rational(Scalar::zero())),
            _ => {
                if let Some(root) = exact_sqrt(d) {
                    Ok(QuadExt::from_rational(root))
                } else {
                    Ok(QuadExt {
                        p: Scalar::zero(),
                        q: Scalar::one(),
                        d: d.clone(),
                    })
                }
            }
        }
    }

    pub fn rational_part(&self) -> &Rational {
        &self.p
    }

    pub fn radical_coefficient(&self) -> &Rational {
        &self.q
    }

    pub fn radicand(&self) -> &Rational {
        &self.d
    }

    /// The value as a rational if it lies in the base field.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.q.is_zero() {
            Some(&self.p)
        } else {
            None
        }
    }

    /// Radicand shared by two operands, or a panic when they genuinely differ.
    fn joint_radicand(&self, other: &QuadExt) -> Rational {
        if self.q.is_zero() {
            other.d.clone()
        } else if other.q.is_zero() || self.d == other.d {
            self.d.clone()
        } else {
            panic!(
                "{}",
                NumericError::MixedRadicands(self.d.to_string(), other.d.to_string())
            )
        }
    }

    fn normalized(mut self) -> Self {
        if self.q.is_zero() {
            self.d = Scalar::zero();
        }
        self
    }
}

/// Exact rational square root, if one exists.
fn exact_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let num_root = exact_sqrt_int(x.numer())?;
    let den_root = exact_sqrt_int(x.denom())?;
    Some(Rational::new(num_root, den_root))
}

fn exact_sqrt_int(x: &BigInt) -> Option<BigInt> {
    if x.is_negative() {
        return None;
    }
    let root = x.sqrt();
    if &(&root * &root) == x {
        Some(root)
    } else {
        None
    }
}

impl Add for QuadExt {
    type Output = QuadExt;

    fn add(self, rhs: QuadExt) -> QuadExt {
        let d = self.joint_radicand(&rhs);
        QuadExt {
            p: self.p + rhs.p,
            q: self.q + rhs.q,
            d,
        }
        .normalized()
    }
}

impl Sub for QuadExt {
    type Output = QuadExt;

    fn sub(self, rhs: QuadExt) -> QuadExt {
        self + (-rhs)
    }
}

impl Mul for QuadExt {
    type Output = QuadExt;

    fn mul(self, rhs: QuadExt) -> QuadExt {
        let d = self.joint_radicand(&rhs);
        let p = self.p.clone() * rhs.p.clone() + self.q.clone() * rhs.q.clone() * d.clone();
        let q = self.p * rhs.q + self.q * rhs.p;
        QuadExt { p, q, d }.normalized()
    }
}

impl Div for QuadExt {
    type Output = QuadExt;

    fn div(self, rhs: QuadExt) -> QuadExt {
        let d = self.joint_radicand(&rhs);
        // Multiply by the conjugate. The norm p^2 - q^2 d of a nonzero value
        // is nonzero because square radicands are folded at construction.
        let norm = rhs.p.clone() * rhs.p.clone() - rhs.q.clone() * rhs.q.clone() * d.clone();
        if norm.is_zero() {
            panic!("division by zero in Q(sqrt({d}))");
        }
        let conj = QuadExt {
            p: rhs.p,
            q: -rhs.q,
            d: d.clone(),
        };
        let num = self * conj;
        QuadExt {
            p: num.p / norm.clone(),
            q: num.q / norm,
            d,
        }
        .normalized()
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;

    fn neg(self) -> QuadExt {
        QuadExt {
            p: -self.p,
            q: -self.q,
            d: self.d,
        }
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_zero() {
            write!(f, "{}", self.p)
        } else if self.p.is_zero() {
            write!(f, "{}*sqrt({})", self.q, self.d)
        } else {
            write!(f, "{} + {}*sqrt({})", self.p, self.q, self.d)
        }
    }
}

impl Scalar for QuadExt {
    fn zero() -> Self {
        QuadExt::from_rational(Scalar::zero())
    }

    fn one() -> Self {
        QuadExt::from_rational(Scalar::one())
    }

    fn from_int(n: i64) -> Self {
        QuadExt::from_rational(<Rational as Scalar>::from_int(n))
    }

    fn sign(&self) -> Sign {
        sign_quadext(self)
    }

    fn to_f64(&self) -> f64 {
        Scalar::to_f64(&self.p) + Scalar::to_f64(&self.q) * Scalar::to_f64(&self.d).sqrt()
    }
}

/// Exact sign of `p + q*sqrt(d)`: compare `p^2` against `q^2 * d` with the
/// sign bookkeeping spelled out case by case.
pub fn sign_quadext(x: &QuadExt) -> Sign {
    let sp = Scalar::sign(&x.p);
    let sq = Scalar::sign(&x.q);
    match (sp, sq) {
        (s, Sign::Zero) => s,
        (Sign::Zero, s) => s,
        (a, b) if a == b => a,
        _ => {
            // Opposite strict signs: |p| vs |q|*sqrt(d) decides, i.e. the
            // sign of p^2 - q^2 d carried over to p's side. The difference
            // cannot vanish (d is not a rational square).
            let cmp = x.p.clone() * x.p.clone() - x.q.clone() * x.q.clone() * x.d.clone();
            Scalar::sign(&cmp).product(sp)
        }
    }
}

// ── Approximate scalar ──────────────────────────────────────────────────────

/// `f64` with an accumulated magnitude envelope and a relative tolerance.
///
/// `mag` is a running upper bound for how large the intermediate terms that
/// produced `value` could have been; a sign is only certified when
/// `|value| > tol * mag`. This is a coarse cancellation detector, not
/// certified interval arithmetic: the crate's exact scalars are the ground
/// truth and the float path exists for throughput.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ApproxScalar {
    pub value: f64,
    pub mag: f64,
    pub tol: f64,
}

/// Default relative tolerance for the float path.
pub const DEFAULT_TOL: f64 = 1e-10;

impl ApproxScalar {
    pub fn new(value: f64, tol: f64) -> Self {
        ApproxScalar {
            value,
            mag: value.abs(),
            tol,
        }
    }

    pub fn with_default_tol(value: f64) -> Self {
        ApproxScalar::new(value, DEFAULT_TOL)
    }

    /// A value whose sign can never be certified again.
    fn poisoned(value: f64, tol: f64) -> Self {
        ApproxScalar {
            value,
            mag: f64::INFINITY,
            tol,
        }
    }

    pub fn sqrt(&self) -> ApproxScalar {
        match self.sign() {
            Sign::Positive => ApproxScalar {
                value: self.value.sqrt(),
                mag: self.mag.sqrt(),
                tol: self.tol,
            },
            Sign::Zero => ApproxScalar::new(0.0, self.tol),
            _ => ApproxScalar::poisoned(self.value.max(0.0).sqrt(), self.tol),
        }
    }
}

impl Add for ApproxScalar {
    type Output = ApproxScalar;

    fn add(self, rhs: ApproxScalar) -> ApproxScalar {
        ApproxScalar {
            value: self.value + rhs.value,
            mag: self.mag + rhs.mag,
            tol: self.tol.max(rhs.tol),
        }
    }
}

impl Sub for ApproxScalar {
    type Output = ApproxScalar;

    fn sub(self, rhs: ApproxScalar) -> ApproxScalar {
        ApproxScalar {
            value: self.value - rhs.value,
            mag: self.mag + rhs.mag,
            tol: self.tol.max(rhs.tol),
        }
    }
}

impl Mul for ApproxScalar {
    type Output = ApproxScalar;

    fn mul(self, rhs: ApproxScalar) -> ApproxScalar {
        ApproxScalar {
            value: self.value * rhs.value,
            mag: self.mag * rhs.mag,
            tol: self.tol.max(rhs.tol),
        }
    }
}

impl Div for ApproxScalar {
    type Output = ApproxScalar;

    fn div(self, rhs: ApproxScalar) -> ApproxScalar {
        let tol = self.tol.max(rhs.tol);
        if !rhs.sign().is_nonzero() {
            return ApproxScalar::poisoned(self.value / rhs.value, tol);
        }
        // The denominator is certified away from zero; inflate the envelope
        // by the worst-case relative shift of the denominator.
        let rho = rhs.tol * rhs.mag / rhs.value.abs();
        ApproxScalar {
            value: self.value / rhs.value,
            mag: (self.mag / rhs.value.abs()) / (1.0 - rho),
            tol,
        }
    }
}

impl Neg for ApproxScalar {
    type Output = ApproxScalar;

    fn neg(self) -> ApproxScalar {
        ApproxScalar {
            value: -self.value,
            mag: self.mag,
            tol: self.tol,
        }
    }
}

impl fmt::Display for ApproxScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Scalar for ApproxScalar {
    fn zero() -> Self {
        ApproxScalar {
            value: 0.0,
            mag: 0.0,
            tol: 0.0,
        }
    }

    fn one() -> Self {
        ApproxScalar {
            value: 1.0,
            mag: 1.0,
            tol: 0.0,
        }
    }

    fn from_int(n: i64) -> Self {
        let v = n as f64;
        ApproxScalar {
            value: v,
            mag: v.abs(),
            tol: 0.0,
        }
    }

    fn sign(&self) -> Sign {
        sign_approx(self)
    }

    fn to_f64(&self) -> f64 {
        self.value
    }
}

/// Sign of a tolerance-tagged float. Never `Zero` for a quantity with a
/// nonzero envelope and a nonzero tolerance; `Unknown` whenever
/// `|value| <= tol * mag`.
pub fn sign_approx(x: &ApproxScalar) -> Sign {
    if x.value.is_nan() || x.mag.is_infinite() {
        return Sign::Unknown;
    }
    if x.value == 0.0 && x.tol * x.mag == 0.0 {
        return Sign::Zero;
    }
    if x.value.abs() > x.tol * x.mag {
        Sign::from_f64(x.value)
    } else {
        Sign::Unknown
    }
}

// ── Adjoining a square root ─────────────────────────────────────────────────

/// Extension scalars additionally decide `sign(sqrt(a) - b)` without ever
/// constructing the (possibly nested) radical `sqrt(a)`.
pub trait ExtScalar: Scalar {
    /// Sign of `sqrt(a) - b` for `a >= 0`:
    /// `b < 0` gives `Positive`; otherwise it is the sign of `a - b^2`.
    fn sign_sqrt_minus(a: &Self, b: &Self) -> Result<Sign, NumericError>;
}

impl ExtScalar for QuadExt {
    fn sign_sqrt_minus(a: &QuadExt, b: &QuadExt) -> Result<Sign, NumericError> {
        sign_sqrt_minus(a, b)
    }
}

impl ExtScalar for ApproxScalar {
    fn sign_sqrt_minus(a: &ApproxScalar, b: &ApproxScalar) -> Result<Sign, NumericError> {
        match (a.sign(), b.sign()) {
            (Sign::Negative, _) => Err(NumericError::NegativeRadicand(a.to_string())),
            (Sign::Unknown, _) | (_, Sign::Unknown) => Ok(Sign::Unknown),
            (_, Sign::Negative) => Ok(Sign::Positive),
            (sa, Sign::Zero) => Ok(sa),
            _ => Ok((*a - *b * *b).sign()),
        }
    }
}

/// Exact `sign(sqrt(a) - b)` in one quadratic extension.
pub fn sign_sqrt_minus(a: &QuadExt, b: &QuadExt) -> Result<Sign, NumericError> {
    match Scalar::sign(a) {
        Sign::Negative => Err(NumericError::NegativeRadicand(a.to_string())),
        _ => match Scalar::sign(b) {
            Sign::Negative => Ok(Sign::Positive),
            Sign::Zero => Ok(Scalar::sign(a)),
            _ => Ok(Scalar::sign(&(a.clone() - b.clone() * b.clone()))),
        },
    }
}

/// Base scalars that can move into an extension containing one extra square
/// root. For rationals the extension is [`QuadExt`]; the float scalar is its
/// own extension.
pub trait AdjoinSqrt: Scalar {
    type Ext: ExtScalar;

    fn lift(&self) -> Self::Ext;

    /// `sqrt(self)` as an extension element; errors when `self` is certainly
    /// negative.
    fn sqrt_nonneg(&self) -> Result<Self::Ext, NumericError>;
}

impl AdjoinSqrt for Rational {
    type Ext = QuadExt;

    fn lift(&self) -> QuadExt {
        QuadExt::from_rational(self.clone())
    }

    fn sqrt_nonneg(&self) -> Result<QuadExt, NumericError> {
        QuadExt::sqrt_rational(self)
    }
}

impl AdjoinSqrt for ApproxScalar {
    type Ext = ApproxScalar;

    fn lift(&self) -> ApproxScalar {
        *self
    }

    fn sqrt_nonneg(&self) -> Result<ApproxScalar, NumericError> {
        if self.sign() == Sign::Negative {
            return Err(NumericError::NegativeRadicand(self.to_string()));
        }
        Ok(self.sqrt())
    }
}

// ── Parsing ─────────────────────────────────────────────────────────────────

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseRationalError {
    pub input: String,
}

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "cannot parse {:?} as a rational (expected e.g. \"3\", \"-7/4\", \"1.25\", \"2e-3\")",
            self.input
        )
    }
}

impl std::error::Error for ParseRationalError {}

/// Parse an integer, a fraction `p/q`, or a decimal (with optional exponent)
/// into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let err = || ParseRationalError {
        input: s.to_string(),
    };
    let t = s.trim();
    if t.is_empty() {
        return Err(err());
    }
    if let Some((num, den)) = t.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| err())?;
        let d: BigInt = den.trim().parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(n, d));
    }
    // Decimal with optional exponent: mantissa [.fraction] [e exponent].
    let (mantissa, exp) = match t.split_once(['e', 'E']) {
        Some((m, e)) => {
            let exp: i64 = e.parse().map_err(|_| err())?;
            (m, exp)
        }
        None => (t, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err());
    }
    let digits = format!("{int_part}{frac_part}");
    let digits = if digits.is_empty() || digits == "-" || digits == "+" {
        return Err(err());
    } else {
        digits
    };
    if frac_part.contains(['+', '-']) {
        return Err(err());
    }
    let n: BigInt = digits.parse().map_err(|_| err())?;
    let shift = exp - frac_part.len() as i64;
    let ten = BigInt::from(10);
    let value = if shift >= 0 {
        Rational::from_integer(n * num::pow::pow(ten, shift as usize))
    } else {
        Rational::new(n, num::pow::pow(ten, (-shift) as usize))
    };
    Ok(value)
}

// ── Tests ───────────────────────────────────────────────────────────────────
