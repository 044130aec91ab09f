//! Relative position of a parabola or a hyperbola against a coplanar ellipse,
//! decided from coefficient signs alone.
//!
//! Two nondegenerate conics `N` and `M` span a pencil whose characteristic
//! cubic `F(lambda) = det(lambda N + M)` encodes their relative position: the
//! number, signs, and coincidences of its real roots, refined by a handful of
//! polynomial sign conditions in the coefficients, separate all nine positions
//! of a parabola against an ellipse and all eleven positions of a hyperbola
//! against an ellipse. No intersection point is ever computed on this route:
//! every decision is a sign of a polynomial (or of a quadratic-extension
//! element) in the input coefficients.
//!
//! The crate provides three independent routes to a position, so results can
//! be cross-checked:
//!
//! * sign-based classification of canonical configurations (a parabola
//!   `x^2 = 2 a^2 y` or hyperbola `x^2/a^2 - y^2/b^2 + 1 = 0` against a
//!   circle), in [`classify_parabola`] and [`classify_hyperbola`];
//! * the same decision lists applied to arbitrary coefficient matrices
//!   through pencil invariants ([`classify_parabola::classify_general`],
//!   [`classify_hyperbola::classify_general`]), plus an exact reduction of
//!   any valid pair to canonical position in [`reduce`];
//! * verification oracles in [`oracle`] that isolate the real roots of the
//!   characteristic cubic, or intersect the conics outright with exact
//!   resultant arithmetic.
//!
//! With rational inputs every route is exact. A floating-point scalar is also
//! provided for approximate inputs; it reports an indeterminate result
//! instead of guessing whenever a sign falls below its tolerance.
//!
//! ```
//! use conic_position::classify_parabola::{classify_canonical, CanonicalParabolaCircle};
//! use conic_position::numeric::rat;
//! use conic_position::ParabolaEllipsePosition;
//!
//! // Unit circle centered three units below the vertex of x^2 = 2y.
//! let config = CanonicalParabolaCircle::from_center(rat(1, 1), rat(0, 1), rat(-3, 1), rat(1, 1));
//! assert_eq!(
//!     classify_canonical(&config).unwrap(),
//!     ParabolaEllipsePosition::Separated,
//! );
//! ```

pub mod classify_hyperbola;
pub mod classify_parabola;
pub mod conic;
pub mod numeric;
pub mod oracle;
pub mod pencil;
pub(crate) mod poly;
pub mod reduce;
pub mod witness;

pub use classify_hyperbola::{CanonicalHyperbolaCircle, HyperbolaEllipsePosition};
pub use classify_parabola::{CanonicalParabolaCircle, ClassifyError, ParabolaEllipsePosition};
pub use conic::{classify_type, conic_from_equation, normalize, Conic, ConicClass, ConicError};
pub use numeric::{ApproxScalar, Rational, Scalar, Sign};
pub use oracle::{CoarseClass, IntersectionSummary, OracleError, RootPattern, TangencySide};
pub use pencil::{Cubic, PencilInvariants};
pub use reduce::ReductionData;
