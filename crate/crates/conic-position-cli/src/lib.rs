//! Command line front end for the `conic-position` classifiers.
//!
//! The binary reads a pair of conics given by implicit-equation
//! coefficients, detects (or checks) which of them is the ellipse, and
//! reports the relative-position case from sign conditions alone, in exact
//! rational or tolerance-tracked float arithmetic. It can cross-check the
//! answer through two independent routes, render the configuration as an
//! SVG figure, and sweep a linearly interpolated family of pairs while
//! reporting where the case changes.
//!
//! The library half exists so the report schema and the plumbing are unit
//! testable and reusable; everything user-facing goes through [`app::run`].

pub mod app;
pub mod engine;
pub mod error;
pub mod input;
pub mod render;
pub mod report;
pub mod sweep;
