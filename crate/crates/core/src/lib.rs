//! Exact computations with at-most-n-valued maps on the circle.
//!
//! * [`circle`] and [`hausdorff`]: finite configurations on `S^1` and the
//!   Hausdorff metric between them.
//! * [`plmap`]: piecewise-linear multimaps as graphs, with validation,
//!   classification and the conversions between unions of equicardinal maps,
//!   n-fold maps, symmetric-product maps and weighted maps.
//! * [`weights`]: balance constraints and an exact decision procedure for
//!   positive integer weights.
//! * [`complex`]: the cell structure of `C_n(S^1)`, its integral homology,
//!   and a presentation of its fundamental group.

#![allow(clippy::result_large_err)]

pub mod circle;
pub mod complex;
pub mod error;
pub mod hausdorff;
pub mod plmap;
pub mod rational;
pub mod weights;

pub use circle::{circle_dist, CirclePoint, Configuration, MultisetConfiguration};
pub use error::{Error, ParseError, Result, StructuralError};
pub use hausdorff::{ball_formula_rhs, hausdorff_distance, in_hausdorff_ball};
pub use plmap::{DomainKind, NFoldMap, PLMultimap, SPMap};
pub use rational::Rational;
