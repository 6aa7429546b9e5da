//! Staircase combinatorics for monomial ideals in two and three variables:
//! exact tangent-space dimensions of Hilbert schemes of points on affine
//! 3-space, the two-variable graded Hom calculus with ghost vectors,
//! enumeration of Borel-fixed ideals by colength, and exhaustive
//! verification of the tangent upper bound and the maximum-singularity
//! statement at tetrahedral colengths.
//!
//! Everything is exact integer arithmetic; all values are immutable after
//! construction and safe to share across threads.

pub mod bounds;
pub mod cache;
pub mod checks;
pub mod enumerate;
mod error;
pub mod hom2d;
pub mod lattice;
pub mod num;
pub mod svg;
pub mod tangent3d;

pub use error::{Error, Result};
