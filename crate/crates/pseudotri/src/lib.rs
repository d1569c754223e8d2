//! Exact combinatorial geometry for k-holes, convex k-gons and empty
//! pseudo-triangles in planar point sets.
//!
//! All computation is integer-exact: coordinates are bounded signed integers
//! and every predicate is the sign of an `i128` determinant. The crate is
//! generic over the scalar via [`scalar::Coord`] (any bounded signed integer
//! type); the aliases at the crate root fix `i64`, which comfortably holds
//! the full supported coordinate range.

pub mod constructive;
pub mod error;
pub mod extremal;
pub mod geom;
pub mod harness;
pub mod io;
pub mod pseudo;
pub mod search;
pub mod scalar;
pub mod svg;

pub use error::{Error, Result};

/// Crate-level default scalar. Coordinates are validated against
/// [`scalar::COORD_LIMIT`], so `i64` loses nothing over wider types.
pub type Scalar = i64;

pub type Point = geom::Point<Scalar>;
pub type PointSet = geom::PointSet<Scalar>;
pub type Polygon = pseudo::Polygon<Scalar>;
pub type PseudoTriangle = pseudo::PseudoTriangle<Scalar>;
pub type ChainAssignment = pseudo::ChainAssignment<Scalar>;
pub type Construction = constructive::Construction<Scalar>;
pub type DescentTrace = constructive::DescentTrace<Scalar>;
pub type CertifiedConfig = extremal::CertifiedConfig<Scalar>;
