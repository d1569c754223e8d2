//! Coordinate scalar abstraction.
//!
//! Every predicate in this crate is decided by the sign of an integer
//! determinant, so coordinates are generic over the primitive signed integer
//! types rather than over floats. Intermediate products are always formed in
//! `i128` after widening; with coordinates bounded by [`COORD_LIMIT`] the
//! widest expression used anywhere (a 3x3 homogeneous determinant with one
//! rational row) stays below 2^90.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{NumCast, PrimInt, Signed};

/// Bound on |x| and |y| accepted for input coordinates.
pub const COORD_LIMIT: i128 = 1 << 20;

/// Signed integer scalar usable as a point coordinate.
pub trait Coord:
    PrimInt + Signed + NumCast + Default + Hash + Debug + Display + Send + Sync + 'static
{
    /// Widens to `i128`, the type all determinants are evaluated in.
    fn wide(self) -> i128 {
        // Cannot fail: every implementor is a primitive of at most 128 bits.
        self.to_i128().unwrap()
    }
}

impl<T> Coord for T where
    T: PrimInt + Signed + NumCast + Default + Hash + Debug + Display + Send + Sync + 'static
{
}
