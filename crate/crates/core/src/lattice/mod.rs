//! Integer lattice primitives: points, Gauss digitization of disks and
//! ellipses, inter-pixel contour tracing and Freeman chain codes.
//!
//! Pixels are lattice points `(x, y)`. Their unit squares are centered on the
//! lattice, so the inter-pixel boundary lives on the half-shifted lattice. We
//! store boundary vertices (pointels) with integer coordinates where pointel
//! `(x, y)` stands for the real corner `(x - 1/2, y - 1/2)`, i.e. the lower
//! left corner of pixel `(x, y)`.

mod chaincode;
mod contour;
mod octant;
mod shape;

pub use chaincode::{read_chain_code, write_chain_code};
pub use contour::{trace_contour, Contour, Move, PixelSet};
pub use octant::{octant_normalize, Octant, Rotation};
pub use shape::{digitize, parse_rational, ColumnSet, Rational, ShapeKind, ShapeSpec};

use std::fmt;
use std::ops::{Add, Neg, Sub};

use thiserror::Error;

/// Errors raised by lattice operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("pixel set is not 4-connected")]
    NotConnected,
    #[error("malformed chain code: {0}")]
    Parse(String),
}

/// A point of the digital plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const ORIGIN: LatticePoint = LatticePoint { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    /// City-block norm of the point seen as a vector.
    pub fn l1(self) -> i64 {
        self.x.abs() + self.y.abs()
    }

    /// `self x other`, computed in `i128` so that it never overflows.
    pub fn cross(self, other: LatticePoint) -> i128 {
        self.x as i128 * other.y as i128 - self.y as i128 * other.x as i128
    }

    pub fn dot(self, other: LatticePoint) -> i128 {
        self.x as i128 * other.x as i128 + self.y as i128 * other.y as i128
    }

    pub fn norm2(self) -> i128 {
        self.dot(self)
    }

    pub fn scale(self, k: i64) -> Self {
        Self::new(self.x * k, self.y * k)
    }
}

impl Add for LatticePoint {
    type Output = LatticePoint;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for LatticePoint {
    type Output = LatticePoint;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for LatticePoint {
    type Output = LatticePoint;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}

impl From<(i64, i64)> for LatticePoint {
    fn from((x, y): (i64, i64)) -> Self {
        Self::new(x, y)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}
