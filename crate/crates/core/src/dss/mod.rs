//! Arithmetic digital straight segments (DSS).
//!
//! A standard line `(a, b, mu)` is the set of lattice points with
//! `mu <= a x - b y < mu + |a| + |b|`; a run of contour points is a DSS when
//! some standard line contains it. Lines are oriented so that `(b, a)` points
//! along the direction of travel. With that convention the upper leaning
//! points (remainder `mu`) lie on the left of the run.

mod maximal;
mod oracle;
mod recognizer;

pub use maximal::{back, front, maximal_segments, Extremity, MaximalSegment, TangentialCover};
pub use oracle::{is_dss_oracle, oracle_front, oracle_maximal_segments};
pub use recognizer::DssRecognizer;

use num_integer::Integer;
use thiserror::Error;

use crate::lattice::LatticePoint;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DssError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("the whole closed contour is a single digital straight segment")]
    DegenerateContour,
}

/// Arithmetic line `mu <= a x - b y < mu + |a| + |b|` with `gcd(|a|, |b|) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StandardLine {
    a: i64,
    b: i64,
    mu: i64,
}

impl StandardLine {
    pub fn new(a: i64, b: i64, mu: i64) -> Result<Self, DssError> {
        if a == 0 && b == 0 {
            return Err(DssError::InvalidArgument("(a, b) must be nonzero".into()));
        }
        if a.gcd(&b) != 1 {
            return Err(DssError::InvalidArgument(format!("({a}, {b}) is not primitive")));
        }
        Ok(Self { a, b, mu })
    }

    pub(crate) fn new_unchecked(a: i64, b: i64, mu: i64) -> Self {
        debug_assert_eq!(a.gcd(&b), 1, "({a}, {b}) must be primitive");
        Self { a, b, mu }
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn mu(&self) -> i64 {
        self.mu
    }

    /// `|a| + |b|`, the number of remainder values the line admits.
    pub fn thickness(&self) -> i64 {
        self.a.abs() + self.b.abs()
    }

    /// Direction vector `(b, a)`.
    pub fn direction(&self) -> LatticePoint {
        LatticePoint::new(self.b, self.a)
    }

    pub fn remainder(&self, p: LatticePoint) -> i64 {
        remainder(self, p)
    }

    pub fn contains(&self, p: LatticePoint) -> bool {
        let r = self.remainder(p);
        self.mu <= r && r < self.mu + self.thickness()
    }

    pub fn is_upper_leaning(&self, p: LatticePoint) -> bool {
        self.remainder(p) == self.mu
    }

    pub fn is_lower_leaning(&self, p: LatticePoint) -> bool {
        self.remainder(p) == self.mu + self.thickness() - 1
    }
}

/// The remainder `a x - b y` of `p` with respect to `line`.
pub fn remainder(line: &StandardLine, p: LatticePoint) -> i64 {
    let r = line.a as i128 * p.x as i128 - line.b as i128 * p.y as i128;
    i64::try_from(r).expect("remainder overflows i64")
}

/// A recognized DSS over the unwrapped contour index range `[first, last]`,
/// with its principal leaning points. `u1`/`l1` come first along the run,
/// `u2`/`l2` last.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DssWitness {
    pub line: StandardLine,
    pub first: i64,
    pub last: i64,
    pub u1: LatticePoint,
    pub u2: LatticePoint,
    pub l1: LatticePoint,
    pub l2: LatticePoint,
}

impl DssWitness {
    /// Number of moves spanned, i.e. the city-block length of the run.
    pub fn len(&self) -> i64 {
        self.last - self.first
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
