use num_integer::Integer;

use super::CdpError;
use crate::lattice::{LatticePoint, Move, Rotation};
use crate::pattern::{cf_decompose, pattern_word};

/// Slope and multiplicity of a digital edge, in the frame where the edge
/// runs in the first octant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EdgeDecomposition {
    /// Reduced slope `a/b` with `0 <= a <= b`.
    pub a: i64,
    pub b: i64,
    /// Number of pattern repetitions.
    pub f: i64,
}

/// Splits a displacement into `f` copies of a primitive step and reports the
/// step's first-octant slope.
pub fn edge_pattern_decomposition(d: LatticePoint) -> Result<EdgeDecomposition, CdpError> {
    let rot = Rotation::for_vector(d).ok_or_else(|| CdpError::InvalidArgument("zero displacement".into()))?;
    let q = rot.apply(d);
    let f = q.x.gcd(&q.y);
    let (dx, dy) = (q.x / f, q.y / f);
    let (a, b) = if dy <= dx { (dy, dx) } else { (dx, dy) };
    Ok(EdgeDecomposition { a, b, f })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DigitalEdge {
    pub from: LatticePoint,
    pub to: LatticePoint,
    pub decomposition: EdgeDecomposition,
}

impl DigitalEdge {
    pub fn new(from: LatticePoint, to: LatticePoint) -> Result<Self, CdpError> {
        Ok(Self { from, to, decomposition: edge_pattern_decomposition(to - from)? })
    }

    pub fn displacement(&self) -> LatticePoint {
        self.to - self.from
    }

    /// Primitive direction of the edge.
    pub fn direction(&self) -> LatticePoint {
        let d = self.displacement();
        let g = d.x.abs().gcd(&d.y.abs());
        LatticePoint::new(d.x / g, d.y / g)
    }

    pub fn multiplicity(&self) -> i64 {
        self.decomposition.f
    }

    pub fn l1_length(&self) -> i64 {
        self.displacement().l1()
    }

    /// Depth of the continued fraction of the edge's slope.
    pub fn complexity(&self) -> usize {
        let EdgeDecomposition { a, b, .. } = self.decomposition;
        cf_decompose(a, b).expect("edge slopes are reduced").complexity()
    }

    /// The move word the edge must have when traversed with the exterior on
    /// the left: its pattern repeated `f` times, expressed back in contour
    /// moves.
    pub fn expected_moves(&self) -> Vec<Move> {
        let EdgeDecomposition { a, b, f } = self.decomposition;
        let word = pattern_word(&cf_decompose(a, b).expect("edge slopes are reduced")).power(f as usize);
        let rot = Rotation::for_vector(self.displacement()).expect("edges have nonzero length");
        let q = rot.apply(self.displacement());
        let steep = q.y > q.x;
        let letters: Vec<u8> = if steep {
            // Mirror about the diagonal: letters swap and, since mirroring
            // exchanges the sides of the line, the word is read backwards.
            word.bytes().rev().map(|c| if c == b'0' { 1 } else { 0 }).collect()
        } else {
            word.bytes().map(|c| c - b'0').collect()
        };
        letters.into_iter().map(|c| Move::from_code(rot.unmap_code(c)).expect("codes are in 0..4")).collect()
    }
}
