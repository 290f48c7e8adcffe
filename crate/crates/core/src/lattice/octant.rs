use super::{LatticeError, LatticePoint};

/// One of the eight symmetries of the square lattice (signed axis
/// permutations). Applied as: negate the flagged axes, then optionally swap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Octant {
    pub neg_x: bool,
    pub neg_y: bool,
    pub swap: bool,
}

impl Octant {
    pub const IDENTITY: Octant = Octant { neg_x: false, neg_y: false, swap: false };

    pub fn apply(self, v: LatticePoint) -> LatticePoint {
        let x = if self.neg_x { -v.x } else { v.x };
        let y = if self.neg_y { -v.y } else { v.y };
        if self.swap {
            LatticePoint::new(y, x)
        } else {
            LatticePoint::new(x, y)
        }
    }

    pub fn invert(self, v: LatticePoint) -> LatticePoint {
        let v = if self.swap { LatticePoint::new(v.y, v.x) } else { v };
        LatticePoint::new(if self.neg_x { -v.x } else { v.x }, if self.neg_y { -v.y } else { v.y })
    }

    /// Whether the symmetry reverses orientation.
    pub fn is_reflection(self) -> bool {
        self.neg_x ^ self.neg_y ^ self.swap
    }
}

/// Maps the displacement `q - p` into the first octant `0 <= dy <= dx`.
pub fn octant_normalize(p: LatticePoint, q: LatticePoint) -> Result<(Octant, LatticePoint), LatticeError> {
    if p == q {
        return Err(LatticeError::InvalidArgument("octant of a zero displacement is undefined".into()));
    }
    let d = q - p;
    let octant = Octant { neg_x: d.x < 0, neg_y: d.y < 0, swap: d.y.abs() > d.x.abs() };
    Ok((octant, octant.apply(d)))
}

/// A rotation by a multiple of a quarter turn, numbered so that rotation `k`
/// sends Freeman code `k` to code 0 and code `k + 1` to code 1. Rotations
/// preserve orientation, so a clockwise contour stays clockwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Rotation(u8);

impl Rotation {
    pub const IDENTITY: Rotation = Rotation(0);

    pub fn new(k: u8) -> Self {
        Rotation(k % 4)
    }

    /// The rotation bringing the two adjacent codes `{k, k+1}` to `{0, 1}`.
    pub fn for_codes(first: u8, second: u8) -> Option<Self> {
        match (second + 4 - first) % 4 {
            1 => Some(Rotation::new(first)),
            3 => Some(Rotation::new(second)),
            _ => None,
        }
    }

    /// The rotation bringing a nonzero vector into `x > 0, y >= 0`.
    pub fn for_vector(v: LatticePoint) -> Option<Self> {
        let k = match (v.x.signum(), v.y.signum()) {
            (0, 0) => return None,
            (1, _) if v.y >= 0 => 0,
            (_, 1) if v.x <= 0 => 1,
            (-1, _) if v.y <= 0 => 2,
            _ => 3,
        };
        Some(Rotation(k))
    }

    pub fn index(self) -> u8 {
        self.0
    }

    pub fn map_code(self, code: u8) -> u8 {
        (code + 4 - self.0) % 4
    }

    pub fn unmap_code(self, code: u8) -> u8 {
        (code + self.0) % 4
    }

    /// Rotates by `-k` quarter turns.
    pub fn apply(self, v: LatticePoint) -> LatticePoint {
        match self.0 {
            0 => v,
            1 => LatticePoint::new(v.y, -v.x),
            2 => LatticePoint::new(-v.x, -v.y),
            _ => LatticePoint::new(-v.y, v.x),
        }
    }

    pub fn invert(self, v: LatticePoint) -> LatticePoint {
        Rotation((4 - self.0) % 4).apply(v)
    }
}
