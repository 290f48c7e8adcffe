use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use super::{ColumnSet, LatticeError, LatticePoint};

/// A Freeman 4-move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum Move {
    East = 0,
    North = 1,
    West = 2,
    South = 3,
}

impl Move {
    pub const ALL: [Move; 4] = [Move::East, Move::North, Move::West, Move::South];

    pub fn from_code(code: u8) -> Option<Move> {
        Self::ALL.get(code as usize).copied()
    }

    pub fn from_delta(d: LatticePoint) -> Option<Move> {
        match (d.x, d.y) {
            (1, 0) => Some(Move::East),
            (0, 1) => Some(Move::North),
            (-1, 0) => Some(Move::West),
            (0, -1) => Some(Move::South),
            _ => None,
        }
    }

    pub fn code(self) -> u8 {
        self as u8
    }

    pub fn delta(self) -> LatticePoint {
        match self {
            Move::East => LatticePoint::new(1, 0),
            Move::North => LatticePoint::new(0, 1),
            Move::West => LatticePoint::new(-1, 0),
            Move::South => LatticePoint::new(0, -1),
        }
    }

    pub fn opposite(self) -> Move {
        Self::ALL[(self.code() as usize + 2) % 4]
    }

    pub fn turn_left(self) -> Move {
        Self::ALL[(self.code() as usize + 1) % 4]
    }

    pub fn turn_right(self) -> Move {
        Self::ALL[(self.code() as usize + 3) % 4]
    }
}

/// A 4-connected digital curve given by a start point and Freeman moves.
///
/// A closed contour has as many points as moves (the start is not repeated);
/// an open one has one more point than moves.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Contour {
    start: LatticePoint,
    moves: Vec<Move>,
    closed: bool,
    points: Vec<LatticePoint>,
}

impl Contour {
    pub fn new(start: LatticePoint, moves: Vec<Move>, closed: bool) -> Result<Self, LatticeError> {
        let invalid = |msg: &str| Err(LatticeError::InvalidArgument(msg.to_string()));
        if closed && moves.is_empty() {
            return invalid("a closed contour needs at least one move");
        }
        let reverses = |a: Move, b: Move| a.opposite() == b;
        if moves.windows(2).any(|w| reverses(w[0], w[1])) {
            return invalid("consecutive moves reverse each other");
        }
        let mut points = Vec::with_capacity(moves.len() + 1);
        let mut p = start;
        points.push(p);
        for mv in &moves {
            p = p + mv.delta();
            points.push(p);
        }
        if closed {
            if p != start {
                return invalid("closed contour displacement does not sum to zero");
            }
            if reverses(*moves.last().unwrap(), moves[0]) {
                return invalid("closing move reverses the first move");
            }
            points.pop();
        }
        Ok(Self { start, moves, closed, points })
    }

    /// Builds a contour from consecutive 4-adjacent points.
    pub fn from_points(points: &[LatticePoint], closed: bool) -> Result<Self, LatticeError> {
        let Some(&start) = points.first() else {
            return Err(LatticeError::InvalidArgument("no points".into()));
        };
        let mut moves = Vec::with_capacity(points.len());
        let mut steps: Vec<_> = points.windows(2).map(|w| w[1] - w[0]).collect();
        if closed {
            steps.push(start - *points.last().unwrap());
        }
        for d in steps {
            moves.push(Move::from_delta(d).ok_or_else(|| {
                LatticeError::InvalidArgument(format!("points are not 4-adjacent (step {d})"))
            })?);
        }
        Self::new(start, moves, closed)
    }

    pub fn start(&self) -> LatticePoint {
        self.start
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    /// Number of points.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Point at a (possibly unwrapped) index; cyclic for closed contours.
    pub fn point_at(&self, index: i64) -> LatticePoint {
        let n = self.points.len() as i64;
        if self.closed {
            self.points[index.rem_euclid(n) as usize]
        } else {
            self.points[index as usize]
        }
    }

    /// Move leaving the point at `index` (cyclic for closed contours).
    pub fn move_at(&self, index: i64) -> Move {
        let n = self.moves.len() as i64;
        if self.closed {
            self.moves[index.rem_euclid(n) as usize]
        } else {
            self.moves[index as usize]
        }
    }

    /// Moves between the points at unwrapped indices `from` and `to`.
    pub fn moves_between(&self, from: i64, to: i64) -> Vec<Move> {
        (from..to).map(|k| self.move_at(k)).collect()
    }

    /// The same curve traversed in the opposite direction, from the same start.
    pub fn reversed(&self) -> Contour {
        let moves: Vec<Move> = self.moves.iter().rev().map(|m| m.opposite()).collect();
        let start = if self.closed { self.start } else { *self.points.last().unwrap() };
        Contour::new(start, moves, self.closed).expect("reversal preserves contour invariants")
    }

    /// Twice the signed area enclosed by a closed contour (positive when
    /// counterclockwise).
    pub fn signed_area2(&self) -> i128 {
        let n = self.points.len();
        (0..n).map(|k| self.points[k].cross(self.points[(k + 1) % n])).sum()
    }

    /// Pixels enclosed by a closed inter-pixel contour (pointel convention of
    /// the `lattice` module).
    pub fn enclosed_pixels(&self) -> BTreeSet<LatticePoint> {
        let mut crossings: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
        for (k, mv) in self.moves.iter().enumerate() {
            let p = self.points[k % self.points.len()];
            match mv {
                Move::North => crossings.entry(p.y).or_default().push(p.x),
                Move::South => crossings.entry(p.y - 1).or_default().push(p.x),
                _ => {}
            }
        }
        let mut out = BTreeSet::new();
        for (y, mut xs) in crossings {
            xs.sort_unstable();
            for pair in xs.chunks(2) {
                if let [a, b] = pair {
                    out.extend((*a..*b).map(|x| LatticePoint::new(x, y)));
                }
            }
        }
        out
    }
}

/// A finite pixel set the contour tracer can query.
pub trait PixelSet {
    fn contains(&self, p: LatticePoint) -> bool;
    /// Lexicographically smallest pixel, `None` when empty.
    fn min_pixel(&self) -> Option<LatticePoint>;
    fn is_connected(&self) -> bool;
}

impl PixelSet for ColumnSet {
    fn contains(&self, p: LatticePoint) -> bool {
        ColumnSet::contains(self, p)
    }

    fn min_pixel(&self) -> Option<LatticePoint> {
        self.columns().next().map(|(x, lo, _)| LatticePoint::new(x, lo))
    }

    fn is_connected(&self) -> bool {
        ColumnSet::is_connected(self)
    }
}

fn bfs_connected(contains: impl Fn(LatticePoint) -> bool, start: LatticePoint, len: usize) -> bool {
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(p) = queue.pop_front() {
        for mv in Move::ALL {
            let q = p + mv.delta();
            if contains(q) && seen.insert(q) {
                queue.push_back(q);
            }
        }
    }
    seen.len() == len
}

impl PixelSet for BTreeSet<LatticePoint> {
    fn contains(&self, p: LatticePoint) -> bool {
        BTreeSet::contains(self, &p)
    }

    fn min_pixel(&self) -> Option<LatticePoint> {
        self.first().copied()
    }

    fn is_connected(&self) -> bool {
        self.first().is_some_and(|&s| bfs_connected(|p| BTreeSet::contains(self, &p), s, self.len()))
    }
}

impl PixelSet for HashSet<LatticePoint> {
    fn contains(&self, p: LatticePoint) -> bool {
        HashSet::contains(self, &p)
    }

    fn min_pixel(&self) -> Option<LatticePoint> {
        self.iter().min().copied()
    }

    fn is_connected(&self) -> bool {
        self.iter().next().is_some_and(|&s| bfs_connected(|p| HashSet::contains(self, &p), s, self.len()))
    }
}

/// Pixels on the left and right of the unit edge leaving pointel `v` along `mv`.
fn edge_sides(v: LatticePoint, mv: Move) -> (LatticePoint, LatticePoint) {
    let (x, y) = (v.x, v.y);
    let p = LatticePoint::new;
    match mv {
        Move::East => (p(x, y), p(x, y - 1)),
        Move::North => (p(x - 1, y), p(x, y)),
        Move::West => (p(x - 1, y - 1), p(x - 1, y)),
        Move::South => (p(x, y - 1), p(x - 1, y - 1)),
    }
}

/// Traces the outer inter-pixel boundary of a 4-connected pixel set,
/// counterclockwise, starting at its lexicographically smallest pointel.
///
/// Diagonal contacts are not followed: at a pinch the tracer keeps to the
/// pixel it came along.
pub fn trace_contour<S: PixelSet + ?Sized>(pixels: &S) -> Result<Contour, LatticeError> {
    let start = pixels.min_pixel().ok_or_else(|| LatticeError::InvalidArgument("empty pixel set".into()))?;
    if !pixels.is_connected() {
        return Err(LatticeError::NotConnected);
    }
    let is_boundary = |v: LatticePoint, mv: Move| {
        let (left, right) = edge_sides(v, mv);
        pixels.contains(left) && !pixels.contains(right)
    };
    // The bottom edge of the smallest pixel is a boundary edge heading east.
    let first = Move::East;
    let mut moves = vec![first];
    let mut v = start + first.delta();
    let mut heading = first;
    while !(v == start && heading_after(v, heading, &is_boundary) == Some(first)) {
        let next =
            heading_after(v, heading, &is_boundary).expect("a boundary edge always continues at a pointel");
        moves.push(next);
        v = v + next.delta();
        heading = next;
    }
    Contour::new(start, moves, true)
}

fn heading_after(
    v: LatticePoint,
    heading: Move,
    is_boundary: &impl Fn(LatticePoint, Move) -> bool,
) -> Option<Move> {
    [heading.turn_left(), heading, heading.turn_right()].into_iter().find(|&mv| is_boundary(v, mv))
}
