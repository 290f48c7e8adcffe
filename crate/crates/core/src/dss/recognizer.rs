use num_integer::Integer;

use super::{DssError, DssWitness, StandardLine};
use crate::lattice::{LatticePoint, Move, Rotation};

/// Incremental arithmetic recognition of a DSS that can grow at both ends.
///
/// The run is rotated so that its moves are East/North; in that frame the
/// line has `a, b >= 0` and the classical leaning-point update rules apply.
/// While the run is still straight the frame is provisional and is rebuilt
/// when the second code shows up.
#[derive(Debug, Clone)]
pub struct DssRecognizer {
    // Original coordinates of the end points.
    first: LatticePoint,
    last: LatticePoint,
    first_index: i64,
    last_index: i64,
    codes: [Option<Move>; 2],
    frame: Option<Rotation>,
    // Normalized frame.
    a: i64,
    b: i64,
    mu: i64,
    uf: LatticePoint,
    ul: LatticePoint,
    lf: LatticePoint,
    ll: LatticePoint,
}

enum End {
    Front,
    Back,
}

impl DssRecognizer {
    /// A one-point DSS, the point carrying contour index `index`.
    pub fn new(p: LatticePoint, index: i64) -> Self {
        Self {
            first: p,
            last: p,
            first_index: index,
            last_index: index,
            codes: [None, None],
            frame: None,
            a: 0,
            b: 1,
            mu: -p.y,
            uf: p,
            ul: p,
            lf: p,
            ll: p,
        }
    }

    /// Builds the recognizer for consecutive points, or `None` when they do
    /// not form a DSS.
    pub fn from_points(points: &[LatticePoint]) -> Result<Option<Self>, DssError> {
        let Some((&head, tail)) = points.split_first() else {
            return Err(DssError::InvalidArgument("no points".into()));
        };
        let mut rec = Self::new(head, 0);
        for &p in tail {
            if !rec.extend_front(p)? {
                return Ok(None);
            }
        }
        Ok(Some(rec))
    }

    pub fn first_index(&self) -> i64 {
        self.first_index
    }

    pub fn last_index(&self) -> i64 {
        self.last_index
    }

    /// Appends `next` after the last point. Returns `Ok(false)` and leaves the
    /// state untouched when the longer run is not a DSS.
    pub fn extend_front(&mut self, next: LatticePoint) -> Result<bool, DssError> {
        let mv = Move::from_delta(next - self.last)
            .ok_or_else(|| DssError::InvalidArgument(format!("{next} is not 4-adjacent to {}", self.last)))?;
        let accepted = self.try_extend(End::Front, next, mv);
        if accepted {
            self.last = next;
            self.last_index += 1;
        }
        Ok(accepted)
    }

    /// Prepends `prev` before the first point.
    pub fn extend_back(&mut self, prev: LatticePoint) -> Result<bool, DssError> {
        let mv = Move::from_delta(self.first - prev).ok_or_else(|| {
            DssError::InvalidArgument(format!("{prev} is not 4-adjacent to {}", self.first))
        })?;
        let accepted = self.try_extend(End::Back, prev, mv);
        if accepted {
            self.first = prev;
            self.first_index -= 1;
        }
        Ok(accepted)
    }

    fn try_extend(&mut self, end: End, p: LatticePoint, mv: Move) -> bool {
        if !self.admit_code(mv) {
            return false;
        }
        let rot = self.frame.expect("frame is set once a move is admitted");
        let q = rot.apply(p);
        let mut next = self.clone();
        if next.absorb(end, q) {
            *self = next;
            true
        } else {
            false
        }
    }

    /// Records the move code, choosing or rebuilding the frame. Returns
    /// `false` if the code cannot belong to a DSS containing the run.
    fn admit_code(&mut self, mv: Move) -> bool {
        match self.codes {
            [None, _] => {
                self.codes[0] = Some(mv);
                self.set_straight_frame(Rotation::new(mv.code()));
                true
            }
            [Some(c), None] if c == mv => true,
            [Some(c), None] => {
                let Some(rot) = Rotation::for_codes(c.code(), mv.code()) else {
                    return false;
                };
                self.codes[1] = Some(mv);
                if Some(rot) != self.frame {
                    self.set_straight_frame(rot);
                }
                true
            }
            [Some(c), Some(d)] => c == mv || d == mv,
        }
    }

    /// Resets the normalized state for a straight run seen in frame `rot`.
    fn set_straight_frame(&mut self, rot: Rotation) {
        let first = rot.apply(self.first);
        let last = rot.apply(self.last);
        self.frame = Some(rot);
        if first.y == last.y {
            // Horizontal in the frame: (0, 1, -y).
            self.a = 0;
            self.b = 1;
            self.mu = -first.y;
        } else {
            // Vertical in the frame: (1, 0, x).
            self.a = 1;
            self.b = 0;
            self.mu = first.x;
        }
        self.uf = first;
        self.lf = first;
        self.ul = last;
        self.ll = last;
    }

    fn remainder(&self, p: LatticePoint) -> i64 {
        self.a * p.x - self.b * p.y
    }

    fn set_slope(&mut self, dir: LatticePoint) {
        debug_assert!(dir.x >= 0 && dir.y >= 0);
        debug_assert_eq!(dir.x.gcd(&dir.y), 1, "slope vector {dir} is not primitive");
        self.b = dir.x;
        self.a = dir.y;
    }

    /// Leaning-point update for a point `q` (normalized frame) added at `end`.
    fn absorb(&mut self, end: End, q: LatticePoint) -> bool {
        let r = self.remainder(q);
        let upper = self.mu;
        let lower = self.mu + self.a + self.b - 1;
        if upper <= r && r <= lower {
            match end {
                End::Front => {
                    if r == upper {
                        self.ul = q;
                    }
                    if r == lower {
                        self.ll = q;
                    }
                }
                End::Back => {
                    if r == upper {
                        self.uf = q;
                    }
                    if r == lower {
                        self.lf = q;
                    }
                }
            }
            return true;
        }
        if r == upper - 1 {
            match end {
                End::Front => {
                    self.ul = q;
                    self.lf = self.ll;
                    self.set_slope(q - self.uf);
                }
                End::Back => {
                    self.uf = q;
                    self.ll = self.lf;
                    self.set_slope(self.ul - q);
                }
            }
            self.mu = self.remainder(q);
            return true;
        }
        if r == lower + 1 {
            match end {
                End::Front => {
                    self.ll = q;
                    self.uf = self.ul;
                    self.set_slope(q - self.lf);
                }
                End::Back => {
                    self.lf = q;
                    self.ul = self.uf;
                    self.set_slope(self.ll - q);
                }
            }
            self.mu = self.remainder(self.uf);
            return true;
        }
        false
    }

    /// The current line in original coordinates, oriented along the run.
    pub fn line(&self) -> StandardLine {
        let Some(rot) = self.frame else {
            return StandardLine::new_unchecked(0, 1, -self.first.y);
        };
        // a x - b y = <(a, -b), p> and rotations are orthogonal.
        let coeffs = rot.invert(LatticePoint::new(self.a, -self.b));
        StandardLine::new_unchecked(coeffs.x, -coeffs.y, self.mu)
    }

    pub fn witness(&self) -> DssWitness {
        let back = |p: LatticePoint| self.frame.map_or(p, |rot| rot.invert(p));
        DssWitness {
            line: self.line(),
            first: self.first_index,
            last: self.last_index,
            u1: back(self.uf),
            u2: back(self.ul),
            l1: back(self.lf),
            l2: back(self.ll),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dss::is_dss_oracle;

    fn walk(start: LatticePoint, word: &str) -> Vec<LatticePoint> {
        let mut pts = vec![start];
        for c in word.bytes() {
            let mv = Move::from_code(c - b'0').unwrap();
            pts.push(*pts.last().unwrap() + mv.delta());
        }
        pts
    }

    #[test]
    fn straight_run_stays_horizontal() {
        let pts = walk(LatticePoint::ORIGIN, "000");
        let rec = DssRecognizer::from_points(&pts).unwrap().unwrap();
        assert_eq!(rec.line(), StandardLine::new(0, 1, 0).unwrap());
    }

    #[test]
    fn pattern_word_grows_to_its_characteristics() {
        let pts = walk(LatticePoint::ORIGIN, "0001001");
        let mut rec = DssRecognizer::new(pts[0], 0);
        for (k, &p) in pts.iter().enumerate().skip(1) {
            assert!(rec.extend_front(p).unwrap());
            assert_eq!(Some(rec.line()), is_dss_oracle(&pts[..=k]), "prefix {k}");
        }
        let w = rec.witness();
        assert_eq!(w.line, StandardLine::new(2, 5, 0).unwrap());
        assert_eq!((w.u1, w.u2), (LatticePoint::new(0, 0), LatticePoint::new(5, 2)));
        assert_eq!((w.l1, w.l2), (LatticePoint::new(3, 0), LatticePoint::new(3, 0)));
    }

    #[test]
    fn breaking_move_is_rejected_without_side_effects() {
        let pts = walk(LatticePoint::ORIGIN, "00010010001001");
        let mut rec = DssRecognizer::from_points(&pts).unwrap().unwrap();
        let before = rec.witness();
        assert_eq!(before.line, StandardLine::new(2, 5, 0).unwrap());
        // From the upper leaning end, a north move drops the remainder to mu - 5.
        let up = *pts.last().unwrap() + Move::North.delta();
        assert!(!rec.extend_front(up).unwrap());
        assert_eq!(rec.witness(), before);
        assert!(is_dss_oracle(&[pts.clone(), vec![up]].concat()).is_none());
        // The recognizer is still usable afterwards.
        assert!(rec.extend_front(*pts.last().unwrap() + Move::East.delta()).unwrap());
    }

    #[test]
    fn non_adjacent_point_is_an_error() {
        let mut rec = DssRecognizer::new(LatticePoint::ORIGIN, 0);
        assert!(matches!(rec.extend_front(LatticePoint::new(1, 1)), Err(DssError::InvalidArgument(_))));
        assert!(rec.extend_back(LatticePoint::new(0, 2)).is_err());
    }

    #[test]
    fn opposite_codes_are_rejected() {
        let mut rec = DssRecognizer::new(LatticePoint::ORIGIN, 0);
        assert!(rec.extend_front(LatticePoint::new(1, 0)).unwrap());
        assert!(rec.extend_back(LatticePoint::new(-1, 0)).unwrap());
        assert!(rec.extend_front(LatticePoint::new(1, 1)).unwrap());
        // A south move at the back joins North, East and now South.
        assert!(!rec.extend_back(LatticePoint::new(-1, 1)).unwrap());
    }

    #[test]
    fn growing_backwards_matches_growing_forwards() {
        let pts = walk(LatticePoint::new(3, -2), "0100101001010");
        let fwd = DssRecognizer::from_points(&pts).unwrap().unwrap();
        let mut bwd = DssRecognizer::new(*pts.last().unwrap(), pts.len() as i64 - 1);
        for &p in pts.iter().rev().skip(1) {
            assert!(bwd.extend_back(p).unwrap());
        }
        assert_eq!(fwd.witness(), bwd.witness());
    }

    #[test]
    fn frame_switch_on_second_code() {
        // Straight north run, then a west move: quadrant {North, West}.
        let pts = walk(LatticePoint::ORIGIN, "1112111");
        let rec = DssRecognizer::from_points(&pts).unwrap().unwrap();
        let line = rec.line();
        assert_eq!(line.direction(), LatticePoint::new(-1, 3));
        for p in &pts {
            assert!(line.contains(*p));
        }
        assert_eq!(Some(line), is_dss_oracle(&pts));
    }
}
