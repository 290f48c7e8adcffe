use super::{DssError, DssRecognizer, DssWitness};
use crate::lattice::Contour;

/// Result of a front or back query. `unwrapped` is measured from the query
/// index without reduction, so `front(i).unwrapped >= i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Extremity {
    pub index: usize,
    pub unwrapped: i64,
    /// The run wrapped around the whole closed contour.
    pub degenerate: bool,
}

/// A maximal segment; `first` lies in `[0, N)` and the segment spans `len`
/// moves, so `last = (first + len) mod N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaximalSegment {
    pub witness: DssWitness,
    pub first: usize,
    pub last: usize,
    pub len: usize,
}

impl MaximalSegment {
    pub fn first_unwrapped(&self) -> i64 {
        self.witness.first
    }

    pub fn last_unwrapped(&self) -> i64 {
        self.witness.last
    }
}

fn check_index(contour: &Contour, i: usize) -> Result<(), DssError> {
    if i >= contour.len() {
        return Err(DssError::InvalidArgument(format!(
            "index {i} out of range for a contour of {} points",
            contour.len()
        )));
    }
    Ok(())
}

fn start_at(contour: &Contour, i: i64) -> DssRecognizer {
    DssRecognizer::new(contour.point_at(i), i)
}

/// Extends forward as far as possible; the flag reports a full wrap.
fn grow_front(contour: &Contour, mut rec: DssRecognizer) -> (DssRecognizer, bool) {
    let n = contour.len() as i64;
    loop {
        let j = rec.last_index();
        if contour.is_closed() {
            if j - rec.first_index() + 1 >= n {
                return (rec, true);
            }
        } else if j + 1 >= n {
            return (rec, false);
        }
        let accepted = rec.extend_front(contour.point_at(j + 1)).expect("contour points are adjacent");
        if !accepted {
            return (rec, false);
        }
    }
}

fn grow_back(contour: &Contour, mut rec: DssRecognizer) -> (DssRecognizer, bool) {
    let n = contour.len() as i64;
    loop {
        let i = rec.first_index();
        if contour.is_closed() {
            if rec.last_index() - i + 1 >= n {
                return (rec, true);
            }
        } else if i == 0 {
            return (rec, false);
        }
        let accepted = rec.extend_back(contour.point_at(i - 1)).expect("contour points are adjacent");
        if !accepted {
            return (rec, false);
        }
    }
}

fn extremity(contour: &Contour, unwrapped: i64, degenerate: bool) -> Extremity {
    let n = contour.len() as i64;
    Extremity { index: unwrapped.rem_euclid(n) as usize, unwrapped, degenerate }
}

/// The last index `j` such that the run from `i` to `j` is a DSS.
pub fn front(contour: &Contour, i: usize) -> Result<Extremity, DssError> {
    check_index(contour, i)?;
    let (rec, degenerate) = grow_front(contour, start_at(contour, i as i64));
    Ok(extremity(contour, rec.last_index(), degenerate))
}

/// The first index `i` such that the run from `i` to `j` is a DSS.
pub fn back(contour: &Contour, j: usize) -> Result<Extremity, DssError> {
    check_index(contour, j)?;
    let (rec, degenerate) = grow_back(contour, start_at(contour, j as i64));
    Ok(extremity(contour, rec.first_index(), degenerate))
}

/// All maximal segments in contour order, sorted by `first`.
///
/// Each segment is found as `[back(j + 1), front(back(j + 1))]` from the end
/// `j` of its predecessor, so every point is visited a bounded number of
/// times per segment covering it.
pub fn maximal_segments(contour: &Contour) -> Result<Vec<MaximalSegment>, DssError> {
    let n = contour.len() as i64;
    let closed = contour.is_closed();
    let (seed, degenerate) = grow_back(contour, start_at(contour, 0));
    if degenerate {
        return Err(DssError::DegenerateContour);
    }
    let origin = seed.first_index();
    let (mut rec, _) = grow_front(contour, seed);
    let mut witnesses = Vec::new();
    loop {
        witnesses.push(rec.witness());
        let j = rec.last_index();
        if !closed && j == n - 1 {
            break;
        }
        let (back_rec, degenerate) = grow_back(contour, start_at(contour, j + 1));
        if degenerate {
            return Err(DssError::DegenerateContour);
        }
        if closed && back_rec.first_index() >= origin + n {
            break;
        }
        rec = grow_front(contour, back_rec).0;
    }
    let mut segments: Vec<MaximalSegment> = witnesses
        .into_iter()
        .map(|mut w| {
            let shift = w.first.rem_euclid(n) - w.first;
            w.first += shift;
            w.last += shift;
            MaximalSegment {
                witness: w,
                first: w.first as usize,
                last: w.last.rem_euclid(n) as usize,
                len: w.len() as usize,
            }
        })
        .collect();
    segments.sort_by_key(|s| s.first);
    Ok(segments)
}

/// Front and back of every index, read off a list of maximal segments.
///
/// `front(i)` is the end of the last segment starting at or before `i`;
/// `back(j)` is the start of the first segment ending at or after `j`.
#[derive(Debug, Clone)]
pub struct TangentialCover {
    n: i64,
    closed: bool,
    firsts: Vec<i64>,
    lasts: Vec<i64>,
}

impl TangentialCover {
    pub fn new(contour: &Contour, segments: &[MaximalSegment]) -> Result<Self, DssError> {
        if segments.is_empty() {
            return Err(DssError::InvalidArgument("no maximal segments".into()));
        }
        Ok(Self {
            n: contour.len() as i64,
            closed: contour.is_closed(),
            firsts: segments.iter().map(|s| s.first_unwrapped()).collect(),
            lasts: segments.iter().map(|s| s.last_unwrapped()).collect(),
        })
    }

    /// Unwrapped front of index `i`, at least `i`.
    pub fn front_of(&self, i: usize) -> i64 {
        let i = i as i64;
        let k = self.firsts.partition_point(|&f| f <= i);
        if k == 0 {
            debug_assert!(self.closed);
            self.lasts[self.lasts.len() - 1] - self.n
        } else {
            self.lasts[k - 1]
        }
    }

    /// Unwrapped back of index `j`, at most `j`.
    pub fn back_of(&self, j: usize) -> i64 {
        let j = j as i64;
        if self.closed {
            // Segments of the previous turn that wrap past index 0 come first.
            let k = self.lasts.partition_point(|&l| l - self.n < j);
            if k < self.lasts.len() {
                return self.firsts[k] - self.n;
            }
        }
        let k = self.lasts.partition_point(|&l| l < j);
        if k == self.lasts.len() {
            debug_assert!(self.closed);
            self.firsts[0] + self.n
        } else {
            self.firsts[k]
        }
    }
}
