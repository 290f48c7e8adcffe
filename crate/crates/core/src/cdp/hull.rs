use std::collections::BTreeMap;

use num_integer::Integer;

use super::{CdpError, DigitalEdge};
use crate::lattice::{ColumnSet, LatticePoint};

/// Convex hull of a lattice set: its vertices in counterclockwise order,
/// starting from the lexicographically smallest point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cdp {
    vertices: Vec<LatticePoint>,
    degenerate: bool,
}

impl Cdp {
    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    /// Number of vertices (equivalently, of edges).
    pub fn num_edges(&self) -> usize {
        if self.degenerate {
            self.vertices.len().saturating_sub(1)
        } else {
            self.vertices.len()
        }
    }

    /// A single point or a segment.
    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    /// Digital edges between consecutive vertices, counterclockwise.
    pub fn edges(&self) -> Result<Vec<DigitalEdge>, CdpError> {
        if self.degenerate {
            return Err(CdpError::InvalidArgument("degenerate hull has no polygon edges".into()));
        }
        let n = self.vertices.len();
        (0..n).map(|k| DigitalEdge::new(self.vertices[k], self.vertices[(k + 1) % n])).collect()
    }

    /// City-block perimeter, the sum of the edges' L1 lengths.
    pub fn perimeter_l1(&self) -> i64 {
        let n = self.vertices.len();
        if n < 2 {
            return 0;
        }
        (0..n).map(|k| (self.vertices[(k + 1) % n] - self.vertices[k]).l1()).sum()
    }
}

fn turn(o: LatticePoint, a: LatticePoint, b: LatticePoint) -> i128 {
    (a - o).cross(b - o)
}

/// Andrew's monotone chain with exact orientation tests; points lying on
/// hull edges are not vertices.
pub fn convex_hull(points: &[LatticePoint]) -> Result<Cdp, CdpError> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.is_empty() {
        return Err(CdpError::InvalidArgument("empty point set".into()));
    }
    if pts.len() == 1 {
        return Ok(Cdp { vertices: pts, degenerate: true });
    }
    let mut lower: Vec<LatticePoint> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && turn(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<LatticePoint> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && turn(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() <= 2 {
        // All points collinear: keep the two extremes.
        return Ok(Cdp { vertices: vec![pts[0], *pts.last().unwrap()], degenerate: true });
    }
    Ok(Cdp { vertices: lower, degenerate: false })
}

/// Lattice column `[lo, hi]` of the hull at abscissa `x`, or `None` when the
/// vertical line misses every lattice point of the hull.
struct HullColumns {
    lower: Vec<LatticePoint>,
    upper: Vec<LatticePoint>,
}

impl HullColumns {
    fn new(hull: &Cdp) -> Self {
        let v = hull.vertices();
        // Split the counterclockwise cycle at its rightmost-highest vertex.
        let right = (0..v.len()).max_by_key(|&k| v[k]).unwrap();
        let lower = v[..=right].to_vec();
        let mut upper: Vec<LatticePoint> = v[right..].to_vec();
        upper.push(v[0]);
        upper.reverse();
        Self { lower, upper }
    }

    fn bound(chain: &[LatticePoint], x: i64, top: bool) -> i64 {
        let j = chain.partition_point(|p| p.x < x);
        if chain[j].x == x {
            let ys = chain[j..].iter().take_while(|p| p.x == x).map(|p| p.y);
            return if top { ys.max().unwrap() } else { ys.min().unwrap() };
        }
        let (p, q) = (chain[j - 1], chain[j]);
        let num = p.y as i128 * (q.x - p.x) as i128 + (q.y - p.y) as i128 * (x - p.x) as i128;
        let den = (q.x - p.x) as i128;
        let y = if top { Integer::div_floor(&num, &den) } else { Integer::div_ceil(&num, &den) };
        y as i64
    }

    fn column(&self, x: i64) -> Option<(i64, i64)> {
        let lo = Self::bound(&self.lower, x, false);
        let hi = Self::bound(&self.upper, x, true);
        (lo <= hi).then_some((lo, hi))
    }
}

fn collinear_is_complete(hull: &Cdp, count: usize) -> bool {
    let v = hull.vertices();
    if v.len() == 1 {
        return count == 1;
    }
    let d = v[1] - v[0];
    let g = d.x.abs().gcd(&d.y.abs());
    count as i64 == g + 1
}

/// Whether the set equals the lattice points of its convex hull.
pub fn is_cdp(points: &[LatticePoint]) -> bool {
    let mut columns: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
    for p in points {
        columns.entry(p.x).or_default().push(p.y);
    }
    let Ok(hull) = convex_hull(points) else {
        return false;
    };
    let mut runs = Vec::with_capacity(columns.len());
    let mut count = 0;
    for (x, mut ys) in columns {
        ys.sort_unstable();
        ys.dedup();
        count += ys.len();
        if ys.last().unwrap() - ys[0] + 1 != ys.len() as i64 {
            return false;
        }
        runs.push((x, ys[0], *ys.last().unwrap()));
    }
    if hull.is_degenerate() {
        return collinear_is_complete(&hull, count);
    }
    runs_match_hull(&hull, &runs)
}

/// [`is_cdp`] for a column set, without listing its points.
pub fn is_cdp_columns(set: &ColumnSet) -> bool {
    let extremes: Vec<LatticePoint> =
        set.columns().flat_map(|(x, lo, hi)| [LatticePoint::new(x, lo), LatticePoint::new(x, hi)]).collect();
    let Ok(hull) = convex_hull(&extremes) else {
        return false;
    };
    if hull.is_degenerate() {
        return collinear_is_complete(&hull, set.len() as usize);
    }
    let runs: Vec<_> = set.columns().collect();
    runs_match_hull(&hull, &runs)
}

fn runs_match_hull(hull: &Cdp, runs: &[(i64, i64, i64)]) -> bool {
    let cols = HullColumns::new(hull);
    let x_min = hull.vertices()[0].x;
    let x_max = cols.lower.last().unwrap().x;
    let mut k = 0;
    for x in x_min..=x_max {
        let expected = cols.column(x);
        let actual = (k < runs.len() && runs[k].0 == x).then(|| {
            k += 1;
            (runs[k - 1].1, runs[k - 1].2)
        });
        if expected != actual {
            return false;
        }
    }
    k == runs.len()
}
