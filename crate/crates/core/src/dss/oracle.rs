//! Exhaustive reference implementations, used to cross-check the
//! incremental machinery on small inputs.

use num_integer::Integer;

use super::StandardLine;
use crate::lattice::{Contour, LatticePoint};

/// Searches every primitive `(a, b)` with `|a|, |b|` at most the number of
/// moves, by increasing `|a| + |b|`, for a standard line containing all
/// `points`. The line returned is oriented along the run and has
/// `mu = min remainder`; a single point gets `(0, 1, -y)`.
pub fn is_dss_oracle(points: &[LatticePoint]) -> Option<StandardLine> {
    let (&first, &last) = (points.first()?, points.last()?);
    if points.len() == 1 {
        return Some(StandardLine::new_unchecked(0, 1, -first.y));
    }
    let n = (points.len() - 1) as i64;
    let disp = last - first;
    for s in 1..=2 * n {
        for a in -s.min(n)..=s.min(n) {
            let b_abs = s - a.abs();
            if b_abs > n || a.abs().gcd(&b_abs) != 1 {
                continue;
            }
            let signs: &[i64] = if b_abs == 0 { &[1] } else { &[1, -1] };
            for &sign in signs {
                let b = sign * b_abs;
                if b * disp.x + a * disp.y <= 0 {
                    continue;
                }
                if let Some(mu) = remainder_floor(points, a, b, s) {
                    return Some(StandardLine::new_unchecked(a, b, mu));
                }
            }
        }
    }
    None
}

/// Minimum remainder if all remainders fit in a window of `width` values.
fn remainder_floor(points: &[LatticePoint], a: i64, b: i64, width: i64) -> Option<i64> {
    let mut lo = i64::MAX;
    let mut hi = i64::MIN;
    for p in points {
        let r = a * p.x - b * p.y;
        lo = lo.min(r);
        hi = hi.max(r);
        if hi - lo >= width {
            return None;
        }
    }
    Some(lo)
}

/// Longest DSS run starting at unwrapped index `i`, by brute force. On a
/// closed contour the run never covers more than the whole contour.
pub fn oracle_front(contour: &Contour, i: i64) -> i64 {
    let n = contour.len() as i64;
    let cap = if contour.is_closed() { i + n - 1 } else { n - 1 };
    let mut pts = vec![contour.point_at(i)];
    let mut j = i;
    while j < cap {
        pts.push(contour.point_at(j + 1));
        if is_dss_oracle(&pts).is_none() {
            break;
        }
        j += 1;
    }
    j
}

/// Maximal segments by exhaustive search: all `[i, j]` that are DSS and can
/// be extended on neither side. Returned as unwrapped `(first, last)` with
/// `first` in `[0, N)`, sorted by `first`.
pub fn oracle_maximal_segments(contour: &Contour) -> Vec<(i64, i64)> {
    let n = contour.len() as i64;
    let mut out = Vec::new();
    for i in 0..n {
        let j = oracle_front(contour, i);
        let extendable_back = if contour.is_closed() {
            // A full-contour run cannot be extended anywhere.
            j - i + 1 < n && {
                let pts: Vec<_> = (i - 1..=j).map(|k| contour.point_at(k)).collect();
                is_dss_oracle(&pts).is_some()
            }
        } else {
            i > 0 && {
                let pts: Vec<_> = (i - 1..=j).map(|k| contour.point_at(k)).collect();
                is_dss_oracle(&pts).is_some()
            }
        };
        if !extendable_back {
            out.push((i, j));
        }
    }
    out
}
