//! Curvature from half-tangents: the circle through a point and the two
//! extremities of the longest digital straight segments leaving it.

use rayon::prelude::*;
use thiserror::Error;

use crate::dss::{back, front, maximal_segments, DssError, MaximalSegment, TangentialCover};
use crate::lattice::{Contour, LatticePoint, ShapeSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EstimatorError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Dss(#[from] DssError),
}

/// Unwrapped `(back(i), front(i))`.
pub fn half_tangents(contour: &Contour, i: usize) -> Result<(i64, i64), EstimatorError> {
    Ok((back(contour, i)?.unwrapped, front(contour, i)?.unwrapped))
}

/// Half-tangents at every index: the longest DSS runs `[back(i), i]` and
/// `[i, front(i)]`.
#[derive(Debug, Clone)]
pub struct HalfTangents {
    ends: Vec<(i64, i64)>,
}

impl HalfTangents {
    pub fn new(contour: &Contour) -> Result<Self, EstimatorError> {
        if !contour.is_closed() {
            let ends = (0..contour.len()).map(|i| half_tangents(contour, i)).collect::<Result<_, _>>()?;
            return Ok(Self { ends });
        }
        Self::from_segments(contour, &maximal_segments(contour)?)
    }

    /// Reads the half-tangents of a closed contour off its maximal segments.
    pub fn from_segments(contour: &Contour, segments: &[MaximalSegment]) -> Result<Self, EstimatorError> {
        if !contour.is_closed() {
            return Self::new(contour);
        }
        let cover = TangentialCover::new(contour, segments)?;
        let ends = (0..contour.len()).map(|i| (cover.back_of(i), cover.front_of(i))).collect();
        Ok(Self { ends })
    }

    pub fn get(&self, i: usize) -> (i64, i64) {
        self.ends[i]
    }

    /// L1 lengths of the backward and forward half-tangents at `i`.
    pub fn lengths_at(&self, i: usize) -> (i64, i64) {
        let (q, r) = self.ends[i];
        (i as i64 - q, r - i as i64)
    }

    /// Both half-tangent lengths at every index, in index order.
    pub fn lengths(&self) -> impl Iterator<Item = i64> + '_ {
        (0..self.ends.len()).flat_map(|i| {
            let (b, f) = self.lengths_at(i);
            [b, f]
        })
    }

    pub fn len(&self) -> usize {
        self.ends.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ends.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.ends.iter().copied()
    }
}

/// Radius of the circle through three lattice points, `f64::INFINITY` when
/// they are collinear.
pub fn circumcircle_radius(p: LatticePoint, q: LatticePoint, r: LatticePoint) -> Result<f64, EstimatorError> {
    if p == q || q == r || r == p {
        return Err(EstimatorError::InvalidArgument(format!("coincident points among {p}, {q}, {r}")));
    }
    let cross = (q - p).cross(r - p);
    if cross == 0 {
        return Ok(f64::INFINITY);
    }
    let (a, b, c) = ((q - p).norm2(), (r - q).norm2(), (p - r).norm2());
    let product = a.checked_mul(b).and_then(|ab| ab.checked_mul(c));
    let numerator = match product {
        Some(v) => (v as f64).sqrt(),
        None => (a as f64).sqrt() * (b as f64).sqrt() * (c as f64).sqrt(),
    };
    Ok(numerator / (2.0 * cross.unsigned_abs() as f64))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvatureEstimate {
    pub index: usize,
    /// Curvature in shape units, `m / radius_grid`.
    pub kappa_hat: f64,
    pub radius_grid: f64,
}

fn estimate(
    contour: &Contour,
    i: usize,
    (q, r): (i64, i64),
    m: i64,
) -> Result<CurvatureEstimate, EstimatorError> {
    let radius = circumcircle_radius(contour.point_at(i as i64), contour.point_at(q), contour.point_at(r))?;
    let kappa_hat = if radius.is_finite() { m as f64 / radius } else { 0.0 };
    Ok(CurvatureEstimate { index: i, kappa_hat, radius_grid: radius })
}

pub fn curvature_circumcircle(
    contour: &Contour,
    i: usize,
    m: i64,
) -> Result<CurvatureEstimate, EstimatorError> {
    check_resolution(m)?;
    estimate(contour, i, half_tangents(contour, i)?, m)
}

/// Estimates at every index, in index order.
pub fn curvature_profile(
    contour: &Contour,
    tangents: &HalfTangents,
    m: i64,
) -> Result<Vec<CurvatureEstimate>, EstimatorError> {
    check_resolution(m)?;
    if tangents.len() != contour.len() {
        return Err(EstimatorError::InvalidArgument("half-tangents belong to another contour".into()));
    }
    (0..contour.len()).into_par_iter().map(|i| estimate(contour, i, tangents.get(i), m)).collect()
}

fn check_resolution(m: i64) -> Result<(), EstimatorError> {
    if m < 1 {
        return Err(EstimatorError::InvalidArgument(format!("resolution must be positive, got {m}")));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorStats {
    pub m: i64,
    pub mean_abs_err: f64,
    pub std_abs_err: f64,
}

/// Mean and population standard deviation of the absolute errors.
pub fn abs_error_stats(m: i64, errors: &[f64]) -> ErrorStats {
    let n = errors.len().max(1) as f64;
    let mean = errors.iter().sum::<f64>() / n;
    let var = errors.iter().map(|e| (e - mean) * (e - mean)).sum::<f64>() / n;
    ErrorStats { m, mean_abs_err: mean, std_abs_err: var.sqrt() }
}

/// Error of the circumcircle estimator against `true_curvature`, evaluated
/// at each contour point.
pub fn error_stats<F>(contour: &Contour, m: i64, true_curvature: F) -> Result<ErrorStats, EstimatorError>
where
    F: Fn(LatticePoint) -> f64 + Sync,
{
    let tangents = HalfTangents::new(contour)?;
    let estimates = curvature_profile(contour, &tangents, m)?;
    let errors: Vec<f64> = estimates
        .iter()
        .map(|e| (e.kappa_hat - true_curvature(contour.point_at(e.index as i64))).abs())
        .collect();
    Ok(abs_error_stats(m, &errors))
}

/// True curvature of `shape` near a pointel of its digitization at
/// resolution `m`.
pub fn shape_curvature(shape: &ShapeSpec, m: i64) -> impl Fn(LatticePoint) -> f64 + Sync + '_ {
    let step = 1.0 / m as f64;
    move |p: LatticePoint| shape.curvature_near((p.x as f64 - 0.5) * step, (p.y as f64 - 0.5) * step)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dss::oracle_front;
    use crate::lattice::{digitize, trace_contour, Move, Rational};
    use proptest::prelude::*;

    fn pt(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    fn disk_contour(m: i64, center: (Rational, Rational)) -> Contour {
        let shape = ShapeSpec::disk(center, Rational::from_integer(1)).unwrap();
        trace_contour(&digitize(&shape, m).unwrap()).unwrap()
    }

    #[test]
    fn radius_examples() {
        assert_eq!(circumcircle_radius(pt(0, 1), pt(1, 0), pt(-1, 0)).unwrap(), 1.0);
        assert_eq!(circumcircle_radius(pt(0, 0), pt(4, 0), pt(0, 3)).unwrap(), 2.5);
        assert!(circumcircle_radius(pt(0, 0), pt(1, 1), pt(2, 2)).unwrap().is_infinite());
        assert!(circumcircle_radius(pt(0, 0), pt(0, 0), pt(2, 2)).is_err());
    }

    #[test]
    fn radius_of_huge_triangle_stays_finite() {
        let r = circumcircle_radius(pt(0, 0), pt(2_000_000_000, 0), pt(0, 2_000_000_000)).unwrap();
        assert!((r - 2_000_000_000.0 * 2f64.sqrt() / 2.0).abs() < 1e-3);
    }

    proptest! {
        #[test]
        fn radius_is_symmetric_and_scales(
            p in (-50i64..50, -50i64..50),
            q in (-50i64..50, -50i64..50),
            r in (-50i64..50, -50i64..50),
            s in 1i64..20,
        ) {
            let (p, q, r) = (pt(p.0, p.1), pt(q.0, q.1), pt(r.0, r.1));
            prop_assume!(p != q && q != r && r != p);
            let base = circumcircle_radius(p, q, r).unwrap();
            for (a, b, c) in [(q, r, p), (r, p, q), (q, p, r), (p, r, q), (r, q, p)] {
                let other = circumcircle_radius(a, b, c).unwrap();
                prop_assert!(base == other || ((base - other) / base).abs() <= 1e-12);
            }
            let scaled = circumcircle_radius(p.scale(s), q.scale(s), r.scale(s)).unwrap();
            if base.is_finite() {
                prop_assert!(((scaled - s as f64 * base) / scaled).abs() <= 1e-12);
            } else {
                prop_assert!(scaled.is_infinite());
            }
        }
    }

    #[test]
    fn straight_open_run_has_whole_run_as_half_tangents() {
        let c =
            Contour::new(pt(0, 0), vec![Move::East, Move::East, Move::North, Move::East, Move::East], false)
                .unwrap();
        for i in 0..c.len() {
            assert_eq!(half_tangents(&c, i).unwrap(), (0, 5));
        }
        let e = curvature_circumcircle(&c, 0, 10);
        assert!(e.is_err(), "P coincides with Q at the start of an open run");
        assert!(curvature_circumcircle(&c, 2, 10).unwrap().kappa_hat > 0.0);
        let flat = Contour::new(pt(0, 0), vec![Move::East; 4], false).unwrap();
        let e = curvature_circumcircle(&flat, 2, 10).unwrap();
        assert_eq!(e.kappa_hat, 0.0);
        assert!(e.radius_grid.is_infinite());
    }

    #[test]
    fn half_tangents_match_the_oracle() {
        for center in [
            (Rational::from_integer(0), Rational::from_integer(0)),
            (Rational::new(1, 3), Rational::new(1, 7)),
        ] {
            let c = disk_contour(10, center);
            let ht = HalfTangents::new(&c).unwrap();
            let reversed = c.reversed();
            let n = c.len() as i64;
            for i in 0..c.len() {
                let (q, r) = ht.get(i);
                assert_eq!(r, oracle_front(&c, i as i64));
                // back on the contour is front on the reversed contour, whose
                // index k holds the point of index -k.
                let back_rev = oracle_front(&reversed, (n - i as i64).rem_euclid(n));
                assert_eq!(q, i as i64 - (back_rev - (n - i as i64).rem_euclid(n)));
                assert!(q <= i as i64 && i as i64 <= r);
                assert_eq!((q, r), half_tangents(&c, i).unwrap());
            }
        }
    }

    #[test]
    fn half_tangents_fit_in_maximal_segments() {
        let c = disk_contour(200, (Rational::new(1, 3), Rational::new(1, 7)));
        let segs = maximal_segments(&c).unwrap();
        let ht = HalfTangents::new(&c).unwrap();
        let n = c.len() as i64;
        let inside = |a: i64, b: i64| {
            segs.iter().any(|s| {
                (-1..=1).any(|t| s.first_unwrapped() + t * n <= a && b <= s.last_unwrapped() + t * n)
            })
        };
        for i in 0..c.len() {
            let (q, r) = ht.get(i);
            assert!(inside(q, i as i64) && inside(i as i64, r));
        }
        let min_ms = segs.iter().map(|s| s.len as i64).min().unwrap();
        let max_ms = segs.iter().map(|s| s.len as i64).max().unwrap();
        // The forward half-tangent at the start of the shortest segment is
        // that segment.
        assert!(ht.lengths().min().unwrap() <= min_ms);
        assert!(ht.lengths().all(|l| 1 <= l && l <= max_ms));
        // The union of both sides always holds a whole maximal segment.
        let min_span = (0..c.len()).map(|i| ht.get(i).1 - ht.get(i).0).min().unwrap();
        assert!(min_span >= min_ms);
    }

    #[test]
    fn disk_error_is_moderate() {
        let shape =
            ShapeSpec::disk((Rational::new(1, 3), Rational::new(1, 7)), Rational::from_integer(1)).unwrap();
        let c = trace_contour(&digitize(&shape, 100).unwrap()).unwrap();
        let stats = error_stats(&c, 100, shape_curvature(&shape, 100)).unwrap();
        assert!(stats.mean_abs_err > 0.0 && stats.mean_abs_err < 0.5, "{stats:?}");
        let exact = error_stats(&c, 100, |_| 0.0).unwrap();
        assert!(exact.mean_abs_err > 0.5);
    }

    #[test]
    fn constant_errors_have_zero_spread() {
        let s = abs_error_stats(10, &[0.0; 7]);
        assert_eq!((s.mean_abs_err, s.std_abs_err), (0.0, 0.0));
        let s = abs_error_stats(10, &[1.0, 3.0]);
        assert_eq!((s.mean_abs_err, s.std_abs_err), (2.0, 1.0));
    }
}
