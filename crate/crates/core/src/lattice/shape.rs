use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;

use super::{LatticeError, LatticePoint};

/// Exact rational used for shape parameters.
pub type Rational = Ratio<i64>;

/// Parses `"3"`, `"-1/3"` or `"0.6"` into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational, LatticeError> {
    let bad = || LatticeError::InvalidArgument(format!("not a rational number: {text:?}"));
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        let num: i64 = num.trim().parse().map_err(|_| bad())?;
        let den: i64 = den.trim().parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((int, frac)) = text.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|c| c.is_ascii_digit()) || frac.len() > 15 {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let int = int.trim_start_matches(['-', '+']);
        let int: i64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
        let scale = 10i64.pow(frac.len() as u32);
        let frac: i64 = frac.parse().map_err(|_| bad())?;
        let magnitude = int.checked_mul(scale).and_then(|v| v.checked_add(frac)).ok_or_else(bad)?;
        let num = if negative { -magnitude } else { magnitude };
        return Ok(Rational::new(num, scale));
    }
    text.parse::<i64>().map(Rational::from_integer).map_err(|_| bad())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShapeKind {
    Disk,
    Ellipse,
}

/// An axis-aligned disk or ellipse with exact rational parameters, in shape
/// units (the grid step is `1/m`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShapeSpec {
    kind: ShapeKind,
    center: (Rational, Rational),
    radii: (Rational, Rational),
}

impl ShapeSpec {
    pub fn disk(center: (Rational, Rational), radius: Rational) -> Result<Self, LatticeError> {
        Self::build(ShapeKind::Disk, center, (radius, radius))
    }

    pub fn ellipse(
        center: (Rational, Rational),
        radius_x: Rational,
        radius_y: Rational,
    ) -> Result<Self, LatticeError> {
        Self::build(ShapeKind::Ellipse, center, (radius_x, radius_y))
    }

    fn build(
        kind: ShapeKind,
        center: (Rational, Rational),
        radii: (Rational, Rational),
    ) -> Result<Self, LatticeError> {
        if radii.0 <= Rational::from_integer(0) || radii.1 <= Rational::from_integer(0) {
            return Err(LatticeError::InvalidArgument("radii must be positive".into()));
        }
        Ok(Self { kind, center, radii })
    }

    pub fn kind(&self) -> ShapeKind {
        self.kind
    }

    pub fn center(&self) -> (Rational, Rational) {
        self.center
    }

    pub fn radii(&self) -> (Rational, Rational) {
        self.radii
    }

    /// Same shape with its center moved by `offset`.
    pub fn translated(&self, offset: (Rational, Rational)) -> Self {
        Self {
            kind: self.kind,
            center: (self.center.0 + offset.0, self.center.1 + offset.1),
            radii: self.radii,
        }
    }

    /// Exact membership of the real point `(x/m, y/m)`; the boundary is inside.
    pub fn contains_scaled(&self, p: LatticePoint, m: i64) -> bool {
        let f = IntegerForm::new(self, m);
        f.contains(p)
    }

    /// Curvature of the boundary at the point nearest to `(px, py)` (shape units).
    pub fn curvature_near(&self, px: f64, py: f64) -> f64 {
        let (cx, cy) = (to_f64(self.center.0), to_f64(self.center.1));
        let (rx, ry) = (to_f64(self.radii.0), to_f64(self.radii.1));
        if self.kind == ShapeKind::Disk {
            return 1.0 / rx;
        }
        let t = nearest_ellipse_parameter(px - cx, py - cy, rx, ry);
        let (s, c) = t.sin_cos();
        let denom = (rx * rx * s * s + ry * ry * c * c).powf(1.5);
        rx * ry / denom
    }
}

impl fmt::Display for ShapeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ShapeKind::Disk => {
                write!(f, "disk r={} center=({},{})", self.radii.0, self.center.0, self.center.1)
            }
            ShapeKind::Ellipse => write!(
                f,
                "ellipse r=({},{}) center=({},{})",
                self.radii.0, self.radii.1, self.center.0, self.center.1
            ),
        }
    }
}

fn to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Parameter `t` of the point `(rx cos t, ry sin t)` closest to `(x, y)`.
fn nearest_ellipse_parameter(x: f64, y: f64, rx: f64, ry: f64) -> f64 {
    let mut t = (y / ry).atan2(x / rx);
    for _ in 0..50 {
        let (s, c) = t.sin_cos();
        // g(t) = (P - E(t)) . E'(t)
        let ex = rx * c - x;
        let ey = ry * s - y;
        let g = -ex * rx * s + ey * ry * c;
        let dg = (rx * s).powi(2) + (ry * c).powi(2) - ex * rx * c - ey * ry * s;
        if dg.abs() < f64::EPSILON {
            break;
        }
        let step = g / dg;
        t -= step;
        if step.abs() < 1e-15 {
            break;
        }
    }
    t
}

/// The membership inequality of a shape at resolution `m`, cleared of
/// denominators: `(D x - m Cx)^2 Ry^2 + (D y - m Cy)^2 Rx^2 <= m^2 Rx^2 Ry^2`.
struct IntegerForm {
    d: i128,
    mcx: i128,
    mcy: i128,
    mrx: i128,
    rx2: i128,
    ry2: i128,
}

impl IntegerForm {
    fn new(shape: &ShapeSpec, m: i64) -> Self {
        let parts = [shape.center.0, shape.center.1, shape.radii.0, shape.radii.1];
        let d = parts.iter().fold(1i64, |acc, r| acc.lcm(r.denom())) as i128;
        let scaled = |r: Rational| *r.numer() as i128 * (d / *r.denom() as i128);
        let m = m as i128;
        let (rx, ry) = (scaled(shape.radii.0), scaled(shape.radii.1));
        Self {
            d,
            mcx: m * scaled(shape.center.0),
            mcy: m * scaled(shape.center.1),
            mrx: m * rx,
            rx2: rx * rx,
            ry2: ry * ry,
        }
    }

    fn contains(&self, p: LatticePoint) -> bool {
        let dx = self.d * p.x as i128 - self.mcx;
        let dy = self.d * p.y as i128 - self.mcy;
        dx * dx * self.ry2 + dy * dy * self.rx2 <= self.mrx * self.mrx * self.ry2
    }

    fn column_range(&self) -> (i64, i64) {
        (div_ceil(self.mcx - self.mrx, self.d) as i64, div_floor(self.mcx + self.mrx, self.d) as i64)
    }

    fn column(&self, x: i64) -> Option<(i64, i64)> {
        let dx = self.d * x as i128 - self.mcx;
        let slack = self.mrx * self.mrx - dx * dx;
        if slack < 0 {
            return None;
        }
        // (D y - m Cy)^2 <= slack * Ry^2 / Rx^2, both sides integral on the left.
        let bound = ((slack * self.ry2) / self.rx2).isqrt();
        let lo = div_ceil(self.mcy - bound, self.d) as i64;
        let hi = div_floor(self.mcy + bound, self.d) as i64;
        (lo <= hi).then_some((lo, hi))
    }
}

fn div_floor(a: i128, b: i128) -> i128 {
    a.div_euclid(b)
}

fn div_ceil(a: i128, b: i128) -> i128 {
    -((-a).div_euclid(b))
}

/// A lattice set with one contiguous run of points per column, over a
/// contiguous range of columns. Digitizations of convex shapes have this form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ColumnSet {
    x_min: i64,
    runs: Vec<(i64, i64)>,
}

impl ColumnSet {
    /// Builds the set from `(x, y_lo, y_hi)` columns. Columns must be
    /// consecutive and every run nonempty.
    pub fn from_columns(columns: &[(i64, i64, i64)]) -> Result<Self, LatticeError> {
        let Some(&(x_min, _, _)) = columns.first() else {
            return Ok(Self::default());
        };
        let mut runs = Vec::with_capacity(columns.len());
        for (k, &(x, lo, hi)) in columns.iter().enumerate() {
            if x != x_min + k as i64 || lo > hi {
                return Err(LatticeError::InvalidArgument(
                    "columns must be consecutive nonempty runs".into(),
                ));
            }
            runs.push((lo, hi));
        }
        Ok(Self { x_min, runs })
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Number of lattice points.
    pub fn len(&self) -> u64 {
        self.runs.iter().map(|(lo, hi)| (hi - lo + 1) as u64).sum()
    }

    pub fn x_range(&self) -> Option<(i64, i64)> {
        (!self.is_empty()).then(|| (self.x_min, self.x_min + self.runs.len() as i64 - 1))
    }

    /// `(x, y_lo, y_hi)` for every column.
    pub fn columns(&self) -> impl Iterator<Item = (i64, i64, i64)> + '_ {
        self.runs.iter().enumerate().map(move |(k, &(lo, hi))| (self.x_min + k as i64, lo, hi))
    }

    pub fn column(&self, x: i64) -> Option<(i64, i64)> {
        let k = x.checked_sub(self.x_min)?;
        usize::try_from(k).ok().and_then(|k| self.runs.get(k).copied())
    }

    pub fn contains(&self, p: LatticePoint) -> bool {
        self.column(p.x).is_some_and(|(lo, hi)| lo <= p.y && p.y <= hi)
    }

    pub fn iter(&self) -> impl Iterator<Item = LatticePoint> + '_ {
        self.columns().flat_map(|(x, lo, hi)| (lo..=hi).map(move |y| LatticePoint::new(x, y)))
    }

    /// 4-connectivity: consecutive columns must share at least one row.
    pub fn is_connected(&self) -> bool {
        !self.is_empty() && self.runs.windows(2).all(|w| w[0].0.max(w[1].0) <= w[0].1.min(w[1].1))
    }

    /// Pointels touched by the closed unit squares of the set, i.e. the set
    /// translated by the four corners `{0,1}^2` in pointel coordinates.
    pub fn pointel_set(&self) -> ColumnSet {
        if self.is_empty() {
            return Self::default();
        }
        let n = self.runs.len();
        let runs = (0..=n)
            .map(|k| {
                let left = k.checked_sub(1).map(|j| self.runs[j]);
                let right = self.runs.get(k).copied();
                let (lo, hi) = match (left, right) {
                    (Some(a), Some(b)) => (a.0.min(b.0), a.1.max(b.1)),
                    (Some(a), None) | (None, Some(a)) => a,
                    (None, None) => unreachable!(),
                };
                (lo, hi + 1)
            })
            .collect();
        Self { x_min: self.x_min, runs }
    }
}

/// Gauss digitization `(m S) ∩ Z^2`: lattice points `(x, y)` with
/// `(x/m, y/m)` in the closed shape, decided in exact integer arithmetic.
pub fn digitize(shape: &ShapeSpec, m: i64) -> Result<ColumnSet, LatticeError> {
    if m < 1 {
        return Err(LatticeError::InvalidArgument(format!("resolution must be positive, got {m}")));
    }
    let form = IntegerForm::new(shape, m);
    let (x_lo, x_hi) = form.column_range();
    let columns: Vec<_> = (x_lo..=x_hi).filter_map(|x| form.column(x).map(|(lo, hi)| (x, lo, hi))).collect();
    ColumnSet::from_columns(&columns)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn origin() -> (Rational, Rational) {
        (r(0, 1), r(0, 1))
    }

    fn brute_force(shape: &ShapeSpec, m: i64, reach: i64) -> Vec<LatticePoint> {
        let mut out = Vec::new();
        for x in -reach..=reach {
            for y in -reach..=reach {
                let p = LatticePoint::new(x, y);
                if shape.contains_scaled(p, m) {
                    out.push(p);
                }
            }
        }
        out
    }

    #[test]
    fn unit_disk_at_resolution_one_is_a_plus() {
        let disk = ShapeSpec::disk(origin(), r(1, 1)).unwrap();
        let set = digitize(&disk, 1).unwrap();
        let mut pts: Vec<_> = set.iter().collect();
        pts.sort();
        let expected = [(-1, 0), (0, -1), (0, 0), (0, 1), (1, 0)].map(LatticePoint::from);
        assert_eq!(pts, expected);
    }

    #[test]
    fn small_disk_keeps_only_the_origin() {
        let disk = ShapeSpec::disk(origin(), r(2, 5)).unwrap();
        let pts: Vec<_> = digitize(&disk, 1).unwrap().iter().collect();
        assert_eq!(pts, vec![LatticePoint::ORIGIN]);
    }

    #[test]
    fn unit_disk_at_resolution_two_has_13_points() {
        let disk = ShapeSpec::disk(origin(), r(1, 1)).unwrap();
        assert_eq!(digitize(&disk, 2).unwrap().len(), 13);
    }

    #[test]
    fn zero_resolution_is_rejected() {
        let disk = ShapeSpec::disk(origin(), r(1, 1)).unwrap();
        assert!(matches!(digitize(&disk, 0), Err(LatticeError::InvalidArgument(_))));
        assert!(digitize(&disk, -3).is_err());
    }

    #[test]
    fn nonpositive_radius_is_rejected() {
        assert!(ShapeSpec::disk(origin(), r(0, 1)).is_err());
        assert!(ShapeSpec::ellipse(origin(), r(1, 1), r(-1, 2)).is_err());
    }

    #[test]
    fn column_digitization_matches_enumeration() {
        let shapes = [
            ShapeSpec::disk((r(1, 3), r(1, 7)), r(1, 1)).unwrap(),
            ShapeSpec::ellipse((r(-2, 5), r(1, 2)), r(1, 1), r(3, 5)).unwrap(),
            ShapeSpec::disk(origin(), r(7, 4)).unwrap(),
        ];
        for shape in &shapes {
            for m in 1..=25 {
                let mut got: Vec<_> = digitize(shape, m).unwrap().iter().collect();
                got.sort();
                assert_eq!(got, brute_force(shape, m, 3 * m + 2), "{shape} m={m}");
            }
        }
    }

    #[test]
    fn boundary_points_count_as_inside() {
        // (3/5, 4/5) lies exactly on the unit circle.
        let disk = ShapeSpec::disk(origin(), r(1, 1)).unwrap();
        assert!(disk.contains_scaled(LatticePoint::new(3, 4), 5));
        assert!(digitize(&disk, 5).unwrap().contains(LatticePoint::new(3, 4)));
        assert!(!digitize(&disk, 5).unwrap().contains(LatticePoint::new(4, 4)));
    }

    #[test]
    fn disk_point_count_is_monotone_in_resolution() {
        let disk = ShapeSpec::disk(origin(), r(1, 1)).unwrap();
        let counts: Vec<_> = (1..60).map(|m| digitize(&disk, m).unwrap().len()).collect();
        assert!(counts.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn digitized_disks_are_connected() {
        for m in 1..40 {
            let disk = ShapeSpec::disk((r(1, 3), r(1, 7)), r(1, 1)).unwrap();
            assert!(digitize(&disk, m).unwrap().is_connected());
        }
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("3").unwrap(), r(3, 1));
        assert_eq!(parse_rational("-1/3").unwrap(), r(-1, 3));
        assert_eq!(parse_rational("0.6").unwrap(), r(3, 5));
        assert_eq!(parse_rational("-.25").unwrap(), r(-1, 4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1.").is_err());
    }

    #[test]
    fn pointel_set_of_single_pixel_is_unit_square_corners() {
        let set = ColumnSet::from_columns(&[(0, 0, 0)]).unwrap();
        let mut pts: Vec<_> = set.pointel_set().iter().collect();
        pts.sort();
        assert_eq!(pts, [(0, 0), (0, 1), (1, 0), (1, 1)].map(LatticePoint::from));
    }

    #[test]
    fn ellipse_curvature_at_vertices() {
        let e = ShapeSpec::ellipse(origin(), r(2, 1), r(1, 1)).unwrap();
        // At (a, 0): a/b^2; at (0, b): b/a^2.
        assert!((e.curvature_near(2.1, 0.0) - 2.0).abs() < 1e-12);
        assert!((e.curvature_near(0.0, 0.9) - 0.25).abs() < 1e-12);
    }
}
