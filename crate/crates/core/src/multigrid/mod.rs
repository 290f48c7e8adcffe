//! Resolution sweeps over a digitized shape: one record per resolution and
//! grid offset, CSV output, and log-log trend fitting.

mod fit;
mod record;
mod report;

pub use fit::{fit_loglog_slope, LogLogFit};
pub use record::{format_sig, read_csv, write_csv, ExperimentRecord};
pub use report::{report_bounds, BoundsReport};

use std::collections::BTreeSet;
use std::path::PathBuf;

use rayon::prelude::*;
use thiserror::Error;

use crate::cdp::{CdpAnalysis, CdpError, CheckKind, CheckReport};
use crate::dss::{self, DssError};
use crate::estimators::{abs_error_stats, curvature_profile, shape_curvature, EstimatorError, HalfTangents};
use crate::lattice::{digitize, Contour, LatticeError, Rational, ShapeSpec};

/// Largest contour the brute-force segment oracle accepts.
pub const ORACLE_MAX_POINTS: usize = 600;
/// Largest resolution the oracle may be enabled for.
pub const ORACLE_MAX_M: i64 = 64;

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("check {check} failed at m = {m}: {detail}")]
    CheckFailed { check: String, m: i64, detail: String },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Dss(#[from] DssError),
    #[error(transparent)]
    Cdp(#[from] CdpError),
    #[error(transparent)]
    Estimator(#[from] EstimatorError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Parses a check name. `cdp` also covers the edge pattern check and
/// `thm3` the labeling inequality, matching how they are requested.
pub fn parse_checks(list: &str) -> Result<BTreeSet<CheckKind>, ExperimentError> {
    let mut out = BTreeSet::new();
    for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match name {
            "all" => out.extend(ALL_CHECKS),
            "none" => {}
            "cdp" => out.extend([CheckKind::Cdp, CheckKind::EdgePattern]),
            "thm3" => out.extend([CheckKind::Thm3, CheckKind::Labeling]),
            "lemma2" => out.extend([CheckKind::SupportingEdge]),
            "lemma3" => out.extend([CheckKind::LoneUpperVertex]),
            _ => {
                let kind = ALL_CHECKS
                    .into_iter()
                    .find(|k| k.name() == name)
                    .ok_or_else(|| ExperimentError::InvalidArgument(format!("unknown check {name:?}")))?;
                out.insert(kind);
            }
        }
    }
    Ok(out)
}

pub const ALL_CHECKS: [CheckKind; 11] = [
    CheckKind::Cdp,
    CheckKind::EdgePattern,
    CheckKind::Lemma1,
    CheckKind::SupportingEdge,
    CheckKind::LoneUpperVertex,
    CheckKind::Prop4,
    CheckKind::Prop5,
    CheckKind::Thm2,
    CheckKind::Thm3,
    CheckKind::Labeling,
    CheckKind::Thm4,
];

/// `steps` resolutions from `m_min` to `m_max` with nearly equal ratios,
/// rounded and deduplicated.
pub fn geometric_ladder(m_min: i64, m_max: i64, steps: usize) -> Result<Vec<i64>, ExperimentError> {
    if m_min < 4 || m_max < m_min || steps < 2 {
        return Err(ExperimentError::InvalidArgument(format!(
            "need 4 <= m_min <= m_max and steps >= 2, got {m_min}, {m_max}, {steps}"
        )));
    }
    let ratio = (m_max as f64 / m_min as f64).ln() / (steps - 1) as f64;
    let mut ms: Vec<i64> = (0..steps)
        .map(|k| match k {
            0 => m_min,
            k if k == steps - 1 => m_max,
            k => (m_min as f64 * (ratio * k as f64).exp()).round() as i64,
        })
        .collect();
    ms.dedup();
    Ok(ms)
}

#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub shape: ShapeSpec,
    /// Ascending resolutions.
    pub m_values: Vec<i64>,
    pub checks: BTreeSet<CheckKind>,
    /// The oracle comparison runs for every `m <= oracle_max_m`; 0 disables it.
    pub oracle_max_m: i64,
    /// Center offsets, in shape units, applied in turn at every resolution.
    pub jitter: Vec<(Rational, Rational)>,
    pub out: Option<PathBuf>,
}

impl ExperimentConfig {
    pub fn new(shape: ShapeSpec, m_values: Vec<i64>) -> Self {
        Self {
            shape,
            m_values,
            checks: ALL_CHECKS.into_iter().collect(),
            oracle_max_m: 0,
            jitter: default_jitter(),
            out: None,
        }
    }

    pub fn validate(&self) -> Result<(), ExperimentError> {
        let bad = |msg: String| Err(ExperimentError::InvalidArgument(msg));
        if self.m_values.is_empty() {
            return bad("empty resolution ladder".into());
        }
        if self.m_values.windows(2).any(|w| w[0] >= w[1]) {
            return bad("resolutions must be strictly increasing".into());
        }
        if self.m_values[0] < 4 {
            return bad(format!("resolutions start at 4, got {}", self.m_values[0]));
        }
        if !(0..=ORACLE_MAX_M).contains(&self.oracle_max_m) {
            return bad(format!("oracle_max_m must lie in 0..={ORACLE_MAX_M}"));
        }
        if self.jitter.is_empty() {
            return bad("at least one center offset is required".into());
        }
        Ok(())
    }
}

pub fn default_jitter() -> Vec<(Rational, Rational)> {
    vec![(Rational::from_integer(0), Rational::from_integer(0)), (Rational::new(1, 3), Rational::new(1, 7))]
}

/// Brute-force maximal segments, refusing contours too long for it.
pub fn oracle_maximal_segments(contour: &Contour) -> Result<Vec<(i64, i64)>, ExperimentError> {
    if contour.len() > ORACLE_MAX_POINTS {
        return Err(ExperimentError::InvalidArgument(format!(
            "oracle is limited to {ORACLE_MAX_POINTS} points, contour has {}",
            contour.len()
        )));
    }
    Ok(dss::oracle_maximal_segments(contour))
}

/// Everything measured for one shape at one resolution.
pub fn measure(
    shape: &ShapeSpec,
    m: i64,
    checks: &BTreeSet<CheckKind>,
    oracle: bool,
) -> Result<(ExperimentRecord, Vec<CheckReport>), ExperimentError> {
    let set = digitize(shape, m)?;
    let analysis = CdpAnalysis::from_pixels(&set)?;
    let contour = analysis.contour();
    let segments = analysis.segments();
    let supporting = analysis.match_supporting_edges();
    let labeling = analysis.label_vertices(&supporting.pairs);
    let stats = analysis.stats(&supporting.pairs, &labeling);

    let tangents = HalfTangents::from_segments(contour, segments)?;
    let truth = shape_curvature(shape, m);
    let estimates = curvature_profile(contour, &tangents, m)?;
    let errors: Vec<f64> =
        estimates.iter().map(|e| (e.kappa_hat - truth(contour.point_at(e.index as i64))).abs()).collect();
    let kappa_mean = estimates.iter().map(|e| e.kappa_hat).sum::<f64>() / estimates.len().max(1) as f64;
    let curv = abs_error_stats(m, &errors);
    let ht: Vec<i64> = tangents.lengths().collect();

    let mut reports = Vec::new();
    for &kind in checks {
        reports.push(match kind {
            CheckKind::Cdp => analysis.check_cdp(),
            CheckKind::EdgePattern => analysis.check_edge_patterns(),
            CheckKind::Lemma1 => analysis.check_lemma1(),
            CheckKind::SupportingEdge => supporting.report.clone(),
            CheckKind::LoneUpperVertex => analysis.check_lone_upper_vertices(),
            CheckKind::Prop4 => analysis.check_prop4(&supporting.pairs),
            CheckKind::Prop5 => analysis.check_prop5(),
            CheckKind::Thm2 => analysis.check_thm2(&supporting.pairs),
            CheckKind::Thm3 => analysis.check_thm3(&labeling),
            CheckKind::Labeling => analysis.check_labeling(&labeling),
            CheckKind::Thm4 => analysis.check_thm4(&labeling),
        });
    }
    let check_oracle = if oracle {
        let expected = oracle_maximal_segments(contour)?;
        let actual: Vec<(i64, i64)> =
            segments.iter().map(|s| (s.first_unwrapped(), s.last_unwrapped())).collect();
        Some(expected == actual)
    } else {
        None
    };
    let passed = |kind: CheckKind| reports.iter().find(|r| r.kind == kind).map(|r| r.passed());
    let center = shape.center();
    let record = ExperimentRecord {
        m,
        n_points: set.len(),
        n_e: stats.n_e,
        per_l1: stats.per_l1,
        ms_count: stats.ms_count,
        ms_len_min: stats.ms_len_min,
        ms_len_mean: record::round_sig(stats.ms_len_mean),
        ms_len_max: stats.ms_len_max,
        n_0: stats.n_0,
        n_1: stats.n_1,
        n_2: stats.n_2,
        n_22: stats.n_22,
        curv_err_mean: record::round_sig(curv.mean_abs_err),
        curv_err_std: record::round_sig(curv.std_abs_err),
        halftangent_len_min: ht.iter().copied().min().unwrap_or(0),
        halftangent_len_mean: record::round_sig(ht.iter().sum::<i64>() as f64 / ht.len().max(1) as f64),
        check_cdp: passed(CheckKind::Cdp),
        check_edge_pattern: passed(CheckKind::EdgePattern),
        check_lemma1: passed(CheckKind::Lemma1),
        check_supporting_edge: passed(CheckKind::SupportingEdge),
        check_lone_upper_vertex: passed(CheckKind::LoneUpperVertex),
        check_prop4: passed(CheckKind::Prop4),
        check_prop5: passed(CheckKind::Prop5),
        check_thm2: passed(CheckKind::Thm2),
        check_thm3: passed(CheckKind::Thm3),
        check_labeling: passed(CheckKind::Labeling),
        check_thm4: passed(CheckKind::Thm4),
        check_oracle,
        center_x: center.0.to_string(),
        center_y: center.1.to_string(),
        grid_size: stats.grid_size,
        n_00: stats.n_00,
        thm4_ratio: record::round_sig(stats.thm4_ratio),
        max_side_edges: stats.max_side_edges,
        max_lone_per_vertex: stats.max_lone_per_vertex,
        curv_hat_mean: record::round_sig(kappa_mean),
    };
    Ok((record, reports))
}

/// Runs the sweep, writes the CSV if an output path is set, and returns the
/// records ordered by resolution, then offset. A failed check is an error
/// naming the first failing check and resolution; the CSV is still written.
pub fn run_experiment(config: &ExperimentConfig) -> Result<Vec<ExperimentRecord>, ExperimentError> {
    config.validate()?;
    let jobs: Vec<(i64, ShapeSpec)> = config
        .m_values
        .iter()
        .flat_map(|&m| config.jitter.iter().map(move |&off| (m, config.shape.translated(off))))
        .collect();
    let results = jobs
        .par_iter()
        .map(|(m, shape)| measure(shape, *m, &config.checks, *m <= config.oracle_max_m))
        .collect::<Result<Vec<_>, _>>()?;
    let records: Vec<ExperimentRecord> = results.iter().map(|(r, _)| r.clone()).collect();
    if let Some(path) = &config.out {
        write_csv(std::fs::File::create(path)?, &records)?;
    }
    for (record, reports) in &results {
        if let Some(r) = reports.iter().find(|r| !r.passed()) {
            return Err(ExperimentError::CheckFailed {
                check: r.kind.name().to_string(),
                m: record.m,
                detail: r.violations[0].clone(),
            });
        }
        if record.check_oracle == Some(false) {
            return Err(ExperimentError::CheckFailed {
                check: "oracle".into(),
                m: record.m,
                detail: "maximal segments differ from the brute-force enumeration".into(),
            });
        }
    }
    Ok(records)
}
