use std::collections::BTreeMap;
use std::fmt;

use super::{fit_loglog_slope, ExperimentError, ExperimentRecord, LogLogFit};

/// Below this mean absolute curvature error an estimator is considered to
/// be converging.
pub const CONVERGED_ERROR: f64 = 0.02;

#[derive(Debug, Clone, PartialEq)]
pub struct BoundsReport {
    /// Exponent of the number of edges (expected 2/3).
    pub n_e: LogLogFit,
    pub ms_len_mean: LogLogFit,
    pub ms_len_min: LogLogFit,
    pub halftangent_len_min: LogLogFit,
    /// Largest `n_e / ((n_1 + 2 n_22) ln m)` over the records.
    pub thm3_ratio_max: f64,
    /// Mean absolute curvature error per resolution, averaged over offsets.
    pub curvature_error: Vec<(i64, f64)>,
    /// Contour-averaged curvature estimate per resolution.
    pub curvature_average: Vec<(i64, f64)>,
    pub estimator_converges: bool,
    pub verdicts: Vec<String>,
}

fn closer(slope: f64, a: f64, b: f64) -> bool {
    (slope - a).abs() < (slope - b).abs()
}

pub fn report_bounds(records: &[ExperimentRecord]) -> Result<BoundsReport, ExperimentError> {
    if records.len() < 3 {
        return Err(ExperimentError::InvalidArgument("need at least 3 records".into()));
    }
    let ms: Vec<f64> = records.iter().map(|r| r.m as f64).collect();
    let fit = |f: &dyn Fn(&ExperimentRecord) -> f64| {
        let ys: Vec<f64> = records.iter().map(f).collect();
        fit_loglog_slope(&ms, &ys)
    };
    let n_e = fit(&|r| r.n_e as f64)?;
    let ms_len_mean = fit(&|r| r.ms_len_mean)?;
    let ms_len_min = fit(&|r| r.ms_len_min as f64)?;
    let halftangent_len_min = fit(&|r| r.halftangent_len_min as f64)?;
    let thm3_ratio_max =
        records.iter().map(|r| r.n_e as f64 / (r.thm3_lhs() as f64 * (r.m as f64).ln())).fold(0.0, f64::max);

    let per_m = |f: &dyn Fn(&ExperimentRecord) -> f64| -> Vec<(i64, f64)> {
        let mut by_m: BTreeMap<i64, (f64, usize)> = BTreeMap::new();
        for r in records {
            let e = by_m.entry(r.m).or_default();
            e.0 += f(r);
            e.1 += 1;
        }
        by_m.into_iter().map(|(m, (s, k))| (m, s / k as f64)).collect()
    };
    let curvature_error = per_m(&|r| r.curv_err_mean);
    let curvature_average = per_m(&|r| r.curv_hat_mean);
    let decreasing = curvature_error.windows(2).all(|w| w[1].1 < w[0].1);
    let (last_m, last_err) = *curvature_error.last().unwrap();
    let estimator_converges = decreasing && last_err < CONVERGED_ERROR;

    let mut verdicts = vec![
        format!("edge count exponent {:.4} (expected 2/3, r2 {:.4})", n_e.slope, n_e.r2),
        format!(
            "mean maximal segment exponent {:.4}: closer to {} (r2 {:.4})",
            ms_len_mean.slope,
            if closer(ms_len_mean.slope, 1.0 / 3.0, 0.5) { "1/3 than to 1/2" } else { "1/2 than to 1/3" },
            ms_len_mean.r2
        ),
        format!("shortest maximal segment exponent {:.4}", ms_len_min.slope),
        format!("max n_e / ((n_1 + 2 n_22) ln m) = {thm3_ratio_max:.4}"),
    ];
    verdicts.push(if halftangent_len_min.slope < 0.5 {
        format!(
            "half-tangent growth: shortest half-tangent grows like m^{:.4}, below m^(1/2); \
             the sqrt(m) growth hypothesis is refuted empirically",
            halftangent_len_min.slope
        )
    } else {
        format!(
            "half-tangent growth: shortest half-tangent grows like m^{:.4}, consistent with sqrt(m) growth",
            halftangent_len_min.slope
        )
    });
    let (best_m, best_err) = curvature_error.iter().copied().min_by(|a, b| a.1.total_cmp(&b.1)).unwrap();
    verdicts.push(if estimator_converges {
        format!("curvature by circumcircle: mean error decreases to {last_err:.4} at m = {last_m}; consistent with convergence")
    } else {
        format!(
            "curvature by circumcircle: not convergent on this sweep; mean error stays at or above \
             {best_err:.4} (lowest at m = {best_m}, {last_err:.4} at m = {last_m})"
        )
    });
    Ok(BoundsReport {
        n_e,
        ms_len_mean,
        ms_len_min,
        halftangent_len_min,
        thm3_ratio_max,
        curvature_error,
        curvature_average,
        estimator_converges,
        verdicts,
    })
}

impl fmt::Display for BoundsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.verdicts {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn synthetic(m: i64, err: f64) -> ExperimentRecord {
        let mf = m as f64;
        ExperimentRecord {
            m,
            n_points: 1,
            n_e: mf.powf(2.0 / 3.0).round() as usize,
            per_l1: 8 * m,
            ms_count: 1,
            ms_len_min: mf.powf(0.25).round() as i64,
            ms_len_mean: mf.powf(1.0 / 3.0),
            ms_len_max: m,
            n_0: 0,
            n_1: 1,
            n_2: 0,
            n_22: 0,
            curv_err_mean: err,
            curv_err_std: 0.0,
            halftangent_len_min: 1,
            halftangent_len_mean: 1.0,
            check_cdp: None,
            check_edge_pattern: None,
            check_lemma1: None,
            check_supporting_edge: None,
            check_lone_upper_vertex: None,
            check_prop4: None,
            check_prop5: None,
            check_thm2: None,
            check_thm3: None,
            check_labeling: None,
            check_thm4: None,
            check_oracle: None,
            center_x: "0".into(),
            center_y: "0".into(),
            grid_size: 2 * m,
            n_00: 0,
            thm4_ratio: 1.0,
            max_side_edges: 0,
            max_lone_per_vertex: 0,
            curv_hat_mean: 1.0,
        }
    }

    #[test]
    fn synthetic_exponents() {
        // Cubes make m^(2/3) an exact integer.
        let records: Vec<_> = (2..8).map(|k| synthetic(k * k * k * 1000, 0.1)).collect();
        let rep = report_bounds(&records).unwrap();
        assert!((rep.n_e.slope - 2.0 / 3.0).abs() < 1e-9);
        assert!((rep.ms_len_mean.slope - 1.0 / 3.0).abs() < 1e-9);
        assert!(rep.verdicts[1].contains("closer to 1/3"));
        assert!(!rep.estimator_converges);
        assert!(rep.verdicts.iter().any(|v| v.contains("refuted empirically")));
        assert!(rep.verdicts.iter().any(|v| v.contains("not convergent")));
    }

    #[test]
    fn decreasing_errors_read_as_convergent() {
        let records: Vec<_> =
            [100, 200, 400, 800].iter().zip([0.2, 0.1, 0.05, 0.01]).map(|(&m, e)| synthetic(m, e)).collect();
        assert!(report_bounds(&records).unwrap().estimator_converges);
        assert!(report_bounds(&records[..2]).is_err());
    }
}
