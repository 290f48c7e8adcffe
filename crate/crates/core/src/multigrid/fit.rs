use super::ExperimentError;

/// Least-squares line through `(ln x, ln y)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogLogFit {
    pub slope: f64,
    pub intercept: f64,
    pub r2: f64,
}

pub fn fit_loglog_slope(xs: &[f64], ys: &[f64]) -> Result<LogLogFit, ExperimentError> {
    if xs.len() != ys.len() {
        return Err(ExperimentError::InvalidArgument("xs and ys differ in length".into()));
    }
    if xs.len() < 3 {
        return Err(ExperimentError::InvalidArgument("need at least 3 points".into()));
    }
    if xs.iter().chain(ys).any(|v| *v <= 0.0 || !v.is_finite()) {
        return Err(ExperimentError::InvalidArgument("values must be positive and finite".into()));
    }
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let n = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxx: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let syy: f64 = ly.iter().map(|y| (y - my) * (y - my)).sum();
    if sxx == 0.0 {
        return Err(ExperimentError::InvalidArgument("all x values are equal".into()));
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let r2 = if syy == 0.0 { 1.0 } else { sxy * sxy / (sxx * syy) };
    Ok(LogLogFit { slope, intercept, r2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn exact_power_laws() {
        let xs: Vec<f64> = (1..=10).map(|k| (k * 37) as f64).collect();
        let ys: Vec<f64> = xs.iter().map(|x| x.sqrt()).collect();
        let f = fit_loglog_slope(&xs, &ys).unwrap();
        assert!((f.slope - 0.5).abs() < 1e-12);
        assert!((f.r2 - 1.0).abs() < 1e-12);
        let f = fit_loglog_slope(&xs, &vec![3.5; xs.len()]).unwrap();
        assert!(f.slope.abs() < 1e-12);
        assert!((f.intercept - 3.5f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn bad_inputs() {
        assert!(fit_loglog_slope(&[1.0, 2.0], &[1.0, 2.0]).is_err());
        assert!(fit_loglog_slope(&[1.0, 2.0, 3.0], &[1.0, 0.0, 2.0]).is_err());
        assert!(fit_loglog_slope(&[2.0, 2.0, 2.0], &[1.0, 3.0, 2.0]).is_err());
    }

    proptest! {
        #[test]
        fn recovers_any_power(p in -2.0f64..2.0, c in 0.1f64..10.0) {
            let xs: Vec<f64> = (0..8).map(|k| 100.0 * 1.7f64.powi(k)).collect();
            let ys: Vec<f64> = xs.iter().map(|x| c * x.powf(p)).collect();
            let f = fit_loglog_slope(&xs, &ys).unwrap();
            prop_assert!((f.slope - p).abs() < 1e-9);
            prop_assert!((f.intercept - c.ln()).abs() < 1e-8);
        }
    }
}
