use std::io::{Read, Write};

use serde::{Deserialize, Serialize, Serializer};

use super::ExperimentError;

/// One CSV row: a shape digitized at resolution `m` with center
/// `(center_x, center_y)`. Lengths are L1 lengths in grid steps. Check
/// columns are empty when the check was not requested.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRecord {
    pub m: i64,
    /// Pixels in the digitization.
    pub n_points: u64,
    pub n_e: usize,
    pub per_l1: i64,
    pub ms_count: usize,
    pub ms_len_min: i64,
    #[serde(serialize_with = "sig")]
    pub ms_len_mean: f64,
    pub ms_len_max: i64,
    pub n_0: usize,
    pub n_1: usize,
    pub n_2: usize,
    pub n_22: usize,
    #[serde(serialize_with = "sig")]
    pub curv_err_mean: f64,
    #[serde(serialize_with = "sig")]
    pub curv_err_std: f64,
    pub halftangent_len_min: i64,
    #[serde(serialize_with = "sig")]
    pub halftangent_len_mean: f64,
    pub check_cdp: Option<bool>,
    pub check_edge_pattern: Option<bool>,
    pub check_lemma1: Option<bool>,
    pub check_supporting_edge: Option<bool>,
    pub check_lone_upper_vertex: Option<bool>,
    pub check_prop4: Option<bool>,
    pub check_prop5: Option<bool>,
    pub check_thm2: Option<bool>,
    pub check_thm3: Option<bool>,
    pub check_labeling: Option<bool>,
    pub check_thm4: Option<bool>,
    pub check_oracle: Option<bool>,
    pub center_x: String,
    pub center_y: String,
    pub grid_size: i64,
    pub n_00: usize,
    #[serde(serialize_with = "sig")]
    pub thm4_ratio: f64,
    /// Most other edges met on one side of a supporting edge.
    pub max_side_edges: usize,
    /// Most single-upper-leaning-point segments sharing one vertex.
    pub max_lone_per_vertex: usize,
    /// Average of the curvature estimates over the contour.
    #[serde(serialize_with = "sig")]
    pub curv_hat_mean: f64,
}

impl ExperimentRecord {
    pub fn checks(&self) -> [(&'static str, Option<bool>); 12] {
        [
            ("cdp", self.check_cdp),
            ("edge_pattern", self.check_edge_pattern),
            ("lemma1", self.check_lemma1),
            ("supporting_edge", self.check_supporting_edge),
            ("lone_upper_vertex", self.check_lone_upper_vertex),
            ("prop4", self.check_prop4),
            ("prop5", self.check_prop5),
            ("thm2", self.check_thm2),
            ("thm3", self.check_thm3),
            ("labeling", self.check_labeling),
            ("thm4", self.check_thm4),
            ("oracle", self.check_oracle),
        ]
    }

    pub fn all_checks_passed(&self) -> bool {
        self.checks().iter().all(|(_, c)| *c != Some(false))
    }

    /// `n_1 + 2 n_22`.
    pub fn thm3_lhs(&self) -> usize {
        self.n_1 + 2 * self.n_22
    }
}

/// Decimal text with at most 12 significant digits.
pub fn format_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..15).contains(&exp) {
        // Round once, in scientific form, then shift the point.
        let value: f64 = sci.parse().expect("round trip");
        let decimals = (11 - exp).max(0) as usize;
        trim(format!("{value:.decimals$}"))
    } else {
        format!("{}e{exp}", trim(mantissa.to_string()))
    }
}

fn trim(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

pub(crate) fn round_sig(x: f64) -> f64 {
    format_sig(x).parse().expect("formatted floats parse")
}

fn sig<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_sig(*x))
}

pub fn write_csv<W: Write>(out: W, records: &[ExperimentRecord]) -> Result<(), ExperimentError> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<ExperimentRecord>, ExperimentError> {
    let mut r = csv::Reader::from_reader(input);
    Ok(r.deserialize().collect::<Result<Vec<_>, _>>()?)
}
