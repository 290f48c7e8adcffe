//! Maximal digital straight segments on convex digital polygons: DSS
//! recognition, pattern combinatorics of digital edges, edge/segment
//! bounds, and a curvature estimator built on half-tangents.

pub mod cdp;
pub mod dss;
pub mod estimators;
pub mod lattice;
pub mod multigrid;
pub mod pattern;

pub use cdp::{convex_hull, is_cdp, CdpAnalysis, CdpError, CheckKind, CheckReport, DigitalEdge};
pub use dss::{maximal_segments, DssError, DssRecognizer, MaximalSegment, StandardLine};
pub use estimators::{
    circumcircle_radius, curvature_circumcircle, half_tangents, EstimatorError, HalfTangents,
};
pub use lattice::{
    digitize, trace_contour, ColumnSet, Contour, LatticeError, LatticePoint, Move, Rational, ShapeSpec,
};
pub use multigrid::{run_experiment, ExperimentConfig, ExperimentError, ExperimentRecord};
pub use pattern::{cf_decompose, max_edges_bound, pattern_word, ContinuedFraction, PatternError};
