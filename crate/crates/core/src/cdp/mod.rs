//! Convex digital polygons: hulls, digital edges as pattern powers, and the
//! relations between edges and maximal segments of the boundary.

mod analysis;
mod edge;
mod hull;

pub use analysis::{
    CdpAnalysis, CdpStats, CheckKind, CheckReport, EdgeCrossing, SupportingEdgePair, SupportingEdges,
    VertexLabeling,
};
pub use edge::{edge_pattern_decomposition, DigitalEdge, EdgeDecomposition};
pub use hull::{convex_hull, is_cdp, is_cdp_columns, Cdp};

use thiserror::Error;

use crate::dss::DssError;
use crate::lattice::LatticeError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CdpError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("not a convex digital polygon: {0}")]
    NotConvex(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Dss(#[from] DssError),
}
