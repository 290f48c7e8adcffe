//! Continued fractions of slopes, the words they spell, and where the
//! leaning points of one period sit.
//!
//! A slope `a/b` in `[0, 1]` with expansion `[0; u_1, ..., u_n]` has
//! pattern `E(z_n)`, built from `E(z_-1) = 1`, `E(z_0) = 0` by
//! `E(z_k) = E(z_{k-1})^{u_k} E(z_{k-2})` for odd `k` and
//! `E(z_k) = E(z_{k-2}) E(z_{k-1})^{u_k}` for even `k`.

mod cf;
mod flanking;
mod pell;
mod words;

pub use cf::{cf_decompose, ContinuedFraction, ConvergentTable};
pub use flanking::{
    assemble_flanked, flanking_edge_sequence, flanking_factors, verify_flanked_sequence,
    verify_flanking_edge, FlankingEdge, Side,
};
pub use pell::{max_edges_bound, pell_numbers, EdgeCountBound};
pub use words::{
    factor_structure, leaning_vectors, pattern_multiplicity, pattern_word, reversed_pattern, word_counts,
    word_slope, PatternWord,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
