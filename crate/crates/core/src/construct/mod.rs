//! Constructive colorings. Every operation here re-verifies its own output
//! through the `chroma` verifiers before returning; an unverified coloring
//! cannot escape this module.

mod alt_group;
mod conformable;
mod edge_fallback;
mod gyro_color;
mod power_cycle_total;
mod sym_group;

pub use alt_group::{
    alternating_gen_set, alternating_graph, base_coloring_a4, lift_alt_coloring, lift_chain,
    total_color_alt, AltTotalOutcome, LiftOutcome,
};
pub use conformable::conformable_partition;
pub use edge_fallback::edge_color_delta_plus_one;
pub use gyro_color::{
    gyro_edge_color, gyro_gen_set_for_k, gyro_total_color, gyro_vertex_color, GyroEdgeOutcome,
    GyroTotalOutcome, GyroVertexOutcome,
};
pub use power_cycle_total::{total_color_power_cycle, PseudoLatin};
pub use sym_group::{symmetric_gen_set, total_color_sym, SymTotalOutcome};

use thiserror::Error;

use crate::chroma::{ChromaError, ColoringReport};
use crate::graph::GraphError;
use crate::gyro::GyroError;
use crate::oracle::OracleResult;
use crate::perm::PermError;

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("parameters out of range: {0}")]
    BadParameters(String),
    #[error("self-verification failed: {0:?}")]
    SelfVerification(Box<ColoringReport>),
    #[error("search budget exhausted: {0}")]
    SearchExhausted(String),
    #[error("required hypothesis failed on this instance: {0}")]
    HypothesisFailed(String),
    #[error("component coloring unavailable: {0:?}")]
    ComponentUnavailable(Box<OracleResult>),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Chroma(#[from] ChromaError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Gyro(#[from] GyroError),
}

/// Guards the postcondition shared by every construction: the report must
/// say proper, otherwise the construction itself is buggy.
pub(crate) fn ensure_proper_report(
    report: ColoringReport,
) -> Result<ColoringReport, ConstructError> {
    if report.proper {
        Ok(report)
    } else {
        Err(ConstructError::SelfVerification(Box::new(report)))
    }
}
