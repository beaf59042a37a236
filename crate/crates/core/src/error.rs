use thiserror::Error;

use crate::model::ValidationReport;
use crate::splitting::ProfileViolation;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph not connected")]
    NotConnected,
    #[error("modification not separating")]
    NotSeparating,
    #[error("edge {edge} out of range for a graph with {edge_count} edges")]
    EdgeOutOfRange { edge: usize, edge_count: usize },
    #[error(
        "genus cross-check failed: general formula gives {general}, graph formula gives {graph}"
    )]
    GenusCrossCheck { general: i64, graph: i64 },
    #[error("invalid manifold: {0}")]
    InvalidManifold(ValidationReport),
    #[error("invalid splitting profile: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    InvalidProfile(Vec<ProfileViolation>),
    #[error("profile underdetermined: no horizontal component and no active component")]
    ProfileUnderdetermined,
    #[error("Euler characteristic accounting gives negative genus ({chi} = chi(S))")]
    NegativeGenus { chi: i64 },
    #[error("census inapplicable: {0}")]
    CensusInapplicable(String),
    #[error("instance too large for exact routing ({edges} derived edges, limit {limit})")]
    RoutingTooLarge { edges: usize, limit: usize },
    #[error("{path}: {message} at line {line} column {column}")]
    Parse {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid example family parameters: {0}")]
    InvalidFamily(String),
}
