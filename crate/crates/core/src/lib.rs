//! Combinatorial invariants of Heegaard splittings of graph manifolds.
//!
//! A graph manifold is described as a decorated multigraph of Seifert
//! fibered pieces glued along JSJ tori. The crate computes minimal
//! amalgamatable modifications of the torus system, amalgamation genus
//! under boundary partitions, the genus of a splitting from its
//! active-position profile, the stabilization bound and tube budgets.

pub mod corpus;
pub mod error;
pub mod families;
pub mod genus;
pub mod graph;
pub mod manifest;
pub mod model;
pub mod modification;
pub mod oracle;
pub mod report;
pub mod splitting;

pub use error::Error;
pub use genus::{
    amalgamation_genus, ideal_partition, AmalgamationGenusResult, IdealPartition, PieceGenus,
};
pub use graph::{cycle_rank, find_odd_cycle, has_odd_cycle, CycleRank, Multigraph, OddCycle};
pub use model::{
    Fiber, GraphManifold, JsjEdge, SeifertPiece, Side, SlotRef, SlotRole, ValidationReport,
    Violation,
};
pub use modification::{
    amalgamatable_modification, greedy_modification, DerivedVertex, Modification,
    PartitionAssignment,
};
pub use splitting::{ActiveEdge, ActiveMode, SplittingProfile, VertexClass};
