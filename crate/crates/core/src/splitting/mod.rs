//! Strongly irreducible splittings in active position.
//!
//! A [`SplittingProfile`] records how the splitting surface meets each
//! Seifert piece: in horizontal copies, in vertical annuli, or as the single
//! pseudohorizontal active component. Alternatively the active component
//! may be the edge manifold of one torus. From this data the genus of the
//! surface follows by Euler characteristic accounting, and the tube counts
//! of each piece decide how many stabilizations turn it into an
//! amalgamation.

mod bound;
mod budget;
mod census;
mod flow;
mod surface;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::model::GraphManifold;

pub use bound::{stabilization_bound, stabilizations_needed, StabilizationBound};
pub use budget::{
    tube_budget, BudgetMode, Demand, DemandKind, Retained, RoutedOutcome, TubeBudget,
    ROUTING_EDGE_LIMIT,
};
pub use census::{no_horizontal_census, CensusCase, CensusReport, CENSUS_SPLITTING_GENUS};
pub use surface::{
    active_euler_characteristic, fundamental_complex_size, splitting_genus,
    tube_count_per_component, vertical_c, SplittingGenus, VerticalC, VerticalRelation,
};

/// How the splitting surface meets one Seifert piece.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum VertexClass {
    /// `2 * ideal_components` parallel copies of a horizontal surface of the
    /// given genus and boundary count.
    Horizontal {
        genus: u32,
        boundary: u32,
        ideal_components: u32,
    },
    Vertical,
    /// The active component: two horizontal copies of genus `genus` with
    /// `boundary` boundary curves each, joined by a tube.
    Pseudohorizontal {
        genus: u32,
        boundary: u32,
    },
}

impl VertexClass {
    pub fn is_vertical(&self) -> bool {
        matches!(self, VertexClass::Vertical)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ActiveMode {
    Aligned,
    Toggle,
}

/// The edge manifold of `edge` is the active component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActiveEdge {
    pub edge: usize,
    pub mode: ActiveMode,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SplittingProfile {
    /// One class per Seifert piece, in vertex order.
    pub classes: Vec<VertexClass>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub active_edge: Option<ActiveEdge>,
}

impl SplittingProfile {
    pub fn has_horizontal(&self) -> bool {
        self.classes
            .iter()
            .any(|c| matches!(c, VertexClass::Horizontal { .. }))
    }

    pub fn pseudohorizontal(&self) -> Option<usize> {
        self.classes
            .iter()
            .position(|c| matches!(c, VertexClass::Pseudohorizontal { .. }))
    }

    /// Total number of ideal components over horizontal pieces.
    pub fn ideal_component_count(&self) -> i64 {
        self.classes
            .iter()
            .map(|c| match c {
                VertexClass::Horizontal {
                    ideal_components, ..
                } => *ideal_components as i64,
                _ => 0,
            })
            .sum()
    }

    /// Lists every structural problem of the profile against `manifold`.
    pub fn violations(&self, manifold: &GraphManifold) -> Vec<ProfileViolation> {
        let mut out = Vec::new();
        if self.classes.len() != manifold.vertex_count() {
            out.push(ProfileViolation::ClassCount {
                expected: manifold.vertex_count(),
                found: self.classes.len(),
            });
            return out;
        }
        let pseudo = self
            .classes
            .iter()
            .filter(|c| matches!(c, VertexClass::Pseudohorizontal { .. }))
            .count();
        if pseudo + usize::from(self.active_edge.is_some()) > 1 {
            out.push(ProfileViolation::MultipleActive);
        }
        for (v, (class, piece)) in self.classes.iter().zip(&manifold.vertices).enumerate() {
            match *class {
                VertexClass::Horizontal {
                    boundary,
                    ideal_components,
                    ..
                } => {
                    if boundary == 0 || boundary < piece.boundary_count {
                        out.push(ProfileViolation::HorizontalBoundary {
                            vertex: v,
                            boundary,
                            tori: piece.boundary_count,
                        });
                    }
                    if ideal_components == 0 {
                        out.push(ProfileViolation::NoIdealComponents { vertex: v });
                    }
                }
                VertexClass::Pseudohorizontal { boundary, .. } => {
                    if boundary == 0 {
                        out.push(ProfileViolation::PseudohorizontalBoundary { vertex: v });
                    }
                }
                VertexClass::Vertical => {}
            }
            if !class.is_vertical() && piece.free_count() > 0 {
                out.push(ProfileViolation::FreeBoundaryOffVertical { vertex: v });
            }
        }
        if let Some(active) = self.active_edge {
            if active.edge >= manifold.edge_count() {
                out.push(ProfileViolation::ActiveEdgeOutOfRange {
                    edge: active.edge,
                    edge_count: manifold.edge_count(),
                });
            }
        }
        for (i, e) in manifold.edges.iter().enumerate() {
            let active = self.active_edge.is_some_and(|a| a.edge == i);
            let [a, b] = e.ends;
            let (Some(ca), Some(cb)) = (self.classes.get(a.vertex), self.classes.get(b.vertex))
            else {
                continue;
            };
            if !active && ca.is_vertical() && cb.is_vertical() {
                out.push(ProfileViolation::VerticalAcrossTorus { edge: i });
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProfileViolation {
    ClassCount {
        expected: usize,
        found: usize,
    },
    MultipleActive,
    HorizontalBoundary {
        vertex: usize,
        boundary: u32,
        tori: u32,
    },
    NoIdealComponents {
        vertex: usize,
    },
    PseudohorizontalBoundary {
        vertex: usize,
    },
    FreeBoundaryOffVertical {
        vertex: usize,
    },
    ActiveEdgeOutOfRange {
        edge: usize,
        edge_count: usize,
    },
    /// Vertical annuli on both sides of a torus that is not active.
    VerticalAcrossTorus {
        edge: usize,
    },
}

impl fmt::Display for ProfileViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProfileViolation::ClassCount { expected, found } => {
                write!(f, "profile lists {found} classes for {expected} vertices")
            }
            ProfileViolation::MultipleActive => write!(f, "more than one active component"),
            ProfileViolation::HorizontalBoundary { vertex, boundary, tori } => write!(
                f,
                "vertex {vertex}: horizontal surface with {boundary} boundary curves cannot meet all {tori} boundary tori"
            ),
            ProfileViolation::NoIdealComponents { vertex } => {
                write!(f, "vertex {vertex}: horizontal class needs at least one ideal component")
            }
            ProfileViolation::PseudohorizontalBoundary { vertex } => {
                write!(f, "vertex {vertex}: pseudohorizontal surface needs boundary")
            }
            ProfileViolation::FreeBoundaryOffVertical { vertex } => {
                write!(f, "vertex {vertex}: free boundary on a non-vertical piece")
            }
            ProfileViolation::ActiveEdgeOutOfRange { edge, edge_count } => {
                write!(f, "active edge {edge} out of range ({edge_count} edges)")
            }
            ProfileViolation::VerticalAcrossTorus { edge } => {
                write!(f, "edge {edge}: inactive torus between two vertical pieces")
            }
        }
    }
}
