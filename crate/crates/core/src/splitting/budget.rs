//! Tube budgets: does one stabilization supply enough tubes to block every
//! piece of the amalgamation?
//!
//! After one stabilization the surface carries `g + n` tubes counted with
//! the active component. Each horizontal piece keeps `a(X)` of them, each
//! vertical piece needs `a(Y)`, each `T^2 x I` piece needs one, and the
//! active edge manifold needs none. The aggregate budget compares totals.
//! The routed budget moves tubes only along tori of the modified system,
//! where vertical pieces absorb tubes but do not pass them on; with
//! teleporting enabled trivial tubes may also jump to any piece.

use serde::Serialize;

use crate::error::Error;
use crate::genus::seifert_heegaard_genus;
use crate::model::GraphManifold;
use crate::modification::{Modification, PartitionAssignment};

use super::flow::FlowNetwork;
use super::surface::{splitting_genus, tube_count_per_component, vertical_c, VerticalRelation};
use super::{SplittingProfile, VertexClass};

/// Largest derived graph the routed budget accepts, in edges.
pub const ROUTING_EDGE_LIMIT: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum BudgetMode {
    Aggregate,
    Routed { teleport: bool },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DemandKind {
    Vertical {
        vertex: usize,
    },
    Product {
        edge: usize,
    },
    /// The `T^2 x I` piece of a doubled active edge; the active component
    /// already blocks it.
    ActiveProduct {
        edge: usize,
    },
    ActiveEdge {
        edge: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Demand {
    #[serde(flatten)]
    pub kind: DemandKind,
    pub amount: i64,
    /// The piece takes one tube more than it keeps and hands a trivial tube
    /// back.
    pub transit_bonus: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Retained {
    pub vertex: usize,
    pub amount: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RoutedOutcome {
    pub teleport: bool,
    pub required: i64,
    pub delivered: i64,
    pub feasible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TubeBudget {
    #[serde(flatten)]
    pub mode: BudgetMode,
    pub genus: i64,
    pub n: i64,
    pub supply: i64,
    pub demands: Vec<Demand>,
    pub retained: Vec<Retained>,
    pub slack: i64,
    pub feasible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub routed: Option<RoutedOutcome>,
}

impl TubeBudget {
    pub fn required(&self) -> i64 {
        self.demands.iter().map(|d| d.amount).sum::<i64>()
            + self.retained.iter().map(|r| r.amount).sum::<i64>()
    }
}

pub fn tube_budget(
    manifold: &GraphManifold,
    profile: &SplittingProfile,
    modification: &Modification,
    assignment: &PartitionAssignment,
    mode: BudgetMode,
) -> Result<TubeBudget, Error> {
    let surface = splitting_genus(manifold, profile)?;
    if let BudgetMode::Routed { .. } = mode {
        let edges = modification.derived_graph().edge_count();
        if edges > ROUTING_EDGE_LIMIT {
            return Err(Error::RoutingTooLarge {
                edges,
                limit: ROUTING_EDGE_LIMIT,
            });
        }
    }
    let active_edge = profile.active_edge.map(|a| a.edge);

    let mut demands = Vec::new();
    let mut retained = Vec::new();
    for (v, (piece, class)) in manifold.vertices.iter().zip(&profile.classes).enumerate() {
        match class {
            VertexClass::Vertical => {
                let weighted = assignment.weighted.get(v).copied().unwrap_or(false);
                let c = vertical_c(piece, piece.free_count(), weighted);
                demands.push(Demand {
                    kind: DemandKind::Vertical { vertex: v },
                    amount: c.a,
                    transit_bonus: c.relation == VerticalRelation::PlusOne,
                });
            }
            VertexClass::Horizontal { .. } | VertexClass::Pseudohorizontal { .. } => {
                retained.push(Retained {
                    vertex: v,
                    amount: seifert_heegaard_genus(piece, 0, false).a,
                });
            }
        }
    }
    for &edge in modification.doubled_edges() {
        let (kind, amount) = if active_edge == Some(edge) {
            (DemandKind::ActiveProduct { edge }, 0)
        } else {
            (DemandKind::Product { edge }, 1)
        };
        demands.push(Demand {
            kind,
            amount,
            transit_bonus: false,
        });
    }
    if let Some(edge) = active_edge {
        demands.push(Demand {
            kind: DemandKind::ActiveEdge { edge },
            amount: 0,
            transit_bonus: false,
        });
    }

    let supply = surface.genus + surface.n;
    let mut budget = TubeBudget {
        mode,
        genus: surface.genus,
        n: surface.n,
        supply,
        demands,
        retained,
        slack: 0,
        feasible: false,
        routed: None,
    };
    budget.slack = supply - budget.required();
    budget.feasible = budget.slack >= 0;

    if let BudgetMode::Routed { teleport } = mode {
        let outcome = route(manifold, profile, modification, &budget, teleport);
        budget.feasible &= outcome.feasible;
        budget.routed = Some(outcome);
    }
    Ok(budget)
}

fn route(
    manifold: &GraphManifold,
    profile: &SplittingProfile,
    modification: &Modification,
    budget: &TubeBudget,
    teleport: bool,
) -> RoutedOutcome {
    let derived = modification.derived_graph();
    let nodes = derived.vertex_count();
    let (source, sink, hub) = (nodes, nodes + 1, nodes + 2);
    let mut net = FlowNetwork::new(nodes + 3);
    let unbounded = budget.supply.max(0) + 1;

    let vertical = |v: usize| v < manifold.vertex_count() && profile.classes[v].is_vertical();
    let mut stabilized = false;
    for (v, class) in profile.classes.iter().enumerate() {
        if let VertexClass::Horizontal {
            genus,
            boundary,
            ideal_components,
        } = *class
        {
            let mut out = ideal_components as i64 * tube_count_per_component(genus, boundary);
            if !stabilized {
                out += 1;
                stabilized = true;
            }
            net.add_arc(source, v, out);
        }
    }
    if let Some(v) = profile.pseudohorizontal() {
        if let VertexClass::Pseudohorizontal { genus, boundary } = profile.classes[v] {
            net.add_arc(
                source,
                v,
                tube_count_per_component(genus, boundary) + i64::from(!stabilized),
            );
            stabilized = true;
        }
    }
    if let Some(active) = profile.active_edge {
        let (a, b) = manifold.graph().edge(active.edge);
        let at = modification.product_vertex(active.edge).unwrap_or(a.min(b));
        net.add_arc(source, at, 1 + i64::from(!stabilized));
    }

    for d in &budget.demands {
        let at = match d.kind {
            DemandKind::Vertical { vertex } => Some(vertex),
            DemandKind::Product { edge } | DemandKind::ActiveProduct { edge } => {
                modification.product_vertex(edge)
            }
            DemandKind::ActiveEdge { .. } => None,
        };
        if let Some(at) = at {
            net.add_arc(at, sink, d.amount);
        }
    }
    for r in &budget.retained {
        net.add_arc(r.vertex, sink, r.amount);
    }
    for &(a, b) in derived.edges() {
        if !vertical(a) {
            net.add_arc(a, b, unbounded);
        }
        if !vertical(b) {
            net.add_arc(b, a, unbounded);
        }
    }
    if teleport {
        for v in 0..nodes {
            net.add_arc(v, hub, unbounded);
            net.add_arc(hub, v, unbounded);
        }
    }

    let required = budget.required();
    let delivered = net.max_flow(source, sink);
    RoutedOutcome {
        teleport,
        required,
        delivered,
        feasible: delivered >= required,
    }
}
