//! Decorated graph manifolds: Seifert fibered pieces glued along JSJ tori.
//!
//! A [`GraphManifold`] is a multigraph whose vertices are [`SeifertPiece`]s
//! and whose edges are canonical tori. Every boundary slot of a piece is
//! either attached to exactly one edge endpoint or is a free boundary torus
//! of the manifold, labelled with the side of the boundary partition it
//! belongs to.
//!
//! Values may be built in an invalid state (for instance while parsing);
//! [`GraphManifold::validate`] reports every structural violation instead of
//! stopping at the first one.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::graph::Multigraph;

/// One of the two sides of a boundary partition, or of a bipartition of the
/// pieces cut along a mutually separating torus system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    One,
    Two,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::One => Side::Two,
            Side::Two => Side::One,
        }
    }

    pub fn index(self) -> u8 {
        match self {
            Side::One => 1,
            Side::Two => 2,
        }
    }

    pub fn from_index(index: u8) -> Option<Side> {
        match index {
            1 => Some(Side::One),
            2 => Some(Side::Two),
            _ => None,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M{}", self.index())
    }
}

impl Serialize for Side {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_u8(self.index())
    }
}

/// Exceptional fiber invariant `beta/alpha`, kept in lowest terms with
/// `0 <= beta < alpha`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fiber {
    beta: i64,
    alpha: i64,
}

impl Fiber {
    /// Normalizes `beta/alpha` modulo the integers. A non-positive `alpha`
    /// is stored untouched so that validation can report it.
    pub fn new(beta: i64, alpha: i64) -> Fiber {
        if alpha <= 0 {
            return Fiber { beta, alpha };
        }
        let beta = beta.rem_euclid(alpha);
        let g = gcd(beta, alpha);
        Fiber {
            beta: beta / g,
            alpha: alpha / g,
        }
    }

    pub fn beta(&self) -> i64 {
        self.beta
    }

    /// Multiplicity of the exceptional fiber.
    pub fn alpha(&self) -> i64 {
        self.alpha
    }
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Role of one boundary torus of a Seifert piece.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlotRole {
    Attached,
    Free(Side),
}

/// Seifert fibered piece with data `(g; m; beta_1/alpha_1, ..., beta_k/alpha_k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertPiece {
    pub base_genus: u32,
    pub boundary_count: u32,
    pub fibers: Vec<Fiber>,
    /// Free boundary slots keyed by slot index. Every other slot is attached
    /// to a JSJ torus.
    pub free_slots: BTreeMap<usize, Side>,
}

impl SeifertPiece {
    pub fn new(base_genus: u32, boundary_count: u32, fibers: Vec<Fiber>) -> SeifertPiece {
        SeifertPiece {
            base_genus,
            boundary_count,
            fibers,
            free_slots: BTreeMap::new(),
        }
    }

    /// Builder-style helper marking `slot` as a free boundary torus on `side`.
    pub fn with_free_slot(mut self, slot: usize, side: Side) -> SeifertPiece {
        self.free_slots.insert(slot, side);
        self
    }

    /// Piece with fibers given as raw `(beta, alpha)` pairs.
    pub fn from_pairs(base_genus: u32, boundary_count: u32, fibers: &[(i64, i64)]) -> SeifertPiece {
        SeifertPiece::new(
            base_genus,
            boundary_count,
            fibers.iter().map(|&(b, a)| Fiber::new(b, a)).collect(),
        )
    }

    /// Number of exceptional fibers, `k`.
    pub fn exceptional_count(&self) -> u32 {
        self.fibers.len() as u32
    }

    /// Number of boundary tori that are boundary components of the manifold, `m_E`.
    pub fn free_count(&self) -> u32 {
        self.free_slots.len() as u32
    }

    pub fn attached_count(&self) -> u32 {
        self.boundary_count.saturating_sub(self.free_count())
    }

    pub fn slot_role(&self, slot: usize) -> Option<SlotRole> {
        if slot >= self.boundary_count as usize {
            return None;
        }
        Some(match self.free_slots.get(&slot) {
            Some(&side) => SlotRole::Free(side),
            None => SlotRole::Attached,
        })
    }

    pub fn attached_slots(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.boundary_count as usize).filter(move |s| !self.free_slots.contains_key(s))
    }

    /// Euler characteristic of the base orbifold's underlying surface,
    /// `2 - 2g - m`.
    pub fn euler_characteristic_base(&self) -> i64 {
        2 - 2 * self.base_genus as i64 - self.boundary_count as i64
    }
}

/// Endpoint of a JSJ torus: a boundary slot of one vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SlotRef {
    pub vertex: usize,
    pub slot: usize,
}

impl SlotRef {
    pub fn new(vertex: usize, slot: usize) -> SlotRef {
        SlotRef { vertex, slot }
    }
}

/// One canonical torus, identified with the two slots it is glued to.
/// Both endpoints may lie on the same vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct JsjEdge {
    pub ends: [SlotRef; 2],
}

impl JsjEdge {
    pub fn new(a: SlotRef, b: SlotRef) -> JsjEdge {
        JsjEdge { ends: [a, b] }
    }

    pub fn is_loop(&self) -> bool {
        self.ends[0].vertex == self.ends[1].vertex
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GraphManifold {
    pub vertices: Vec<SeifertPiece>,
    pub edges: Vec<JsjEdge>,
}

impl GraphManifold {
    pub fn new(vertices: Vec<SeifertPiece>, edges: Vec<JsjEdge>) -> GraphManifold {
        GraphManifold { vertices, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Underlying multigraph of the torus decomposition.
    pub fn graph(&self) -> Multigraph {
        Multigraph::new(
            self.vertices.len(),
            self.edges
                .iter()
                .map(|e| (e.ends[0].vertex, e.ends[1].vertex)),
        )
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        if self.vertices.is_empty() {
            violations.push(Violation::NoVertices);
        }
        if self.edges.is_empty() {
            violations.push(Violation::EmptyTorusSystem);
        }

        for (v, piece) in self.vertices.iter().enumerate() {
            if piece.boundary_count == 0 {
                violations.push(Violation::NoBoundary { vertex: v });
            }
            for (i, fiber) in piece.fibers.iter().enumerate() {
                if fiber.alpha < 2 {
                    violations.push(Violation::FiberMultiplicity {
                        vertex: v,
                        fiber: i,
                        alpha: fiber.alpha,
                    });
                }
            }
            for &slot in piece.free_slots.keys() {
                if slot >= piece.boundary_count as usize {
                    violations.push(Violation::FreeSlotOutOfRange { vertex: v, slot });
                }
            }
        }

        let mut used: BTreeMap<SlotRef, usize> = BTreeMap::new();
        for (e, edge) in self.edges.iter().enumerate() {
            for end in edge.ends {
                let Some(piece) = self.vertices.get(end.vertex) else {
                    violations.push(Violation::VertexOutOfRange {
                        edge: e,
                        vertex: end.vertex,
                    });
                    continue;
                };
                match piece.slot_role(end.slot) {
                    None => violations.push(Violation::SlotOutOfRange {
                        edge: e,
                        vertex: end.vertex,
                        slot: end.slot,
                    }),
                    Some(SlotRole::Free(_)) => violations.push(Violation::EdgeOnFreeSlot {
                        edge: e,
                        vertex: end.vertex,
                        slot: end.slot,
                    }),
                    Some(SlotRole::Attached) => {
                        if let Some(&first) = used.get(&end) {
                            violations.push(Violation::SlotReused {
                                vertex: end.vertex,
                                slot: end.slot,
                                first_edge: first,
                                second_edge: e,
                            });
                        } else {
                            used.insert(end, e);
                        }
                    }
                }
            }
        }

        for (v, piece) in self.vertices.iter().enumerate() {
            for slot in piece.attached_slots() {
                if !used.contains_key(&SlotRef::new(v, slot)) {
                    violations.push(Violation::UnusedSlot { vertex: v, slot });
                }
            }
        }

        let endpoints_in_range = self
            .edges
            .iter()
            .all(|e| e.ends.iter().all(|s| s.vertex < self.vertices.len()));
        if !self.vertices.is_empty() && endpoints_in_range && !self.graph().is_connected() {
            violations.push(Violation::Disconnected);
        }

        ValidationReport { violations }
    }
}

/// A single broken structural invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NoVertices,
    EmptyTorusSystem,
    NoBoundary {
        vertex: usize,
    },
    FiberMultiplicity {
        vertex: usize,
        fiber: usize,
        alpha: i64,
    },
    FreeSlotOutOfRange {
        vertex: usize,
        slot: usize,
    },
    VertexOutOfRange {
        edge: usize,
        vertex: usize,
    },
    SlotOutOfRange {
        edge: usize,
        vertex: usize,
        slot: usize,
    },
    EdgeOnFreeSlot {
        edge: usize,
        vertex: usize,
        slot: usize,
    },
    SlotReused {
        vertex: usize,
        slot: usize,
        first_edge: usize,
        second_edge: usize,
    },
    UnusedSlot {
        vertex: usize,
        slot: usize,
    },
    Disconnected,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoVertices => write!(f, "manifold has no Seifert pieces"),
            Violation::EmptyTorusSystem => write!(f, "torus system is empty"),
            Violation::NoBoundary { vertex } => {
                write!(f, "vertex {vertex}: Seifert piece has no boundary")
            }
            Violation::FiberMultiplicity {
                vertex,
                fiber,
                alpha,
            } => write!(
                f,
                "vertex {vertex}: fiber {fiber} has multiplicity {alpha} < 2"
            ),
            Violation::FreeSlotOutOfRange { vertex, slot } => {
                write!(f, "vertex {vertex}: free slot {slot} out of range")
            }
            Violation::VertexOutOfRange { edge, vertex } => {
                write!(f, "edge {edge}: vertex {vertex} out of range")
            }
            Violation::SlotOutOfRange { edge, vertex, slot } => {
                write!(
                    f,
                    "edge {edge}: slot {slot} of vertex {vertex} out of range"
                )
            }
            Violation::EdgeOnFreeSlot { edge, vertex, slot } => write!(
                f,
                "edge {edge}: slot {slot} of vertex {vertex} is free boundary"
            ),
            Violation::SlotReused {
                vertex,
                slot,
                first_edge,
                second_edge,
            } => write!(
                f,
                "vertex {vertex}: slot {slot} used by edges {first_edge} and {second_edge}"
            ),
            Violation::UnusedSlot { vertex, slot } => {
                write!(f, "vertex {vertex}: unused slot {slot}")
            }
            Violation::Disconnected => write!(f, "graph not connected"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "ok");
        }
        let lines: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", lines.join("; "))
    }
}
