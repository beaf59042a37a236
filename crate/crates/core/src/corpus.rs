//! Seeded random instances for property checks and oracle comparisons.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Multigraph;
use crate::model::{Fiber, GraphManifold, JsjEdge, SeifertPiece, Side, SlotRef};
use crate::splitting::{splitting_genus, ActiveEdge, ActiveMode, SplittingProfile, VertexClass};

/// Environment variable holding the corpus seed.
pub const SEED_VAR: &str = "GRAPHMFD_SEED";

/// Seed from [`SEED_VAR`], or `default` when unset or unparsable.
pub fn seed_from_env(default: u64) -> u64 {
    std::env::var(SEED_VAR)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(default)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Connected multigraph with at most `max_vertices` vertices and exactly
/// `edges` edges, `edges >= vertices - 1`. Self-loops and parallel edges
/// occur.
pub fn connected_multigraph<R: Rng>(rng: &mut R, max_vertices: usize, edges: usize) -> Multigraph {
    let n = rng.gen_range(1..=max_vertices.min(edges + 1).max(1));
    let mut list = Vec::with_capacity(edges);
    for v in 1..n {
        list.push((rng.gen_range(0..v), v));
    }
    while list.len() < edges {
        let a = rng.gen_range(0..n);
        let b = if rng.gen_bool(0.15) {
            a
        } else {
            rng.gen_range(0..n)
        };
        list.push((a, b));
    }
    list.shuffle(rng);
    for e in list.iter_mut() {
        if rng.gen_bool(0.5) {
            *e = (e.1, e.0);
        }
    }
    Multigraph::new(n, list)
}

/// Valid manifold on the given graph with random Seifert data and free
/// boundary.
pub fn manifold_on<R: Rng>(rng: &mut R, graph: &Multigraph) -> GraphManifold {
    let n = graph.vertex_count();
    let mut degree = vec![0usize; n];
    for &(a, b) in graph.edges() {
        degree[a] += 1;
        degree[b] += 1;
    }
    let mut vertices = Vec::with_capacity(n);
    let mut slots: Vec<Vec<usize>> = Vec::with_capacity(n);
    for &d in &degree {
        let free = if rng.gen_bool(0.3) {
            rng.gen_range(1..=2)
        } else {
            0
        };
        let m = (d + free).max(1);
        let free = m - d;
        let k = rng.gen_range(0..=3);
        let fibers = (0..k)
            .map(|_| {
                let alpha = rng.gen_range(2..=7);
                let mut beta = rng.gen_range(1..alpha);
                while crate::model::gcd(beta, alpha) != 1 {
                    beta = rng.gen_range(1..alpha);
                }
                Fiber::new(beta, alpha)
            })
            .collect();
        let mut piece = SeifertPiece::new(rng.gen_range(0..=2), m as u32, fibers);
        let mut order: Vec<usize> = (0..m).collect();
        order.shuffle(rng);
        for &slot in &order[..free] {
            let side = if rng.gen_bool(0.5) {
                Side::One
            } else {
                Side::Two
            };
            piece.free_slots.insert(slot, side);
        }
        let mut attached = order[free..].to_vec();
        attached.sort_unstable();
        slots.push(attached);
        vertices.push(piece);
    }
    let mut next = vec![0usize; n];
    let mut take = |v: usize| {
        let s = slots[v][next[v]];
        next[v] += 1;
        SlotRef::new(v, s)
    };
    let edges = graph
        .edges()
        .iter()
        .map(|&(a, b)| {
            let ea = take(a);
            let eb = take(b);
            JsjEdge::new(ea, eb)
        })
        .collect();
    GraphManifold::new(vertices, edges)
}

/// Random valid manifold with at most `max_vertices` pieces and between 1
/// and `max_edges` tori.
pub fn random_manifold<R: Rng>(
    rng: &mut R,
    max_vertices: usize,
    max_edges: usize,
) -> GraphManifold {
    let edges = rng.gen_range(1..=max_edges);
    let graph = connected_multigraph(rng, max_vertices, edges);
    manifold_on(rng, &graph)
}

/// Random profile valid for `manifold` with a non-negative splitting
/// genus, or `None` when none was found in a few attempts.
pub fn random_profile<R: Rng>(rng: &mut R, manifold: &GraphManifold) -> Option<SplittingProfile> {
    for _ in 0..32 {
        if let Some(p) = try_profile(rng, manifold) {
            if splitting_genus(manifold, &p).is_ok() {
                return Some(p);
            }
        }
    }
    None
}

fn try_profile<R: Rng>(rng: &mut R, manifold: &GraphManifold) -> Option<SplittingProfile> {
    let n = manifold.vertex_count();
    let closed: Vec<usize> = (0..n)
        .filter(|&v| manifold.vertices[v].free_slots.is_empty())
        .collect();
    let mut classes: Vec<VertexClass> = (0..n)
        .map(|v| {
            if manifold.vertices[v].free_slots.is_empty() && rng.gen_bool(0.6) {
                horizontal(rng, &manifold.vertices[v])
            } else {
                VertexClass::Vertical
            }
        })
        .collect();
    let mut active_edge = None;
    match rng.gen_range(0..3) {
        0 => {}
        1 => {
            active_edge = Some(ActiveEdge {
                edge: rng.gen_range(0..manifold.edge_count()),
                mode: if rng.gen_bool(0.5) {
                    ActiveMode::Aligned
                } else {
                    ActiveMode::Toggle
                },
            });
        }
        _ => {
            let &v = closed.choose(rng)?;
            classes[v] = VertexClass::Pseudohorizontal {
                genus: rng.gen_range(0..=1),
                boundary: rng.gen_range(1..=4),
            };
        }
    }
    for (i, e) in manifold.edges.iter().enumerate() {
        if active_edge.is_some_and(|a: ActiveEdge| a.edge == i) {
            continue;
        }
        let [a, b] = e.ends.map(|s| s.vertex);
        if classes[a].is_vertical() && classes[b].is_vertical() {
            let fix = [a, b]
                .into_iter()
                .find(|&v| manifold.vertices[v].free_slots.is_empty())?;
            classes[fix] = horizontal(rng, &manifold.vertices[fix]);
        }
    }
    let profile = SplittingProfile {
        classes,
        active_edge,
    };
    profile.violations(manifold).is_empty().then_some(profile)
}

fn horizontal<R: Rng>(rng: &mut R, piece: &SeifertPiece) -> VertexClass {
    VertexClass::Horizontal {
        genus: rng.gen_range(0..=2),
        boundary: piece.boundary_count.max(1) + rng.gen_range(0..=3),
        ideal_components: rng.gen_range(1..=3),
    }
}
