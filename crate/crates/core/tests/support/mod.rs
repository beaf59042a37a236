//! Independent oracles for the integration tests. Nothing here calls the
//! library's own algorithms; inputs come from the library's generators.

#![allow(dead_code)]

use std::collections::VecDeque;

use graphmfd::model::{GraphManifold, JsjEdge, SeifertPiece, SlotRef};
use graphmfd::splitting::{SplittingProfile, VertexClass};
use graphmfd::Multigraph;

/// Cycle space dimension over Z/2 by elimination on the edge-vertex
/// incidence vectors, packed into bit masks.
pub fn z2_cycle_dimension(vertices: usize, edges: &[(usize, usize)]) -> usize {
    let mut basis: Vec<u128> = Vec::new();
    for &(a, b) in edges {
        let mut v: u128 = if a == b {
            0
        } else {
            (1u128 << a) ^ (1u128 << b)
        };
        for &row in &basis {
            v = v.min(v ^ row);
        }
        if v != 0 {
            basis.push(v);
            basis.sort_unstable_by(|x, y| y.cmp(x));
        }
    }
    assert!(vertices <= 128);
    edges.len() - basis.len()
}

/// Bipartiteness after subdividing the edges in `mask`, by BFS over the
/// subdivided graph built from scratch.
pub fn bipartite_after_doubling(vertices: usize, edges: &[(usize, usize)], mask: u32) -> bool {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); vertices + edges.len()];
    for (i, &(a, b)) in edges.iter().enumerate() {
        if mask >> i & 1 == 1 {
            let mid = vertices + i;
            adj[a].push(mid);
            adj[mid].push(a);
            adj[b].push(mid);
            adj[mid].push(b);
        } else {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    let mut color = vec![u8::MAX; adj.len()];
    for s in 0..adj.len() {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if color[w] == color[u] {
                    return false;
                }
            }
        }
    }
    true
}

/// Minimum doubling by enumerating every subset; among minimum subsets the
/// lexicographically smallest sorted index list.
pub fn brute_min_doubling(graph: &Multigraph) -> Vec<usize> {
    let m = graph.edge_count();
    assert!(m <= 20);
    let mut best: Option<Vec<usize>> = None;
    for mask in 0u32..1 << m {
        if !bipartite_after_doubling(graph.vertex_count(), graph.edges(), mask) {
            continue;
        }
        let set: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
        let better = match &best {
            None => true,
            Some(b) => set.len() < b.len() || (set.len() == b.len() && set < *b),
        };
        if better {
            best = Some(set);
        }
    }
    best.expect("doubling every edge always works")
}

/// Heegaard genus of a piece from its side and free boundary, restated
/// directly from the closed forms.
fn piece_g_h(piece: &SeifertPiece, side: u8) -> i64 {
    let g = piece.base_genus as i64;
    let m = piece.boundary_count as i64;
    let k = piece.fibers.len() as i64;
    let free: Vec<u8> = piece.free_slots.values().map(|s| s.index()).collect();
    let one_sided = !free.is_empty() && free.iter().all(|&s| s == side);
    if k >= 1 || (!free.is_empty() && !one_sided) {
        2 * g + m + k - 1
    } else {
        2 * g + m
    }
}

pub struct GenusOracle {
    /// Amalgamation genus for the assignment putting vertex 0 on side 1,
    /// then for its swap.
    pub by_assignment: [i64; 2],
    /// Same, by the general formula over all derived pieces.
    pub general: [i64; 2],
}

/// Both amalgamation genus formulas for the modification doubling
/// `doubled`, with the colouring found by a fresh BFS.
pub fn genus_oracle(manifold: &GraphManifold, doubled: &[usize]) -> GenusOracle {
    let n = manifold.vertex_count();
    let edges: Vec<(usize, usize)> = manifold
        .edges
        .iter()
        .map(|e| (e.ends[0].vertex, e.ends[1].vertex))
        .collect();
    let mut sub: Vec<(usize, usize)> = Vec::new();
    for (i, &(a, b)) in edges.iter().enumerate() {
        match doubled.iter().position(|&d| d == i) {
            Some(j) => {
                sub.push((a, n + j));
                sub.push((n + j, b));
            }
            None => sub.push((a, b)),
        }
    }
    let total = n + doubled.len();
    let mut adj = vec![Vec::new(); total];
    for &(a, b) in &sub {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut color = vec![u8::MAX; total];
    color[0] = 1;
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if color[w] == u8::MAX {
                color[w] = 3 - color[u];
                queue.push_back(w);
            }
        }
    }
    assert!(
        sub.iter().all(|&(a, b)| color[a] != color[b]),
        "modification not separating"
    );
    let ell = z2_cycle_dimension(total, &sub) as i64;
    let q = doubled.len() as i64;

    let mut by_assignment = [0; 2];
    let mut general = [0; 2];
    for (idx, flip) in [false, true].into_iter().enumerate() {
        let g_h: Vec<i64> = manifold
            .vertices
            .iter()
            .enumerate()
            .map(|(v, p)| piece_g_h(p, if flip { 3 - color[v] } else { color[v] }))
            .collect();
        by_assignment[idx] = g_h.iter().map(|x| x - 1).sum::<i64>() + q + 1;
        general[idx] = g_h.iter().sum::<i64>() + 2 * q - sub.len() as i64 + ell;
    }
    GenusOracle {
        by_assignment,
        general,
    }
}

/// Euler characteristic of the splitting surface summed piece by piece.
pub fn surface_euler_characteristic(profile: &SplittingProfile) -> i64 {
    let mut chi = 0;
    for class in &profile.classes {
        match *class {
            VertexClass::Horizontal {
                genus,
                boundary,
                ideal_components,
            } => chi += 2 * ideal_components as i64 * (2 - 2 * genus as i64 - boundary as i64),
            // Two copies of the horizontal surface joined by a tube.
            VertexClass::Pseudohorizontal { genus, boundary } => {
                chi += 2 * (2 - 2 * genus as i64 - boundary as i64) - 2
            }
            VertexClass::Vertical => {}
        }
    }
    if profile.active_edge.is_some() {
        // A twice punctured torus inside the edge manifold.
        chi -= 2;
    }
    chi
}

/// Tubes carried by all ideal components, from `1 - chi` of each.
pub fn total_tubes(profile: &SplittingProfile) -> i64 {
    profile
        .classes
        .iter()
        .map(|c| match *c {
            VertexClass::Horizontal {
                genus,
                boundary,
                ideal_components,
            } => ideal_components as i64 * (1 - (2 - 2 * genus as i64 - boundary as i64)),
            _ => 0,
        })
        .sum()
}

pub fn ideal_components(profile: &SplittingProfile) -> i64 {
    profile
        .classes
        .iter()
        .map(|c| match *c {
            VertexClass::Horizontal {
                ideal_components, ..
            } => ideal_components as i64,
            _ => 0,
        })
        .sum()
}

pub fn active_chi(profile: &SplittingProfile) -> i64 {
    let horizontal_part: i64 = profile
        .classes
        .iter()
        .map(|c| match *c {
            VertexClass::Horizontal {
                genus,
                boundary,
                ideal_components,
            } => 2 * ideal_components as i64 * (2 - 2 * genus as i64 - boundary as i64),
            _ => 0,
        })
        .sum();
    surface_euler_characteristic(profile) - horizontal_part
}

/// Same manifold with vertices renamed by `perm` (old `v` becomes
/// `perm[v]`), edges listed in `order` and, where `flip` is set, endpoints
/// swapped.
pub fn relabel(
    manifold: &GraphManifold,
    perm: &[usize],
    order: &[usize],
    flip: &[bool],
) -> GraphManifold {
    let mut vertices = vec![manifold.vertices[0].clone(); manifold.vertex_count()];
    for (v, piece) in manifold.vertices.iter().enumerate() {
        vertices[perm[v]] = piece.clone();
    }
    let edges = order
        .iter()
        .zip(flip)
        .map(|(&e, &f)| {
            let [a, b] = manifold.edges[e].ends;
            let (a, b) = if f { (b, a) } else { (a, b) };
            JsjEdge::new(
                SlotRef::new(perm[a.vertex], a.slot),
                SlotRef::new(perm[b.vertex], b.slot),
            )
        })
        .collect();
    GraphManifold::new(vertices, edges)
}
