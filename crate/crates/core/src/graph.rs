//! Undirected multigraphs with self-loops, cycle rank and odd cycles.
//!
//! Parity is measured by the number of edges of a closed walk, so a
//! self-loop is an odd cycle of length one and a pair of parallel edges an
//! even cycle of length two.

use std::collections::VecDeque;

use crate::error::Error;
use crate::model::Side;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Multigraph {
        let edges: Vec<_> = edges.into_iter().collect();
        debug_assert!(edges
            .iter()
            .all(|&(a, b)| a < vertex_count && b < vertex_count));
        Multigraph {
            vertex_count,
            edges,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> (usize, usize) {
        self.edges[index]
    }

    /// `adjacency()[v]` lists `(neighbour, edge index)`; a self-loop appears
    /// twice in its vertex's list.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            adj[a].push((b, i));
            adj[b].push((a, i));
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &(w, _) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.vertex_count
    }
}

/// First Betti number of a connected graph with a witnessing spanning tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleRank {
    pub ell: usize,
    pub spanning_tree: Vec<usize>,
}

pub fn cycle_rank(graph: &Multigraph) -> Result<CycleRank, Error> {
    if graph.vertex_count() == 0 {
        return Err(Error::NotConnected);
    }
    let mut forest = DisjointSets::new(graph.vertex_count());
    let mut tree = Vec::with_capacity(graph.vertex_count() - 1);
    for (i, &(a, b)) in graph.edges().iter().enumerate() {
        if forest.union(a, b) {
            tree.push(i);
        }
    }
    if tree.len() + 1 != graph.vertex_count() {
        return Err(Error::NotConnected);
    }
    Ok(CycleRank {
        ell: graph.edge_count() + 1 - graph.vertex_count(),
        spanning_tree: tree,
    })
}

/// Closed walk `vertices[0] -e0- vertices[1] -e1- ... -e_{l-1}- vertices[0]`
/// of odd length `l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddCycle {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl OddCycle {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

pub fn has_odd_cycle(graph: &Multigraph) -> bool {
    find_odd_cycle(graph).is_some()
}

/// Finds an odd closed walk, or `None` when the graph is bipartite.
pub fn find_odd_cycle(graph: &Multigraph) -> Option<OddCycle> {
    for (i, &(a, b)) in graph.edges().iter().enumerate() {
        if a == b {
            return Some(OddCycle {
                vertices: vec![a],
                edges: vec![i],
            });
        }
    }

    let n = graph.vertex_count();
    let adj = graph.adjacency();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut depth = vec![0usize; n];

    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let cv = color[v].unwrap();
            for &(w, e) in &adj[v] {
                match color[w] {
                    None => {
                        color[w] = Some(!cv);
                        parent[w] = Some((v, e));
                        depth[w] = depth[v] + 1;
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cv => {
                        return Some(close_walk(v, w, e, &parent, &depth));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    None
}

// Tree paths from `u` and `w` up to their common ancestor, closed by `e`.
fn close_walk(
    u: usize,
    w: usize,
    e: usize,
    parent: &[Option<(usize, usize)>],
    depth: &[usize],
) -> OddCycle {
    let (mut a, mut b) = (u, w);
    let mut up_a = Vec::new();
    let mut up_b = Vec::new();
    while depth[a] > depth[b] {
        let (p, pe) = parent[a].unwrap();
        up_a.push((a, pe));
        a = p;
    }
    while depth[b] > depth[a] {
        let (p, pe) = parent[b].unwrap();
        up_b.push((b, pe));
        b = p;
    }
    while a != b {
        let (pa, ea) = parent[a].unwrap();
        let (pb, eb) = parent[b].unwrap();
        up_a.push((a, ea));
        up_b.push((b, eb));
        a = pa;
        b = pb;
    }
    let lca = a;

    // lca -> ... -> u, then e to w, then w -> ... -> lca.
    let mut vertices = vec![lca];
    let mut edges = Vec::new();
    for &(v, pe) in up_a.iter().rev() {
        edges.push(pe);
        vertices.push(v);
    }
    edges.push(e);
    for &(v, pe) in &up_b {
        vertices.push(v);
        edges.push(pe);
    }
    OddCycle { vertices, edges }
}

/// Proper 2-colouring of a connected graph with vertex 0 on [`Side::One`].
pub fn two_coloring(graph: &Multigraph) -> Result<Vec<Side>, Error> {
    if !graph.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = graph.vertex_count();
    let adj = graph.adjacency();
    let mut sides: Vec<Option<Side>> = vec![None; n];
    if n == 0 {
        return Ok(Vec::new());
    }
    sides[0] = Some(Side::One);
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        let sv = sides[v].unwrap();
        for &(w, _) in &adj[v] {
            match sides[w] {
                None => {
                    sides[w] = Some(sv.flip());
                    queue.push_back(w);
                }
                Some(sw) if sw == sv => return Err(Error::NotSeparating),
                Some(_) => {}
            }
        }
    }
    Ok(sides.into_iter().map(|s| s.unwrap()).collect())
}

pub(crate) struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> DisjointSets {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}
