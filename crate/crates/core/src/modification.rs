//! Amalgamatable modifications of a torus system.
//!
//! Doubling a torus inserts a `T^2 x I` piece between its two sides, which
//! subdivides the corresponding edge and flips the parity of every cycle
//! through it. A set of doubled edges makes the system mutually separating
//! exactly when the derived graph is bipartite, i.e. when some 2-colouring
//! of the original vertices puts the endpoints of every kept edge on
//! opposite sides and the endpoints of every doubled edge on the same side.
//!
//! The minimum is found by a depth-first branch and bound over edges in
//! index order, carrying the parity constraints in a union-find with
//! rollback. Exploring "double" before "keep" visits equal-size edge sets in
//! lexicographic order, which gives the deterministic tie-break.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::Error;
use crate::graph::{find_odd_cycle, two_coloring, Multigraph};
use crate::model::{GraphManifold, Side};

/// Vertex of the derived graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DerivedVertex {
    /// A Seifert piece, by vertex index in the original graph.
    Seifert { vertex: usize },
    /// The `T^2 x I` piece created by doubling an original edge.
    Product { edge: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Modification {
    base: Multigraph,
    doubled: Vec<usize>,
    derived: Multigraph,
    bipartition: Vec<Side>,
}

impl Modification {
    /// Derived graph for the given doubled edges. Fails unless it is
    /// connected and bipartite.
    pub fn new(
        base: &Multigraph,
        doubled: impl IntoIterator<Item = usize>,
    ) -> Result<Modification, Error> {
        let doubled: Vec<usize> = doubled
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if let Some(&e) = doubled.iter().find(|&&e| e >= base.edge_count()) {
            return Err(Error::EdgeOutOfRange {
                edge: e,
                edge_count: base.edge_count(),
            });
        }
        let derived = derived_graph(base, &doubled);
        let bipartition = two_coloring(&derived)?;
        Ok(Modification {
            base: base.clone(),
            doubled,
            derived,
            bipartition,
        })
    }

    /// Sorted indices of the doubled edges.
    pub fn doubled_edges(&self) -> &[usize] {
        &self.doubled
    }

    pub fn q(&self) -> usize {
        self.doubled.len()
    }

    pub fn base(&self) -> &Multigraph {
        &self.base
    }

    pub fn derived_graph(&self) -> &Multigraph {
        &self.derived
    }

    /// Number of tori in the modified system.
    pub fn torus_count(&self) -> usize {
        self.derived.edge_count()
    }

    pub fn derived_vertex(&self, v: usize) -> DerivedVertex {
        let n = self.base.vertex_count();
        if v < n {
            DerivedVertex::Seifert { vertex: v }
        } else {
            DerivedVertex::Product {
                edge: self.doubled[v - n],
            }
        }
    }

    /// Derived vertex index of the `T^2 x I` piece of a doubled edge.
    pub fn product_vertex(&self, edge: usize) -> Option<usize> {
        self.doubled
            .binary_search(&edge)
            .ok()
            .map(|j| self.base.vertex_count() + j)
    }

    /// Bipartition witness with vertex 0 on [`Side::One`].
    pub fn bipartition(&self) -> &[Side] {
        &self.bipartition
    }

    /// The two legal side assignments; the first puts vertex 0 on
    /// [`Side::One`], the second is its global swap.
    pub fn bipartitions(&self) -> [Vec<Side>; 2] {
        let swapped = self.bipartition.iter().map(|s| s.flip()).collect();
        [self.bipartition.clone(), swapped]
    }
}

/// Subdivides each doubled edge. `T^2 x I` vertices follow the original
/// vertices in the order of `doubled`.
pub fn derived_graph(base: &Multigraph, doubled: &[usize]) -> Multigraph {
    let n = base.vertex_count();
    let mut edges = Vec::with_capacity(base.edge_count() + doubled.len());
    for (i, &(a, b)) in base.edges().iter().enumerate() {
        match doubled.iter().position(|&d| d == i) {
            Some(j) => {
                edges.push((a, n + j));
                edges.push((n + j, b));
            }
            None => edges.push((a, b)),
        }
    }
    Multigraph::new(n + doubled.len(), edges)
}

/// Minimum set of edges to double, lexicographically smallest among
/// minimum ones.
pub fn amalgamatable_modification(graph: &Multigraph) -> Result<Modification, Error> {
    if graph.vertex_count() == 0 || !graph.is_connected() {
        return Err(Error::NotConnected);
    }
    let upper = greedy_doubling(graph).len();
    let mut search = Search::new(graph);
    let optimum = search.minimum(upper);
    let doubled = search.first_of_size(optimum);
    Modification::new(graph, doubled)
}

/// Iterative doubling: while some odd cycle remains, double its
/// lowest-indexed undoubled edge. Not minimal in general.
pub fn greedy_modification(graph: &Multigraph) -> Result<Modification, Error> {
    if graph.vertex_count() == 0 || !graph.is_connected() {
        return Err(Error::NotConnected);
    }
    Modification::new(graph, greedy_doubling(graph))
}

fn greedy_doubling(graph: &Multigraph) -> Vec<usize> {
    let mut doubled: Vec<usize> = Vec::new();
    loop {
        let derived = derived_graph(graph, &doubled);
        let Some(cycle) = find_odd_cycle(&derived) else {
            break;
        };
        let original: Vec<usize> = derived_to_original(graph, &doubled);
        let pick = cycle
            .edges
            .iter()
            .map(|&e| original[e])
            .filter(|e| !doubled.contains(e))
            .min()
            .expect("odd cycle through doubled edges only");
        doubled.push(pick);
    }
    doubled
}

fn derived_to_original(graph: &Multigraph, doubled: &[usize]) -> Vec<usize> {
    let mut map = Vec::new();
    for i in 0..graph.edge_count() {
        map.push(i);
        if doubled.contains(&i) {
            map.push(i);
        }
    }
    map
}

/// Union-find over vertices tracking the parity of each vertex relative to
/// its root, with an undo log instead of path compression.
struct ParityForest {
    parent: Vec<usize>,
    parity: Vec<bool>,
    size: Vec<usize>,
    log: Vec<(usize, usize)>,
}

impl ParityForest {
    fn new(n: usize) -> ParityForest {
        ParityForest {
            parent: (0..n).collect(),
            parity: vec![false; n],
            size: vec![1; n],
            log: Vec::new(),
        }
    }

    fn root(&self, mut v: usize) -> (usize, bool) {
        let mut p = false;
        while self.parent[v] != v {
            p ^= self.parity[v];
            v = self.parent[v];
        }
        (v, p)
    }

    /// Records `side(a) != side(b)` when `differ`, else equality. Returns
    /// false on contradiction; pushes at most one log entry on success.
    fn constrain(&mut self, a: usize, b: usize, differ: bool) -> Option<bool> {
        let (ra, pa) = self.root(a);
        let (rb, pb) = self.root(b);
        if ra == rb {
            return if (pa ^ pb) == differ {
                Some(false)
            } else {
                None
            };
        }
        let (child, parent) = if self.size[ra] < self.size[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[child] = parent;
        self.parity[child] = pa ^ pb ^ differ;
        self.size[parent] += self.size[child];
        self.log.push((child, parent));
        Some(true)
    }

    fn undo(&mut self) {
        let (child, parent) = self.log.pop().expect("undo without union");
        self.size[parent] -= self.size[child];
        self.parent[child] = child;
        self.parity[child] = false;
    }
}

struct Search<'a> {
    graph: &'a Multigraph,
    forest: ParityForest,
    // loops_from[i] = number of self-loops among edges i.., which must all
    // be doubled.
    loops_from: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(graph: &'a Multigraph) -> Search<'a> {
        let m = graph.edge_count();
        let mut loops_from = vec![0; m + 1];
        for i in (0..m).rev() {
            let (a, b) = graph.edge(i);
            loops_from[i] = loops_from[i + 1] + usize::from(a == b);
        }
        Search {
            graph,
            forest: ParityForest::new(graph.vertex_count()),
            loops_from,
        }
    }

    /// Minimum number of doubled edges, given an achievable upper bound.
    fn minimum(&mut self, upper: usize) -> usize {
        let mut best = upper;
        self.min_rec(0, 0, &mut best);
        best
    }

    fn min_rec(&mut self, i: usize, count: usize, best: &mut usize) {
        if count + self.loops_from[i] >= *best {
            return;
        }
        if i == self.graph.edge_count() {
            *best = count;
            return;
        }
        let (a, b) = self.graph.edge(i);
        // Keeping first reaches small solutions early.
        for (differ, cost) in [(true, 0), (false, 1)] {
            if let Some(pushed) = self.forest.constrain(a, b, differ) {
                self.min_rec(i + 1, count + cost, best);
                if pushed {
                    self.forest.undo();
                }
            }
        }
    }

    /// First edge set of exactly `size` in lexicographic order.
    fn first_of_size(&mut self, size: usize) -> Vec<usize> {
        let mut chosen = Vec::with_capacity(size);
        let found = self.lex_rec(0, size, &mut chosen);
        assert!(found, "no modification of the optimal size");
        chosen
    }

    fn lex_rec(&mut self, i: usize, size: usize, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() + self.loops_from[i] > size {
            return false;
        }
        if i == self.graph.edge_count() {
            return chosen.len() == size;
        }
        let (a, b) = self.graph.edge(i);
        for differ in [false, true] {
            if !differ && chosen.len() == size {
                continue;
            }
            if let Some(pushed) = self.forest.constrain(a, b, differ) {
                if !differ {
                    chosen.push(i);
                }
                let done = self.lex_rec(i + 1, size, chosen);
                if !differ && !done {
                    chosen.pop();
                }
                if pushed {
                    self.forest.undo();
                }
                if done {
                    return true;
                }
            }
        }
        false
    }
}

/// Side of every derived vertex, plus the weighted flag of every Seifert
/// piece under that choice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionAssignment {
    pub sides: Vec<Side>,
    /// A piece is weighted when it has free boundary and all of it lies on
    /// the same side as the piece's tori, leaving the other side empty.
    pub weighted: Vec<bool>,
}

impl PartitionAssignment {
    pub fn new(manifold: &GraphManifold, sides: Vec<Side>) -> PartitionAssignment {
        let weighted = manifold
            .vertices
            .iter()
            .zip(&sides)
            .map(|(piece, &side)| {
                !piece.free_slots.is_empty() && piece.free_slots.values().all(|&s| s == side)
            })
            .collect();
        PartitionAssignment { sides, weighted }
    }

    pub fn swapped(&self, manifold: &GraphManifold) -> PartitionAssignment {
        PartitionAssignment::new(manifold, self.sides.iter().map(|s| s.flip()).collect())
    }
}

/// Both assignments for a modification, the vertex-0-on-`M1` one first.
pub fn bipartitions(
    manifold: &GraphManifold,
    modification: &Modification,
) -> [PartitionAssignment; 2] {
    let [a, b] = modification.bipartitions();
    [
        PartitionAssignment::new(manifold, a),
        PartitionAssignment::new(manifold, b),
    ]
}

/// Both 2-colourings of a derived graph, or an error when it is not
/// bipartite.
pub fn colorings_of(derived: &Multigraph) -> Result<[Vec<Side>; 2], Error> {
    let first = two_coloring(derived)?;
    let second = first.iter().map(|s| s.flip()).collect();
    Ok([first, second])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_needs_nothing() {
        let g = Multigraph::new(4, [(0, 1), (1, 2), (1, 3)]);
        let m = amalgamatable_modification(&g).unwrap();
        assert_eq!(m.q(), 0);
        assert!(m.doubled_edges().is_empty());
    }

    #[test]
    fn self_loop_is_doubled() {
        let g = Multigraph::new(1, [(0, 0)]);
        let m = amalgamatable_modification(&g).unwrap();
        assert_eq!(m.doubled_edges(), &[0]);
        assert_eq!(m.derived_graph().vertex_count(), 2);
        assert_eq!(m.torus_count(), 2);
        assert_eq!(m.derived_vertex(1), DerivedVertex::Product { edge: 0 });
    }

    #[test]
    fn triangles_sharing_an_edge_double_the_shared_edge() {
        // Edge 2 is the shared edge (1, 2).
        let g = Multigraph::new(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        let m = amalgamatable_modification(&g).unwrap();
        assert_eq!(m.doubled_edges(), &[2]);
    }

    #[test]
    fn triangle_breaks_ties_lexicographically() {
        let g = Multigraph::new(3, [(0, 1), (1, 2), (2, 0)]);
        let m = amalgamatable_modification(&g).unwrap();
        assert_eq!(m.doubled_edges(), &[0]);
    }

    #[test]
    fn greedy_can_exceed_the_minimum() {
        // Two triangles sharing edge 4; greedy doubles along the first odd
        // cycle it finds, the minimum doubles only the shared edge.
        let g = Multigraph::new(4, [(0, 1), (0, 2), (1, 3), (2, 3), (0, 3)]);
        let exact = amalgamatable_modification(&g).unwrap();
        let greedy = greedy_modification(&g).unwrap();
        assert_eq!(exact.q(), 1);
        assert!(greedy.q() >= exact.q());
    }

    #[test]
    fn doubling_everything_is_separating() {
        let g = Multigraph::new(3, [(0, 1), (1, 2), (2, 0), (1, 1), (0, 2)]);
        assert!(Modification::new(&g, 0..g.edge_count()).is_ok());
    }

    #[test]
    fn non_separating_modification_is_rejected() {
        let g = Multigraph::new(3, [(0, 1), (1, 2), (2, 0)]);
        assert!(matches!(
            Modification::new(&g, []),
            Err(Error::NotSeparating)
        ));
    }

    #[test]
    fn bipartitions_of_a_single_edge() {
        let g = Multigraph::new(2, [(0, 1)]);
        let m = amalgamatable_modification(&g).unwrap();
        let [a, b] = m.bipartitions();
        assert_eq!(a, vec![Side::One, Side::Two]);
        assert_eq!(b, vec![Side::Two, Side::One]);
    }

    #[test]
    fn bipartitions_of_doubled_loop() {
        let derived = Multigraph::new(2, [(0, 1), (1, 0)]);
        let [a, b] = colorings_of(&derived).unwrap();
        assert_eq!(a, vec![Side::One, Side::Two]);
        assert_eq!(b, vec![Side::Two, Side::One]);
        let odd = Multigraph::new(1, [(0, 0)]);
        assert!(matches!(colorings_of(&odd), Err(Error::NotSeparating)));
    }

    #[test]
    fn parallel_pair_is_already_separating() {
        let g = Multigraph::new(2, [(0, 1), (0, 1)]);
        assert_eq!(amalgamatable_modification(&g).unwrap().q(), 0);
    }
}
