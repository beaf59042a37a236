//! Brute-force recomputation of the fast-path results, for cross-checking.

use serde::Serialize;

use crate::error::Error;
use crate::genus::{amalgamation_genus, ideal_partition};
use crate::graph::{cycle_rank, two_coloring, Multigraph};
use crate::model::{GraphManifold, Side};
use crate::modification::{
    amalgamatable_modification, derived_graph, Modification, PartitionAssignment,
};
use crate::splitting::{
    active_euler_characteristic, splitting_genus, SplittingProfile, VertexClass,
};

/// Largest graph for which subsets of edges are enumerated.
pub const EXHAUSTIVE_EDGE_LIMIT: usize = 16;
/// Largest derived graph for which vertex colourings are enumerated.
pub const COLORING_VERTEX_LIMIT: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleCheck {
    pub name: String,
    pub fast: String,
    pub brute: String,
    pub agree: bool,
}

impl OracleCheck {
    fn new(name: &str, fast: impl ToString, brute: impl ToString) -> OracleCheck {
        let (fast, brute) = (fast.to_string(), brute.to_string());
        OracleCheck {
            name: name.to_string(),
            agree: fast == brute,
            fast,
            brute,
        }
    }
}

/// First minimum edge set, by size then lexicographically, whose doubling
/// makes the graph bipartite. `None` above [`EXHAUSTIVE_EDGE_LIMIT`].
pub fn exhaustive_modification(graph: &Multigraph) -> Option<Vec<usize>> {
    let m = graph.edge_count();
    if m > EXHAUSTIVE_EDGE_LIMIT {
        return None;
    }
    for size in 0..=m {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            if two_coloring(&derived_graph(graph, &combo)).is_ok() {
                return Some(combo);
            }
            if !next_combination(&mut combo, m) {
                break;
            }
        }
    }
    None
}

// Advances to the next `k`-subset of `0..n` in lexicographic order.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    for i in (0..k).rev() {
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Dimension of the cycle space over Z/2: edges minus the rank of the
/// vertex-edge incidence matrix.
pub fn cycle_space_dimension(graph: &Multigraph) -> usize {
    let mut rows: Vec<Vec<bool>> = graph
        .edges()
        .iter()
        .map(|&(a, b)| {
            let mut col = vec![false; graph.vertex_count()];
            if a != b {
                col[a] = true;
                col[b] = true;
            }
            col
        })
        .collect();
    let mut rank = 0;
    for c in 0..graph.vertex_count() {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c]) else {
            continue;
        };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank && rows[r][c] {
                let pivot = rows[rank].clone();
                for (x, y) in rows[r].iter_mut().zip(pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    graph.edge_count() - rank
}

/// Every proper 2-colouring of a small graph.
pub fn all_colorings(graph: &Multigraph) -> Option<Vec<Vec<Side>>> {
    let n = graph.vertex_count();
    if n > COLORING_VERTEX_LIMIT {
        return None;
    }
    let found = (0u32..1 << n)
        .map(|mask| {
            (0..n)
                .map(|v| {
                    if mask >> v & 1 == 0 {
                        Side::One
                    } else {
                        Side::Two
                    }
                })
                .collect::<Vec<_>>()
        })
        .filter(|sides| graph.edges().iter().all(|&(a, b)| sides[a] != sides[b]))
        .collect();
    Some(found)
}

/// Genus of the splitting surface from its Euler characteristic, summing
/// the horizontal pieces and the active component directly.
pub fn surface_genus(profile: &SplittingProfile) -> i64 {
    let mut chi = active_euler_characteristic(profile);
    for class in &profile.classes {
        if let VertexClass::Horizontal {
            genus,
            boundary,
            ideal_components,
        } = *class
        {
            chi += 2 * ideal_components as i64 * (2 - 2 * genus as i64 - boundary as i64);
        }
    }
    1 - chi / 2
}

/// Runs every applicable brute-force check on a manifest.
pub fn cross_check(
    manifold: &GraphManifold,
    profile: Option<&SplittingProfile>,
) -> Result<Vec<OracleCheck>, Error> {
    let graph = manifold.graph();
    let mut checks = vec![OracleCheck::new(
        "cycle_rank",
        cycle_rank(&graph)?.ell,
        cycle_space_dimension(&graph),
    )];

    let modification = amalgamatable_modification(&graph)?;
    if let Some(brute) = exhaustive_modification(&graph) {
        checks.push(OracleCheck::new("q", modification.q(), brute.len()));
        checks.push(OracleCheck::new(
            "doubled_edges",
            format!("{:?}", modification.doubled_edges()),
            format!("{brute:?}"),
        ));
    }

    let ideal = ideal_partition(manifold, &modification)?;
    if let Some(colorings) = all_colorings(modification.derived_graph()) {
        checks.push(OracleCheck::new("bipartitions", 2, colorings.len()));
        checks.push(OracleCheck::new(
            "amalgamation_genus",
            ideal.ideal.value,
            brute_genus(manifold, &modification, colorings)?,
        ));
    }
    checks.push(OracleCheck::new(
        "genus_formulas",
        ideal.ideal.value,
        ideal.ideal.general,
    ));

    if let Some(profile) = profile {
        if let Ok(s) = splitting_genus(manifold, profile) {
            checks.push(OracleCheck::new(
                "splitting_genus",
                s.genus,
                surface_genus(profile),
            ));
        }
    }
    Ok(checks)
}

fn brute_genus(
    manifold: &GraphManifold,
    modification: &Modification,
    colorings: Vec<Vec<Side>>,
) -> Result<i64, Error> {
    let mut best = i64::MAX;
    for sides in colorings {
        let assignment = PartitionAssignment::new(manifold, sides);
        best = best.min(amalgamation_genus(manifold, modification, &assignment)?.value);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_in_order() {
        let mut c = vec![0, 1];
        let mut seen = vec![c.clone()];
        while next_combination(&mut c, 4) {
            seen.push(c.clone());
        }
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }

    #[test]
    fn two_triangles_need_one_edge() {
        let g = Multigraph::new(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(exhaustive_modification(&g), Some(vec![2]));
    }

    #[test]
    fn loop_cycle_space() {
        assert_eq!(cycle_space_dimension(&Multigraph::new(1, [(0, 0)])), 1);
        assert_eq!(
            cycle_space_dimension(&Multigraph::new(3, [(0, 1), (1, 2), (2, 0)])),
            1
        );
    }

    #[test]
    fn doubled_loop_has_two_colorings() {
        let derived = Multigraph::new(2, [(0, 1), (1, 0)]);
        assert_eq!(all_colorings(&derived).unwrap().len(), 2);
    }
}
