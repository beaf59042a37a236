//! Heegaard genus of partitioned Seifert pieces and amalgamation genus.
//!
//! The amalgamation genus of a manifold cut along a mutually separating
//! torus system is computed twice: once by summing piece genera over all
//! derived vertices and correcting by the tori and the cycle rank, and once
//! by summing `a(X) = g_h(X) - 1` over the Seifert pieces only and adding
//! `q + 1`. The two must agree.

use serde::Serialize;

use crate::error::Error;
use crate::graph::cycle_rank;
use crate::model::{GraphManifold, SeifertPiece, Side};
use crate::modification::{bipartitions, Modification, PartitionAssignment};

/// Which closed form produced a Heegaard genus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GenusCase {
    /// `2g + m + k - 1`: exceptional fibers present, or free boundary on
    /// both sides of the partition.
    Standard,
    /// `2g + m`: no exceptional fibers and the piece's boundary all on one
    /// side.
    FiberFree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PieceGenus {
    pub g_h: i64,
    pub a: i64,
    pub case: GenusCase,
}

impl PieceGenus {
    fn new(g_h: i64, case: GenusCase) -> PieceGenus {
        PieceGenus {
            g_h,
            a: g_h - 1,
            case,
        }
    }
}

/// Heegaard genus of a piece carrying `m_e` free boundary tori.
pub fn seifert_heegaard_genus(piece: &SeifertPiece, m_e: u32, weighted: bool) -> PieceGenus {
    let g = piece.base_genus as i64;
    let m = piece.boundary_count as i64;
    let k = piece.exceptional_count() as i64;
    if k >= 1 || (m_e >= 1 && !weighted) {
        PieceGenus::new(2 * g + m + k - 1, GenusCase::Standard)
    } else {
        PieceGenus::new(2 * g + m, GenusCase::FiberFree)
    }
}

/// Genus of `T^2 x I` with both boundary tori on the same side.
pub fn product_genus() -> PieceGenus {
    seifert_heegaard_genus(&SeifertPiece::new(0, 2, Vec::new()), 0, false)
}

/// `sum g_h - g(F) + ell`.
pub fn amalgamation_genus_general(piece_genera: &[i64], surface_genera: &[i64], ell: i64) -> i64 {
    piece_genera.iter().sum::<i64>() - surface_genera.iter().sum::<i64>() + ell
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AmalgamationGenusResult {
    pub value: i64,
    pub partition: PartitionAssignment,
    /// One entry per Seifert piece, in vertex order.
    pub per_piece: Vec<PieceGenus>,
    pub q: usize,
    pub ell: usize,
    /// The same value recomputed over all derived vertices.
    pub general: i64,
}

pub fn amalgamation_genus(
    manifold: &GraphManifold,
    modification: &Modification,
    assignment: &PartitionAssignment,
) -> Result<AmalgamationGenusResult, Error> {
    let derived = modification.derived_graph();
    if assignment.sides.len() != derived.vertex_count()
        || derived
            .edges()
            .iter()
            .any(|&(a, b)| assignment.sides[a] == assignment.sides[b])
    {
        return Err(Error::NotSeparating);
    }
    let ell = cycle_rank(derived)?.ell;
    let q = modification.q();

    let per_piece: Vec<PieceGenus> = manifold
        .vertices
        .iter()
        .zip(&assignment.weighted)
        .map(|(piece, &weighted)| seifert_heegaard_genus(piece, piece.free_count(), weighted))
        .collect();
    let value = per_piece.iter().map(|p| p.a).sum::<i64>() + q as i64 + 1;

    let mut all_genera: Vec<i64> = per_piece.iter().map(|p| p.g_h).collect();
    all_genera.extend(std::iter::repeat_n(product_genus().g_h, q));
    let tori = vec![1; modification.torus_count()];
    let general = amalgamation_genus_general(&all_genera, &tori, ell as i64);

    if general != value {
        return Err(Error::GenusCrossCheck {
            general,
            graph: value,
        });
    }
    Ok(AmalgamationGenusResult {
        value,
        partition: assignment.clone(),
        per_piece,
        q,
        ell,
        general,
    })
}

/// Amalgamation genus under both assignments of a modification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealPartition {
    pub ideal: AmalgamationGenusResult,
    pub other: AmalgamationGenusResult,
}

/// Picks the assignment with the smaller genus, preferring vertex 0 on
/// `M1` on ties.
pub fn ideal_partition(
    manifold: &GraphManifold,
    modification: &Modification,
) -> Result<IdealPartition, Error> {
    let [first, second] = bipartitions(manifold, modification);
    debug_assert_eq!(first.sides.first(), Some(&Side::One));
    let a = amalgamation_genus(manifold, modification, &first)?;
    let b = amalgamation_genus(manifold, modification, &second)?;
    Ok(if b.value < a.value {
        IdealPartition { ideal: b, other: a }
    } else {
        IdealPartition { ideal: a, other: b }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{JsjEdge, SlotRef};
    use crate::modification::amalgamatable_modification;

    fn piece(g: u32, m: u32, k: usize) -> SeifertPiece {
        let fibers: Vec<(i64, i64)> = (0..k).map(|i| (1, 2 * i as i64 + 3)).collect();
        SeifertPiece::from_pairs(g, m, &fibers)
    }

    fn edge(a: (usize, usize), b: (usize, usize)) -> JsjEdge {
        JsjEdge::new(SlotRef::new(a.0, a.1), SlotRef::new(b.0, b.1))
    }

    #[test]
    fn piece_genus_branches() {
        assert_eq!(seifert_heegaard_genus(&piece(0, 1, 2), 0, false).g_h, 2);
        assert_eq!(seifert_heegaard_genus(&piece(0, 1, 2), 0, true).g_h, 2);
        let annulus = seifert_heegaard_genus(&piece(0, 2, 0), 0, false);
        assert_eq!((annulus.g_h, annulus.case), (2, GenusCase::FiberFree));
        assert_eq!(seifert_heegaard_genus(&piece(0, 2, 0), 1, false).g_h, 1);
        assert_eq!(seifert_heegaard_genus(&piece(0, 2, 0), 1, true).g_h, 2);
        assert_eq!(product_genus().g_h, 2);
    }

    #[test]
    fn general_formula_examples() {
        assert_eq!(amalgamation_genus_general(&[1, 1], &[1], 0), 1);
        assert_eq!(amalgamation_genus_general(&[2, 2], &[1], 0), 3);
        assert_eq!(amalgamation_genus_general(&[3, 2], &[1, 1], 1), 4);
    }

    fn two_products() -> GraphManifold {
        GraphManifold::new(
            vec![
                piece(0, 2, 0).with_free_slot(0, Side::One),
                piece(0, 2, 0).with_free_slot(1, Side::Two),
            ],
            vec![edge((0, 1), (1, 0))],
        )
    }

    #[test]
    fn two_products_have_genus_one_and_three() {
        let m = two_products();
        let modification = amalgamatable_modification(&m.graph()).unwrap();
        let result = ideal_partition(&m, &modification).unwrap();
        assert_eq!(result.ideal.value, 1);
        assert_eq!(result.other.value, 3);
    }

    #[test]
    fn annulus_with_one_fiber_self_looped() {
        let m = GraphManifold::new(vec![piece(0, 2, 1)], vec![edge((0, 0), (0, 1))]);
        let modification = amalgamatable_modification(&m.graph()).unwrap();
        assert_eq!(modification.q(), 1);
        let result = ideal_partition(&m, &modification).unwrap();
        assert_eq!(result.ideal.value, 3);
        assert_eq!(result.ideal.general, 3);
    }

    #[test]
    fn annulus_with_two_fibers_self_looped() {
        let m = GraphManifold::new(vec![piece(0, 2, 2)], vec![edge((0, 0), (0, 1))]);
        let modification = amalgamatable_modification(&m.graph()).unwrap();
        assert_eq!(ideal_partition(&m, &modification).unwrap().ideal.value, 4);
    }

    #[test]
    fn ties_prefer_vertex_zero_on_side_one() {
        let m = GraphManifold::new(
            vec![piece(0, 1, 2), piece(0, 1, 2)],
            vec![edge((0, 0), (1, 0))],
        );
        let modification = amalgamatable_modification(&m.graph()).unwrap();
        let result = ideal_partition(&m, &modification).unwrap();
        assert_eq!(result.ideal.value, result.other.value);
        assert_eq!(result.ideal.partition.sides[0], Side::One);
    }

    #[test]
    fn wrong_assignment_is_rejected() {
        let m = two_products();
        let modification = amalgamatable_modification(&m.graph()).unwrap();
        let bad = PartitionAssignment::new(&m, vec![Side::One, Side::One]);
        assert!(matches!(
            amalgamation_genus(&m, &modification, &bad),
            Err(Error::NotSeparating)
        ));
    }
}
