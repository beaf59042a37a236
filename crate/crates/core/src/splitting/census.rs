//! Splittings whose surface meets every Seifert piece vertically.
//!
//! The active component is then an edge manifold `N` and the surface has
//! genus 2. Either `N` separates two pieces, `M = Y1 u N u Y2`, or its torus
//! is non-separating and `M = Y1 u N`.

use serde::Serialize;

use crate::error::Error;
use crate::genus::ideal_partition;
use crate::model::{GraphManifold, SeifertPiece, Side};
use crate::modification::amalgamatable_modification;

use super::SplittingProfile;

/// Genus of a strongly irreducible splitting with no horizontal component.
pub const CENSUS_SPLITTING_GENUS: i64 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CensusCase {
    /// `M = Y1 u N u Y2`.
    Separating,
    /// `M = Y1 u N`, the torus glued to itself.
    NonSeparating,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub case: CensusCase,
    /// Range of the amalgamation genus over the configurations of this case.
    pub range: (i64, i64),
    pub amalgamation_genus: i64,
    pub within_range: bool,
    /// `M` is `T^2 x I`, whose genus one splitting falls outside the census.
    pub product_exception: bool,
    /// The pieces are among the census configurations: few enough fibers
    /// and, with two free tori, one on each side.
    pub admissible: bool,
    /// For the non-separating case, whether the piece is over an annulus
    /// with at most one exceptional fiber or over a twice punctured disk
    /// without, which is when the amalgamation genus is 3.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicts_three: Option<bool>,
    /// Stabilizations of the genus 2 splitting needed to reach an
    /// amalgamation: `a - 2`, and at least one.
    pub stabilizations: i64,
}

pub fn no_horizontal_census(
    manifold: &GraphManifold,
    profile: &SplittingProfile,
) -> Result<CensusReport, Error> {
    if profile.has_horizontal() {
        return Err(Error::CensusInapplicable(
            "profile has a horizontal component".into(),
        ));
    }
    if profile.pseudohorizontal().is_some() {
        return Err(Error::CensusInapplicable(
            "active component is pseudohorizontal".into(),
        ));
    }
    let Some(active) = profile.active_edge else {
        return Err(Error::CensusInapplicable("no active edge manifold".into()));
    };
    let violations = profile.violations(manifold);
    if !violations.is_empty() {
        return Err(Error::InvalidProfile(violations));
    }
    let report = manifold.validate();
    if !report.is_ok() {
        return Err(Error::InvalidManifold(report));
    }
    if manifold.edge_count() != 1 {
        return Err(Error::CensusInapplicable(format!(
            "expected one torus, found {}",
            manifold.edge_count()
        )));
    }
    debug_assert_eq!(active.edge, 0);

    let modification = amalgamatable_modification(&manifold.graph())?;
    let a = ideal_partition(manifold, &modification)?.ideal.value;

    let (case, range, admissible, predicts_three, product_exception) =
        if manifold.edges[0].is_loop() {
            let y = &manifold.vertices[0];
            let k = y.exceptional_count();
            let shape = (y.base_genus, y.boundary_count);
            let admissible = matches!(shape, (0, 2) if k <= 2)
                || matches!(shape, (0, 3) if k <= 1)
                || (shape == (0, 4) && k == 0);
            let three = matches!(shape, (0, 2) if k <= 1) || (shape == (0, 3) && k == 0);
            (
                CensusCase::NonSeparating,
                (3, 4),
                admissible && sides_split(y),
                Some(three),
                false,
            )
        } else {
            let admissible = manifold.vertices.iter().all(|y| {
                let k = y.exceptional_count();
                let shape = (y.base_genus, y.boundary_count);
                (matches!(shape, (0, 1)) && k == 2)
                    || (matches!(shape, (0, 2)) && k <= 1)
                    || (shape == (0, 3) && k == 0)
            });
            let product = manifold
                .vertices
                .iter()
                .all(|y| y.base_genus == 0 && y.boundary_count == 2 && y.fibers.is_empty());
            (
                CensusCase::Separating,
                (1, 3),
                admissible && manifold.vertices.iter().all(sides_split),
                None,
                product,
            )
        };

    Ok(CensusReport {
        case,
        range,
        amalgamation_genus: a,
        within_range: range.0 <= a && a <= range.1,
        product_exception,
        admissible,
        predicts_three,
        stabilizations: (a - CENSUS_SPLITTING_GENUS).max(1),
    })
}

// Vertical annuli run from one free torus to the other, so a piece with two
// free tori must have them on opposite sides.
fn sides_split(piece: &SeifertPiece) -> bool {
    let sides: Vec<Side> = piece.free_slots.values().copied().collect();
    sides.len() < 2 || (sides.contains(&Side::One) && sides.contains(&Side::Two))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{JsjEdge, SlotRef};
    use crate::splitting::{ActiveEdge, ActiveMode, VertexClass};

    fn active(classes: usize) -> SplittingProfile {
        SplittingProfile {
            classes: vec![VertexClass::Vertical; classes],
            active_edge: Some(ActiveEdge {
                edge: 0,
                mode: ActiveMode::Aligned,
            }),
        }
    }

    fn looped(piece: SeifertPiece) -> GraphManifold {
        GraphManifold::new(
            vec![piece],
            vec![JsjEdge::new(SlotRef::new(0, 0), SlotRef::new(0, 1))],
        )
    }

    #[test]
    fn two_knot_exteriors() {
        let y = SeifertPiece::from_pairs(0, 1, &[(1, 2), (1, 3)]);
        let m = GraphManifold::new(
            vec![y.clone(), y],
            vec![JsjEdge::new(SlotRef::new(0, 0), SlotRef::new(1, 0))],
        );
        let r = no_horizontal_census(&m, &active(2)).unwrap();
        assert_eq!(r.case, CensusCase::Separating);
        assert_eq!(r.amalgamation_genus, 3);
        assert!(r.within_range && r.admissible && !r.product_exception);
    }

    #[test]
    fn annulus_pieces_self_looped() {
        let one = no_horizontal_census(
            &looped(SeifertPiece::from_pairs(0, 2, &[(1, 2)])),
            &active(1),
        )
        .unwrap();
        assert_eq!(
            (one.case, one.amalgamation_genus, one.predicts_three),
            (CensusCase::NonSeparating, 3, Some(true))
        );
        assert_eq!(one.stabilizations, 1);
        let two = no_horizontal_census(
            &looped(SeifertPiece::from_pairs(0, 2, &[(1, 2), (1, 3)])),
            &active(1),
        )
        .unwrap();
        assert_eq!(
            (two.amalgamation_genus, two.predicts_three),
            (4, Some(false))
        );
        assert_eq!(two.stabilizations, 2);
    }

    #[test]
    fn twice_punctured_disk() {
        let y = SeifertPiece::from_pairs(0, 3, &[]).with_free_slot(2, Side::Two);
        let r = no_horizontal_census(&looped(y), &active(1)).unwrap();
        assert_eq!(r.amalgamation_genus, 3);
        assert_eq!(r.predicts_three, Some(true));
    }

    #[test]
    fn horizontal_profile_is_rejected() {
        let m = looped(SeifertPiece::from_pairs(0, 2, &[(1, 2)]));
        let p = SplittingProfile {
            classes: vec![VertexClass::Horizontal {
                genus: 0,
                boundary: 2,
                ideal_components: 1,
            }],
            active_edge: None,
        };
        assert!(matches!(
            no_horizontal_census(&m, &p),
            Err(Error::CensusInapplicable(_))
        ));
    }
}
