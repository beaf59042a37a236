//! Number of stabilizations that make a splitting an amalgamation.

use serde::Serialize;

use crate::error::Error;
use crate::genus::ideal_partition;
use crate::model::GraphManifold;
use crate::modification::Modification;

use super::census::{no_horizontal_census, CensusReport};
use super::surface::splitting_genus;
use super::SplittingProfile;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilizationBound {
    pub splitting_genus: i64,
    pub amalgamation_genus: i64,
    /// One stabilization when `g >= a`, otherwise `a - g + 1`.
    pub stabilizations: i64,
    /// Present when the surface meets every piece vertically.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub census: Option<CensusReport>,
}

pub fn stabilization_bound(
    manifold: &GraphManifold,
    profile: &SplittingProfile,
    modification: &Modification,
) -> Result<StabilizationBound, Error> {
    let g = splitting_genus(manifold, profile)?.genus;
    let a = ideal_partition(manifold, modification)?.ideal.value;
    let census = if !profile.has_horizontal() && profile.pseudohorizontal().is_none() {
        no_horizontal_census(manifold, profile).ok()
    } else {
        None
    };
    Ok(StabilizationBound {
        splitting_genus: g,
        amalgamation_genus: a,
        stabilizations: stabilizations_needed(g, a),
        census,
    })
}

pub fn stabilizations_needed(g: i64, a: i64) -> i64 {
    if g >= a {
        1
    } else {
        a - g + 1
    }
}
