//! Tube counts and the genus of the splitting surface.

use serde::Serialize;

use crate::error::Error;
use crate::genus::seifert_heegaard_genus;
use crate::model::{GraphManifold, SeifertPiece};

use super::{SplittingProfile, VertexClass};

/// Tubes carried by one ideal component whose horizontal surface has genus
/// `g0` and `m0` boundary curves: `1 - chi = 2 g0 + m0 - 1`.
pub fn tube_count_per_component(g0: u32, m0: u32) -> i64 {
    2 * g0 as i64 + m0 as i64 - 1
}

/// Number of vertical annuli cutting `piece` into fibered solid tori:
/// `2g` for the genus, `m - 1` joining the boundary tori and `k - 1`
/// separating the exceptional fibers.
pub fn fundamental_complex_size(piece: &SeifertPiece) -> i64 {
    let g = piece.base_genus as i64;
    let m = piece.boundary_count as i64;
    let k = piece.exceptional_count() as i64;
    let size = 2 * g + (m - 1) + (k - 1).max(0);
    debug_assert_eq!(size, seifert_heegaard_genus(piece, 0, false).a);
    size
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerticalRelation {
    /// `a(Y) = c(Y)`.
    Equal,
    /// `a(Y) = c(Y) + 1`; importing the tubes leaves one trivial tube over.
    PlusOne,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VerticalC {
    pub c: i64,
    pub a: i64,
    pub relation: VerticalRelation,
}

pub fn vertical_c(piece: &SeifertPiece, m_e: u32, weighted: bool) -> VerticalC {
    let g = piece.base_genus as i64;
    let m = piece.boundary_count as i64;
    let k = piece.exceptional_count() as i64;
    let a = seifert_heegaard_genus(piece, m_e, weighted).a;
    if k >= 1 || (m_e >= 1 && !weighted) {
        VerticalC {
            c: 2 * g + m + k - 2,
            a,
            relation: VerticalRelation::Equal,
        }
    } else {
        VerticalC {
            c: 2 * g + m - 2,
            a,
            relation: VerticalRelation::PlusOne,
        }
    }
}

/// Euler characteristic of the surface inside the active component, or 0
/// when there is none.
pub fn active_euler_characteristic(profile: &SplittingProfile) -> i64 {
    if profile.active_edge.is_some() {
        return -2;
    }
    match profile.pseudohorizontal().map(|v| profile.classes[v]) {
        Some(VertexClass::Pseudohorizontal { genus, boundary }) => {
            2 * (2 - 2 * genus as i64 - boundary as i64) - 2
        }
        _ => 0,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SplittingGenus {
    pub genus: i64,
    /// Tubes over all ideal components.
    pub tubes: i64,
    /// Number of ideal components.
    pub n: i64,
    /// Euler characteristic of the surface inside the active component.
    pub chi_active: i64,
}

/// `g = sum t_i - n - chi(S cap N)/2 + 1`.
pub fn splitting_genus(
    manifold: &GraphManifold,
    profile: &SplittingProfile,
) -> Result<SplittingGenus, Error> {
    let has_active = profile.active_edge.is_some() || profile.pseudohorizontal().is_some();
    if !profile.has_horizontal() && !has_active {
        return Err(Error::ProfileUnderdetermined);
    }
    let violations = profile.violations(manifold);
    if !violations.is_empty() {
        return Err(Error::InvalidProfile(violations));
    }
    let tubes: i64 = profile
        .classes
        .iter()
        .map(|c| match *c {
            VertexClass::Horizontal {
                genus,
                boundary,
                ideal_components,
            } => ideal_components as i64 * tube_count_per_component(genus, boundary),
            _ => 0,
        })
        .sum();
    let n = profile.ideal_component_count();
    let chi_active = active_euler_characteristic(profile);
    let genus = tubes - n - chi_active / 2 + 1;
    if genus < 0 {
        return Err(Error::NegativeGenus { chi: 2 - 2 * genus });
    }
    Ok(SplittingGenus {
        genus,
        tubes,
        n,
        chi_active,
    })
}
