//! Generators for two example families of graph manifolds with a chosen
//! strongly irreducible splitting.
//!
//! The small genus family has splitting genus `3m` below its amalgamation
//! genus. The large genus family glues a torus knot exterior to a piece
//! over a once punctured surface and has splitting genus as large as
//! desired. Each family also carries the closed form usually quoted for its
//! amalgamation genus so that reports can flag a mismatch with the value
//! computed from the construction.

use serde::Serialize;

use crate::error::Error;
use crate::model::{gcd, GraphManifold, JsjEdge, SeifertPiece, SlotRef};
use crate::splitting::{ActiveEdge, ActiveMode, SplittingProfile, VertexClass};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExampleFamily {
    pub name: String,
    #[serde(skip)]
    pub manifold: GraphManifold,
    #[serde(skip)]
    pub profile: SplittingProfile,
    /// The quoted closed form for the amalgamation genus.
    pub stated_amalgamation_genus: i64,
    /// The quoted relation between splitting genus and amalgamation genus.
    pub stated_relation: Relation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    GenusBelow,
    GenusAbove,
}

impl ExampleFamily {
    /// Warning text when the computed amalgamation genus differs from the
    /// quoted closed form.
    pub fn discrepancy(&self, computed: i64) -> Option<String> {
        (computed != self.stated_amalgamation_genus).then(|| {
            format!(
                "{}: computed amalgamation genus {} differs from the quoted value {}",
                self.name, computed, self.stated_amalgamation_genus
            )
        })
    }

    pub fn relation_holds(&self, splitting_genus: i64, amalgamation_genus: i64) -> bool {
        match self.stated_relation {
            Relation::GenusBelow => splitting_genus < amalgamation_genus,
            Relation::GenusAbove => splitting_genus > amalgamation_genus,
        }
    }
}

/// `X = (0; m; 1/3, 2/3)` with `m - 1` boundary tori glued to copies of
/// `Y = (0; 1; 1/2, 1/3, 1/5, 1/7)` and the last to
/// `Y' = (0; 1; 1/2, 1/3, 1/5)` through the active edge manifold. The
/// surface meets `X` in two copies of a `3m` times punctured sphere.
pub fn small_genus_family(m: u32) -> Result<ExampleFamily, Error> {
    if m == 0 {
        return Err(Error::InvalidFamily("m must be at least 1".into()));
    }
    let x = SeifertPiece::from_pairs(0, m, &[(1, 3), (2, 3)]);
    let y = SeifertPiece::from_pairs(0, 1, &[(1, 2), (1, 3), (1, 5), (1, 7)]);
    let y_prime = SeifertPiece::from_pairs(0, 1, &[(1, 2), (1, 3), (1, 5)]);

    let mut vertices = vec![x];
    let mut edges = Vec::new();
    for j in 0..m as usize {
        vertices.push(if j + 1 < m as usize {
            y.clone()
        } else {
            y_prime.clone()
        });
        edges.push(JsjEdge::new(SlotRef::new(0, j), SlotRef::new(j + 1, 0)));
    }
    let mut classes = vec![VertexClass::Horizontal {
        genus: 0,
        boundary: 3 * m,
        ideal_components: 1,
    }];
    classes.extend(std::iter::repeat_n(VertexClass::Vertical, m as usize));
    let profile = SplittingProfile {
        classes,
        active_edge: Some(ActiveEdge {
            edge: m as usize - 1,
            mode: ActiveMode::Aligned,
        }),
    };
    Ok(ExampleFamily {
        name: format!("small-genus m={m}"),
        manifold: GraphManifold::new(vertices, edges),
        profile,
        stated_amalgamation_genus: 4 * m as i64 + 3,
        stated_relation: Relation::GenusBelow,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LargeGenusParams {
    pub p: i64,
    pub q: i64,
    /// Euler characteristic of the horizontal surface in the second piece.
    pub chi: i64,
    pub base_genus: u32,
    /// Exceptional fibers `(beta, alpha)` of the second piece.
    pub fibers: Vec<(i64, i64)>,
}

impl LargeGenusParams {
    /// Second piece `(0; 1; 1/2, 1/3)`.
    pub fn new(p: i64, q: i64, chi: i64) -> LargeGenusParams {
        LargeGenusParams {
            p,
            q,
            chi,
            base_genus: 0,
            fibers: vec![(1, 2), (1, 3)],
        }
    }
}

/// The `(p, q)` torus knot exterior `X1 = (0; 1; 1/p, 1/q)` glued along its
/// boundary to `X2 = (g; 1; fibers)`. The active component is `X1`, met in
/// a `(p-1)(q-1)` times punctured sphere; `X2` is met in `(p-1)(q-1)`
/// copies of a horizontal surface `F` with one boundary curve.
pub fn large_genus_family(params: &LargeGenusParams) -> Result<ExampleFamily, Error> {
    let LargeGenusParams {
        p,
        q,
        chi,
        base_genus,
        ref fibers,
    } = *params;
    if p < 2 || q < 2 {
        return Err(Error::InvalidFamily(format!(
            "p and q must be at least 2, got {p}, {q}"
        )));
    }
    if gcd(p, q) != 1 {
        return Err(Error::InvalidFamily(format!(
            "p = {p} and q = {q} are not coprime"
        )));
    }
    if chi > -1 || chi % 2 == 0 {
        return Err(Error::InvalidFamily(format!(
            "a horizontal surface with one boundary curve has odd negative Euler characteristic, got {chi}"
        )));
    }
    let x2 = SeifertPiece::from_pairs(base_genus, 1, fibers);
    if x2.fibers.is_empty() || x2.fibers.iter().any(|f| f.alpha() < 2) {
        return Err(Error::InvalidFamily(
            "second piece needs exceptional fibers of multiplicity at least 2".into(),
        ));
    }
    // Orbifold Euler characteristic of the base, scaled by the lcm of the
    // multiplicities.
    let lcm = x2
        .fibers
        .iter()
        .fold(1, |l, f| l / gcd(l, f.alpha()) * f.alpha());
    let k = x2.fibers.len() as i64;
    let scaled = (1 - 2 * base_genus as i64 - k) * lcm
        + x2.fibers.iter().map(|f| lcm / f.alpha()).sum::<i64>();
    if scaled >= 0 {
        return Err(Error::InvalidFamily(
            "base orbifold of the second piece is not hyperbolic".into(),
        ));
    }
    let numerator = chi * lcm;
    if numerator % scaled != 0 || (numerator / scaled) % lcm != 0 {
        return Err(Error::InvalidFamily(format!(
            "no horizontal surface with Euler characteristic {chi}: covering degree must be a multiple of {lcm}"
        )));
    }

    let x1 = SeifertPiece::from_pairs(0, 1, &[(1, p), (1, q)]);
    let punctures = ((p - 1) * (q - 1)) as u32;
    let manifold = GraphManifold::new(
        vec![x1, x2],
        vec![JsjEdge::new(SlotRef::new(0, 0), SlotRef::new(1, 0))],
    );
    let profile = SplittingProfile {
        classes: vec![
            VertexClass::Pseudohorizontal {
                genus: 0,
                boundary: punctures / 2,
            },
            VertexClass::Horizontal {
                genus: ((1 - chi) / 2) as u32,
                boundary: 1,
                ideal_components: punctures / 2,
            },
        ],
        active_edge: None,
    };
    Ok(ExampleFamily {
        name: format!("large-genus p={p} q={q} chi={chi}"),
        manifold,
        profile,
        stated_amalgamation_genus: 2 * base_genus as i64 + k,
        stated_relation: Relation::GenusAbove,
    })
}
