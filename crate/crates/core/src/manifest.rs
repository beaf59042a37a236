//! JSON manifests describing a graph manifold and, optionally, a splitting
//! profile.
//!
//! ```json
//! {"vertices": [{"genus": 0, "boundary": 1, "fibers": [[1, 2], [1, 3]]},
//!               {"genus": 0, "boundary": 1, "fibers": [[1, 2], [1, 3]]}],
//!  "edges": [[[0, 0], [1, 0]]]}
//! ```
//!
//! Unknown fields are rejected. Parse errors carry the line, column and
//! field path of the offending value.

use serde::{Deserialize, Deserializer, Serialize};
use sha2::{Digest, Sha256};

use crate::error::Error;
use crate::model::{Fiber, GraphManifold, JsjEdge, SeifertPiece, Side, SlotRef};
use crate::splitting::SplittingProfile;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Manifest {
    pub manifold: GraphManifold,
    pub profile: Option<SplittingProfile>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    vertices: Vec<VertexDoc>,
    edges: Vec<[[usize; 2]; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    profile: Option<SplittingProfile>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexDoc {
    genus: u32,
    boundary: u32,
    #[serde(default)]
    fibers: Vec<[i64; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    free_slots: Vec<FreeSlotDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FreeSlotDoc {
    slot: usize,
    #[serde(deserialize_with = "side_from_index")]
    side: Side,
}

fn side_from_index<'de, D: Deserializer<'de>>(d: D) -> Result<Side, D::Error> {
    let index = u8::deserialize(d)?;
    Side::from_index(index)
        .ok_or_else(|| serde::de::Error::custom(format!("side must be 1 or 2, got {index}")))
}

/// Parses and validates a manifest.
pub fn parse_manifest(text: &str) -> Result<Manifest, Error> {
    let mut de = serde_json::Deserializer::from_str(text);
    let doc: Document = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        Error::Parse {
            path,
            line: inner.line(),
            column: inner.column(),
            message: strip_position(&inner.to_string()),
        }
    })?;
    de.end().map_err(|e| Error::Parse {
        path: ".".into(),
        line: e.line(),
        column: e.column(),
        message: strip_position(&e.to_string()),
    })?;

    let mut vertices = Vec::with_capacity(doc.vertices.len());
    for (i, v) in doc.vertices.into_iter().enumerate() {
        let mut piece = SeifertPiece::new(
            v.genus,
            v.boundary,
            v.fibers.iter().map(|&[b, a]| Fiber::new(b, a)).collect(),
        );
        for (j, free) in v.free_slots.into_iter().enumerate() {
            if piece.free_slots.insert(free.slot, free.side).is_some() {
                return Err(Error::Parse {
                    path: format!("vertices[{i}].free_slots[{j}].slot"),
                    line: 0,
                    column: 0,
                    message: format!("slot {} listed twice", free.slot),
                });
            }
        }
        vertices.push(piece);
    }
    let edges = doc
        .edges
        .iter()
        .map(|&[[va, sa], [vb, sb]]| JsjEdge::new(SlotRef::new(va, sa), SlotRef::new(vb, sb)))
        .collect();
    let manifold = GraphManifold::new(vertices, edges);
    let report = manifold.validate();
    if !report.is_ok() {
        return Err(Error::InvalidManifold(report));
    }
    if let Some(profile) = &doc.profile {
        let violations = profile.violations(&manifold);
        if !violations.is_empty() {
            return Err(Error::InvalidProfile(violations));
        }
    }
    Ok(Manifest {
        manifold,
        profile: doc.profile,
    })
}

// serde_json appends " at line L column C"; the position is reported
// separately.
fn strip_position(message: &str) -> String {
    match message.rfind(" at line ") {
        Some(i) => message[..i].to_string(),
        None => message.to_string(),
    }
}

/// Canonical single-line JSON with normalized fibers.
pub fn to_canonical_json(manifold: &GraphManifold, profile: Option<&SplittingProfile>) -> String {
    let doc = Document {
        vertices: manifold
            .vertices
            .iter()
            .map(|p| VertexDoc {
                genus: p.base_genus,
                boundary: p.boundary_count,
                fibers: p.fibers.iter().map(|f| [f.beta(), f.alpha()]).collect(),
                free_slots: p
                    .free_slots
                    .iter()
                    .map(|(&slot, &side)| FreeSlotDoc { slot, side })
                    .collect(),
            })
            .collect(),
        edges: manifold
            .edges
            .iter()
            .map(|e| e.ends.map(|s| [s.vertex, s.slot]))
            .collect(),
        profile: profile.cloned(),
    };
    let mut text = serde_json::to_string(&doc).expect("manifest serialization");
    text.push('\n');
    text
}

/// Hex SHA-256 of the manifest bytes.
pub fn digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}
