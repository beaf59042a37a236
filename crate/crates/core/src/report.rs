//! Deterministic reports for the command-line front end.
//!
//! Every report carries the schema tag, the command that produced it, the
//! SHA-256 digest of the input manifest, structured results and warnings.
//! Serialization uses ordered structures only, so identical inputs give
//! byte-identical output.

use serde::Serialize;
use serde_json::Value;

use crate::error::Error;
use crate::families::ExampleFamily;
use crate::genus::{ideal_partition, IdealPartition};
use crate::graph::cycle_rank;
use crate::model::{GraphManifold, Side};
use crate::modification::{
    amalgamatable_modification, greedy_modification, DerivedVertex, Modification,
};
use crate::oracle::OracleCheck;
use crate::splitting::{
    splitting_genus, stabilization_bound, tube_budget, BudgetMode, SplittingProfile,
    StabilizationBound, TubeBudget,
};

pub const SCHEMA: &str = "report/1";

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input_digest: Option<String>,
    pub results: Value,
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<Vec<OracleCheck>>,
}

impl Report {
    pub fn new(
        command: impl Into<String>,
        input_digest: Option<String>,
        results: impl Serialize,
    ) -> Report {
        Report {
            schema: SCHEMA,
            command: command.into(),
            input_digest,
            results: serde_json::to_value(results).expect("report results serialize"),
            warnings: Vec::new(),
            oracle: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModificationSummary {
    pub q: usize,
    pub doubled_edges: Vec<usize>,
    pub ell: usize,
    pub torus_count: usize,
    pub derived_vertices: Vec<DerivedVertex>,
    pub bipartition: Vec<Side>,
    /// Size reached by repeatedly doubling an edge of an odd cycle.
    pub greedy_q: usize,
    pub greedy_doubled_edges: Vec<usize>,
}

pub fn summarize_modification(
    manifold: &GraphManifold,
    modification: &Modification,
) -> Result<ModificationSummary, Error> {
    let greedy = greedy_modification(&manifold.graph())?;
    Ok(ModificationSummary {
        q: modification.q(),
        doubled_edges: modification.doubled_edges().to_vec(),
        ell: cycle_rank(modification.derived_graph())?.ell,
        torus_count: modification.torus_count(),
        derived_vertices: (0..modification.derived_graph().vertex_count())
            .map(|v| modification.derived_vertex(v))
            .collect(),
        bipartition: modification.bipartition().to_vec(),
        greedy_q: greedy.q(),
        greedy_doubled_edges: greedy.doubled_edges().to_vec(),
    })
}

pub fn modify(manifold: &GraphManifold) -> Result<ModificationSummary, Error> {
    let modification = amalgamatable_modification(&manifold.graph())?;
    summarize_modification(manifold, &modification)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenusResults {
    pub modification: ModificationSummary,
    pub amalgamation_genus: i64,
    #[serde(flatten)]
    pub partitions: IdealPartition,
}

pub fn genus(manifold: &GraphManifold) -> Result<GenusResults, Error> {
    let modification = amalgamatable_modification(&manifold.graph())?;
    let partitions = ideal_partition(manifold, &modification)?;
    Ok(GenusResults {
        modification: summarize_modification(manifold, &modification)?,
        amalgamation_genus: partitions.ideal.value,
        partitions,
    })
}

pub fn bound(
    manifold: &GraphManifold,
    profile: &SplittingProfile,
) -> Result<StabilizationBound, Error> {
    let modification = amalgamatable_modification(&manifold.graph())?;
    stabilization_bound(manifold, profile, &modification)
}

/// Tube budget under the ideal assignment.
pub fn check(
    manifold: &GraphManifold,
    profile: &SplittingProfile,
    mode: BudgetMode,
) -> Result<TubeBudget, Error> {
    let modification = amalgamatable_modification(&manifold.graph())?;
    let ideal = ideal_partition(manifold, &modification)?;
    tube_budget(
        manifold,
        profile,
        &modification,
        &ideal.ideal.partition,
        mode,
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyResults {
    #[serde(flatten)]
    pub family: ExampleFamily,
    pub splitting_genus: i64,
    pub amalgamation_genus: i64,
    pub general_formula: i64,
    pub relation_holds: bool,
    pub stabilizations: i64,
    pub budget: TubeBudget,
}

/// Evaluates a generated family; the second value lists warnings.
pub fn family(family: ExampleFamily) -> Result<(FamilyResults, Vec<String>), Error> {
    let modification = amalgamatable_modification(&family.manifold.graph())?;
    let ideal = ideal_partition(&family.manifold, &modification)?;
    let g = splitting_genus(&family.manifold, &family.profile)?.genus;
    let bound = stabilization_bound(&family.manifold, &family.profile, &modification)?;
    let budget = tube_budget(
        &family.manifold,
        &family.profile,
        &modification,
        &ideal.ideal.partition,
        BudgetMode::Aggregate,
    )?;
    let warnings = family.discrepancy(ideal.ideal.value).into_iter().collect();
    Ok((
        FamilyResults {
            relation_holds: family.relation_holds(g, ideal.ideal.value),
            family,
            splitting_genus: g,
            amalgamation_genus: ideal.ideal.value,
            general_formula: ideal.ideal.general,
            stabilizations: bound.stabilizations,
            budget,
        },
        warnings,
    ))
}
