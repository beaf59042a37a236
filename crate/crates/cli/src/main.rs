//! `graphmfd`: amalgamation genus, minimal torus modifications, splitting
//! genus and tube budgets for graph manifolds given as JSON manifests.
//!
//! Exit status is 0 on success, 1 on parse or validation errors and 2 when
//! a tube budget is infeasible or an `--oracle` cross-check disagrees.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use graphmfd::families::{
    large_genus_family, small_genus_family, ExampleFamily, LargeGenusParams, Relation,
};
use graphmfd::manifest::{digest, parse_manifest, to_canonical_json, Manifest};
use graphmfd::oracle::cross_check;
use graphmfd::report::{self, Report};
use graphmfd::splitting::{BudgetMode, CensusCase, SplittingProfile};
use graphmfd::Error;
use serde_json::Value;

#[derive(Parser)]
#[command(
    name = "graphmfd",
    version,
    about = "Heegaard splitting invariants of graph manifolds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Print the report as JSON
    #[arg(long, global = true)]
    json: bool,

    /// Recompute results by brute force and compare
    #[arg(long, global = true)]
    oracle: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Amalgamation genus under both partitions and the ideal choice
    Genus { manifest: PathBuf },
    /// Minimal set of tori to double so the system is mutually separating
    Modify { manifest: PathBuf },
    /// Splitting genus, amalgamation genus and stabilization count
    Bound { manifest: PathBuf },
    /// Tube budget after one stabilization
    Check {
        manifest: PathBuf,
        /// Move tubes only along tori of the modified system
        #[arg(long)]
        routed: bool,
        /// With --routed, do not let trivial tubes jump between pieces
        #[arg(long, requires = "routed")]
        no_teleport: bool,
    },
    /// Emit a manifest and report for an example family
    Examples {
        #[command(subcommand)]
        family: Family,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Splitting genus 3m below the amalgamation genus
    SmallGenus {
        #[arg(long)]
        m: u32,
    },
    /// Torus knot exterior glued to a piece over a punctured surface
    LargeGenus {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        q: i64,
        /// Euler characteristic of the horizontal surface in the second piece
        #[arg(long, allow_hyphen_values = true)]
        chi: i64,
        /// Base genus of the second piece
        #[arg(long, default_value_t = 0)]
        genus: u32,
        /// Exceptional fiber of the second piece as beta/alpha; repeatable
        #[arg(long = "fiber", value_parser = parse_fiber)]
        fibers: Vec<(i64, i64)>,
    },
}

fn parse_fiber(s: &str) -> Result<(i64, i64), String> {
    let (b, a) = s
        .split_once('/')
        .ok_or_else(|| format!("expected beta/alpha, got {s:?}"))?;
    let beta = b
        .trim()
        .parse()
        .map_err(|_| format!("bad numerator in {s:?}"))?;
    let alpha = a
        .trim()
        .parse()
        .map_err(|_| format!("bad denominator in {s:?}"))?;
    Ok((beta, alpha))
}

enum Failure {
    Invalid(String),
    Rejected(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::GenusCrossCheck { .. } => Failure::Rejected(e.to_string()),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

struct Outcome {
    report: Report,
    text: Vec<String>,
    failed: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    let echo = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    match run(&cli, echo) {
        Ok(outcome) => {
            let rendered = if cli.json {
                outcome.report.to_json()
            } else {
                let mut text = String::new();
                for line in &outcome.text {
                    text.push_str(line);
                    text.push('\n');
                }
                for w in &outcome.report.warnings {
                    text.push_str(&format!("warning: {w}\n"));
                }
                text
            };
            // A closed pipe downstream is not an error of ours.
            let _ = std::io::stdout().lock().write_all(rendered.as_bytes());
            if outcome.failed {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Rejected(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &PathBuf) -> Result<(Manifest, String), Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
    let manifest =
        parse_manifest(&text).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
    Ok((manifest, digest(&text)))
}

fn require_profile(manifest: &Manifest) -> Result<&SplittingProfile, Failure> {
    manifest
        .profile
        .as_ref()
        .ok_or_else(|| Failure::Invalid("manifest has no splitting profile".into()))
}

fn run(cli: &Cli, echo: String) -> Result<Outcome, Failure> {
    let (mut outcome, manifest) = match &cli.command {
        Command::Genus { manifest } => {
            let (m, hash) = load(manifest)?;
            let r = report::genus(&m.manifold)?;
            let text = vec![
                format!("amalgamation genus {}", r.amalgamation_genus),
                format!(
                    "ideal partition: {}",
                    sides(&r.partitions.ideal.partition.sides)
                ),
                format!("other partition: genus {}", r.partitions.other.value),
                format!("q = {}, ell = {}", r.modification.q, r.modification.ell),
            ];
            (outcome(echo, hash, r, text), m)
        }
        Command::Modify { manifest } => {
            let (m, hash) = load(manifest)?;
            let r = report::modify(&m.manifold)?;
            let text = vec![
                format!("q = {}", r.q),
                format!("doubled edges: {}", list(&r.doubled_edges)),
                format!("bipartition: {}", sides(&r.bipartition)),
                format!("ell = {}", r.ell),
                format!(
                    "greedy q = {} ({})",
                    r.greedy_q,
                    list(&r.greedy_doubled_edges)
                ),
            ];
            (outcome(echo, hash, r, text), m)
        }
        Command::Bound { manifest } => {
            let (m, hash) = load(manifest)?;
            let r = report::bound(&m.manifold, require_profile(&m)?)?;
            let mut text = vec![
                format!("splitting genus g = {}", r.splitting_genus),
                format!("amalgamation genus a = {}", r.amalgamation_genus),
                stabilizations(r.stabilizations),
            ];
            if let Some(c) = &r.census {
                text.push(format!(
                    "no horizontal component: {} case, a in [{}, {}], {} from the genus 2 splitting",
                    match c.case {
                        CensusCase::Separating => "separating",
                        CensusCase::NonSeparating => "non-separating",
                    },
                    c.range.0,
                    c.range.1,
                    stabilizations(c.stabilizations)
                ));
            }
            (outcome(echo, hash, r, text), m)
        }
        Command::Check {
            manifest,
            routed,
            no_teleport,
        } => {
            let (m, hash) = load(manifest)?;
            let mode = if *routed {
                BudgetMode::Routed {
                    teleport: !no_teleport,
                }
            } else {
                BudgetMode::Aggregate
            };
            let r = report::check(&m.manifold, require_profile(&m)?, mode)?;
            let mut text = vec![
                format!("supply {} tubes (g = {}, n = {})", r.supply, r.genus, r.n),
                format!("required {}", r.required()),
                format!("slack {}", r.slack),
            ];
            if let Some(routed) = &r.routed {
                text.push(format!(
                    "routed: delivered {} of {}",
                    routed.delivered, routed.required
                ));
            }
            text.push(if r.feasible { "feasible" } else { "infeasible" }.to_string());
            let failed = !r.feasible;
            let mut o = outcome(echo, hash, r, text);
            o.failed = failed;
            (o, m)
        }
        Command::Examples { family } => {
            let f = match family {
                Family::SmallGenus { m } => small_genus_family(*m)?,
                Family::LargeGenus {
                    p,
                    q,
                    chi,
                    genus,
                    fibers,
                } => {
                    let mut params = LargeGenusParams::new(*p, *q, *chi);
                    params.base_genus = *genus;
                    if !fibers.is_empty() {
                        params.fibers = fibers.clone();
                    }
                    large_genus_family(&params)?
                }
            };
            example(echo, f)?
        }
    };
    if cli.oracle {
        let checks = cross_check(&manifest.manifold, manifest.profile.as_ref())?;
        for c in checks.iter().filter(|c| !c.agree) {
            outcome.failed = true;
            outcome.report.warnings.push(format!(
                "oracle mismatch on {}: fast {} brute {}",
                c.name, c.fast, c.brute
            ));
        }
        let agreeing = checks.iter().filter(|c| c.agree).count();
        outcome
            .text
            .push(format!("oracle: {agreeing}/{} checks agree", checks.len()));
        outcome.report.oracle = Some(checks);
    }
    Ok(outcome)
}

fn outcome(
    echo: String,
    hash: String,
    results: impl serde::Serialize,
    text: Vec<String>,
) -> Outcome {
    Outcome {
        report: Report::new(echo, Some(hash), results),
        text,
        failed: false,
    }
}

fn example(echo: String, family: ExampleFamily) -> Result<(Outcome, Manifest), Failure> {
    let canonical = to_canonical_json(&family.manifold, Some(&family.profile));
    let manifest = Manifest {
        manifold: family.manifold.clone(),
        profile: Some(family.profile.clone()),
    };
    let (results, warnings) = report::family(family)?;
    let text = vec![
        canonical.trim_end().to_string(),
        results.family.name.clone(),
        format!("splitting genus g = {}", results.splitting_genus),
        format!("amalgamation genus a = {}", results.amalgamation_genus),
        format!(
            "stated amalgamation genus {}",
            results.family.stated_amalgamation_genus
        ),
        format!(
            "{} {}",
            match results.family.stated_relation {
                Relation::GenusBelow => "g < a",
                Relation::GenusAbove => "g > a",
            },
            if results.relation_holds {
                "holds"
            } else {
                "fails"
            }
        ),
        stabilizations(results.stabilizations),
    ];
    let mut value = serde_json::to_value(&results).expect("family results serialize");
    let manifest_value: Value =
        serde_json::from_str(&canonical).expect("canonical manifest is JSON");
    value
        .as_object_mut()
        .expect("family results are an object")
        .insert("manifest".into(), manifest_value);
    let mut report = Report::new(echo, Some(digest(&canonical)), value);
    report.warnings = warnings;
    Ok((
        Outcome {
            report,
            text,
            failed: false,
        },
        manifest,
    ))
}

fn stabilizations(n: i64) -> String {
    if n == 1 {
        "1 stabilization".to_string()
    } else {
        format!("{n} stabilizations")
    }
}

fn sides(s: &[graphmfd::Side]) -> String {
    s.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn list(xs: &[usize]) -> String {
    if xs.is_empty() {
        "none".to_string()
    } else {
        xs.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    }
}
