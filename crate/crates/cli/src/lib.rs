//! The `mvlab` command line: MV polytope checks, crystal operators, classification
//! sweeps and constructors, all reading and writing JSON.

pub mod commands;
pub mod crystal_graph;
pub mod doc;
pub mod input;
pub mod sweep;

use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand, ValueEnum};
use mvlab_core::catalog::{
    graph_associahedron, graphic_zonotope, nestohedron, pitman_stanley, BuildingSet, SimpleGraph,
};
use mvlab_core::matroid::{lattice_path_matroid, matroid_polytope, schubert_matroid, Matroid};
use mvlab_core::schubitope::{schubitope, Diagram};
use mvlab_core::{GenPermutahedron, Subset};
use serde::Serialize;
use serde_json::Value;

use crate::doc::{subsets, DiagramDoc, PolytopeDoc};
use crate::input::{join, parse_edges, parse_ops, parse_set, permutation, read_json, PolytopeSource};

#[derive(Parser, Debug)]
#[command(name = "mvlab", version, about = "Exact computations with MV polytopes in type A")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide the MV property; report the first failing Plücker relation
    CheckMv {
        #[command(flatten)]
        source: PolytopeSource,
        /// Ground set size for --matroid-bases
        #[arg(long)]
        n: Option<usize>,
        /// Exit with status 1 when the polytope is not MV
        #[arg(long)]
        strict: bool,
    },
    /// Apply crystal operators, e.g. --ops "e1 e1 f2" (applied left to right)
    Crystal {
        #[command(flatten)]
        source: PolytopeSource,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value = "")]
        ops: String,
        /// Exit with status 1 when some f_i kills the polytope
        #[arg(long)]
        strict: bool,
    },
    /// Exhaustive classification sweeps; exit status 1 on any counterexample
    Sweep {
        #[command(subcommand)]
        family: SweepFamily,
    },
    /// The graph of raising operators from a seed, up to the given depth
    ExportCrystalGraph {
        #[command(flatten)]
        source: PolytopeSource,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(0..=crystal_graph::MAX_DEPTH as i64))]
        depth: u8,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Schubitope of a diagram, given as columns like `13 24 24 35` or a JSON document
    Schubitope {
        #[arg(long, num_args = 1.., conflicts_with = "diagram", required_unless_present = "diagram")]
        columns: Option<Vec<String>>,
        /// Diagram JSON document (`-` for stdin)
        #[arg(long, value_name = "PATH")]
        diagram: Option<PathBuf>,
        /// Number of rows; defaults to the largest row used by --columns
        #[arg(long)]
        n: Option<usize>,
        /// Also search for an orthodontic chain down to the empty diagram
        #[arg(long)]
        orthodontic: bool,
        #[arg(long)]
        strict: bool,
    },
    /// Schubert polynomial of a permutation in one-line notation and its Newton polytope
    Schubert {
        #[arg(long, value_delimiter = ',', required = true)]
        perm: Vec<usize>,
        #[arg(long)]
        strict: bool,
    },
    /// Key polynomial of a weak composition and its Newton polytope
    Key {
        #[arg(long, value_delimiter = ',', required = true)]
        alpha: Vec<u32>,
        #[arg(long)]
        strict: bool,
    },
    /// Twisted Bruhat interval polytope of [u, v]
    Bip {
        #[arg(long, value_delimiter = ',', required = true)]
        u: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        v: Vec<usize>,
        #[arg(long)]
        strict: bool,
    },
    /// Build a polytope document from a named family
    Catalog {
        #[command(subcommand)]
        kind: CatalogKind,
    },
}

#[derive(Subcommand, Debug)]
pub enum SweepFamily {
    /// Matroid polytopes: MV iff lattice path (n <= 6)
    Matroids {
        #[arg(long)]
        n: usize,
        /// Only this rank; default all ranks 1..n-1
        #[arg(long)]
        k: Option<usize>,
    },
    /// Bruhat interval polytopes: MV iff projection property (n <= 5)
    Bips {
        #[arg(long)]
        n: usize,
    },
    /// Graphic zonotopes and graph associahedra (n <= 6), plus random Pitman-Stanley polytopes
    Graphs {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = sweep::DEFAULT_SEED)]
        seed: u64,
    },
    /// Newton polytopes of Schubert polynomials of S_n (n <= 6)
    Schubert {
        #[arg(long)]
        n: usize,
    },
    /// Newton polytopes of key polynomials in n variables (n <= 5, parts <= 4)
    Keys {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        max_part: u32,
    },
}

#[derive(Subcommand, Debug)]
pub enum CatalogKind {
    /// Permutahedron, the convex hull of all rearrangements of lambda
    Permutahedron {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        lambda: Vec<i64>,
    },
    /// Simplex on a subset, written `134` or `1,3,4`
    Simplex {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        set: String,
    },
    /// Uniform matroid polytope
    Uniform {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Lattice path matroid polytope with bases the Gale interval [lower, upper]
    LatticePath {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lower: String,
        #[arg(long)]
        upper: String,
    },
    /// Schubert matroid polytope: bases Gale above {1..k} and below the given set
    SchubertMatroid {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        set: String,
    },
    /// Graphic zonotope, edges written `1-2,2-3`
    GraphicZonotope {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "")]
        edges: String,
    },
    /// Graph associahedron, edges written `1-2,2-3`
    Associahedron {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "")]
        edges: String,
    },
    /// Nestohedron of a building set, members written `12 23 123` or `1,2 2,3`
    Nestohedron {
        #[arg(long)]
        n: usize,
        #[arg(long, num_args = 1.., required = true)]
        members: Vec<String>,
    },
    /// Pitman-Stanley polytope PS(a)
    PitmanStanley {
        #[arg(long, value_delimiter = ',', required = true)]
        a: Vec<i64>,
    },
    /// Schubitope of a diagram given by columns
    Schubitope {
        #[arg(long)]
        n: usize,
        #[arg(long, num_args = 1.., required = true)]
        columns: Vec<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Dot,
    Json,
    /// One `P --e_i--> P'` line per edge
    Edges,
}

/// What a command prints, and whether it found a semantic negative that should turn
/// into exit status 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub negative: bool,
}

impl Outcome {
    fn json<T: Serialize>(value: &T, negative: bool) -> Result<Self> {
        Ok(Outcome {
            output: to_json_text(value)?,
            negative,
        })
    }
}

/// Indented JSON in which arrays without objects inside stay on one line, so tables
/// and coordinate vectors read as rows.
pub fn to_json_text<T: Serialize>(value: &T) -> Result<String> {
    fn contains_object(v: &Value) -> bool {
        match v {
            Value::Object(_) => true,
            Value::Array(items) => items.iter().any(contains_object),
            _ => false,
        }
    }
    fn write(out: &mut String, v: &Value, indent: usize) -> Result<()> {
        let pad = |k: usize| "  ".repeat(k);
        match v {
            Value::Object(map) if !map.is_empty() => {
                out.push_str("{\n");
                for (pos, (key, item)) in map.iter().enumerate() {
                    out.push_str(&pad(indent + 1));
                    out.push_str(&serde_json::to_string(key)?);
                    out.push_str(": ");
                    write(out, item, indent + 1)?;
                    out.push_str(if pos + 1 < map.len() { ",\n" } else { "\n" });
                }
                out.push_str(&pad(indent));
                out.push('}');
            }
            Value::Array(items) if contains_object(v) => {
                out.push_str("[\n");
                for (pos, item) in items.iter().enumerate() {
                    out.push_str(&pad(indent + 1));
                    write(out, item, indent + 1)?;
                    out.push_str(if pos + 1 < items.len() { ",\n" } else { "\n" });
                }
                out.push_str(&pad(indent));
                out.push(']');
            }
            _ => out.push_str(&serde_json::to_string(v)?),
        }
        Ok(())
    }
    let mut out = String::new();
    write(&mut out, &serde_json::to_value(value)?, 0)?;
    out.push('\n');
    Ok(out)
}

pub fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::CheckMv { source, n, strict } => {
            let (p, _) = source.load(n)?;
            let report = commands::check_mv(&p);
            Outcome::json(&report, strict && !report.is_mv)
        }
        Command::Crystal { source, n, ops, strict } => {
            let (p, label) = source.load(n)?;
            let report = commands::crystal(&p, label, &parse_ops(&ops)?)?;
            Outcome::json(&report, strict && report.killed())
        }
        Command::Sweep { family } => {
            let report = sweep::pool()?.install(|| match family {
                SweepFamily::Matroids { n, k } => sweep::matroids(n, k),
                SweepFamily::Bips { n } => sweep::bips(n),
                SweepFamily::Graphs { n, samples, seed } => sweep::graphs(n, samples, seed),
                SweepFamily::Schubert { n } => sweep::schubert_polynomials(n),
                SweepFamily::Keys { n, max_part } => sweep::key_polynomials(n, max_part),
            })?;
            Outcome::json(&report, !report.ok)
        }
        Command::ExportCrystalGraph {
            source,
            n,
            depth,
            format,
        } => {
            let (p, _) = source.load(n)?;
            let graph = crystal_graph::build(&p, depth as usize)?;
            match format {
                GraphFormat::Json => Outcome::json(&graph, false),
                GraphFormat::Dot => Ok(Outcome {
                    output: graph.to_dot(),
                    negative: false,
                }),
                GraphFormat::Edges => Ok(Outcome {
                    output: graph.to_edge_list(),
                    negative: false,
                }),
            }
        }
        Command::Schubitope {
            columns,
            diagram,
            n,
            orthodontic,
            strict,
        } => {
            let d = match (columns, diagram) {
                (Some(cols), _) => diagram_from_columns(n, &cols)?,
                (None, Some(path)) => read_json::<DiagramDoc>(&path)?.to_diagram()?,
                (None, None) => bail!("give --columns or --diagram"),
            };
            let report = commands::schubitope_report(&d, orthodontic);
            Outcome::json(&report, strict && !report.is_mv)
        }
        Command::Schubert { perm, strict } => {
            let report = commands::schubert_report(&permutation(&perm)?)?;
            Outcome::json(&report, strict && !report.is_mv)
        }
        Command::Key { alpha, strict } => {
            let report = commands::key_report(&alpha)?;
            Outcome::json(&report, strict && !report.is_mv)
        }
        Command::Bip { u, v, strict } => {
            let report = commands::bip_report(&permutation(&u)?, &permutation(&v)?)?;
            Outcome::json(&report, strict && !report.is_mv)
        }
        Command::Catalog { kind } => Outcome::json(&catalog(kind)?, false),
    }
}

fn diagram_from_columns(n: Option<usize>, columns: &[String]) -> Result<Diagram> {
    let sets = columns.iter().map(|c| parse_set(c)).collect::<Result<Vec<_>>>()?;
    let n = n.unwrap_or_else(|| sets.iter().flatten().copied().max().unwrap_or(1).max(1));
    Ok(Diagram::new(n, &subsets(n, &sets)?)?)
}

fn subset(n: usize, s: &str) -> Result<Subset> {
    Ok(subsets(n, &[parse_set(s)?])?.remove(0))
}

pub fn catalog(kind: CatalogKind) -> Result<PolytopeDoc> {
    let (p, label): (GenPermutahedron, String) = match kind {
        CatalogKind::Permutahedron { lambda } => (
            GenPermutahedron::permutahedron(&lambda)?,
            format!("permutahedron ({})", join(&lambda)),
        ),
        CatalogKind::Simplex { n, set } => {
            let t = subset(n, &set)?;
            (GenPermutahedron::simplex(&t), format!("simplex {t}"))
        }
        CatalogKind::Uniform { k, n } => (matroid_polytope(&Matroid::uniform(k, n)?), format!("U({k},{n})")),
        CatalogKind::LatticePath { n, lower, upper } => {
            let (a, b) = (subset(n, &lower)?, subset(n, &upper)?);
            (matroid_polytope(&lattice_path_matroid(&a, &b)?), format!("M[{a},{b}]"))
        }
        CatalogKind::SchubertMatroid { n, set } => {
            let a = subset(n, &set)?;
            (matroid_polytope(&schubert_matroid(&a)), format!("Schubert matroid {a}"))
        }
        CatalogKind::GraphicZonotope { n, edges } => {
            let g = SimpleGraph::new(n, &parse_edges(&edges)?)?;
            (graphic_zonotope(&g), format!("graphic zonotope {edges}"))
        }
        CatalogKind::Associahedron { n, edges } => {
            let g = SimpleGraph::new(n, &parse_edges(&edges)?)?;
            (graph_associahedron(&g), format!("graph associahedron {edges}"))
        }
        CatalogKind::Nestohedron { n, members } => {
            let sets = members.iter().map(|m| parse_set(m)).collect::<Result<Vec<_>>>()?;
            let b = BuildingSet::new(n, &subsets(n, &sets)?)?;
            (nestohedron(&b), format!("nestohedron {}", members.join(" ")))
        }
        CatalogKind::PitmanStanley { a } => (pitman_stanley(&a)?, format!("PS({})", join(&a))),
        CatalogKind::Schubitope { n, columns } => {
            let d = diagram_from_columns(Some(n), &columns)?;
            (schubitope(&d), format!("schubitope {d}"))
        }
    };
    Ok(PolytopeDoc::new(&p, Some(label)))
}
