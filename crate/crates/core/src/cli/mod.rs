//! Command-line front end. Exit codes: 0 success or affirmative answer,
//! 1 negative answer, 2 bad input.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::artin_system::{ArtinSystem, Coherence, GraphFile, GroupClass, WitnessGraph};
use crate::decompose::{decompose_with, SplitRule};
use crate::error::{Error, Result};
use crate::kernel_omega::build_omega;
use crate::subgroups::{
    g0_index, kernel_phi_rank, largeness_certificate, reidemeister_schreier_g0, smith_normal_form,
    G0Map, Matrix,
};
use crate::vertex_set::VertexSet;
use crate::word_problem::{RootClosureReport, WordProblem};
use crate::words::Word;

#[derive(Debug, Parser)]
#[command(name = "eafc", version, about = "Even Artin groups of FC type")]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Prefer this vertex when an amalgam splitting vertex is needed.
    #[arg(long, global = true, value_name = "NAME")]
    pub split_vertex: Option<String>,
    /// Orientation override file for the G_0 map.
    #[arg(long, global = true, value_name = "FILE")]
    pub orientation: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the graph file and the EAFC condition.
    Validate { graph: PathBuf },
    /// Free abelian or large.
    Classify { graph: PathBuf },
    /// Chordality of Γ and Γ^{<=2}; prints a chordless cycle when incoherent.
    Coherence { graph: PathBuf },
    /// Print the decomposition tree.
    Decompose { graph: PathBuf },
    /// Decide whether two words are equal.
    Wp {
        graph: PathBuf,
        w1: String,
        w2: String,
    },
    /// Membership of a word in c G_S c^-1.
    Member {
        graph: PathBuf,
        word: String,
        /// Comma-separated vertex names.
        #[arg(long, value_name = "NAMES")]
        subset: String,
        #[arg(long, value_name = "WORD")]
        conjugator: Option<String>,
        /// Also check w^n for n = 1..=K.
        #[arg(long, value_name = "K")]
        max_n: Option<u32>,
    },
    /// Whether a word commutes with every generator of a subset.
    Qz {
        graph: PathBuf,
        word: String,
        #[arg(long, value_name = "NAMES")]
        subset: String,
    },
    /// Index of G_0, image of a word, or membership in G_0.
    G0 {
        graph: PathBuf,
        #[command(flatten)]
        query: G0Query,
    },
    /// Schreier generators of H ∩ G_0 for H generated by the given words.
    Rs {
        graph: PathBuf,
        #[arg(required = true)]
        gens: Vec<String>,
    },
    /// Kernel graph for a vertex adjacent to all others.
    Omega { graph: PathBuf, vertex: String },
    /// Largeness certificate as JSON.
    Large { graph: PathBuf },
    /// Smith normal form of a JSON integer matrix.
    Snf { matrix: PathBuf },
    /// Rank of the free kernel of v ↦ 1 on a tree.
    KernelRank { graph: PathBuf },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct G0Query {
    #[arg(long)]
    pub index: bool,
    #[arg(long, value_name = "WORD")]
    pub image: Option<String>,
    #[arg(long, value_name = "WORD")]
    pub member: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidateReport {
    pub valid: bool,
    pub vertices: usize,
    pub edges: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub triangle: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum ClassifyReport {
    FreeAbelian { rank: usize },
    Large,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoherenceReport {
    pub coherent: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<WitnessGraph>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cycle: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EqualityReport {
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberReport {
    pub member: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root_closure: Option<RootClosureReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QzReport {
    pub in_quasi_centralizer: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum G0Report {
    /// Decimal strings, exact for any size. `index` is the bound
    /// `∏ m(e)/2`; `kernel_index` is the index under the chosen orientations.
    Index {
        index: String,
        kernel_index: String,
    },
    Image {
        residues: Vec<u64>,
        moduli: Vec<u64>,
    },
    Member {
        member: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RsReport {
    pub index: usize,
    pub transversal: Vec<String>,
    pub generators: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Substitution {
    pub vertex: String,
    pub image: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaReport {
    pub apex: String,
    pub graph: GraphFile,
    pub substitutions: Vec<Substitution>,
}

/// Entries that fit in an `i64` are JSON numbers, larger ones strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnfReport {
    pub u: Vec<Vec<serde_json::Value>>,
    pub d: Vec<Vec<serde_json::Value>>,
    pub v: Vec<Vec<serde_json::Value>>,
    pub diagonal: Vec<serde_json::Value>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelRankReport {
    pub rank: String,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Arc<ArtinSystem>> {
    let text = read(path)?;
    ArtinSystem::from_json(&text)
        .map(Arc::new)
        .map_err(|e| match e {
            Error::Input(msg) => Error::Input(format!("{}: {msg}", path.display())),
            other => other,
        })
}

fn subset(sys: &ArtinSystem, names: &str) -> Result<VertexSet> {
    let names: Vec<&str> = names
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    sys.subset(&names)
}

fn emit<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value).expect("reports serialize");
    writeln!(out, "{text}").map_err(|e| Error::Input(format!("write failed: {e}")))
}

fn say(out: &mut dyn Write, text: impl AsRef<str>) -> Result<()> {
    writeln!(out, "{}", text.as_ref()).map_err(|e| Error::Input(format!("write failed: {e}")))
}

fn verdict(yes: bool) -> i32 {
    if yes {
        0
    } else {
        1
    }
}

fn json_int(x: &BigInt) -> serde_json::Value {
    match x.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(x.to_string()),
    }
}

fn json_matrix(m: &Matrix) -> Vec<Vec<serde_json::Value>> {
    m.iter().map(|r| r.iter().map(json_int).collect()).collect()
}

fn parse_matrix(text: &str) -> Result<Matrix> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| {
        Error::Input(format!(
            "matrix: {e} at line {} column {}",
            e.line(),
            e.column()
        ))
    })?;
    let rows = value
        .as_array()
        .ok_or_else(|| Error::Input("matrix must be a JSON array of rows".into()))?;
    let mut m: Matrix = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| Error::Input(format!("row {i} is not an array")))?;
        let parsed = row
            .iter()
            .enumerate()
            .map(|(j, x)| match x {
                serde_json::Value::Number(n) if n.is_i64() => Ok(BigInt::from(n.as_i64().unwrap())),
                serde_json::Value::String(s) => s
                    .parse::<BigInt>()
                    .map_err(|_| Error::Input(format!("entry ({i}, {j}) is not an integer"))),
                _ => Err(Error::Input(format!("entry ({i}, {j}) is not an integer"))),
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some(first) = m.first() {
            if first.len() != parsed.len() {
                return Err(Error::Input(format!("row {i} has a different length")));
            }
        }
        m.push(parsed);
    }
    Ok(m)
}

fn split_rule(cli: &Cli, sys: &ArtinSystem) -> Result<SplitRule> {
    match &cli.split_vertex {
        Some(name) => Ok(SplitRule::Prefer(sys.index_of(name)?)),
        None => Ok(SplitRule::MinStar),
    }
}

fn solver(cli: &Cli, sys: &Arc<ArtinSystem>) -> Result<WordProblem> {
    WordProblem::with_rule(Arc::clone(sys), split_rule(cli, sys)?)
}

fn g0_map(cli: &Cli, sys: &Arc<ArtinSystem>) -> Result<G0Map> {
    match &cli.orientation {
        Some(path) => G0Map::from_json(Arc::clone(sys), &read(path)?),
        None => Ok(G0Map::new(Arc::clone(sys))),
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let json = cli.json;
    match &cli.command {
        Command::Validate { graph } => {
            let sys = load(graph)?;
            let triangle = sys.validate_eafc().err().map(|t| {
                t.iter()
                    .map(|&i| sys.name(i).to_string())
                    .collect::<Vec<_>>()
            });
            let report = ValidateReport {
                valid: triangle.is_none(),
                vertices: sys.vertex_count(),
                edges: sys.edges().len(),
                triangle,
            };
            if json {
                emit(out, &report)?;
            } else if let Some(t) = &report.triangle {
                say(
                    out,
                    format!(
                        "not EAFC: triangle {{{}}} has two labels above 2",
                        t.join(", ")
                    ),
                )?;
            } else {
                say(
                    out,
                    format!(
                        "valid EAFC system: {} vertices, {} edges",
                        report.vertices, report.edges
                    ),
                )?;
            }
            Ok(verdict(report.valid))
        }
        Command::Classify { graph } => {
            let sys = load(graph)?;
            let report = match sys.classify_group()? {
                GroupClass::FreeAbelian(rank) => ClassifyReport::FreeAbelian { rank },
                GroupClass::Large => ClassifyReport::Large,
            };
            if json {
                emit(out, &report)?;
            } else {
                match &report {
                    ClassifyReport::FreeAbelian { rank } => {
                        say(out, format!("free abelian of rank {rank}"))?
                    }
                    ClassifyReport::Large => say(out, "large")?,
                }
            }
            Ok(0)
        }
        Command::Coherence { graph } => {
            let sys = load(graph)?;
            let report = match sys.is_coherent()? {
                Coherence::Coherent => CoherenceReport {
                    coherent: true,
                    graph: None,
                    cycle: None,
                },
                Coherence::Incoherent { graph, cycle } => CoherenceReport {
                    coherent: false,
                    graph: Some(graph),
                    cycle: Some(cycle.names(&sys)),
                },
            };
            if json {
                emit(out, &report)?;
            } else if report.coherent {
                say(out, "coherent")?;
            } else {
                let which = match report.graph {
                    Some(WitnessGraph::GammaLe2) => "the label-2 subgraph",
                    _ => "the graph",
                };
                say(out, "incoherent")?;
                say(
                    out,
                    format!(
                        "chordless cycle in {which}: {}",
                        report.cycle.as_deref().unwrap_or_default().join(" ")
                    ),
                )?;
            }
            Ok(verdict(report.coherent))
        }
        Command::Decompose { graph } => {
            let sys = load(graph)?;
            let tree = decompose_with(&sys, split_rule(cli, &sys)?)?;
            if json {
                emit(out, &tree.to_report(&sys))?;
            } else {
                write!(out, "{}", tree.render(&sys))
                    .map_err(|e| Error::Input(format!("write failed: {e}")))?;
            }
            Ok(0)
        }
        Command::Wp { graph, w1, w2 } => {
            let sys = load(graph)?;
            let wp = solver(cli, &sys)?;
            let equal = wp.are_equal(&Word::parse(&sys, w1)?, &Word::parse(&sys, w2)?)?;
            if json {
                emit(out, &EqualityReport { equal })?;
            } else {
                say(out, if equal { "equal" } else { "not-equal" })?;
            }
            Ok(verdict(equal))
        }
        Command::Member {
            graph,
            word,
            subset: names,
            conjugator,
            max_n,
        } => {
            let sys = load(graph)?;
            let wp = solver(cli, &sys)?;
            let s = subset(&sys, names)?;
            let w = Word::parse(&sys, word)?;
            let c = match conjugator {
                Some(c) => Word::parse(&sys, c)?,
                None => Word::identity(&sys),
            };
            let member = wp.in_parabolic(&s, &c, &w)?;
            let root_closure = match max_n {
                Some(k) => Some(wp.check_root_closure(&s, &c, &w, *k)?),
                None => None,
            };
            let report = MemberReport {
                member,
                root_closure,
            };
            if json {
                emit(out, &report)?;
            } else {
                say(out, if member { "member" } else { "not-member" })?;
                if let Some(rc) = &report.root_closure {
                    for row in &rc.rows {
                        say(
                            out,
                            format!(
                                "n={} power-member={} member={}",
                                row.n, row.power_member, row.member
                            ),
                        )?;
                    }
                    let v = rc.violations();
                    if !v.is_empty() {
                        let v: Vec<String> = v.iter().map(u32::to_string).collect();
                        say(out, format!("violations at n = {}", v.join(", ")))?;
                    }
                }
            }
            Ok(verdict(member))
        }
        Command::Qz {
            graph,
            word,
            subset: names,
        } => {
            let sys = load(graph)?;
            let wp = solver(cli, &sys)?;
            let s = subset(&sys, names)?;
            let yes = wp.in_quasi_centralizer(&s, &Word::parse(&sys, word)?)?;
            if json {
                emit(
                    out,
                    &QzReport {
                        in_quasi_centralizer: yes,
                    },
                )?;
            } else {
                say(
                    out,
                    if yes {
                        "in-quasi-centralizer"
                    } else {
                        "not-in-quasi-centralizer"
                    },
                )?;
            }
            Ok(verdict(yes))
        }
        Command::G0 { graph, query } => {
            let sys = load(graph)?;
            let g0 = g0_map(cli, &sys)?;
            let (report, code) = if query.index {
                (
                    G0Report::Index {
                        index: g0_index(&sys).to_string(),
                        kernel_index: g0.index().to_string(),
                    },
                    0,
                )
            } else if let Some(w) = &query.image {
                let img = g0.image(&Word::parse(&sys, w)?)?;
                (
                    G0Report::Image {
                        residues: img.residues,
                        moduli: img.moduli,
                    },
                    0,
                )
            } else {
                let w = query.member.as_deref().expect("clap enforces one query");
                let member = g0.in_g0(&Word::parse(&sys, w)?)?;
                (G0Report::Member { member }, verdict(member))
            };
            if json {
                emit(out, &report)?;
            } else {
                match &report {
                    G0Report::Index { index, .. } => say(out, index)?,
                    G0Report::Image { residues, moduli } => {
                        let parts: Vec<String> = residues
                            .iter()
                            .zip(moduli)
                            .map(|(r, n)| format!("{r} mod {n}"))
                            .collect();
                        say(out, format!("({})", parts.join(", ")))?
                    }
                    G0Report::Member { member } => {
                        say(out, if *member { "member" } else { "not-member" })?
                    }
                }
            }
            Ok(code)
        }
        Command::Rs { graph, gens } => {
            let sys = load(graph)?;
            let g0 = g0_map(cli, &sys)?;
            let words = gens
                .iter()
                .map(|g| Word::parse(&sys, g))
                .collect::<Result<Vec<_>>>()?;
            let data = reidemeister_schreier_g0(&g0, &words)?;
            let report = RsReport {
                index: data.index(),
                transversal: data.transversal.iter().map(Word::to_string).collect(),
                generators: data.generators.iter().map(Word::to_string).collect(),
            };
            if json {
                emit(out, &report)?;
            } else {
                say(out, format!("index {}", report.index))?;
                for g in &report.generators {
                    say(out, g)?;
                }
            }
            Ok(0)
        }
        Command::Omega { graph, vertex } => {
            let sys = load(graph)?;
            let omega = build_omega(&sys, sys.index_of(vertex)?)?;
            let report = OmegaReport {
                apex: vertex.clone(),
                graph: omega.system().to_graph_file(),
                substitutions: omega
                    .substitution_table()
                    .into_iter()
                    .map(|(vertex, image)| Substitution { vertex, image })
                    .collect(),
            };
            if json {
                emit(out, &report)?;
            } else {
                say(out, omega.system().to_json())?;
                for s in &report.substitutions {
                    say(out, format!("{} = {}", s.vertex, s.image))?;
                }
            }
            Ok(0)
        }
        Command::Large { graph } => {
            let sys = load(graph)?;
            emit(out, &largeness_certificate(&sys)?)?;
            Ok(0)
        }
        Command::Snf { matrix } => {
            let m = parse_matrix(&read(matrix)?)?;
            let s = smith_normal_form(&m);
            let report = SnfReport {
                u: json_matrix(&s.u),
                d: json_matrix(&s.d),
                v: json_matrix(&s.v),
                diagonal: s.diagonal().iter().map(json_int).collect(),
            };
            if json {
                emit(out, &report)?;
            } else {
                let diag: Vec<String> = s.diagonal().iter().map(BigInt::to_string).collect();
                say(out, format!("diagonal: [{}]", diag.join(", ")))?;
                for (name, mat) in [("U", &report.u), ("D", &report.d), ("V", &report.v)] {
                    say(
                        out,
                        format!(
                            "{name} = {}",
                            serde_json::to_string(mat).expect("values serialize")
                        ),
                    )?;
                }
            }
            Ok(0)
        }
        Command::KernelRank { graph } => {
            let sys = load(graph)?;
            let rank = kernel_phi_rank(&sys)?.to_string();
            if json {
                emit(out, &KernelRankReport { rank })?;
            } else {
                say(out, rank)?;
            }
            Ok(0)
        }
    }
}
