//! Splitting an EAFC system into free products, direct products, amalgams
//! `G_Star(v) *_{G_Link(v)} G_{V \ v}`, and complete base pieces.

use std::collections::VecDeque;
use std::fmt::{self, Write as _};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::artin_system::ArtinSystem;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;
use crate::words::{artin_relator, Syllable};

/// A direct factor of a complete EAFC system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Factor {
    /// `D_2n` on the edge `{a, b}` with label `2n > 2`.
    Dihedral {
        a: usize,
        b: usize,
        n: u64,
    },
    Cyclic(usize),
}

impl Factor {
    pub fn vertices(&self) -> VertexSet {
        match *self {
            Factor::Dihedral { a, b, .. } => [a, b].into_iter().collect(),
            Factor::Cyclic(v) => VertexSet::singleton(v),
        }
    }
}

/// How the amalgam vertex is chosen when a node needs one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SplitRule {
    /// Non-full link, smallest star, earliest vertex on ties.
    #[default]
    MinStar,
    /// Use this vertex whenever it is present with a non-full link,
    /// otherwise fall back to [`SplitRule::MinStar`].
    Prefer(usize),
    /// Non-full link, largest star, latest vertex on ties.
    MaxStar,
}

/// One level of the decomposition, with children given as vertex sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Shape {
    FreeProduct(Vec<VertexSet>),
    DirectProduct(Vec<VertexSet>),
    Amalgam {
        vertex: usize,
        star: VertexSet,
        delta: VertexSet,
        link: VertexSet,
    },
    CompleteBase(Vec<Factor>),
}

pub(crate) fn shape_of(sys: &ArtinSystem, set: &VertexSet, rule: SplitRule) -> Shape {
    let components = sys.components_of(set);
    if components.len() > 1 {
        return Shape::FreeProduct(components);
    }
    let parts = sys.direct_factor_partition_of(set);
    if parts.len() > 1 {
        return Shape::DirectProduct(parts);
    }
    if sys.is_complete_on(set) {
        return Shape::CompleteBase(
            factorize_complete(sys, set).expect("completeness checked above"),
        );
    }
    let size = set.len();
    let candidates: Vec<(usize, VertexSet)> = set
        .iter()
        .map(|v| (v, sys.link_within(set, v)))
        .filter(|(_, link)| link.len() + 1 < size)
        .collect();
    let chosen = match rule {
        SplitRule::Prefer(p) if candidates.iter().any(|(v, _)| *v == p) => p,
        SplitRule::MaxStar => {
            candidates
                .iter()
                .rev()
                .max_by_key(|(_, l)| l.len())
                .expect("connected, irreducible, non-complete graphs have a non-full link")
                .0
        }
        _ => {
            candidates
                .iter()
                .min_by_key(|(_, l)| l.len())
                .expect("connected, irreducible, non-complete graphs have a non-full link")
                .0
        }
    };
    let link = sys.link_within(set, chosen);
    let mut star = link.clone();
    star.insert(chosen);
    let mut delta = set.clone();
    delta.remove(chosen);
    Shape::Amalgam {
        vertex: chosen,
        star,
        delta,
        link,
    }
}

fn factorize_complete(sys: &ArtinSystem, set: &VertexSet) -> Result<Vec<Factor>> {
    if !sys.is_complete_on(set) {
        return Err(Error::NotComplete(sys.subset_names(set)));
    }
    let verts: Vec<usize> = set.iter().collect();
    let mut used = VertexSet::new();
    let mut factors = Vec::new();
    for (i, &a) in verts.iter().enumerate() {
        if used.contains(a) {
            continue;
        }
        let partner = verts[i + 1..]
            .iter()
            .copied()
            .find(|&b| !used.contains(b) && sys.label(a, b).is_some_and(|m| m > 2));
        match partner {
            Some(b) => {
                used.insert(a);
                used.insert(b);
                let n = sys.label(a, b).unwrap() / 2;
                factors.push(Factor::Dihedral { a, b, n });
            }
            None => {
                used.insert(a);
                factors.push(Factor::Cyclic(a));
            }
        }
    }
    Ok(factors)
}

/// Splits a complete EAFC system into dihedral and cyclic direct factors.
pub fn complete_factorization(sys: &ArtinSystem) -> Result<Vec<Factor>> {
    sys.check_eafc()?;
    factorize_complete(sys, &sys.all())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionTree {
    pub vertices: VertexSet,
    pub kind: NodeKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeKind {
    FreeProduct(Vec<DecompositionTree>),
    DirectProduct(Vec<DecompositionTree>),
    Amalgam {
        vertex: usize,
        link: VertexSet,
        star_child: Box<DecompositionTree>,
        delta_child: Box<DecompositionTree>,
    },
    CompleteBase(Vec<Factor>),
}

pub fn decompose(sys: &ArtinSystem) -> Result<DecompositionTree> {
    decompose_with(sys, SplitRule::MinStar)
}

pub fn decompose_with(sys: &ArtinSystem, rule: SplitRule) -> Result<DecompositionTree> {
    sys.check_eafc()?;
    Ok(build_tree(sys, &sys.all(), rule))
}

fn build_tree(sys: &ArtinSystem, set: &VertexSet, rule: SplitRule) -> DecompositionTree {
    let kind = match shape_of(sys, set, rule) {
        Shape::FreeProduct(parts) => {
            NodeKind::FreeProduct(parts.iter().map(|p| build_tree(sys, p, rule)).collect())
        }
        Shape::DirectProduct(parts) => {
            NodeKind::DirectProduct(parts.iter().map(|p| build_tree(sys, p, rule)).collect())
        }
        Shape::Amalgam {
            vertex,
            star,
            delta,
            link,
        } => NodeKind::Amalgam {
            vertex,
            link,
            star_child: Box::new(build_tree(sys, &star, rule)),
            delta_child: Box::new(build_tree(sys, &delta, rule)),
        },
        Shape::CompleteBase(f) => NodeKind::CompleteBase(f),
    };
    DecompositionTree {
        vertices: set.clone(),
        kind,
    }
}

impl DecompositionTree {
    pub fn children(&self) -> Vec<&DecompositionTree> {
        match &self.kind {
            NodeKind::FreeProduct(c) | NodeKind::DirectProduct(c) => c.iter().collect(),
            NodeKind::Amalgam {
                star_child,
                delta_child,
                ..
            } => vec![star_child, delta_child],
            NodeKind::CompleteBase(_) => Vec::new(),
        }
    }

    pub fn node_count(&self) -> usize {
        1 + self
            .children()
            .iter()
            .map(|c| c.node_count())
            .sum::<usize>()
    }

    pub fn to_report(&self, sys: &ArtinSystem) -> TreeReport {
        let vertices = sys.subset_names(&self.vertices);
        match &self.kind {
            NodeKind::FreeProduct(c) => TreeReport::FreeProduct {
                vertices,
                children: c.iter().map(|t| t.to_report(sys)).collect(),
            },
            NodeKind::DirectProduct(c) => TreeReport::DirectProduct {
                vertices,
                children: c.iter().map(|t| t.to_report(sys)).collect(),
            },
            NodeKind::Amalgam {
                vertex,
                link,
                star_child,
                delta_child,
            } => TreeReport::Amalgam {
                vertices,
                vertex: sys.name(*vertex).to_string(),
                link: sys.subset_names(link),
                star: Box::new(star_child.to_report(sys)),
                delta: Box::new(delta_child.to_report(sys)),
            },
            NodeKind::CompleteBase(f) => TreeReport::CompleteBase {
                vertices,
                factors: f.iter().map(|f| FactorReport::new(sys, f)).collect(),
            },
        }
    }

    /// Indented plain-text rendering.
    pub fn render(&self, sys: &ArtinSystem) -> String {
        let mut out = String::new();
        self.render_into(sys, 0, "", &mut out);
        out
    }

    fn render_into(&self, sys: &ArtinSystem, depth: usize, role: &str, out: &mut String) {
        let pad = "  ".repeat(depth);
        let verts = sys.subset_names(&self.vertices).join(", ");
        let head = match &self.kind {
            NodeKind::FreeProduct(_) => "free product".to_string(),
            NodeKind::DirectProduct(_) => "direct product".to_string(),
            NodeKind::Amalgam { vertex, link, .. } => format!(
                "amalgam at {} over {{{}}}",
                sys.name(*vertex),
                sys.subset_names(link).join(", ")
            ),
            NodeKind::CompleteBase(f) => {
                let fs: Vec<String> = f
                    .iter()
                    .map(|f| FactorReport::new(sys, f).to_string())
                    .collect();
                format!("base {}", fs.join(" x "))
            }
        };
        let _ = writeln!(out, "{pad}{role}{head} [{verts}]");
        match &self.kind {
            NodeKind::Amalgam {
                star_child,
                delta_child,
                ..
            } => {
                star_child.render_into(sys, depth + 1, "star: ", out);
                delta_child.render_into(sys, depth + 1, "rest: ", out);
            }
            _ => {
                for c in self.children() {
                    c.render_into(sys, depth + 1, "", out);
                }
            }
        }
    }
}

/// Serializable form of a [`DecompositionTree`] with vertex names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TreeReport {
    FreeProduct {
        vertices: Vec<String>,
        children: Vec<TreeReport>,
    },
    DirectProduct {
        vertices: Vec<String>,
        children: Vec<TreeReport>,
    },
    Amalgam {
        vertices: Vec<String>,
        vertex: String,
        link: Vec<String>,
        star: Box<TreeReport>,
        delta: Box<TreeReport>,
    },
    CompleteBase {
        vertices: Vec<String>,
        factors: Vec<FactorReport>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum FactorReport {
    Dihedral { a: String, b: String, n: u64 },
    Cyclic { v: String },
}

impl FactorReport {
    fn new(sys: &ArtinSystem, f: &Factor) -> Self {
        match *f {
            Factor::Dihedral { a, b, n } => FactorReport::Dihedral {
                a: sys.name(a).into(),
                b: sys.name(b).into(),
                n,
            },
            Factor::Cyclic(v) => FactorReport::Cyclic {
                v: sys.name(v).into(),
            },
        }
    }
}

impl fmt::Display for FactorReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorReport::Dihedral { a, b, n } => write!(f, "D{}({a}, {b})", 2 * n),
            FactorReport::Cyclic { v } => write!(f, "Z({v})"),
        }
    }
}

/// An edge of the underlying oriented graph of a graph of groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GogEdge {
    pub source: usize,
    pub target: usize,
    /// Generators of the edge group.
    pub label: VertexSet,
}

/// A graph of standard parabolic subgroups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphOfGroups {
    vertex_labels: Vec<VertexSet>,
    edges: Vec<GogEdge>,
    tree_edges: Vec<usize>,
    stable_letters: Vec<(usize, String)>,
}

impl GraphOfGroups {
    /// Checks edge labels against their endpoints and picks the maximal
    /// subtree breadth-first from vertex 0.
    pub fn new(vertex_labels: Vec<VertexSet>, edges: Vec<GogEdge>) -> Result<Self> {
        if vertex_labels.is_empty() {
            return Err(Error::GraphOfGroups("no vertices".into()));
        }
        let nv = vertex_labels.len();
        for (i, e) in edges.iter().enumerate() {
            if e.source >= nv || e.target >= nv {
                return Err(Error::GraphOfGroups(format!(
                    "edge {i} has a missing endpoint"
                )));
            }
            if !e.label.is_subset(&vertex_labels[e.source])
                || !e.label.is_subset(&vertex_labels[e.target])
            {
                return Err(Error::GraphOfGroups(format!(
                    "edge {i} label is not contained in both endpoint groups"
                )));
            }
        }
        let mut seen = vec![false; nv];
        seen[0] = true;
        let mut tree_edges = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (i, e) in edges.iter().enumerate() {
                let next = if e.source == x {
                    e.target
                } else if e.target == x {
                    e.source
                } else {
                    continue;
                };
                if !seen[next] {
                    seen[next] = true;
                    tree_edges.push(i);
                    queue.push_back(next);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::GraphOfGroups(
                "underlying graph is disconnected".into(),
            ));
        }
        tree_edges.sort_unstable();
        let stable_letters = (0..edges.len())
            .filter(|i| tree_edges.binary_search(i).is_err())
            .map(|i| (i, format!("t_{i}")))
            .collect();
        Ok(Self {
            vertex_labels,
            edges,
            tree_edges,
            stable_letters,
        })
    }

    pub fn vertex_labels(&self) -> &[VertexSet] {
        &self.vertex_labels
    }

    pub fn edges(&self) -> &[GogEdge] {
        &self.edges
    }

    pub fn tree_edges(&self) -> &[usize] {
        &self.tree_edges
    }

    pub fn stable_letters(&self) -> &[(usize, String)] {
        &self.stable_letters
    }

    /// First Betti number of the underlying graph: the rank of the free
    /// quotient obtained by killing every vertex group.
    pub fn underlying_free_rank(&self) -> usize {
        self.edges.len() - self.tree_edges.len()
    }
}

/// Graph of groups for one decomposition node: two vertices and one edge for
/// an amalgam, a star with trivial edge groups for a free product, a single
/// vertex otherwise.
pub fn to_graph_of_groups(node: &DecompositionTree) -> GraphOfGroups {
    let (labels, edges) = match &node.kind {
        NodeKind::Amalgam {
            link,
            star_child,
            delta_child,
            ..
        } => (
            vec![star_child.vertices.clone(), delta_child.vertices.clone()],
            vec![GogEdge {
                source: 0,
                target: 1,
                label: link.clone(),
            }],
        ),
        NodeKind::FreeProduct(children) => (
            children.iter().map(|c| c.vertices.clone()).collect(),
            (1..children.len())
                .map(|i| GogEdge {
                    source: 0,
                    target: i,
                    label: VertexSet::new(),
                })
                .collect(),
        ),
        _ => (vec![node.vertices.clone()], Vec::new()),
    };
    GraphOfGroups::new(labels, edges).expect("decomposition nodes give valid graphs of groups")
}

/// A finite presentation with relators over generator indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Vec<Syllable>>,
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self
            .relators
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| {
                        let g = &self.generators[s.gen];
                        if s.exp == crate::Exp::ONE {
                            g.clone()
                        } else {
                            format!("{g}^{}", s.exp)
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        if rels.is_empty() {
            write!(f, "< {} | >", self.generators.join(", "))
        } else {
            write!(
                f,
                "< {} | {} >",
                self.generators.join(", "),
                rels.join(", ")
            )
        }
    }
}

/// Generators are the vertices; one Artin relator per edge, in edge order.
pub fn emit_presentation(sys: &Arc<ArtinSystem>) -> Presentation {
    Presentation {
        generators: sys.names().to_vec(),
        relators: sys
            .edges()
            .iter()
            .map(|e| {
                artin_relator(sys, e.u, e.v)
                    .expect("edges have relators")
                    .syllables()
                    .to_vec()
            })
            .collect(),
    }
}
