//! Defining graphs of even Artin groups.
//!
//! An [`ArtinSystem`] is a finite simplicial graph with an even label
//! `m(e) >= 2` on every edge. Vertex order is the order in which vertices were
//! supplied; every deterministic tie-break in the crate follows it.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// On-disk graph document: `{"vertices": [..], "edges": [{"u","v","m"}, ..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeSpec {
    pub u: String,
    pub v: String,
    pub m: u64,
}

/// An edge between two vertex indices with its full (even) label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub m: u64,
}

impl Edge {
    /// `m(e) / 2`.
    pub fn half_label(&self) -> u64 {
        self.m / 2
    }

    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

/// An even Artin–Tits system `((V, E), m)`.
#[derive(Clone)]
pub struct ArtinSystem {
    names: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<Edge>,
    // labels[u][v] == 0 means no edge
    labels: Vec<Vec<u64>>,
}

impl PartialEq for ArtinSystem {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.labels == other.labels
    }
}

impl Eq for ArtinSystem {}

impl fmt::Debug for ArtinSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|e| format!("{}-{}:{}", self.names[e.u], self.names[e.v], e.m))
            .collect();
        f.debug_struct("ArtinSystem")
            .field("vertices", &self.names)
            .field("edges", &edges)
            .finish()
    }
}

pub(crate) fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl ArtinSystem {
    /// Builds a system, checking the simplicial and labelling invariants.
    ///
    /// The EAFC triangle condition is *not* checked here; see
    /// [`ArtinSystem::validate_eafc`].
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S, u64)]) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let mut names = Vec::with_capacity(vertices.len());
        let mut index = HashMap::new();
        for v in vertices {
            let v = v.as_ref();
            if !is_valid_name(v) {
                return Err(Error::InvalidVertexName(v.to_string()));
            }
            if index.insert(v.to_string(), names.len()).is_some() {
                return Err(Error::DuplicateVertex(v.to_string()));
            }
            names.push(v.to_string());
        }
        let n = names.len();
        let mut labels = vec![vec![0u64; n]; n];
        let mut edge_list = Vec::with_capacity(edges.len());
        for (u, v, m) in edges {
            let (u, v) = (u.as_ref(), v.as_ref());
            let iu = *index
                .get(u)
                .ok_or_else(|| Error::UnknownVertex(u.to_string()))?;
            let iv = *index
                .get(v)
                .ok_or_else(|| Error::UnknownVertex(v.to_string()))?;
            if iu == iv {
                return Err(Error::Loop(u.to_string()));
            }
            if labels[iu][iv] != 0 {
                return Err(Error::DuplicateEdge(u.to_string(), v.to_string()));
            }
            if *m < 2 || m % 2 != 0 {
                return Err(Error::BadLabel {
                    u: u.to_string(),
                    v: v.to_string(),
                    m: *m,
                });
            }
            labels[iu][iv] = *m;
            labels[iv][iu] = *m;
            edge_list.push(Edge {
                u: iu,
                v: iv,
                m: *m,
            });
        }
        Ok(Self {
            names,
            index,
            edges: edge_list,
            labels,
        })
    }

    pub fn from_graph_file(file: &GraphFile) -> Result<Self> {
        let edges: Vec<(&str, &str, u64)> = file
            .edges
            .iter()
            .map(|e| (e.u.as_str(), e.v.as_str(), e.m))
            .collect();
        let vertices: Vec<&str> = file.vertices.iter().map(String::as_str).collect();
        Self::new(&vertices, &edges)
    }

    /// Parses the JSON graph document. Syntax errors carry line and column.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: GraphFile =
            serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))?;
        Self::from_graph_file(&file)
    }

    pub fn to_graph_file(&self) -> GraphFile {
        GraphFile {
            vertices: self.names.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeSpec {
                    u: self.names[e.u].clone(),
                    v: self.names[e.v].clone(),
                    m: e.m,
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_graph_file()).expect("graph files serialize")
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Label of `{u, v}`, or `None` if the pair is not an edge.
    #[inline]
    pub fn label(&self, u: usize, v: usize) -> Option<u64> {
        match self.labels[u][v] {
            0 => None,
            m => Some(m),
        }
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.labels[u][v] != 0
    }

    #[inline]
    pub(crate) fn commute(&self, u: usize, v: usize) -> bool {
        self.labels[u][v] == 2
    }

    pub fn all(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    pub fn subset<S: AsRef<str>>(&self, names: &[S]) -> Result<VertexSet> {
        names.iter().map(|n| self.index_of(n.as_ref())).collect()
    }

    pub fn subset_names(&self, set: &VertexSet) -> Vec<String> {
        set.iter().map(|i| self.names[i].clone()).collect()
    }

    /// The system induced on `set`, keeping canonical order.
    pub fn induced(&self, set: &VertexSet) -> Result<Self> {
        let vertices = self.subset_names(set);
        let edges: Vec<(String, String, u64)> = self
            .edges
            .iter()
            .filter(|e| set.contains(e.u) && set.contains(e.v))
            .map(|e| (self.names[e.u].clone(), self.names[e.v].clone(), e.m))
            .collect();
        Self::new(&vertices, &edges)
    }

    /// Returns the first triangle (in canonical order) with two or more edges
    /// labelled above 2.
    pub fn validate_eafc(&self) -> std::result::Result<(), [usize; 3]> {
        let n = self.vertex_count();
        for a in 0..n {
            for b in a + 1..n {
                let Some(ab) = self.label(a, b) else { continue };
                for c in b + 1..n {
                    let (Some(bc), Some(ac)) = (self.label(b, c), self.label(a, c)) else {
                        continue;
                    };
                    let big = [ab, bc, ac].iter().filter(|&&m| m > 2).count();
                    if big > 1 {
                        return Err([a, b, c]);
                    }
                }
            }
        }
        Ok(())
    }

    /// [`validate_eafc`](Self::validate_eafc) as an [`Error`].
    pub fn check_eafc(&self) -> Result<()> {
        self.validate_eafc().map_err(|[a, b, c]| {
            Error::NotEafc(
                self.names[a].clone(),
                self.names[b].clone(),
                self.names[c].clone(),
            )
        })
    }

    /// Same vertices, only the label-2 edges.
    pub fn gamma_le2(&self) -> Self {
        let mut out = self.clone();
        out.edges.retain(|e| e.m == 2);
        for row in &mut out.labels {
            for m in row.iter_mut() {
                if *m > 2 {
                    *m = 0;
                }
            }
        }
        out
    }

    pub fn link(&self, v: usize) -> VertexSet {
        (0..self.vertex_count())
            .filter(|&u| self.adjacent(u, v))
            .collect()
    }

    pub fn star(&self, v: usize) -> VertexSet {
        let mut s = self.link(v);
        s.insert(v);
        s
    }

    pub(crate) fn link_within(&self, set: &VertexSet, v: usize) -> VertexSet {
        set.iter().filter(|&u| self.adjacent(u, v)).collect()
    }

    pub fn is_complete_on(&self, set: &VertexSet) -> bool {
        let vs: Vec<usize> = set.iter().collect();
        vs.iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| self.adjacent(a, b)))
    }

    pub fn is_complete(&self) -> bool {
        self.is_complete_on(&self.all())
    }

    /// Connected components of the induced graph on `set`, ordered by their
    /// smallest vertex.
    pub(crate) fn components_of(&self, set: &VertexSet) -> Vec<VertexSet> {
        self.components_by(set, |a, b| self.adjacent(a, b))
    }

    fn components_by(
        &self,
        set: &VertexSet,
        joined: impl Fn(usize, usize) -> bool,
    ) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut parts = Vec::new();
        for start in set.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut part = VertexSet::singleton(start);
            seen.insert(start);
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for y in set.iter() {
                    if !seen.contains(y) && joined(x, y) {
                        seen.insert(y);
                        part.insert(y);
                        queue.push_back(y);
                    }
                }
            }
            parts.push(part);
        }
        parts
    }

    /// Finest splitting of `set` into mutually commuting parts: components of
    /// the graph joining every pair that is *not* a label-2 edge.
    pub(crate) fn direct_factor_partition_of(&self, set: &VertexSet) -> Vec<VertexSet> {
        self.components_by(set, |a, b| a != b && !self.commute(a, b))
    }

    pub fn direct_factor_partition(&self) -> Vec<VertexSet> {
        self.direct_factor_partition_of(&self.all())
    }

    pub fn is_chordal(&self) -> Chordality {
        chordality(self, &self.all())
    }

    /// Decides coherence: both `self` and `self.gamma_le2()` must be chordal.
    pub fn is_coherent(&self) -> Result<Coherence> {
        self.check_eafc()?;
        if let Chordality::NotChordal(cycle) = self.is_chordal() {
            return Ok(Coherence::Incoherent {
                graph: WitnessGraph::Gamma,
                cycle,
            });
        }
        if let Chordality::NotChordal(cycle) = self.gamma_le2().is_chordal() {
            return Ok(Coherence::Incoherent {
                graph: WitnessGraph::GammaLe2,
                cycle,
            });
        }
        Ok(Coherence::Coherent)
    }

    pub fn classify_group(&self) -> Result<GroupClass> {
        self.check_eafc()?;
        let right_angled_complete = self.is_complete() && self.edges.iter().all(|e| e.m == 2);
        Ok(if right_angled_complete {
            GroupClass::FreeAbelian(self.vertex_count())
        } else {
            GroupClass::Large
        })
    }
}

/// A chordless induced cycle on four or more vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleWitness(pub Vec<usize>);

impl CycleWitness {
    pub fn names(&self, sys: &ArtinSystem) -> Vec<String> {
        self.0.iter().map(|&i| sys.name(i).to_string()).collect()
    }

    /// Checks the witness against `sys`: consecutive vertices adjacent, no
    /// other pair adjacent, length at least 4.
    pub fn is_valid_in(&self, sys: &ArtinSystem) -> bool {
        let c = &self.0;
        let k = c.len();
        if k < 4 {
            return false;
        }
        let distinct: VertexSet = c.iter().copied().collect();
        if distinct.len() != k {
            return false;
        }
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if sys.adjacent(c[i], c[j]) != consecutive {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chordality {
    Chordal,
    NotChordal(CycleWitness),
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessGraph {
    Gamma,
    GammaLe2,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coherence {
    Coherent,
    Incoherent {
        graph: WitnessGraph,
        cycle: CycleWitness,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupClass {
    FreeAbelian(usize),
    Large,
}

/// Lexicographic breadth-first search on the induced graph on `set`.
/// Ties go to the smallest vertex index.
fn lex_bfs(sys: &ArtinSystem, set: &VertexSet) -> Vec<usize> {
    let verts: Vec<usize> = set.iter().collect();
    let n = verts.len();
    let mut labels: HashMap<usize, Vec<usize>> = verts.iter().map(|&v| (v, Vec::new())).collect();
    let mut visited = VertexSet::new();
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let next = verts
            .iter()
            .copied()
            .filter(|v| !visited.contains(*v))
            .fold(None::<usize>, |best, v| match best {
                Some(b) if labels[&b] >= labels[&v] => Some(b),
                _ => Some(v),
            })
            .expect("unvisited vertex remains");
        visited.insert(next);
        order.push(next);
        for &u in &verts {
            if !visited.contains(u) && sys.adjacent(u, next) {
                labels.get_mut(&u).unwrap().push(n - step);
            }
        }
    }
    order
}

/// Chordality of the induced graph on `set`, ignoring labels.
pub(crate) fn chordality(sys: &ArtinSystem, set: &VertexSet) -> Chordality {
    let visit = lex_bfs(sys, set);
    // elimination order is the reverse visit order
    let mut position = HashMap::new();
    for (i, &v) in visit.iter().rev().enumerate() {
        position.insert(v, i);
    }
    for &v in visit.iter().rev() {
        let later: Vec<usize> = set
            .iter()
            .filter(|&u| sys.adjacent(u, v) && position[&u] > position[&v])
            .collect();
        let Some(&parent) = later.iter().min_by_key(|u| position[*u]) else {
            continue;
        };
        if let Some(&w) = later
            .iter()
            .find(|&&w| w != parent && !sys.adjacent(parent, w))
        {
            let cycle = chordless_cycle_through(sys, set, v, parent, w)
                .or_else(|| any_chordless_cycle(sys, set))
                .expect("a failed elimination ordering implies a chordless cycle");
            return Chordality::NotChordal(CycleWitness(cycle));
        }
    }
    Chordality::Chordal
}

/// Shortest path from `u` to `w` avoiding `v` and every other neighbour of `v`,
/// closed up through `v`. Such a cycle is induced.
fn chordless_cycle_through(
    sys: &ArtinSystem,
    set: &VertexSet,
    v: usize,
    u: usize,
    w: usize,
) -> Option<Vec<usize>> {
    let allowed = |x: usize| x == u || x == w || (x != v && !sys.adjacent(x, v));
    let mut prev: HashMap<usize, usize> = HashMap::new();
    let mut queue = VecDeque::from([u]);
    let mut seen = VertexSet::singleton(u);
    while let Some(x) = queue.pop_front() {
        if x == w {
            let mut path = vec![w];
            let mut cur = w;
            while cur != u {
                cur = prev[&cur];
                path.push(cur);
            }
            path.reverse();
            let mut cycle = vec![v];
            cycle.extend(path);
            return Some(cycle);
        }
        for y in set.iter() {
            if !seen.contains(y) && allowed(y) && sys.adjacent(x, y) {
                // u and w are not adjacent, so the path has an interior
                if x == u && y == w {
                    continue;
                }
                seen.insert(y);
                prev.insert(y, x);
                queue.push_back(y);
            }
        }
    }
    None
}

fn any_chordless_cycle(sys: &ArtinSystem, set: &VertexSet) -> Option<Vec<usize>> {
    for v in set.iter() {
        let nbrs: Vec<usize> = set.iter().filter(|&u| sys.adjacent(u, v)).collect();
        for (i, &u) in nbrs.iter().enumerate() {
            for &w in &nbrs[i + 1..] {
                if !sys.adjacent(u, w) {
                    if let Some(c) = chordless_cycle_through(sys, set, v, u, w) {
                        return Some(c);
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(v: &[&str], e: &[(&str, &str, u64)]) -> ArtinSystem {
        ArtinSystem::new(v, e).unwrap()
    }

    fn square(m: u64) -> ArtinSystem {
        sys(
            &["a", "b", "c", "d"],
            &[("a", "b", m), ("b", "c", m), ("c", "d", m), ("d", "a", m)],
        )
    }

    #[test]
    fn structural_errors() {
        assert_eq!(
            ArtinSystem::new::<&str>(&[], &[]).unwrap_err(),
            Error::EmptyVertexSet
        );
        assert!(matches!(
            ArtinSystem::new(&["a", "b"], &[("a", "b", 3)]),
            Err(Error::BadLabel { m: 3, .. })
        ));
        assert!(matches!(
            ArtinSystem::new(&["a", "b"], &[("a", "b", 0)]),
            Err(Error::BadLabel { .. })
        ));
        assert_eq!(
            ArtinSystem::new(&["a"], &[("a", "a", 2)]).unwrap_err(),
            Error::Loop("a".into())
        );
        assert!(matches!(
            ArtinSystem::new(&["a", "b"], &[("a", "b", 2), ("b", "a", 4)]),
            Err(Error::DuplicateEdge(..))
        ));
        assert!(matches!(
            ArtinSystem::new(&["a", "a"], &[]),
            Err(Error::DuplicateVertex(_))
        ));
        assert!(matches!(
            ArtinSystem::new(&["1a"], &[]),
            Err(Error::InvalidVertexName(_))
        ));
        assert!(matches!(
            ArtinSystem::new(&["a"], &[("a", "z", 2)]),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn json_rejects_unknown_fields_and_reports_position() {
        let err = ArtinSystem::from_json(r#"{"vertices":["a"],"edges":[],"extra":1}"#).unwrap_err();
        assert!(matches!(err, Error::Input(msg) if msg.contains("unknown field")));
        let err = ArtinSystem::from_json("{\n \"vertices\": [\"a\",]\n}").unwrap_err();
        assert!(matches!(err, Error::Input(msg) if msg.contains("line 2")));
        let s =
            ArtinSystem::from_json(r#"{"vertices":["a","b"],"edges":[{"u":"a","v":"b","m":4}]}"#)
                .unwrap();
        assert_eq!(ArtinSystem::from_json(&s.to_json()).unwrap(), s);
    }

    #[test]
    fn eafc_examples() {
        let ok = sys(
            &["a", "b", "c"],
            &[("a", "b", 2), ("b", "c", 2), ("a", "c", 4)],
        );
        assert_eq!(ok.validate_eafc(), Ok(()));
        assert_eq!(sys(&["a"], &[]).validate_eafc(), Ok(()));
        let bad = sys(
            &["a", "b", "c"],
            &[("a", "b", 4), ("b", "c", 4), ("a", "c", 2)],
        );
        assert_eq!(bad.validate_eafc(), Err([0, 1, 2]));
        assert!(matches!(bad.check_eafc(), Err(Error::NotEafc(..))));
    }

    #[test]
    fn gamma_le2_examples() {
        let e = sys(&["a", "b"], &[("a", "b", 4)]).gamma_le2();
        assert!(e.edges().is_empty());
        assert_eq!(e.vertex_count(), 2);
        assert_eq!(square(2).gamma_le2(), square(2));
        let mut with_chord = square(2).to_graph_file();
        with_chord.edges.push(EdgeSpec {
            u: "a".into(),
            v: "c".into(),
            m: 4,
        });
        let with_chord = ArtinSystem::from_graph_file(&with_chord).unwrap();
        assert_eq!(with_chord.gamma_le2(), square(2));
        assert_eq!(with_chord.gamma_le2().gamma_le2(), with_chord.gamma_le2());
    }

    #[test]
    fn chordality_examples() {
        match square(2).is_chordal() {
            Chordality::NotChordal(w) => {
                assert_eq!(w.0.len(), 4);
                assert!(w.is_valid_in(&square(2)));
            }
            Chordality::Chordal => panic!("4-cycle is not chordal"),
        }
        let tree = sys(
            &["a", "b", "c", "d", "e"],
            &[("a", "b", 4), ("a", "c", 2), ("c", "d", 6), ("c", "e", 2)],
        );
        assert!(tree.is_chordal().is_chordal());
        let chorded = sys(
            &["a", "b", "c", "d"],
            &[
                ("a", "b", 2),
                ("b", "c", 2),
                ("c", "d", 2),
                ("d", "a", 2),
                ("a", "c", 2),
            ],
        );
        assert!(chorded.is_chordal().is_chordal());
    }

    #[test]
    fn long_cycle_witness() {
        let names = ["p", "q", "r", "s", "t", "u"];
        let edges: Vec<_> = (0..6).map(|i| (names[i], names[(i + 1) % 6], 2)).collect();
        let c6 = sys(&names, &edges);
        let Chordality::NotChordal(w) = c6.is_chordal() else {
            panic!()
        };
        assert_eq!(w.0.len(), 6);
        assert!(w.is_valid_in(&c6));
    }

    #[test]
    fn coherence_examples() {
        let path = sys(&["a", "b", "c"], &[("a", "b", 4), ("b", "c", 6)]);
        assert_eq!(path.is_coherent().unwrap(), Coherence::Coherent);
        assert!(matches!(
            square(2).is_coherent().unwrap(),
            Coherence::Incoherent {
                graph: WitnessGraph::Gamma,
                ..
            }
        ));
        let chord = sys(
            &["a", "b", "c", "d"],
            &[
                ("a", "b", 2),
                ("b", "c", 2),
                ("c", "d", 2),
                ("d", "a", 2),
                ("a", "c", 4),
            ],
        );
        assert!(matches!(
            chord.is_coherent().unwrap(),
            Coherence::Incoherent {
                graph: WitnessGraph::GammaLe2,
                ..
            }
        ));
        let bad = sys(
            &["a", "b", "c"],
            &[("a", "b", 4), ("b", "c", 4), ("a", "c", 2)],
        );
        assert!(bad.is_coherent().is_err());
    }

    #[test]
    fn link_and_star() {
        let iso = sys(&["v", "w"], &[]);
        assert!(iso.link(0).is_empty());
        assert_eq!(iso.star(0), VertexSet::singleton(0));
        let e = sys(&["a", "b"], &[("a", "b", 2)]);
        assert_eq!(e.link(0), VertexSet::singleton(1));
        assert_eq!(square(2).link(0), [1, 3].into_iter().collect());
        assert!(matches!(
            square(2).index_of("z"),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn direct_factors() {
        let z2 = sys(&["a", "b"], &[("a", "b", 2)]);
        assert_eq!(z2.direct_factor_partition().len(), 2);
        let d4 = sys(&["a", "b"], &[("a", "b", 4)]);
        assert_eq!(d4.direct_factor_partition(), vec![VertexSet::full(2)]);
        let k3 = sys(
            &["a", "b", "c"],
            &[("a", "b", 4), ("a", "c", 2), ("b", "c", 2)],
        );
        assert_eq!(
            k3.direct_factor_partition(),
            vec![[0, 1].into_iter().collect(), VertexSet::singleton(2)]
        );
    }

    #[test]
    fn classification() {
        let z3 = sys(
            &["a", "b", "c"],
            &[("a", "b", 2), ("a", "c", 2), ("b", "c", 2)],
        );
        assert_eq!(z3.classify_group().unwrap(), GroupClass::FreeAbelian(3));
        assert_eq!(
            sys(&["a", "b"], &[]).classify_group().unwrap(),
            GroupClass::Large
        );
        assert_eq!(
            sys(&["a", "b"], &[("a", "b", 4)]).classify_group().unwrap(),
            GroupClass::Large
        );
    }
}
