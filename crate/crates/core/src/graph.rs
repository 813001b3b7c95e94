//! Weighted simple graphs and digraphs, their sublevel filtrations, and
//! level snapshots.
//!
//! A filtering function lives on edges only. A vertex enters the filtration
//! with its lightest incident edge, so every snapshot is the subgraph induced
//! by an edge set and never contains an isolated vertex.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub u32);

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl EdgeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum GraphKind {
    Undirected,
    Directed,
}

impl GraphKind {
    pub fn name(self) -> &'static str {
        match self {
            GraphKind::Undirected => "undirected",
            GraphKind::Directed => "directed",
        }
    }
}

/// An edge (or arc, for digraphs: `source` is the tail, `target` the head).
#[derive(Clone, Debug, PartialEq)]
pub struct Edge {
    pub id: EdgeId,
    pub source: VertexId,
    pub target: VertexId,
    pub weight: f64,
}

impl Edge {
    pub fn other(&self, v: VertexId) -> VertexId {
        if self.source == v {
            self.target
        } else {
            self.source
        }
    }

    pub fn touches(&self, v: VertexId) -> bool {
        self.source == v || self.target == v
    }
}

/// A simple weighted graph or digraph. Immutable once built.
#[derive(Clone, Debug)]
pub struct WeightedGraph {
    kind: GraphKind,
    labels: Vec<String>,
    label_index: HashMap<String, VertexId>,
    edges: Vec<Edge>,
}

/// Incremental constructor enforcing simplicity and finite weights.
#[derive(Debug)]
pub struct GraphBuilder {
    kind: GraphKind,
    labels: Vec<String>,
    label_index: HashMap<String, VertexId>,
    edges: Vec<Edge>,
    pairs: HashSet<(VertexId, VertexId)>,
}

impl GraphBuilder {
    pub fn new(kind: GraphKind) -> Self {
        GraphBuilder {
            kind,
            labels: Vec::new(),
            label_index: HashMap::new(),
            edges: Vec::new(),
            pairs: HashSet::new(),
        }
    }

    /// Returns the id of `label`, creating the vertex on first use.
    pub fn vertex(&mut self, label: &str) -> VertexId {
        if let Some(&v) = self.label_index.get(label) {
            return v;
        }
        let v = VertexId(self.labels.len() as u32);
        self.labels.push(label.to_owned());
        self.label_index.insert(label.to_owned(), v);
        v
    }

    pub fn add_edge(&mut self, source: &str, target: &str, weight: f64) -> Result<EdgeId> {
        if source == target {
            return Err(Error::SelfLoop(source.to_owned()));
        }
        if !weight.is_finite() {
            return Err(Error::NonFiniteWeight {
                source_label: source.to_owned(),
                target: target.to_owned(),
                weight,
            });
        }
        let s = self.vertex(source);
        let t = self.vertex(target);
        let key = match self.kind {
            GraphKind::Directed => (s, t),
            GraphKind::Undirected => (s.min(t), s.max(t)),
        };
        if !self.pairs.insert(key) {
            return Err(Error::DuplicateEdge {
                source_label: source.to_owned(),
                target: target.to_owned(),
            });
        }
        let id = EdgeId(self.edges.len() as u32);
        self.edges.push(Edge {
            id,
            source: s,
            target: t,
            weight,
        });
        Ok(id)
    }

    pub fn build(self) -> WeightedGraph {
        WeightedGraph {
            kind: self.kind,
            labels: self.labels,
            label_index: self.label_index,
            edges: self.edges,
        }
    }
}

impl WeightedGraph {
    /// Builds a graph on vertices labelled `"0"..n` from index triples.
    pub fn from_edges(kind: GraphKind, vertex_count: usize, edges: &[(usize, usize, f64)]) -> Result<Self> {
        let mut b = GraphBuilder::new(kind);
        for i in 0..vertex_count {
            b.vertex(&i.to_string());
        }
        for &(s, t, w) in edges {
            if s >= vertex_count {
                return Err(Error::UnknownVertex(s));
            }
            if t >= vertex_count {
                return Err(Error::UnknownVertex(t));
            }
            b.add_edge(&s.to_string(), &t.to_string(), w)?;
        }
        Ok(b.build())
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn is_directed(&self) -> bool {
        self.kind == GraphKind::Directed
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.labels.len() as u32).map(VertexId)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id.index()]
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v.index()]
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        self.label_index.get(label).copied()
    }

    pub fn weights(&self) -> Vec<f64> {
        self.edges.iter().map(|e| e.weight).collect()
    }

    /// Human-readable token for an edge: `a--b`, or `a->b` for arcs.
    pub fn edge_label(&self, id: EdgeId) -> String {
        let e = self.edge(id);
        let sep = match self.kind {
            GraphKind::Undirected => "--",
            GraphKind::Directed => "->",
        };
        format!("{}{}{}", self.label(e.source), sep, self.label(e.target))
    }

    pub fn edge_by_label(&self, token: &str) -> Option<EdgeId> {
        let sep = match self.kind {
            GraphKind::Undirected => "--",
            GraphKind::Directed => "->",
        };
        let (s, t) = token.split_once(sep)?;
        let s = self.vertex_by_label(s)?;
        let t = self.vertex_by_label(t)?;
        self.edges
            .iter()
            .find(|e| match self.kind {
                GraphKind::Directed => e.source == s && e.target == t,
                GraphKind::Undirected => (e.source == s && e.target == t) || (e.source == t && e.target == s),
            })
            .map(|e| e.id)
    }

    /// Same topology with a new weight per edge (indexed by edge id).
    pub fn with_weights(&self, weights: &[f64]) -> Result<Self> {
        if weights.len() != self.edges.len() {
            return Err(Error::Transform(format!(
                "expected {} weights, got {}",
                self.edges.len(),
                weights.len()
            )));
        }
        let mut g = self.clone();
        for (e, &w) in g.edges.iter_mut().zip(weights) {
            if !w.is_finite() {
                return Err(Error::NonFiniteWeight {
                    source_label: self.labels[e.source.index()].clone(),
                    target: self.labels[e.target.index()].clone(),
                    weight: w,
                });
            }
            e.weight = w;
        }
        Ok(g)
    }

    /// Level at which `v` enters the filtration: its minimum incident
    /// weight, or `+inf` when it has no incident edge.
    pub fn vertex_entry_level(&self, v: VertexId) -> Result<f64> {
        if v.index() >= self.labels.len() {
            return Err(Error::UnknownVertex(v.index()));
        }
        Ok(self
            .edges
            .iter()
            .filter(|e| e.touches(v))
            .map(|e| e.weight)
            .fold(f64::INFINITY, f64::min))
    }
}

/// Sorted distinct edge weights of a graph, plus access to the snapshot at
/// any level.
#[derive(Clone, Debug)]
pub struct Filtration<'g> {
    graph: &'g WeightedGraph,
    levels: Vec<f64>,
}

impl<'g> Filtration<'g> {
    pub fn new(graph: &'g WeightedGraph) -> Self {
        let mut levels = graph.weights();
        levels.sort_by(f64::total_cmp);
        levels.dedup();
        Filtration { graph, levels }
    }

    pub fn graph(&self) -> &'g WeightedGraph {
        self.graph
    }

    pub fn critical_levels(&self) -> &[f64] {
        &self.levels
    }

    /// Index of the largest critical level `<= u`.
    pub fn level_index(&self, u: f64) -> Option<usize> {
        let n = self.levels.partition_point(|&w| w <= u);
        n.checked_sub(1)
    }

    pub fn snapshot_at(&self, u: f64) -> Snapshot<'g> {
        Snapshot::new(self.graph, u)
    }

    pub fn snapshot_at_index(&self, i: usize) -> Snapshot<'g> {
        Snapshot::new(self.graph, self.levels[i])
    }
}

/// The subgraph induced by the edges of weight `<= level`.
#[derive(Clone, Debug)]
pub struct Snapshot<'g> {
    graph: &'g WeightedGraph,
    level: f64,
    edges: Vec<EdgeId>,
    edge_present: Vec<bool>,
    vertices: Vec<VertexId>,
    vertex_present: Vec<bool>,
    incident: Vec<Vec<EdgeId>>,
    neighbours: Vec<Vec<VertexId>>,
}

impl<'g> Snapshot<'g> {
    pub fn new(graph: &'g WeightedGraph, level: f64) -> Self {
        let n = graph.vertex_count();
        let mut edge_present = vec![false; graph.edge_count()];
        let mut vertex_present = vec![false; n];
        let mut incident = vec![Vec::new(); n];
        let mut neighbours: Vec<Vec<VertexId>> = vec![Vec::new(); n];
        let mut edges = Vec::new();
        for e in graph.edges() {
            if e.weight <= level {
                edge_present[e.id.index()] = true;
                edges.push(e.id);
                for (a, b) in [(e.source, e.target), (e.target, e.source)] {
                    vertex_present[a.index()] = true;
                    incident[a.index()].push(e.id);
                    neighbours[a.index()].push(b);
                }
            }
        }
        for list in &mut neighbours {
            list.sort_unstable();
            list.dedup();
        }
        let vertices = graph.vertices().filter(|v| vertex_present[v.index()]).collect();
        Snapshot {
            graph,
            level,
            edges,
            edge_present,
            vertices,
            vertex_present,
            incident,
            neighbours,
        }
    }

    pub fn graph(&self) -> &'g WeightedGraph {
        self.graph
    }

    pub fn level(&self) -> f64 {
        self.level
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertex_present.get(v.index()).copied().unwrap_or(false)
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edge_present.get(e.index()).copied().unwrap_or(false)
    }

    pub fn incident_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.incident[v.index()]
    }

    /// Adjacent vertices in the underlying undirected graph.
    pub fn neighbours(&self, v: VertexId) -> &[VertexId] {
        &self.neighbours[v.index()]
    }

    pub fn adjacent(&self, a: VertexId, b: VertexId) -> bool {
        self.neighbours[a.index()].binary_search(&b).is_ok()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incident[v.index()].len()
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.incident[v.index()]
            .iter()
            .filter(|&&e| self.graph.edge(e).source == v)
            .count()
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.incident[v.index()]
            .iter()
            .filter(|&&e| self.graph.edge(e).target == v)
            .count()
    }

    pub fn out_neighbours(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.incident[v.index()]
            .iter()
            .map(|&e| self.graph.edge(e))
            .filter(move |e| e.source == v)
            .map(|e| e.target)
    }

    pub fn in_neighbours(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.incident[v.index()]
            .iter()
            .map(|&e| self.graph.edge(e))
            .filter(move |e| e.target == v)
            .map(|e| e.source)
    }

    pub fn weighted_degree(&self, v: VertexId) -> f64 {
        self.incident[v.index()]
            .iter()
            .map(|&e| self.graph.edge(e).weight)
            .sum()
    }

    pub fn has_arc(&self, tail: VertexId, head: VertexId) -> bool {
        self.out_neighbours(tail).any(|w| w == head)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path() -> WeightedGraph {
        WeightedGraph::from_edges(GraphKind::Undirected, 3, &[(0, 1, 1.0), (1, 2, 3.0)]).unwrap()
    }

    #[test]
    fn critical_levels_collapse_duplicates() {
        let g = WeightedGraph::from_edges(GraphKind::Undirected, 4, &[(0, 1, 7.0), (1, 2, 2.0), (2, 3, 2.0)]).unwrap();
        assert_eq!(Filtration::new(&g).critical_levels(), &[2.0, 7.0]);
        let g = WeightedGraph::from_edges(GraphKind::Undirected, 2, &[(0, 1, 5.0)]).unwrap();
        assert_eq!(Filtration::new(&g).critical_levels(), &[5.0]);
    }

    #[test]
    fn empty_edge_set_has_no_levels() {
        let g = WeightedGraph::from_edges(GraphKind::Undirected, 3, &[]).unwrap();
        let f = Filtration::new(&g);
        assert!(f.critical_levels().is_empty());
        assert!(f.snapshot_at(100.0).is_empty());
    }

    #[test]
    fn snapshot_is_induced_by_edge_set() {
        let g = path();
        let f = Filtration::new(&g);
        assert!(f.snapshot_at(0.5).is_empty());
        assert!(f.snapshot_at(0.5).vertices().is_empty());
        let s = f.snapshot_at(2.0);
        assert_eq!(s.edges(), &[EdgeId(0)]);
        assert_eq!(s.vertices(), &[VertexId(0), VertexId(1)]);
        let full = f.snapshot_at(10.0);
        assert_eq!(full.vertices().len(), 3);
    }

    #[test]
    fn globally_isolated_vertex_never_appears() {
        let g = WeightedGraph::from_edges(GraphKind::Undirected, 3, &[(0, 1, 1.0)]).unwrap();
        let s = Filtration::new(&g).snapshot_at(5.0);
        assert!(!s.contains_vertex(VertexId(2)));
    }

    #[test]
    fn entry_levels() {
        let g = WeightedGraph::from_edges(GraphKind::Undirected, 4, &[(0, 1, 4.0), (0, 2, 9.0)]).unwrap();
        assert_eq!(g.vertex_entry_level(VertexId(0)).unwrap(), 4.0);
        assert_eq!(g.vertex_entry_level(VertexId(2)).unwrap(), 9.0);
        assert_eq!(g.vertex_entry_level(VertexId(3)).unwrap(), f64::INFINITY);
        assert!(matches!(
            g.vertex_entry_level(VertexId(9)),
            Err(Error::UnknownVertex(9))
        ));
    }

    #[test]
    fn rejects_loops_and_parallel_edges() {
        let mut b = GraphBuilder::new(GraphKind::Undirected);
        b.add_edge("a", "b", 1.0).unwrap();
        assert!(matches!(b.add_edge("b", "a", 2.0), Err(Error::DuplicateEdge { .. })));
        assert!(matches!(b.add_edge("c", "c", 2.0), Err(Error::SelfLoop(_))));
        assert!(matches!(
            b.add_edge("c", "d", f64::NAN),
            Err(Error::NonFiniteWeight { .. })
        ));

        let mut d = GraphBuilder::new(GraphKind::Directed);
        d.add_edge("a", "b", 1.0).unwrap();
        d.add_edge("b", "a", 1.0).unwrap();
        assert!(matches!(d.add_edge("a", "b", 3.0), Err(Error::DuplicateEdge { .. })));
    }

    #[test]
    fn level_index_finds_largest_critical_below() {
        let g = path();
        let f = Filtration::new(&g);
        assert_eq!(f.level_index(0.0), None);
        assert_eq!(f.level_index(1.0), Some(0));
        assert_eq!(f.level_index(2.9), Some(0));
        assert_eq!(f.level_index(3.0), Some(1));
    }

    #[test]
    fn edge_labels_round_trip() {
        let mut d = GraphBuilder::new(GraphKind::Directed);
        let e = d.add_edge("x", "y", 1.0).unwrap();
        let g = d.build();
        assert_eq!(g.edge_label(e), "x->y");
        assert_eq!(g.edge_by_label("x->y"), Some(e));
        assert_eq!(g.edge_by_label("y->x"), None);
    }
}
