//! Features: boolean predicates on subsets of `V ∪ E`, each paired with an
//! enumerator listing every set that satisfies the predicate on a snapshot.

mod eulerian;
mod hub;
mod independence;
mod matching;

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, GraphKind, Snapshot, VertexId, WeightedGraph};

pub use hub::{Comparison, HubMeasure, HubOptions, Neighbourhood};

/// Default cap on the number of sets an enumerator may produce for one snapshot.
pub const DEFAULT_MAX_SETS: usize = 1_000_000;

/// Environment variable overriding [`DEFAULT_MAX_SETS`].
pub const MAX_SETS_ENV: &str = "GRAPE_MAX_SETS";

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct EnumLimits {
    pub max_sets: usize,
}

impl Default for EnumLimits {
    fn default() -> Self {
        EnumLimits {
            max_sets: DEFAULT_MAX_SETS,
        }
    }
}

impl EnumLimits {
    pub fn new(max_sets: usize) -> Self {
        EnumLimits { max_sets }
    }

    /// Default limits, overridden by `GRAPE_MAX_SETS` when it parses.
    pub fn from_env() -> Self {
        std::env::var(MAX_SETS_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .map(EnumLimits::new)
            .unwrap_or_default()
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Vertex(VertexId),
    Edge(EdgeId),
}

/// A subset of `V ∪ E` in canonical (sorted, deduplicated) form, so equality
/// and hashing identify "the same set" across filtration levels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FeatureSet(Vec<Element>);

impl FeatureSet {
    pub fn new(mut elements: Vec<Element>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        FeatureSet(elements)
    }

    pub fn from_vertices(vs: impl IntoIterator<Item = VertexId>) -> Self {
        Self::new(vs.into_iter().map(Element::Vertex).collect())
    }

    pub fn from_edges(es: impl IntoIterator<Item = EdgeId>) -> Self {
        Self::new(es.into_iter().map(Element::Edge).collect())
    }

    pub fn elements(&self) -> &[Element] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().filter_map(|e| match e {
            Element::Vertex(v) => Some(*v),
            Element::Edge(_) => None,
        })
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.0.iter().filter_map(|e| match e {
            Element::Edge(id) => Some(*id),
            Element::Vertex(_) => None,
        })
    }

    pub fn contains(&self, e: Element) -> bool {
        self.0.binary_search(&e).is_ok()
    }

    pub fn is_subset(&self, other: &FeatureSet) -> bool {
        self.0.iter().all(|&e| other.contains(e))
    }

    /// All elements exist in `s`.
    pub fn lies_in(&self, s: &Snapshot<'_>) -> bool {
        self.0.iter().all(|&e| match e {
            Element::Vertex(v) => s.contains_vertex(v),
            Element::Edge(id) => s.contains_edge(id),
        })
    }

    /// Label tokens: vertex labels, and `a--b` / `a->b` for edges.
    pub fn labels(&self, g: &WeightedGraph) -> Vec<String> {
        self.0
            .iter()
            .map(|&e| match e {
                Element::Vertex(v) => g.label(v).to_owned(),
                Element::Edge(id) => g.edge_label(id),
            })
            .collect()
    }

    /// Resolves label tokens produced by [`FeatureSet::labels`].
    pub fn from_labels(g: &WeightedGraph, tokens: &[String]) -> Option<Self> {
        let mut out = Vec::with_capacity(tokens.len());
        for t in tokens {
            if let Some(v) = g.vertex_by_label(t) {
                out.push(Element::Vertex(v));
            } else {
                out.push(Element::Edge(g.edge_by_label(t)?));
            }
        }
        Some(Self::new(out))
    }
}

impl fmt::Display for FeatureSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            match e {
                Element::Vertex(v) => write!(f, "{v}")?,
                Element::Edge(id) => write!(f, "{id}")?,
            }
        }
        write!(f, "}}")
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum FeatureKind {
    VertexSet,
    EdgeSet,
    Mixed,
}

/// Collects enumerated sets, failing once the cap is exceeded.
pub(crate) struct Collector<'a> {
    feature: &'a str,
    cap: usize,
    sets: Vec<FeatureSet>,
}

impl<'a> Collector<'a> {
    pub(crate) fn new(feature: &'a str, limits: EnumLimits) -> Self {
        Collector {
            feature,
            cap: limits.max_sets,
            sets: Vec::new(),
        }
    }

    pub(crate) fn push(&mut self, set: FeatureSet) -> Result<()> {
        if self.sets.len() >= self.cap {
            return Err(self.limit_error());
        }
        self.sets.push(set);
        Ok(())
    }

    pub(crate) fn limit_error(&self) -> Error {
        Error::ResourceLimit {
            feature: self.feature.to_owned(),
            cap: self.cap,
        }
    }

    pub(crate) fn finish(mut self) -> Vec<FeatureSet> {
        self.sets.sort_unstable();
        self.sets
    }
}

/// A feature `F : 2^(V ∪ E) -> {true, false}` with an exhaustive enumerator.
pub trait Feature: Send + Sync {
    fn name(&self) -> &str;

    fn kind(&self) -> FeatureKind;

    /// Graph kind this feature is defined on.
    fn graph_kind(&self) -> GraphKind;

    /// Declared monotone (hereditary and closed under passing to subgraphs).
    fn is_monotone(&self) -> bool;

    /// Every F-set of `s`, each exactly once, sorted canonically.
    fn enumerate(&self, s: &Snapshot<'_>, limits: EnumLimits) -> Result<Vec<FeatureSet>>;

    /// Direct evaluation of the predicate on `set` in `s`.
    fn holds(&self, s: &Snapshot<'_>, set: &FeatureSet) -> bool;
}

/// Checks the graph kind, then enumerates.
pub fn enumerate_fsets(feature: &dyn Feature, s: &Snapshot<'_>, limits: EnumLimits) -> Result<Vec<FeatureSet>> {
    check_graph_kind(feature, s.graph())?;
    feature.enumerate(s, limits)
}

pub fn check_graph_kind(feature: &dyn Feature, g: &WeightedGraph) -> Result<()> {
    if feature.graph_kind() != g.kind() {
        return Err(Error::GraphKindMismatch {
            feature: feature.name().to_owned(),
            expected: feature.graph_kind().name(),
        });
    }
    Ok(())
}

/// The built-in features, addressable by registry name.
#[derive(Clone, Debug, PartialEq)]
pub enum BuiltinFeature {
    Hub(HubOptions),
    Eulerian,
    Independent,
    MaxIndependent,
    Matching,
    MaxMatching,
    Kernel,
}

impl BuiltinFeature {
    pub const NAMES: [&'static str; 9] = [
        "hub",
        "whub",
        "eulerian",
        "independent",
        "max-independent",
        "matching",
        "max-matching",
        "dhub",
        "kernel",
    ];

    pub fn from_name(name: &str) -> Result<Self> {
        Ok(match name {
            "hub" => BuiltinFeature::Hub(HubOptions::degree()),
            "whub" => BuiltinFeature::Hub(HubOptions::weighted_degree()),
            "dhub" => BuiltinFeature::Hub(HubOptions::out_degree()),
            "eulerian" => BuiltinFeature::Eulerian,
            "independent" => BuiltinFeature::Independent,
            "max-independent" => BuiltinFeature::MaxIndependent,
            "matching" => BuiltinFeature::Matching,
            "max-matching" => BuiltinFeature::MaxMatching,
            "kernel" => BuiltinFeature::Kernel,
            other => return Err(Error::UnknownFeature(other.to_owned())),
        })
    }

    pub fn all() -> Vec<Self> {
        Self::NAMES.iter().map(|n| Self::from_name(n).unwrap()).collect()
    }

    pub fn is_hub(&self) -> bool {
        matches!(self, BuiltinFeature::Hub(_))
    }
}

impl Feature for BuiltinFeature {
    fn name(&self) -> &str {
        match self {
            BuiltinFeature::Hub(o) => o.measure.name(),
            BuiltinFeature::Eulerian => "eulerian",
            BuiltinFeature::Independent => "independent",
            BuiltinFeature::MaxIndependent => "max-independent",
            BuiltinFeature::Matching => "matching",
            BuiltinFeature::MaxMatching => "max-matching",
            BuiltinFeature::Kernel => "kernel",
        }
    }

    fn kind(&self) -> FeatureKind {
        match self {
            BuiltinFeature::Matching | BuiltinFeature::MaxMatching => FeatureKind::EdgeSet,
            _ => FeatureKind::VertexSet,
        }
    }

    fn graph_kind(&self) -> GraphKind {
        match self {
            BuiltinFeature::Hub(o) if o.measure == HubMeasure::OutDegree => GraphKind::Directed,
            BuiltinFeature::Kernel => GraphKind::Directed,
            _ => GraphKind::Undirected,
        }
    }

    fn is_monotone(&self) -> bool {
        matches!(self, BuiltinFeature::Independent | BuiltinFeature::Matching)
    }

    fn enumerate(&self, s: &Snapshot<'_>, limits: EnumLimits) -> Result<Vec<FeatureSet>> {
        let mut out = Collector::new(self.name(), limits);
        match self {
            BuiltinFeature::Hub(o) => hub::enumerate(o, s, &mut out)?,
            BuiltinFeature::Eulerian => eulerian::enumerate(s, &mut out)?,
            BuiltinFeature::Independent => independence::enumerate_independent(s, &mut out)?,
            BuiltinFeature::MaxIndependent => independence::enumerate_maximal(s, &mut out, |_| true)?,
            BuiltinFeature::Kernel => independence::enumerate_maximal(s, &mut out, |x| independence::absorbs(s, x))?,
            BuiltinFeature::Matching => matching::enumerate_matchings(s, &mut out)?,
            BuiltinFeature::MaxMatching => matching::enumerate_maximal(s, &mut out)?,
        }
        Ok(out.finish())
    }

    fn holds(&self, s: &Snapshot<'_>, set: &FeatureSet) -> bool {
        if set.is_empty() || !set.lies_in(s) {
            return false;
        }
        match self {
            BuiltinFeature::Hub(o) => hub::holds(o, s, set),
            BuiltinFeature::Eulerian => eulerian::holds(s, set),
            BuiltinFeature::Independent => independence::is_independent(s, set),
            BuiltinFeature::MaxIndependent => independence::is_maximal_independent(s, set),
            BuiltinFeature::Kernel => independence::is_kernel(s, set),
            BuiltinFeature::Matching => matching::is_matching(s, set),
            BuiltinFeature::MaxMatching => matching::is_maximal_matching(s, set),
        }
    }
}
