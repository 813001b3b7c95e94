//! Local prevalence features: a singleton `{v}` whose measure beats that of
//! every neighbour in the snapshot.

use crate::error::Result;
use crate::graph::{Snapshot, VertexId};

use super::{Collector, FeatureSet};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum HubMeasure {
    /// Number of incident edges.
    Degree,
    /// Sum of incident edge weights present in the snapshot.
    WeightedDegree,
    /// Number of outgoing arcs (digraphs).
    OutDegree,
}

impl HubMeasure {
    pub fn name(self) -> &'static str {
        match self {
            HubMeasure::Degree => "hub",
            HubMeasure::WeightedDegree => "whub",
            HubMeasure::OutDegree => "dhub",
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Comparison {
    /// `measure(v) > measure(u)` for every neighbour `u`.
    Strict,
    /// `measure(v) >= measure(u)` for every neighbour `u`.
    NonStrict,
}

/// Which vertices count as neighbours of `v` in a digraph.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Neighbourhood {
    /// Adjacent in the underlying undirected graph.
    All,
    /// Heads of arcs leaving `v`.
    Out,
    /// Tails of arcs entering `v`.
    In,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct HubOptions {
    pub measure: HubMeasure,
    pub comparison: Comparison,
    pub neighbourhood: Neighbourhood,
}

impl HubOptions {
    pub fn degree() -> Self {
        HubOptions {
            measure: HubMeasure::Degree,
            comparison: Comparison::Strict,
            neighbourhood: Neighbourhood::All,
        }
    }

    pub fn weighted_degree() -> Self {
        HubOptions {
            measure: HubMeasure::WeightedDegree,
            ..Self::degree()
        }
    }

    /// Outdegree hubs compare with `>=`: on weighted 3-tournaments this is
    /// the reading under which steady and ranging functions coincide.
    pub fn out_degree() -> Self {
        HubOptions {
            measure: HubMeasure::OutDegree,
            comparison: Comparison::NonStrict,
            neighbourhood: Neighbourhood::All,
        }
    }

    pub fn with_comparison(self, comparison: Comparison) -> Self {
        HubOptions { comparison, ..self }
    }

    pub fn with_neighbourhood(self, neighbourhood: Neighbourhood) -> Self {
        HubOptions { neighbourhood, ..self }
    }
}

fn measure(o: &HubOptions, s: &Snapshot<'_>, v: VertexId) -> f64 {
    match o.measure {
        HubMeasure::Degree => s.degree(v) as f64,
        HubMeasure::WeightedDegree => s.weighted_degree(v),
        HubMeasure::OutDegree => s.out_degree(v) as f64,
    }
}

fn is_hub(o: &HubOptions, s: &Snapshot<'_>, v: VertexId) -> bool {
    let mv = measure(o, s, v);
    let beats = |u: VertexId| {
        let mu = measure(o, s, u);
        match o.comparison {
            Comparison::Strict => mv > mu,
            Comparison::NonStrict => mv >= mu,
        }
    };
    match o.neighbourhood {
        Neighbourhood::All => s.neighbours(v).iter().all(|&u| beats(u)),
        Neighbourhood::Out => s.out_neighbours(v).all(beats),
        Neighbourhood::In => s.in_neighbours(v).all(beats),
    }
}

pub(super) fn enumerate(o: &HubOptions, s: &Snapshot<'_>, out: &mut Collector<'_>) -> Result<()> {
    for &v in s.vertices() {
        if is_hub(o, s, v) {
            out.push(FeatureSet::from_vertices([v]))?;
        }
    }
    Ok(())
}

pub(super) fn holds(o: &HubOptions, s: &Snapshot<'_>, set: &FeatureSet) -> bool {
    let vs: Vec<_> = set.vertices().collect();
    vs.len() == 1 && set.len() == 1 && is_hub(o, s, vs[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::features::{BuiltinFeature, EnumLimits, Feature};
    use crate::graph::{Filtration, GraphKind, WeightedGraph};

    #[test]
    fn weighted_hub_uses_incident_sums() {
        // path 0-1-2-3 with a heavy last edge: sums 1, 2, 5, 4
        let g = WeightedGraph::from_edges(GraphKind::Undirected, 4, &[(0, 1, 1.0), (1, 2, 1.0), (2, 3, 4.0)]).unwrap();
        let f = Filtration::new(&g);
        let whub = BuiltinFeature::from_name("whub").unwrap();
        let s = f.snapshot_at(10.0);
        let got = whub.enumerate(&s, EnumLimits::default()).unwrap();
        assert_eq!(got, vec![FeatureSet::from_vertices([VertexId(2)])]);
        // at level 1 only 0-1-2 exists: sums 1, 2, 1
        let s1 = f.snapshot_at(1.0);
        assert_eq!(
            whub.enumerate(&s1, EnumLimits::default()).unwrap(),
            vec![FeatureSet::from_vertices([VertexId(1)])]
        );
    }

    #[test]
    fn non_strict_admits_ties() {
        let g = WeightedGraph::from_edges(GraphKind::Undirected, 3, &[(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap();
        let s = Filtration::new(&g).snapshot_at(1.0);
        let strict = BuiltinFeature::Hub(HubOptions::degree());
        let loose = BuiltinFeature::Hub(HubOptions::degree().with_comparison(Comparison::NonStrict));
        assert!(strict.enumerate(&s, EnumLimits::default()).unwrap().is_empty());
        assert_eq!(loose.enumerate(&s, EnumLimits::default()).unwrap().len(), 3);
    }

    #[test]
    fn digraph_neighbourhood_switch() {
        // 0 -> 1 -> 2: outdegrees 1, 1, 0
        let g = WeightedGraph::from_edges(GraphKind::Directed, 3, &[(0, 1, 1.0), (1, 2, 1.0)]).unwrap();
        let s = Filtration::new(&g).snapshot_at(1.0);
        let strict = HubOptions::out_degree().with_comparison(Comparison::Strict);
        let run =
            |o: HubOptions| -> Vec<FeatureSet> { BuiltinFeature::Hub(o).enumerate(&s, EnumLimits::default()).unwrap() };
        assert!(run(strict).is_empty());
        // a sink has no out-neighbours, so it qualifies vacuously
        assert_eq!(
            run(strict.with_neighbourhood(Neighbourhood::Out)),
            vec![
                FeatureSet::from_vertices([VertexId(1)]),
                FeatureSet::from_vertices([VertexId(2)])
            ]
        );
        assert_eq!(
            run(strict.with_neighbourhood(Neighbourhood::In)),
            vec![FeatureSet::from_vertices([VertexId(0)])]
        );
        assert_eq!(run(HubOptions::out_degree()).len(), 2);
    }
}
