//! Matchings and maximal matchings (edge-set features).

use crate::error::Result;
use crate::graph::{EdgeId, Snapshot, VertexId};

use super::{Collector, FeatureSet};

pub(super) fn enumerate_matchings(s: &Snapshot<'_>, out: &mut Collector<'_>) -> Result<()> {
    fn extend(
        s: &Snapshot<'_>,
        from: usize,
        covered: &mut Vec<bool>,
        chosen: &mut Vec<EdgeId>,
        out: &mut Collector<'_>,
    ) -> Result<()> {
        let es = s.edges();
        for (i, &id) in es.iter().enumerate().skip(from) {
            let e = s.graph().edge(id);
            if covered[e.source.index()] || covered[e.target.index()] {
                continue;
            }
            covered[e.source.index()] = true;
            covered[e.target.index()] = true;
            chosen.push(e.id);
            out.push(FeatureSet::from_edges(chosen.iter().copied()))?;
            extend(s, i + 1, covered, chosen, out)?;
            chosen.pop();
            covered[e.source.index()] = false;
            covered[e.target.index()] = false;
        }
        Ok(())
    }
    let mut covered = vec![false; s.graph().vertex_count()];
    extend(s, 0, &mut covered, &mut Vec::new(), out)
}

#[derive(Copy, Clone, PartialEq, Eq)]
enum State {
    Free,
    Matched,
    /// Decided to stay unmatched; every neighbour must end up matched.
    Excluded,
}

/// Branches on the first free vertex with a free neighbour: either it is
/// matched to one of those neighbours, or it stays unmatched for good.
/// Each maximal matching is reached by exactly one branch sequence.
pub(super) fn enumerate_maximal(s: &Snapshot<'_>, out: &mut Collector<'_>) -> Result<()> {
    struct Search<'s, 'g> {
        s: &'s Snapshot<'g>,
        state: Vec<State>,
        chosen: Vec<EdgeId>,
    }

    impl Search<'_, '_> {
        fn open_edges(&self, v: VertexId) -> Vec<EdgeId> {
            self.s
                .incident_edges(v)
                .iter()
                .copied()
                .filter(|&e| self.state[self.s.graph().edge(e).other(v).index()] == State::Free)
                .collect()
        }

        fn run(&mut self, out: &mut Collector<'_>) -> Result<()> {
            let pick = self
                .s
                .vertices()
                .iter()
                .copied()
                .filter(|v| self.state[v.index()] == State::Free)
                .find(|&v| !self.open_edges(v).is_empty());
            let Some(v) = pick else {
                // No edge joins two free vertices; maximal iff no edge is left uncovered.
                let g = self.s.graph();
                let maximal = self.s.edges().iter().all(|&e| {
                    let e = g.edge(e);
                    self.state[e.source.index()] == State::Matched || self.state[e.target.index()] == State::Matched
                });
                if maximal && !self.chosen.is_empty() {
                    out.push(FeatureSet::from_edges(self.chosen.iter().copied()))?;
                }
                return Ok(());
            };
            for e in self.open_edges(v) {
                let u = self.s.graph().edge(e).other(v);
                self.state[v.index()] = State::Matched;
                self.state[u.index()] = State::Matched;
                self.chosen.push(e);
                self.run(out)?;
                self.chosen.pop();
                self.state[u.index()] = State::Free;
            }
            let blocked = self
                .s
                .neighbours(v)
                .iter()
                .any(|&u| self.state[u.index()] == State::Excluded);
            if !blocked {
                self.state[v.index()] = State::Excluded;
                self.run(out)?;
            }
            self.state[v.index()] = State::Free;
            Ok(())
        }
    }

    let mut search = Search {
        s,
        state: vec![State::Free; s.graph().vertex_count()],
        chosen: Vec::new(),
    };
    search.run(out)
}

fn edge_only(set: &FeatureSet) -> Option<Vec<EdgeId>> {
    let es: Vec<_> = set.edges().collect();
    (es.len() == set.len()).then_some(es)
}

pub(super) fn is_matching(s: &Snapshot<'_>, set: &FeatureSet) -> bool {
    let Some(es) = edge_only(set) else {
        return false;
    };
    let g = s.graph();
    let mut seen = std::collections::HashSet::new();
    es.iter().all(|&e| {
        let e = g.edge(e);
        seen.insert(e.source) && seen.insert(e.target)
    })
}

pub(super) fn is_maximal_matching(s: &Snapshot<'_>, set: &FeatureSet) -> bool {
    if !is_matching(s, set) {
        return false;
    }
    let g = s.graph();
    let covered: Vec<VertexId> = set.edges().flat_map(|e| [g.edge(e).source, g.edge(e).target]).collect();
    s.edges().iter().all(|&e| {
        let e = g.edge(e);
        covered.contains(&e.source) || covered.contains(&e.target)
    })
}
