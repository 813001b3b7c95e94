//! Independent vertex sets, maximal independent sets and digraph kernels.
//! Independence is always taken in the underlying undirected graph.

use crate::error::Result;
use crate::graph::{Snapshot, VertexId};

use super::{Collector, FeatureSet};

pub(super) fn enumerate_independent(s: &Snapshot<'_>, out: &mut Collector<'_>) -> Result<()> {
    fn extend(s: &Snapshot<'_>, from: usize, chosen: &mut Vec<VertexId>, out: &mut Collector<'_>) -> Result<()> {
        let vs = s.vertices();
        for (i, &v) in vs.iter().enumerate().skip(from) {
            if chosen.iter().any(|&c| s.adjacent(c, v)) {
                continue;
            }
            chosen.push(v);
            out.push(FeatureSet::from_vertices(chosen.iter().copied()))?;
            extend(s, i + 1, chosen, out)?;
            chosen.pop();
        }
        Ok(())
    }
    extend(s, 0, &mut Vec::new(), out)
}

/// Bron–Kerbosch with pivoting on the complement graph: maximal cliques of
/// the complement are exactly the maximal independent sets. Sets rejected by
/// `accept` are skipped.
pub(super) fn enumerate_maximal<F>(s: &Snapshot<'_>, out: &mut Collector<'_>, accept: F) -> Result<()>
where
    F: Fn(&[VertexId]) -> bool,
{
    fn non_adjacent(s: &Snapshot<'_>, a: VertexId, b: VertexId) -> bool {
        a != b && !s.adjacent(a, b)
    }

    fn expand<F: Fn(&[VertexId]) -> bool>(
        s: &Snapshot<'_>,
        r: &mut Vec<VertexId>,
        mut p: Vec<VertexId>,
        mut x: Vec<VertexId>,
        out: &mut Collector<'_>,
        accept: &F,
    ) -> Result<()> {
        if p.is_empty() {
            if x.is_empty() && accept(r) {
                out.push(FeatureSet::from_vertices(r.iter().copied()))?;
            }
            return Ok(());
        }
        let pivot = p
            .iter()
            .chain(x.iter())
            .copied()
            .max_by_key(|&u| p.iter().filter(|&&w| non_adjacent(s, u, w)).count())
            .expect("p is nonempty");
        let candidates: Vec<VertexId> = p.iter().copied().filter(|&w| !non_adjacent(s, pivot, w)).collect();
        for v in candidates {
            let p_next = p.iter().copied().filter(|&w| non_adjacent(s, v, w)).collect();
            let x_next = x.iter().copied().filter(|&w| non_adjacent(s, v, w)).collect();
            r.push(v);
            expand(s, r, p_next, x_next, out, accept)?;
            r.pop();
            p.retain(|&w| w != v);
            x.push(v);
        }
        Ok(())
    }

    if s.vertices().is_empty() {
        return Ok(());
    }
    expand(s, &mut Vec::new(), s.vertices().to_vec(), Vec::new(), out, &accept)
}

/// Every snapshot vertex outside `x` is the tail of an arc with head in `x`.
pub(super) fn absorbs(s: &Snapshot<'_>, x: &[VertexId]) -> bool {
    s.vertices()
        .iter()
        .filter(|v| !x.contains(v))
        .all(|&w| s.out_neighbours(w).any(|h| x.contains(&h)))
}

fn vertex_only(set: &FeatureSet) -> Option<Vec<VertexId>> {
    let vs: Vec<_> = set.vertices().collect();
    (vs.len() == set.len()).then_some(vs)
}

pub(super) fn is_independent(s: &Snapshot<'_>, set: &FeatureSet) -> bool {
    let Some(vs) = vertex_only(set) else {
        return false;
    };
    vs.iter()
        .enumerate()
        .all(|(i, &a)| vs[i + 1..].iter().all(|&b| !s.adjacent(a, b)))
}

pub(super) fn is_maximal_independent(s: &Snapshot<'_>, set: &FeatureSet) -> bool {
    if !is_independent(s, set) {
        return false;
    }
    let vs: Vec<_> = set.vertices().collect();
    s.vertices()
        .iter()
        .filter(|v| !vs.contains(v))
        .all(|&w| vs.iter().any(|&v| s.adjacent(v, w)))
}

pub(super) fn is_kernel(s: &Snapshot<'_>, set: &FeatureSet) -> bool {
    if !is_independent(s, set) {
        return false;
    }
    let vs: Vec<_> = set.vertices().collect();
    absorbs(s, &vs)
}
