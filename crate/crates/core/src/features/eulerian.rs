//! Maximal Eulerian vertex sets: the induced subgraph is connected, has at
//! least one edge, and every vertex has even degree in it.
//!
//! Such a subgraph has minimum degree 2, so it lies inside one connected
//! component of the 2-core of the snapshot. Each component is searched by
//! decreasing subset size; a hit not contained in an earlier hit is maximal.

use crate::error::{Error, Result};
use crate::graph::{Snapshot, VertexId};

use super::{Collector, FeatureSet};

/// Largest 2-core component searched exhaustively.
pub const MAX_COMPONENT: usize = 20;

fn two_core(s: &Snapshot<'_>) -> Vec<VertexId> {
    let n = s.graph().vertex_count();
    let mut alive = vec![false; n];
    let mut deg = vec![0usize; n];
    for &v in s.vertices() {
        alive[v.index()] = true;
        deg[v.index()] = s.neighbours(v).len();
    }
    let mut stack: Vec<VertexId> = s.vertices().iter().copied().filter(|v| deg[v.index()] < 2).collect();
    while let Some(v) = stack.pop() {
        if !alive[v.index()] {
            continue;
        }
        alive[v.index()] = false;
        for &u in s.neighbours(v) {
            if alive[u.index()] {
                deg[u.index()] -= 1;
                if deg[u.index()] < 2 {
                    stack.push(u);
                }
            }
        }
    }
    s.vertices().iter().copied().filter(|v| alive[v.index()]).collect()
}

fn components(s: &Snapshot<'_>, pool: &[VertexId]) -> Vec<Vec<VertexId>> {
    let mut seen: Vec<bool> = vec![false; s.graph().vertex_count()];
    let in_pool = |v: VertexId| pool.binary_search(&v).is_ok();
    let mut out = Vec::new();
    for &start in pool {
        if seen[start.index()] {
            continue;
        }
        let mut comp = vec![start];
        seen[start.index()] = true;
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            for &u in s.neighbours(v) {
                if in_pool(u) && !seen[u.index()] {
                    seen[u.index()] = true;
                    comp.push(u);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Connected, at least one edge, all induced degrees even.
fn induces_eulerian(s: &Snapshot<'_>, vs: &[VertexId]) -> bool {
    if vs.len() < 3 {
        return false;
    }
    let inside = |u: &VertexId| vs.binary_search(u).is_ok();
    for &v in vs {
        let d = s.neighbours(v).iter().filter(|u| inside(u)).count();
        if d == 0 || d % 2 == 1 {
            return false;
        }
    }
    let mut reached = vec![vs[0]];
    let mut i = 0;
    while i < reached.len() {
        let v = reached[i];
        for u in s.neighbours(v) {
            if inside(u) && !reached.contains(u) {
                reached.push(*u);
            }
        }
        i += 1;
    }
    reached.len() == vs.len()
}

pub(super) fn enumerate(s: &Snapshot<'_>, out: &mut Collector<'_>) -> Result<()> {
    let core = two_core(s);
    for comp in components(s, &core) {
        let n = comp.len();
        if n > MAX_COMPONENT {
            return Err(Error::SizeLimit {
                what: format!("2-core component of {n} vertices for eulerian search"),
                limit: MAX_COMPONENT,
            });
        }
        let mut masks: Vec<u32> = (1u32..(1u32 << n)).filter(|m| m.count_ones() >= 3).collect();
        masks.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
        let mut found: Vec<u32> = Vec::new();
        for m in masks {
            if found.iter().any(|&f| m & !f == 0) {
                continue;
            }
            let vs: Vec<VertexId> = (0..n).filter(|i| m >> i & 1 == 1).map(|i| comp[i]).collect();
            if induces_eulerian(s, &vs) {
                found.push(m);
                out.push(FeatureSet::from_vertices(vs))?;
            }
        }
    }
    Ok(())
}

/// Direct check: `set` induces an Eulerian subgraph and no proper superset
/// of snapshot vertices does.
pub(super) fn holds(s: &Snapshot<'_>, set: &FeatureSet) -> bool {
    let vs: Vec<VertexId> = set.vertices().collect();
    if vs.len() != set.len() || !induces_eulerian(s, &vs) {
        return false;
    }
    let rest: Vec<VertexId> = s.vertices().iter().copied().filter(|v| !vs.contains(v)).collect();
    if rest.len() > MAX_COMPONENT {
        // too many supersets to scan: defer to the component search
        let mut out = Collector::new("eulerian", super::EnumLimits::default());
        return enumerate(s, &mut out).is_ok() && out.finish().contains(set);
    }
    (1u64..(1u64 << rest.len())).all(|m| {
        let mut sup = vs.clone();
        sup.extend((0..rest.len()).filter(|i| m >> i & 1 == 1).map(|i| rest[i]));
        sup.sort_unstable();
        !induces_eulerian(s, &sup)
    })
}
