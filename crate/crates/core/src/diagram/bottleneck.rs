//! Bottleneck distance under the L∞ ground metric.
//!
//! Cornerpoints at infinity are paired among themselves by sorted birth
//! (optimal on a line). Proper cornerpoints go through the usual reduction:
//! each side is padded with diagonal copies of the other side's points, and
//! the answer is the smallest candidate cost admitting a perfect matching.

use crate::error::{Error, Result};
use crate::persistence::PersistenceDiagram;

use super::matching::Bipartite;

fn expand(d: &PersistenceDiagram) -> (Vec<(f64, f64)>, Vec<f64>) {
    let mut finite = Vec::new();
    let mut births_at_inf = Vec::new();
    for c in d.cornerpoints() {
        for _ in 0..c.multiplicity {
            if c.is_at_infinity() {
                births_at_inf.push(c.birth);
            } else {
                finite.push((c.birth, c.death));
            }
        }
    }
    (finite, births_at_inf)
}

fn linf(p: (f64, f64), q: (f64, f64)) -> f64 {
    let dd = if p.1 == q.1 { 0.0 } else { (p.1 - q.1).abs() };
    (p.0 - q.0).abs().max(dd)
}

fn to_diagonal(p: (f64, f64)) -> f64 {
    (p.1 - p.0) / 2.0
}

pub fn bottleneck_distance(a: &PersistenceDiagram, b: &PersistenceDiagram) -> f64 {
    let (fa, mut ia) = expand(a);
    let (fb, mut ib) = expand(b);
    if ia.len() != ib.len() {
        return f64::INFINITY;
    }
    ia.sort_by(f64::total_cmp);
    ib.sort_by(f64::total_cmp);
    let at_infinity = ia.iter().zip(&ib).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
    at_infinity.max(finite_bottleneck(&fa, &fb))
}

fn finite_bottleneck(a: &[(f64, f64)], b: &[(f64, f64)]) -> f64 {
    let (n, m) = (a.len(), b.len());
    if n + m == 0 {
        return 0.0;
    }
    // rows: a_0..a_n, then diagonal copies of b; cols: b_0..b_m, then diagonal copies of a
    let size = n + m;
    let mut edges: Vec<(usize, usize, f64)> = Vec::with_capacity(n * m + 2 * (n + m) + n * m);
    for (i, &p) in a.iter().enumerate() {
        for (j, &q) in b.iter().enumerate() {
            edges.push((i, j, linf(p, q)));
        }
        edges.push((i, m + i, to_diagonal(p)));
    }
    for (j, &q) in b.iter().enumerate() {
        edges.push((n + j, j, to_diagonal(q)));
        for i in 0..n {
            edges.push((n + j, m + i, 0.0));
        }
    }
    let mut candidates: Vec<f64> = edges.iter().map(|e| e.2).collect();
    candidates.sort_by(f64::total_cmp);
    candidates.dedup();

    let feasible = |threshold: f64| {
        let mut g = Bipartite::new(size, size);
        for &(l, r, c) in &edges {
            if c <= threshold {
                g.add_edge(l, r);
            }
        }
        g.max_matching() == size
    };
    // the largest candidate always admits the identity-with-diagonal matching
    let (mut lo, mut hi) = (0usize, candidates.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if feasible(candidates[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    candidates[lo]
}

/// Largest expanded cornerpoint count the exhaustive oracle accepts.
pub const ORACLE_MAX_POINTS: usize = 6;

/// Exact bottleneck distance by enumerating every partial injection from
/// the first diagram into the second; unmatched points go to the diagonal.
pub fn bottleneck_oracle(a: &PersistenceDiagram, b: &PersistenceDiagram) -> Result<f64> {
    let pa = expand_all(a);
    let pb = expand_all(b);
    for p in [&pa, &pb] {
        if p.len() > ORACLE_MAX_POINTS {
            return Err(Error::SizeLimit {
                what: format!("diagram with {} cornerpoints", p.len()),
                limit: ORACLE_MAX_POINTS,
            });
        }
    }

    fn cost(p: (f64, f64), q: (f64, f64)) -> f64 {
        let db = (p.0 - q.0).abs();
        let dd = match (p.1.is_infinite(), q.1.is_infinite()) {
            (true, true) => 0.0,
            (false, false) => (p.1 - q.1).abs(),
            _ => f64::INFINITY,
        };
        db.max(dd)
    }

    fn diag(p: (f64, f64)) -> f64 {
        if p.1.is_infinite() {
            f64::INFINITY
        } else {
            (p.1 - p.0) / 2.0
        }
    }

    fn search(i: usize, pa: &[(f64, f64)], pb: &[(f64, f64)], used: &mut [bool], worst: f64, best: &mut f64) {
        if worst >= *best {
            return;
        }
        if i == pa.len() {
            let rest = pb
                .iter()
                .zip(used.iter())
                .filter(|(_, &u)| !u)
                .map(|(&q, _)| diag(q))
                .fold(worst, f64::max);
            if rest < *best {
                *best = rest;
            }
            return;
        }
        search(i + 1, pa, pb, used, worst.max(diag(pa[i])), best);
        for j in 0..pb.len() {
            if !used[j] {
                used[j] = true;
                search(i + 1, pa, pb, used, worst.max(cost(pa[i], pb[j])), best);
                used[j] = false;
            }
        }
    }

    let mut best = f64::INFINITY;
    let mut used = vec![false; pb.len()];
    search(0, &pa, &pb, &mut used, 0.0, &mut best);
    Ok(best)
}

fn expand_all(d: &PersistenceDiagram) -> Vec<(f64, f64)> {
    d.cornerpoints()
        .iter()
        .flat_map(|c| std::iter::repeat_n((c.birth, c.death), c.multiplicity))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(p: &[(f64, f64)]) -> PersistenceDiagram {
        PersistenceDiagram::from_pairs(p).unwrap()
    }

    const INF: f64 = f64::INFINITY;

    #[test]
    fn reference_values() {
        let x = d(&[(0.0, 2.0), (1.0, 5.0), (3.0, INF)]);
        assert_eq!(bottleneck_distance(&x, &x), 0.0);
        assert_eq!(bottleneck_distance(&d(&[(0.0, 2.0)]), &d(&[])), 1.0);
        assert_eq!(bottleneck_distance(&d(&[(0.0, 4.0)]), &d(&[(1.0, 4.0)])), 1.0);
        assert_eq!(bottleneck_distance(&d(&[(0.0, INF)]), &d(&[])), INF);
        assert_eq!(bottleneck_distance(&d(&[]), &d(&[])), 0.0);
        assert_eq!(bottleneck_distance(&d(&[(0.0, INF)]), &d(&[(2.5, INF)])), 2.5);
    }

    #[test]
    fn oracle_reference_values() {
        assert_eq!(bottleneck_oracle(&d(&[(0.0, 2.0)]), &d(&[])).unwrap(), 1.0);
        assert_eq!(bottleneck_oracle(&d(&[(0.0, INF)]), &d(&[])).unwrap(), INF);
        assert_eq!(bottleneck_oracle(&d(&[(0.0, INF)]), &d(&[(1.0, INF)])).unwrap(), 1.0);
        let big = d(&[
            (0.0, 1.0),
            (0.0, 2.0),
            (0.0, 3.0),
            (0.0, 4.0),
            (0.0, 5.0),
            (0.0, 6.0),
            (0.0, 7.0),
        ]);
        assert!(matches!(bottleneck_oracle(&big, &d(&[])), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn prefers_diagonal_when_cheaper() {
        // matching the two thin points to each other costs 3, sending both to the diagonal costs 0.5
        let a = d(&[(0.0, 1.0)]);
        let b = d(&[(3.0, 4.0)]);
        assert_eq!(bottleneck_distance(&a, &b), 0.5);
        assert_eq!(bottleneck_oracle(&a, &b).unwrap(), 0.5);
    }
}
