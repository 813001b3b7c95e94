#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;

use grape::graph::{Filtration, GraphKind, WeightedGraph};
use grape::PersistenceDiagram;

/// Random simple graph or digraph on `2..=max_n` vertices with at least one
/// edge. Weights are drawn by `weight(rng, edge_count)`.
pub fn random_graph<R: Rng>(
    rng: &mut R,
    kind: GraphKind,
    max_n: usize,
    mut weights: impl FnMut(&mut R, usize) -> Vec<f64>,
) -> WeightedGraph {
    loop {
        let n = rng.gen_range(2..=max_n);
        let p: f64 = rng.gen_range(0.25..=0.9);
        let mut pairs = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if !rng.gen_bool(p) {
                    continue;
                }
                match kind {
                    GraphKind::Undirected => pairs.push((a, b)),
                    GraphKind::Directed => match rng.gen_range(0..6) {
                        0 => pairs.extend([(a, b), (b, a)]),
                        1..=3 => pairs.push((a, b)),
                        _ => pairs.push((b, a)),
                    },
                }
            }
        }
        if pairs.is_empty() {
            continue;
        }
        let w = weights(rng, pairs.len());
        let edges: Vec<_> = pairs.iter().zip(w).map(|(&(a, b), w)| (a, b, w)).collect();
        return WeightedGraph::from_edges(kind, n, &edges).unwrap();
    }
}

/// A shuffled permutation of `1..=m`, so all weights differ.
pub fn distinct_weights<R: Rng>(rng: &mut R, m: usize) -> Vec<f64> {
    let mut w: Vec<f64> = (1..=m).map(|i| i as f64).collect();
    w.shuffle(rng);
    w
}

/// Integer weights in `1..=max`, ties likely.
pub fn small_weights<R: Rng>(max: i32) -> impl FnMut(&mut R, usize) -> Vec<f64> {
    move |rng: &mut R, m| (0..m).map(|_| f64::from(rng.gen_range(1..=max))).collect()
}

/// Critical levels, midpoints between consecutive levels, and one value
/// beyond each end: a representative of every cell where σ and ρ are constant.
pub fn midpoint_grid(g: &WeightedGraph) -> Vec<f64> {
    let levels = Filtration::new(g).critical_levels().to_vec();
    let mut grid = vec![levels[0] - 1.0];
    for w in levels.windows(2) {
        grid.push(w[0]);
        grid.push((w[0] + w[1]) / 2.0);
    }
    grid.push(levels[levels.len() - 1]);
    grid.push(levels[levels.len() - 1] + 1.0);
    grid
}

/// Counts of `d` on all grid pairs `i < j`, as a dense table (0 below the diagonal).
pub fn count_table(d: &PersistenceDiagram, grid: &[f64]) -> Vec<Vec<usize>> {
    let n = grid.len();
    let mut t = vec![vec![0; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            t[i][j] = d.count_at(grid[i], grid[j]).unwrap();
        }
    }
    t
}

/// Random diagram of up to `max_points` cornerpoints, some at infinity.
pub fn random_diagram<R: Rng>(rng: &mut R, max_points: usize) -> PersistenceDiagram {
    let k = rng.gen_range(0..=max_points);
    let coarse = rng.gen_bool(0.5);
    let pts: Vec<(f64, f64)> = (0..k)
        .map(|_| {
            let coord = |rng: &mut R| {
                if coarse {
                    f64::from(rng.gen_range(0..8)) / 2.0
                } else {
                    rng.gen_range(0.0..10.0)
                }
            };
            let b = coord(rng);
            if rng.gen_bool(0.2) {
                (b, f64::INFINITY)
            } else {
                let len = loop {
                    let l = coord(rng);
                    if l > 0.0 {
                        break l;
                    }
                };
                (b, b + len)
            }
        })
        .collect();
    PersistenceDiagram::from_pairs(&pts).unwrap()
}

/// The 8 orientations of a 3-vertex tournament with weights 1, 2, 3 on the
/// pairs ab, bc, ac; bit i of the index reverses pair i.
pub fn tournaments() -> Vec<WeightedGraph> {
    let pairs = [(0, 1, 1.0), (1, 2, 2.0), (0, 2, 3.0)];
    (0..8u32)
        .map(|mask| {
            let arcs: Vec<_> = pairs
                .iter()
                .enumerate()
                .map(|(i, &(a, b, w))| if mask >> i & 1 == 1 { (b, a, w) } else { (a, b, w) })
                .collect();
            WeightedGraph::from_edges(GraphKind::Directed, 3, &arcs).unwrap()
        })
        .collect()
}

/// Sizes of the classes of equal diagrams, sorted descending.
pub fn class_sizes(ds: &[PersistenceDiagram]) -> Vec<usize> {
    let mut reps: Vec<(&PersistenceDiagram, usize)> = Vec::new();
    for d in ds {
        match reps.iter_mut().find(|(r, _)| r.same_points(d)) {
            Some((_, n)) => *n += 1,
            None => reps.push((d, 1)),
        }
    }
    let mut sizes: Vec<usize> = reps.into_iter().map(|(_, n)| n).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}
