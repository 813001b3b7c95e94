use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

pub const PSEUDODISTANCE_MAX_VERTICES: usize = 8;

/// Natural pseudodistance by exhaustive search over graph isomorphisms:
/// the minimum over isomorphisms of the largest weight discrepancy on
/// corresponding edges, or `+inf` when the graphs are not isomorphic.
pub fn natural_pseudodistance_oracle(g1: &WeightedGraph, g2: &WeightedGraph) -> Result<f64> {
    for g in [g1, g2] {
        if g.vertex_count() > PSEUDODISTANCE_MAX_VERTICES {
            return Err(Error::SizeLimit {
                what: format!("graph with {} vertices", g.vertex_count()),
                limit: PSEUDODISTANCE_MAX_VERTICES,
            });
        }
    }
    if g1.kind() != g2.kind() || g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(f64::INFINITY);
    }
    let n = g1.vertex_count();
    let directed = g1.is_directed();
    let weights = |g: &WeightedGraph| {
        let mut w = vec![vec![None; n]; n];
        for e in g.edges() {
            w[e.source.index()][e.target.index()] = Some(e.weight);
            if !directed {
                w[e.target.index()][e.source.index()] = Some(e.weight);
            }
        }
        w
    };
    let w1 = weights(g1);
    let w2 = weights(g2);

    struct Search<'a> {
        w1: &'a [Vec<Option<f64>>],
        w2: &'a [Vec<Option<f64>>],
        image: Vec<usize>,
        used: Vec<bool>,
        best: f64,
    }

    impl Search<'_> {
        fn run(&mut self, v: usize, worst: f64) {
            if worst >= self.best {
                return;
            }
            let n = self.w1.len();
            if v == n {
                self.best = worst;
                return;
            }
            for target in 0..n {
                if self.used[target] {
                    continue;
                }
                let mut cost = worst;
                let mut ok = true;
                for u in 0..v {
                    let tu = self.image[u];
                    for (a, b) in [((v, u), (target, tu)), ((u, v), (tu, target))] {
                        match (self.w1[a.0][a.1], self.w2[b.0][b.1]) {
                            (None, None) => {}
                            (Some(x), Some(y)) => cost = cost.max((x - y).abs()),
                            _ => ok = false,
                        }
                    }
                }
                if ok {
                    self.used[target] = true;
                    self.image[v] = target;
                    self.run(v + 1, cost);
                    self.used[target] = false;
                }
            }
        }
    }

    let mut search = Search {
        w1: &w1,
        w2: &w2,
        image: vec![0; n],
        used: vec![false; n],
        best: f64::INFINITY,
    };
    search.run(0, 0.0);
    Ok(search.best)
}

/// `sup |f(e) - g(e)|` for two weightings of the same edge list.
pub fn sup_weight_difference(f: &WeightedGraph, g: &WeightedGraph) -> f64 {
    f.edges()
        .iter()
        .zip(g.edges())
        .map(|(a, b)| (a.weight - b.weight).abs())
        .fold(0.0, f64::max)
}
