//! Persistent hubs, hub timelines and the search for unbalanced generators.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::diagram::{select, GapChoice};
use crate::error::{Error, Result};
use crate::features::{BuiltinFeature, EnumLimits, Feature};
use crate::graph::{Filtration, GraphKind, WeightedGraph};
use crate::persistence::{compute_diagram, BruteForce, Cornerpoint, Mode, PersistenceDiagram};

#[derive(Clone, Debug, PartialEq)]
pub struct HubEntry {
    pub label: String,
    pub birth: f64,
    pub death: f64,
    pub persistence: f64,
}

#[derive(Clone, Debug)]
pub struct PersistentHubReport {
    pub feature: String,
    pub mode: Mode,
    /// 1-based gap rank; 0 when the diagram has no proper cornerpoints.
    pub gap_index: usize,
    pub gap_count: usize,
    pub threshold: f64,
    pub entries: Vec<HubEntry>,
    pub diagram: PersistenceDiagram,
}

impl PersistentHubReport {
    /// Distinct hub labels, sorted.
    pub fn names(&self) -> Vec<String> {
        let mut names: Vec<String> = self.entries.iter().map(|e| e.label.clone()).collect();
        names.sort();
        names.dedup();
        names
    }
}

fn require_hub(feature: &BuiltinFeature) -> Result<()> {
    if feature.is_hub() {
        Ok(())
    } else {
        Err(Error::InvalidQuery(format!("{} is not a hub feature", feature.name())))
    }
}

fn by_persistence_then_label(a: &HubEntry, b: &HubEntry) -> std::cmp::Ordering {
    b.persistence
        .total_cmp(&a.persistence)
        .then_with(|| a.label.cmp(&b.label))
        .then_with(|| a.birth.total_cmp(&b.birth))
}

fn hub_entries<'a>(g: &WeightedGraph, points: impl IntoIterator<Item = &'a Cornerpoint>) -> Vec<HubEntry> {
    let mut entries: Vec<HubEntry> = points
        .into_iter()
        .flat_map(|c| {
            c.witnesses.iter().flat_map(move |w| {
                w.vertices().map(move |v| HubEntry {
                    label: g.label(v).to_owned(),
                    birth: c.birth,
                    death: c.death,
                    persistence: c.persistence(),
                })
            })
        })
        .collect();
    entries.sort_by(by_persistence_then_label);
    entries
}

pub fn persistent_hubs(
    g: &WeightedGraph,
    feature: &BuiltinFeature,
    mode: Mode,
    gap: GapChoice,
    limits: EnumLimits,
) -> Result<PersistentHubReport> {
    require_hub(feature)?;
    let diagram = compute_diagram(feature, g, mode, limits)?;
    let selection = select(&diagram, gap)?;
    Ok(PersistentHubReport {
        feature: feature.name().to_owned(),
        mode,
        gap_index: selection.index,
        gap_count: selection.gaps.len(),
        threshold: selection.threshold,
        entries: hub_entries(g, &selection.selected),
        diagram,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct TimelineColumn {
    pub label: String,
    /// `(vertex label, persistence)`, best first.
    pub hubs: Vec<(String, f64)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HubTimeline {
    pub feature: String,
    pub mode: Mode,
    pub columns: Vec<TimelineColumn>,
}

pub const DEFAULT_TOP: usize = 6;

/// Per snapshot, the `top` vertices ranked by the largest persistence of a
/// cornerpoint they witness.
pub fn track_hubs(
    snapshots: &[(String, WeightedGraph)],
    feature: &BuiltinFeature,
    mode: Mode,
    top: usize,
    limits: EnumLimits,
) -> Result<HubTimeline> {
    require_hub(feature)?;
    let columns = snapshots
        .iter()
        .map(|(label, g)| {
            let diagram = compute_diagram(feature, g, mode, limits)?;
            let mut best: BTreeMap<String, HubEntry> = BTreeMap::new();
            for e in hub_entries(g, diagram.cornerpoints()) {
                best.entry(e.label.clone()).or_insert(e);
            }
            let mut ranked: Vec<HubEntry> = best.into_values().collect();
            ranked.sort_by(by_persistence_then_label);
            ranked.truncate(top);
            Ok(TimelineColumn {
                label: label.clone(),
                hubs: ranked.into_iter().map(|e| (e.label, e.persistence)).collect(),
            })
        })
        .collect::<Result<_>>()?;
    Ok(HubTimeline {
        feature: feature.name().to_owned(),
        mode,
        columns,
    })
}

/// A pair of weightings `f`, `g` of one graph with `sup |f - g| <= h` and
/// `p_f(u - h, v + h) > p_g(u, v)`.
#[derive(Clone, Debug)]
pub struct Counterexample {
    pub trial: u64,
    pub f: WeightedGraph,
    pub g: WeightedGraph,
    pub h: f64,
    pub u: f64,
    pub v: f64,
    pub p_f: usize,
    pub p_g: usize,
}

pub const SEARCH_MAX_VERTICES: usize = 7;
const MAX_WEIGHT: i32 = 12;

#[derive(Copy, Clone, Debug)]
pub struct SearchOptions {
    pub max_vertices: usize,
    pub trials: u64,
    pub seed: u64,
    pub limits: EnumLimits,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_vertices: SEARCH_MAX_VERTICES,
            trials: 100_000,
            seed: 0,
            limits: EnumLimits::default(),
        }
    }
}

fn random_graph(rng: &mut ChaCha8Rng, kind: GraphKind, max_vertices: usize) -> WeightedGraph {
    loop {
        let n = rng.gen_range(2..=max_vertices);
        let density: f64 = rng.gen_range(0.3..=1.0);
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if !rng.gen_bool(density) {
                    continue;
                }
                match kind {
                    GraphKind::Undirected => edges.push((a, b)),
                    GraphKind::Directed => match rng.gen_range(0..5) {
                        0 => {
                            edges.push((a, b));
                            edges.push((b, a));
                        }
                        1 | 2 => edges.push((a, b)),
                        _ => edges.push((b, a)),
                    },
                }
            }
        }
        if edges.is_empty() {
            continue;
        }
        edges.shuffle(rng);
        let weighted: Vec<_> = edges
            .into_iter()
            .map(|(a, b)| (a, b, f64::from(rng.gen_range(1..=MAX_WEIGHT))))
            .collect();
        return WeightedGraph::from_edges(kind, n, &weighted).expect("generated graphs are simple");
    }
}

/// Candidate query values: critical levels of both weightings, their shifts
/// by `±h`, midpoints of consecutive values, and one value beyond each end.
fn query_grid(f: &WeightedGraph, g: &WeightedGraph, h: f64) -> Vec<f64> {
    let mut base: Vec<f64> = f.weights().into_iter().chain(g.weights()).collect();
    let shifted: Vec<f64> = base.iter().flat_map(|&w| [w - h, w + h]).collect();
    base.extend(shifted);
    base.sort_by(f64::total_cmp);
    base.dedup();
    let mids: Vec<f64> = base.windows(2).map(|w| (w[0] + w[1]) / 2.0).collect();
    let (lo, hi) = (base[0] - 1.0, base[base.len() - 1] + 1.0);
    base.extend(mids);
    base.push(lo);
    base.push(hi);
    base.sort_by(f64::total_cmp);
    base
}

fn brute_force_count(
    feature: &dyn Feature,
    g: &WeightedGraph,
    mode: Mode,
    u: f64,
    v: f64,
    limits: EnumLimits,
) -> Result<usize> {
    let filt = Filtration::new(g);
    let mut bf = BruteForce::new(feature, &filt, limits)?;
    match mode {
        Mode::Steady => bf.sigma(u, v),
        Mode::Ranging => bf.rho(u, v),
    }
}

fn try_pair(
    feature: &BuiltinFeature,
    mode: Mode,
    f: &WeightedGraph,
    g: &WeightedGraph,
    h: f64,
    limits: EnumLimits,
) -> Result<Option<(f64, f64, usize, usize)>> {
    let df = compute_diagram(feature, f, mode, limits)?;
    let dg = compute_diagram(feature, g, mode, limits)?;
    let grid = query_grid(f, g, h);
    for (i, &u) in grid.iter().enumerate() {
        for &v in &grid[i + 1..] {
            let p_f = df.count_at(u - h, v + h)?;
            if p_f == 0 {
                continue;
            }
            let p_g = dg.count_at(u, v)?;
            if p_f > p_g {
                let bf_f = brute_force_count(feature, f, mode, u - h, v + h, limits)?;
                let bf_g = brute_force_count(feature, g, mode, u, v, limits)?;
                if bf_f > bf_g {
                    return Ok(Some((u, v, bf_f, bf_g)));
                }
            }
        }
    }
    Ok(None)
}

fn run_trial(feature: &BuiltinFeature, mode: Mode, opts: &SearchOptions, trial: u64) -> Option<Counterexample> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    rng.set_stream(trial);
    let f = random_graph(&mut rng, feature.graph_kind(), opts.max_vertices);
    let h: i32 = rng.gen_range(1..=2);
    let perturbed: Vec<f64> = f
        .weights()
        .iter()
        .map(|&w| w + f64::from(rng.gen_range(-h..=h)))
        .collect();
    let g = f.with_weights(&perturbed).ok()?;
    let h = f64::from(h);
    for (a, b) in [(&f, &g), (&g, &f)] {
        // enumeration caps cannot trigger at this size; errors just skip the trial
        if let Ok(Some((u, v, p_f, p_g))) = try_pair(feature, mode, a, b, h, opts.limits) {
            return Some(Counterexample {
                trial,
                f: a.clone(),
                g: b.clone(),
                h,
                u,
                v,
                p_f,
                p_g,
            });
        }
    }
    None
}

/// Randomized search for a violation of the balanced inequality. Trials run
/// in parallel; the lowest successful trial index wins, so the result only
/// depends on the options.
pub fn search_unbalanced(feature: &BuiltinFeature, mode: Mode, opts: SearchOptions) -> Result<Option<Counterexample>> {
    if opts.max_vertices > SEARCH_MAX_VERTICES || opts.max_vertices < 2 {
        return Err(Error::SizeLimit {
            what: format!("search over {} vertices", opts.max_vertices),
            limit: SEARCH_MAX_VERTICES,
        });
    }
    Ok((0..opts.trials)
        .into_par_iter()
        .find_map_first(|t| run_trial(feature, mode, &opts, t)))
}

/// Re-checks a counterexample against the definitions.
pub fn verify_counterexample(
    feature: &BuiltinFeature,
    mode: Mode,
    c: &Counterexample,
    limits: EnumLimits,
) -> Result<bool> {
    let sup =
        c.f.edges()
            .iter()
            .zip(c.g.edges())
            .map(|(a, b)| (a.weight - b.weight).abs())
            .fold(0.0, f64::max);
    if sup > c.h {
        return Ok(false);
    }
    let p_f = brute_force_count(feature, &c.f, mode, c.u - c.h, c.v + c.h, limits)?;
    let p_g = brute_force_count(feature, &c.g, mode, c.u, c.v, limits)?;
    Ok(p_f > p_g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::features::HubOptions;

    fn hub() -> BuiltinFeature {
        BuiltinFeature::Hub(HubOptions::degree())
    }

    #[test]
    fn star_has_its_centre_as_only_hub() {
        let edges: Vec<_> = (1..=5).map(|i| (0, i, i as f64)).collect();
        let g = WeightedGraph::from_edges(GraphKind::Undirected, 6, &edges).unwrap();
        for mode in [Mode::Steady, Mode::Ranging] {
            let r = persistent_hubs(&g, &hub(), mode, GapChoice::Rank(1), EnumLimits::default()).unwrap();
            assert_eq!(r.names(), vec!["0".to_string()]);
            assert_eq!(r.entries[0].death, f64::INFINITY);
        }
    }

    #[test]
    fn empty_graph_gives_empty_report() {
        let g = WeightedGraph::from_edges(GraphKind::Undirected, 3, &[]).unwrap();
        let r = persistent_hubs(&g, &hub(), Mode::Ranging, GapChoice::Rank(1), EnumLimits::default()).unwrap();
        assert!(r.entries.is_empty());
        assert_eq!(r.gap_index, 0);
    }

    #[test]
    fn non_hub_features_are_rejected() {
        let g = WeightedGraph::from_edges(GraphKind::Undirected, 2, &[(0, 1, 1.0)]).unwrap();
        let err = persistent_hubs(
            &g,
            &BuiltinFeature::Matching,
            Mode::Steady,
            GapChoice::Floor,
            EnumLimits::default(),
        );
        assert!(matches!(err, Err(Error::InvalidQuery(_))));
    }

    #[test]
    fn single_snapshot_timeline_matches_report() {
        let g = WeightedGraph::from_edges(
            GraphKind::Undirected,
            6,
            &[
                (0, 1, 1.0),
                (0, 2, 2.0),
                (0, 3, 3.0),
                (3, 4, 4.0),
                (3, 5, 5.0),
                (4, 5, 6.0),
            ],
        )
        .unwrap();
        let r = persistent_hubs(&g, &hub(), Mode::Ranging, GapChoice::Floor, EnumLimits::default()).unwrap();
        let t = track_hubs(&[("only".into(), g)], &hub(), Mode::Ranging, 10, EnumLimits::default()).unwrap();
        let from_report: Vec<_> = r.entries.iter().map(|e| (e.label.clone(), e.persistence)).collect();
        assert_eq!(t.columns[0].hubs, from_report);
    }

    #[test]
    fn hubless_snapshot_gives_empty_column() {
        // a single edge has no strict hub
        let g = WeightedGraph::from_edges(GraphKind::Undirected, 2, &[(0, 1, 1.0)]).unwrap();
        let t = track_hubs(
            &[("a".into(), g)],
            &hub(),
            Mode::Steady,
            DEFAULT_TOP,
            EnumLimits::default(),
        )
        .unwrap();
        assert!(t.columns[0].hubs.is_empty());
    }

    #[test]
    fn search_is_deterministic_and_verified() {
        let opts = SearchOptions {
            trials: 2_000,
            seed: 7,
            ..SearchOptions::default()
        };
        let a = search_unbalanced(&hub(), Mode::Steady, opts)
            .unwrap()
            .expect("hub steady is unbalanced");
        let b = search_unbalanced(&hub(), Mode::Steady, opts).unwrap().unwrap();
        assert_eq!(a.trial, b.trial);
        assert!(verify_counterexample(&hub(), Mode::Steady, &a, EnumLimits::default()).unwrap());
    }

    #[test]
    fn maximal_matchings_stay_balanced() {
        let opts = SearchOptions {
            trials: 300,
            max_vertices: 6,
            ..SearchOptions::default()
        };
        assert!(search_unbalanced(&BuiltinFeature::MaxMatching, Mode::Steady, opts)
            .unwrap()
            .is_none());
    }
}
