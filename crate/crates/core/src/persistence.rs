//! Steady and ranging persistence.
//!
//! A set's activity is the union of half-open intervals `[w_i, w_{i+1})` of
//! consecutive critical levels at which it is an F-set. The steady diagram
//! has one cornerpoint per maximal activity interval; the ranging diagram has
//! one cornerpoint per set, spanning first birth to last death. With these
//! conventions, counting cornerpoints with `birth <= u` and `death > v`
//! gives exactly the number of steady (resp. ranging) F-sets at `(u, v)`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::features::{check_graph_kind, EnumLimits, Feature, FeatureSet};
use crate::graph::{Filtration, Snapshot, WeightedGraph};

/// Half-open `[start, end)`; `end` may be `+inf`.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct Interval {
    pub start: f64,
    pub end: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ActivityProfile {
    pub set: FeatureSet,
    /// Sorted, disjoint and maximal.
    pub intervals: Vec<Interval>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Steady,
    Ranging,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Steady => "steady",
            Mode::Ranging => "ranging",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "steady" => Some(Mode::Steady),
            "ranging" => Some(Mode::Ranging),
            _ => None,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Cornerpoint {
    pub birth: f64,
    pub death: f64,
    pub multiplicity: usize,
    /// Sets realising this cornerpoint, in canonical order. Empty when the
    /// diagram was loaded without its source graph.
    pub witnesses: Vec<FeatureSet>,
}

impl Cornerpoint {
    pub fn persistence(&self) -> f64 {
        self.death - self.birth
    }

    pub fn is_at_infinity(&self) -> bool {
        self.death == f64::INFINITY
    }
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct DiagramMeta {
    pub feature: String,
    pub mode: Option<Mode>,
    pub source: String,
}

/// A finite persistence diagram. The diagonal is implicit.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct PersistenceDiagram {
    pub meta: DiagramMeta,
    cornerpoints: Vec<Cornerpoint>,
}

fn point_order(a: (f64, f64), b: (f64, f64)) -> Ordering {
    a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1))
}

impl PersistenceDiagram {
    /// Builds a diagram from cornerpoints, merging equal `(birth, death)`
    /// pairs into one entry with summed multiplicity.
    pub fn new(meta: DiagramMeta, points: impl IntoIterator<Item = Cornerpoint>) -> Result<Self> {
        let mut pts: Vec<Cornerpoint> = points.into_iter().collect();
        for p in &pts {
            if p.birth.is_nan() || p.death.is_nan() || !p.birth.is_finite() || p.birth >= p.death || p.multiplicity == 0
            {
                return Err(Error::InvalidQuery(format!(
                    "({}, {}) x{} is not a cornerpoint",
                    p.birth, p.death, p.multiplicity
                )));
            }
        }
        pts.sort_by(|a, b| point_order((a.birth, a.death), (b.birth, b.death)));
        let mut merged: Vec<Cornerpoint> = Vec::with_capacity(pts.len());
        for p in pts {
            match merged.last_mut() {
                Some(last) if last.birth == p.birth && last.death == p.death => {
                    last.multiplicity += p.multiplicity;
                    last.witnesses.extend(p.witnesses);
                }
                _ => merged.push(p),
            }
        }
        for c in &mut merged {
            c.witnesses.sort_unstable();
        }
        Ok(PersistenceDiagram {
            meta,
            cornerpoints: merged,
        })
    }

    /// Diagram from bare `(birth, death)` points, each with multiplicity one.
    pub fn from_pairs(pairs: &[(f64, f64)]) -> Result<Self> {
        Self::new(
            DiagramMeta::default(),
            pairs.iter().map(|&(birth, death)| Cornerpoint {
                birth,
                death,
                multiplicity: 1,
                witnesses: Vec::new(),
            }),
        )
    }

    pub fn cornerpoints(&self) -> &[Cornerpoint] {
        &self.cornerpoints
    }

    pub fn is_empty(&self) -> bool {
        self.cornerpoints.is_empty()
    }

    /// Total number of cornerpoints counted with multiplicity.
    pub fn total_multiplicity(&self) -> usize {
        self.cornerpoints.iter().map(|c| c.multiplicity).sum()
    }

    /// `(birth, death, multiplicity)` triples, ignoring witnesses and metadata.
    pub fn points(&self) -> Vec<(f64, f64, usize)> {
        self.cornerpoints
            .iter()
            .map(|c| (c.birth, c.death, c.multiplicity))
            .collect()
    }

    /// Same cornerpoints with the same multiplicities.
    pub fn same_points(&self, other: &PersistenceDiagram) -> bool {
        self.points() == other.points()
    }

    /// Sum of multiplicities of cornerpoints with `birth <= u` and
    /// `death > v`, defined for `u < v`.
    pub fn count_at(&self, u: f64, v: f64) -> Result<usize> {
        check_query(u, v)?;
        Ok(self
            .cornerpoints
            .iter()
            .filter(|c| c.birth <= u && c.death > v)
            .map(|c| c.multiplicity)
            .sum())
    }
}

fn check_query(u: f64, v: f64) -> Result<()> {
    if u.is_nan() || v.is_nan() || u >= v {
        return Err(Error::InvalidQuery(format!("need u < v, got ({u}, {v})")));
    }
    Ok(())
}

/// Evaluates the feature at every critical level and merges the results
/// into one activity profile per set, in canonical set order.
pub fn compute_activities(
    feature: &dyn Feature,
    filt: &Filtration<'_>,
    limits: EnumLimits,
) -> Result<Vec<ActivityProfile>> {
    check_graph_kind(feature, filt.graph())?;
    let levels = filt.critical_levels();
    let per_level: Vec<Vec<FeatureSet>> = (0..levels.len())
        .into_par_iter()
        .map(|i| feature.enumerate(&filt.snapshot_at_index(i), limits))
        .collect::<Result<_>>()?;

    let mut active: HashMap<FeatureSet, Vec<usize>> = HashMap::new();
    for (i, sets) in per_level.into_iter().enumerate() {
        for set in sets {
            active.entry(set).or_default().push(i);
        }
    }

    let end_of = |i: usize| levels.get(i + 1).copied().unwrap_or(f64::INFINITY);
    let mut profiles: Vec<ActivityProfile> = active
        .into_iter()
        .map(|(set, idx)| {
            let mut intervals: Vec<Interval> = Vec::new();
            let mut run_start = idx[0];
            for w in idx.windows(2) {
                if w[1] != w[0] + 1 {
                    intervals.push(Interval {
                        start: levels[run_start],
                        end: end_of(w[0]),
                    });
                    run_start = w[1];
                }
            }
            intervals.push(Interval {
                start: levels[run_start],
                end: end_of(*idx.last().unwrap()),
            });
            ActivityProfile { set, intervals }
        })
        .collect();
    profiles.sort_unstable_by(|a, b| a.set.cmp(&b.set));
    Ok(profiles)
}

/// One cornerpoint per maximal activity interval.
pub fn steady_diagram(meta: DiagramMeta, activities: &[ActivityProfile]) -> PersistenceDiagram {
    let points = activities.iter().flat_map(|a| {
        a.intervals.iter().map(|iv| Cornerpoint {
            birth: iv.start,
            death: iv.end,
            multiplicity: 1,
            witnesses: vec![a.set.clone()],
        })
    });
    PersistenceDiagram::new(meta, points).expect("activity intervals are nonempty")
}

/// One cornerpoint per set: first birth to the end of the last interval.
pub fn ranging_diagram(meta: DiagramMeta, activities: &[ActivityProfile]) -> PersistenceDiagram {
    let points = activities
        .iter()
        .filter(|a| !a.intervals.is_empty())
        .map(|a| Cornerpoint {
            birth: a.intervals[0].start,
            death: a.intervals[a.intervals.len() - 1].end,
            multiplicity: 1,
            witnesses: vec![a.set.clone()],
        });
    PersistenceDiagram::new(meta, points).expect("activity intervals are nonempty")
}

/// Full pipeline: filtration, activities, then the diagram for `mode`.
pub fn compute_diagram(
    feature: &dyn Feature,
    graph: &WeightedGraph,
    mode: Mode,
    limits: EnumLimits,
) -> Result<PersistenceDiagram> {
    let filt = Filtration::new(graph);
    let activities = compute_activities(feature, &filt, limits)?;
    let meta = DiagramMeta {
        feature: feature.name().to_owned(),
        mode: Some(mode),
        source: String::new(),
    };
    Ok(match mode {
        Mode::Steady => steady_diagram(meta, &activities),
        Mode::Ranging => ranging_diagram(meta, &activities),
    })
}

/// Number of steady F-sets at `(u, v)`, read off a steady diagram.
pub fn sigma_at(d: &PersistenceDiagram, u: f64, v: f64) -> Result<usize> {
    d.count_at(u, v)
}

/// Number of ranging F-sets at `(u, v)`, read off a ranging diagram.
pub fn rho_at(d: &PersistenceDiagram, u: f64, v: f64) -> Result<usize> {
    d.count_at(u, v)
}

/// Definition-level evaluation of the steady and ranging counts, with no
/// diagram involved. Snapshots are only distinct at critical levels, so the
/// quantifiers over levels reduce to `u`, `v` and the critical levels
/// between or beyond them. Candidate sets come from the enumerator at one
/// level; membership at every other level is decided by the predicate.
pub struct BruteForce<'f, 'g> {
    feature: &'f dyn Feature,
    filt: &'f Filtration<'g>,
    limits: EnumLimits,
    snapshots: HashMap<Option<usize>, Snapshot<'g>>,
    fsets: HashMap<Option<usize>, Vec<FeatureSet>>,
}

impl<'f, 'g> BruteForce<'f, 'g> {
    pub fn new(feature: &'f dyn Feature, filt: &'f Filtration<'g>, limits: EnumLimits) -> Result<Self> {
        check_graph_kind(feature, filt.graph())?;
        Ok(BruteForce {
            feature,
            filt,
            limits,
            snapshots: HashMap::new(),
            fsets: HashMap::new(),
        })
    }

    fn snapshot(&mut self, w: f64) -> &Snapshot<'g> {
        let key = self.filt.level_index(w);
        let graph = self.filt.graph();
        self.snapshots.entry(key).or_insert_with(|| Snapshot::new(graph, w))
    }

    fn fsets_at(&mut self, w: f64) -> Result<Vec<FeatureSet>> {
        let key = self.filt.level_index(w);
        if let Some(v) = self.fsets.get(&key) {
            return Ok(v.clone());
        }
        let (feature, limits) = (self.feature, self.limits);
        let sets = feature.enumerate(self.snapshot(w), limits)?;
        self.fsets.insert(key, sets.clone());
        Ok(sets)
    }

    fn holds_at(&mut self, w: f64, set: &FeatureSet) -> bool {
        let feature = self.feature;
        feature.holds(self.snapshot(w), set)
    }

    /// Sets that are F-sets at every level `w` with `u <= w <= v`.
    pub fn sigma(&mut self, u: f64, v: f64) -> Result<usize> {
        check_query(u, v)?;
        let mut checks = vec![v];
        checks.extend(self.filt.critical_levels().iter().copied().filter(|&w| u < w && w < v));
        let candidates = self.fsets_at(u)?;
        Ok(candidates
            .iter()
            .filter(|x| checks.iter().all(|&w| self.holds_at(w, x)))
            .count())
    }

    /// Sets that are F-sets at some `w <= u` and at some `w' >= v`.
    pub fn rho(&mut self, u: f64, v: f64) -> Result<usize> {
        check_query(u, v)?;
        let mut early = vec![u];
        early.extend(self.filt.critical_levels().iter().copied().filter(|&w| w <= u));
        let mut late = vec![v];
        late.extend(self.filt.critical_levels().iter().copied().filter(|&w| w > v));
        let mut seen: Vec<FeatureSet> = Vec::new();
        for w in early {
            seen.extend(self.fsets_at(w)?);
        }
        seen.sort_unstable();
        seen.dedup();
        Ok(seen
            .iter()
            .filter(|x| late.iter().any(|&w| self.holds_at(w, x)))
            .count())
    }
}

pub fn brute_force_sigma(
    feature: &dyn Feature,
    filt: &Filtration<'_>,
    u: f64,
    v: f64,
    limits: EnumLimits,
) -> Result<usize> {
    BruteForce::new(feature, filt, limits)?.sigma(u, v)
}

pub fn brute_force_rho(
    feature: &dyn Feature,
    filt: &Filtration<'_>,
    u: f64,
    v: f64,
    limits: EnumLimits,
) -> Result<usize> {
    BruteForce::new(feature, filt, limits)?.rho(u, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::features::BuiltinFeature;
    use crate::graph::{GraphKind, WeightedGraph};

    fn profile(intervals: &[(f64, f64)]) -> ActivityProfile {
        ActivityProfile {
            set: FeatureSet::from_vertices([crate::graph::VertexId(0)]),
            intervals: intervals.iter().map(|&(start, end)| Interval { start, end }).collect(),
        }
    }

    #[test]
    fn split_activity_gives_two_steady_points_and_one_ranging() {
        let a = [profile(&[(2.0, 3.0), (4.0, 5.0)])];
        let s = steady_diagram(DiagramMeta::default(), &a);
        assert_eq!(s.points(), vec![(2.0, 3.0, 1), (4.0, 5.0, 1)]);
        let r = ranging_diagram(DiagramMeta::default(), &a);
        assert_eq!(r.points(), vec![(2.0, 5.0, 1)]);

        assert_eq!(sigma_at(&s, 2.0, 2.5).unwrap(), 1);
        assert_eq!(sigma_at(&s, 3.5, 4.5).unwrap(), 0);
        assert_eq!(rho_at(&r, 3.5, 4.5).unwrap(), 1);
    }

    #[test]
    fn infinite_and_single_interval() {
        let a = [profile(&[(1.0, f64::INFINITY)])];
        let s = steady_diagram(DiagramMeta::default(), &a);
        let r = ranging_diagram(DiagramMeta::default(), &a);
        assert_eq!(s.points(), vec![(1.0, f64::INFINITY, 1)]);
        assert_eq!(s, r);
        let a = [profile(&[(1.0, 2.0), (6.0, f64::INFINITY)])];
        assert_eq!(
            ranging_diagram(DiagramMeta::default(), &a).points(),
            vec![(1.0, f64::INFINITY, 1)]
        );
    }

    #[test]
    fn equal_points_merge_with_both_witnesses() {
        let a = ActivityProfile {
            set: FeatureSet::from_vertices([crate::graph::VertexId(1)]),
            intervals: vec![Interval { start: 0.0, end: 7.0 }],
        };
        let b = ActivityProfile {
            set: FeatureSet::from_vertices([crate::graph::VertexId(0)]),
            intervals: vec![Interval { start: 0.0, end: 7.0 }],
        };
        let d = steady_diagram(DiagramMeta::default(), &[a, b]);
        assert_eq!(d.cornerpoints().len(), 1);
        let c = &d.cornerpoints()[0];
        assert_eq!(c.multiplicity, 2);
        assert_eq!(c.witnesses.len(), 2);
        assert!(c.witnesses[0] < c.witnesses[1]);
    }

    #[test]
    fn query_domain_is_strictly_above_diagonal() {
        let d = PersistenceDiagram::default();
        assert!(matches!(d.count_at(1.0, 1.0), Err(Error::InvalidQuery(_))));
        assert!(matches!(d.count_at(2.0, 1.0), Err(Error::InvalidQuery(_))));
        assert!(d.count_at(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn activities_follow_critical_levels() {
        // star centre is a hub from 1 on; never-active sets are absent
        let g = WeightedGraph::from_edges(GraphKind::Undirected, 4, &[(0, 1, 1.0), (0, 2, 2.0), (0, 3, 3.0)]).unwrap();
        let f = Filtration::new(&g);
        let acts = compute_activities(&BuiltinFeature::from_name("hub").unwrap(), &f, EnumLimits::default()).unwrap();
        // level 1: single edge, equal degrees -> no hub; from 2 on the centre wins
        assert_eq!(acts.len(), 1);
        assert_eq!(
            acts[0].intervals,
            vec![Interval {
                start: 2.0,
                end: f64::INFINITY
            }]
        );
    }

    #[test]
    fn triangle_max_matching_brute_force() {
        let g = WeightedGraph::from_edges(GraphKind::Undirected, 3, &[(0, 1, 1.0), (1, 2, 2.0), (0, 2, 3.0)]).unwrap();
        let f = Filtration::new(&g);
        let mm = BuiltinFeature::MaxMatching;
        assert_eq!(brute_force_sigma(&mm, &f, 1.0, 1.5, EnumLimits::default()).unwrap(), 1);
        assert_eq!(brute_force_rho(&mm, &f, 1.0, 1.5, EnumLimits::default()).unwrap(), 1);
        // below all levels nothing exists
        assert_eq!(brute_force_sigma(&mm, &f, 0.0, 0.5, EnumLimits::default()).unwrap(), 0);
        assert_eq!(brute_force_rho(&mm, &f, -3.0, 0.5, EnumLimits::default()).unwrap(), 0);
    }
}
