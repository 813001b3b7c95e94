//! Diagonal-gap selection of relevant cornerpoints.
//!
//! A diagonal gap is a maximal band `lower < death - birth < upper` free of
//! cornerpoints. Gaps are ranked by decreasing width; selecting at rank `k`
//! keeps every cornerpoint lying above all of the `k` widest gaps, so the
//! selections form a nested hierarchy. Cornerpoints at infinity are always
//! selected.

use crate::error::{Error, Result};
use crate::persistence::{Cornerpoint, PersistenceDiagram};

#[derive(Copy, Clone, Debug, PartialEq)]
pub struct DiagonalGap {
    pub lower: f64,
    pub upper: f64,
}

impl DiagonalGap {
    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }
}

/// Gaps between consecutive distinct finite persistences, plus the floor gap
/// `(0, min persistence)`, sorted by decreasing width (ties: larger lower
/// bound first).
pub fn diagonal_gaps(d: &PersistenceDiagram) -> Vec<DiagonalGap> {
    let mut pers: Vec<f64> = d
        .cornerpoints()
        .iter()
        .filter(|c| !c.is_at_infinity())
        .map(Cornerpoint::persistence)
        .collect();
    pers.sort_by(f64::total_cmp);
    pers.dedup();
    let mut gaps: Vec<DiagonalGap> = std::iter::once(0.0)
        .chain(pers.iter().copied())
        .zip(pers.iter().copied())
        .map(|(lower, upper)| DiagonalGap { lower, upper })
        .collect();
    gaps.sort_by(|a, b| b.width().total_cmp(&a.width()).then(b.lower.total_cmp(&a.lower)));
    gaps
}

#[derive(Clone, Debug, PartialEq)]
pub struct GapSelection {
    pub gaps: Vec<DiagonalGap>,
    /// 1-based rank of the gap the selection was made at.
    pub index: usize,
    /// Minimum persistence of a selected proper cornerpoint.
    pub threshold: f64,
    pub selected: Vec<Cornerpoint>,
}

/// How to pick the gap for a selection.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum GapChoice {
    /// The `k`-th widest gap (1-based).
    Rank(usize),
    /// The floor gap `(0, min persistence)`: every cornerpoint is selected.
    Floor,
}

impl GapChoice {
    /// Resolves to a 1-based rank, or `None` when the diagram has no gaps.
    pub fn resolve(self, gaps: &[DiagonalGap]) -> Option<usize> {
        match self {
            GapChoice::Rank(k) => Some(k),
            GapChoice::Floor => gaps.iter().position(|g| g.lower == 0.0).map(|i| i + 1),
        }
    }
}

pub fn select_above_gap(d: &PersistenceDiagram, k: usize) -> Result<GapSelection> {
    let gaps = diagonal_gaps(d);
    if k == 0 || k > gaps.len() {
        return Err(Error::GapOutOfRange {
            index: k,
            available: gaps.len(),
        });
    }
    let threshold = gaps[..k].iter().map(|g| g.upper).fold(f64::INFINITY, f64::min);
    let selected = d
        .cornerpoints()
        .iter()
        .filter(|c| c.is_at_infinity() || c.persistence() >= threshold)
        .cloned()
        .collect();
    Ok(GapSelection {
        gaps,
        index: k,
        threshold,
        selected,
    })
}

/// Like [`select_above_gap`], but a diagram without proper cornerpoints
/// selects its cornerpoints at infinity instead of failing.
pub fn select(d: &PersistenceDiagram, choice: GapChoice) -> Result<GapSelection> {
    let gaps = diagonal_gaps(d);
    if gaps.is_empty() {
        return Ok(GapSelection {
            gaps,
            index: 0,
            threshold: f64::INFINITY,
            selected: d
                .cornerpoints()
                .iter()
                .filter(|c| c.is_at_infinity())
                .cloned()
                .collect(),
        });
    }
    let k = choice.resolve(&gaps).expect("nonempty gap list has a floor gap");
    select_above_gap(d, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn with_persistences(ps: &[f64]) -> PersistenceDiagram {
        let pairs: Vec<_> = ps.iter().enumerate().map(|(i, &p)| (i as f64, i as f64 + p)).collect();
        PersistenceDiagram::from_pairs(&pairs).unwrap()
    }

    #[test]
    fn widest_gap_first() {
        let d = with_persistences(&[0.25, 0.5, 3.0]);
        let gaps = diagonal_gaps(&d);
        assert_eq!(gaps.len(), 3);
        assert_eq!(gaps[0].lower, 0.5);
        assert_eq!(gaps[0].upper, 3.0);
        assert_eq!(gaps[0].width(), 2.5);
        let sel = select_above_gap(&d, 1).unwrap();
        assert_eq!(sel.selected.len(), 1);
        assert_eq!(sel.selected[0].persistence(), 3.0);
    }

    #[test]
    fn empty_and_single() {
        assert!(diagonal_gaps(&PersistenceDiagram::default()).is_empty());
        let gaps = diagonal_gaps(&with_persistences(&[1.0]));
        assert_eq!(gaps, vec![DiagonalGap { lower: 0.0, upper: 1.0 }]);
    }

    #[test]
    fn equal_persistences_select_everything() {
        let d = with_persistences(&[2.0, 2.0, 2.0]);
        let sel = select_above_gap(&d, 1).unwrap();
        assert_eq!(sel.gaps, vec![DiagonalGap { lower: 0.0, upper: 2.0 }]);
        assert_eq!(sel.selected.len(), 3);
    }

    #[test]
    fn out_of_range() {
        let d = with_persistences(&[1.0, 2.0]);
        assert!(matches!(select_above_gap(&d, 0), Err(Error::GapOutOfRange { .. })));
        assert!(matches!(
            select_above_gap(&d, 3),
            Err(Error::GapOutOfRange { index: 3, available: 2 })
        ));
    }

    #[test]
    fn infinite_points_always_selected() {
        let d = PersistenceDiagram::from_pairs(&[(0.0, 0.1), (0.0, 9.0), (5.0, f64::INFINITY)]).unwrap();
        let sel = select_above_gap(&d, 1).unwrap();
        assert_eq!(sel.selected.len(), 2);
        let only_inf = PersistenceDiagram::from_pairs(&[(1.0, f64::INFINITY)]).unwrap();
        assert_eq!(select(&only_inf, GapChoice::Rank(1)).unwrap().selected.len(), 1);
    }

    #[test]
    fn selections_are_nested() {
        // widths: (0,1)=1, (1,1.5)=0.5, (1.5,4)=2.5, (4,4.2)=0.2; rank 2 alone would drop 1.5
        let d = with_persistences(&[1.0, 1.5, 4.0, 4.2]);
        let mut prev = 0;
        for k in 1..=4 {
            let n = select_above_gap(&d, k).unwrap().selected.len();
            assert!(n >= prev);
            prev = n;
        }
        assert_eq!(select(&d, GapChoice::Floor).unwrap().selected.len(), 4);
    }
}
