use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Transform {
    Identity,
    /// `1 / w`.
    Inverse,
    /// `max(w) - w`.
    NegateShift,
    /// Product of two weight columns, by name or index. Only meaningful
    /// while building from an edge table.
    Product(String, String),
}

impl FromStr for Transform {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "identity" => Ok(Transform::Identity),
            "inverse" => Ok(Transform::Inverse),
            "negshift" | "negate_shift" => Ok(Transform::NegateShift),
            "product" => Ok(Transform::Product("0".into(), "1".into())),
            _ => Err(Error::Transform(format!("unknown transform `{s}`"))),
        }
    }
}

impl fmt::Display for Transform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Transform::Identity => f.write_str("identity"),
            Transform::Inverse => f.write_str("inverse"),
            Transform::NegateShift => f.write_str("negshift"),
            Transform::Product(a, b) => write!(f, "product({a},{b})"),
        }
    }
}

pub fn transform_weights(g: &WeightedGraph, t: &Transform) -> Result<WeightedGraph> {
    let w = g.weights();
    let out: Vec<f64> = match t {
        Transform::Identity => return Ok(g.clone()),
        Transform::Inverse => {
            if let Some(e) = g.edges().iter().find(|e| e.weight == 0.0) {
                return Err(Error::Transform(format!(
                    "cannot invert zero weight on {}",
                    g.edge_label(e.id)
                )));
            }
            w.iter().map(|x| 1.0 / x).collect()
        }
        Transform::NegateShift => {
            let max = w.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            w.iter().map(|x| max - x).collect()
        }
        Transform::Product(..) => {
            return Err(Error::Transform(
                "product needs the raw weight columns of an edge table".into(),
            ));
        }
    };
    g.with_weights(&out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphKind;

    fn g124() -> WeightedGraph {
        WeightedGraph::from_edges(GraphKind::Undirected, 3, &[(0, 1, 1.0), (1, 2, 2.0), (0, 2, 4.0)]).unwrap()
    }

    #[test]
    fn reference_transforms() {
        let g = g124();
        assert_eq!(
            transform_weights(&g, &Transform::Inverse).unwrap().weights(),
            vec![1.0, 0.5, 0.25]
        );
        assert_eq!(
            transform_weights(&g, &Transform::NegateShift).unwrap().weights(),
            vec![3.0, 2.0, 0.0]
        );
        assert_eq!(
            transform_weights(&g, &Transform::Identity).unwrap().weights(),
            g.weights()
        );
    }

    #[test]
    fn zero_weight_cannot_be_inverted() {
        let g = WeightedGraph::from_edges(GraphKind::Undirected, 2, &[(0, 1, 0.0)]).unwrap();
        assert!(matches!(
            transform_weights(&g, &Transform::Inverse),
            Err(Error::Transform(_))
        ));
    }

    #[test]
    fn names_parse() {
        assert_eq!("negshift".parse::<Transform>().unwrap(), Transform::NegateShift);
        assert!("square".parse::<Transform>().is_err());
    }
}
