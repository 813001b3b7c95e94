//! Steady and ranging persistence diagrams of graph-theoretical features
//! (hubs, Eulerian sets, matchings, independent sets, kernels) on weighted
//! graphs and digraphs, with bottleneck distances, diagonal-gap selection
//! and brute-force oracles.

pub mod diagram;
pub mod error;
pub mod features;
pub mod graph;
pub mod hubs;
pub mod io;
pub mod persistence;

pub use error::{Error, Result};
pub use features::{BuiltinFeature, EnumLimits, Feature, FeatureSet};
pub use graph::{Filtration, GraphBuilder, GraphKind, Snapshot, WeightedGraph};
pub use persistence::{compute_diagram, Mode, PersistenceDiagram};
