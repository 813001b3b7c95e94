//! Diagram comparison and selection.

pub mod bottleneck;
pub mod gaps;
pub mod matching;
pub mod pseudodistance;

pub use bottleneck::{bottleneck_distance, bottleneck_oracle, ORACLE_MAX_POINTS};
pub use gaps::{diagonal_gaps, select, select_above_gap, DiagonalGap, GapChoice, GapSelection};
pub use pseudodistance::{natural_pseudodistance_oracle, sup_weight_difference, PSEUDODISTANCE_MAX_VERTICES};
