//! Exact computation of the partition dimension and the twin number of
//! small connected graphs, together with the constructive bounds and the
//! order-(n-1)/(n-2) characterizations built on them.

pub mod bounds;
pub mod dist;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod partition;
pub mod solver;
pub mod twins;

pub use bounds::{Bounds, LowerBound, LowerReason, UpperBound, UpperReason};
pub use dist::{diameter, distances, DistanceMatrix};
pub use error::{Error, Result};
pub use families::FamilySpec;
pub use graph::Graph;
pub use graph6::{parse_graph6, write_graph6};
pub use partition::{is_locating_partition, is_locating_set, Partition};
pub use solver::{
    metric_dimension, partition_dimension, partition_dimension_naive, Outcome, SolveResult,
};
pub use twins::{twin_decomposition, TwinClass, TwinDecomposition, TwinKind};
