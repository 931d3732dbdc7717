//! Neighborhood-partition calculus, the triangle lower-bound certificate,
//! low-degree classification and closed-form bounds.

mod bounds;
mod classify;
mod lb3;
mod partition;

pub use bounds::{bound_info, evaluate_bound, BoundInfo, BoundParams, BOUNDS};
pub use classify::{classify_low_degree, Classification};
pub use lb3::{verify_lb3, Lb3Case, Lb3Certificate};
pub use partition::{
    cell_relation, check_rule5, check_rules_lemma, parse_subset, partition_neighborhood,
    partition_neighborhood_general, rule_targets, subset_key, CellRelation, IndexSet,
    NeighborhoodPartition, PartitionReport, RuleViolation, MAX_PARTITION_DEGREE,
};
