//! Permutations, permutation groups with a base and strong generating set,
//! and the exhaustive automorphism and isomorphism searches used to check
//! every classification independently.

mod action;
mod group;
mod perm;
mod search;

pub use action::{is_block_partition, local_action_at, transitivity_report, LocalAction, TransitivityReport};
pub use group::{group_order, PermGroup};
pub use perm::Permutation;
pub use search::{automorphism_group, automorphism_group_with, find_isomorphism, SearchConfig, DEFAULT_GUARD};
