//! Permutation arithmetic and the group-theoretic checks used on search
//! output: orbits, pair block systems and their induced actions, small group
//! orders, canonical involutions relative to a fixed 3-regular element, and
//! the two-block split for D_n-type tuples.

mod blocks;
mod canonical;
mod dn;
mod group;
mod permutation;
pub mod union_find;

pub use blocks::{block_action, minimal_block_classes, pair_block_system, BlockSystem};
pub use canonical::{canonical_involutions, AcceptAll, InvolutionTree, PredicateFilter, PrefixFilter};
pub use dn::{verify_dn_partition, DnSplit};
pub use group::{group_order_small, is_transitive, orbits, DEFAULT_ORDER_CAP};
pub use permutation::{standard_regular, Permutation};
