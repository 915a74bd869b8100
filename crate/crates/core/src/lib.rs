//! Executable searches and checkable certificates for the combinatorial side
//! of genus-zero fibre products of branched covers of the Riemann sphere.
//!
//! * [`partition`]: partitions as ramification and cycle types.
//! * [`ramification`]: Riemann–Hurwitz bookkeeping and the numerical scans.
//! * [`perm`]: permutations, orbits, pair block systems, canonical involutions.
//! * [`search`]: the tuple searches in `S_24`, `S_48`, `S_120` and `S_10`.
//! * [`lattes`]: ramification of Lattès maps on finite torsion models.
//! * [`cli`]: the batch driver behind the `ramsearch` binary.

pub mod cli;
pub mod error;
pub mod lattes;
pub mod partition;
pub mod perm;
pub mod ramification;
pub mod search;

pub use error::Error;
pub use partition::{partitions_of, Partition};
pub use perm::Permutation;
pub use ramification::RamificationProfile;
