//! The tuple searches.
//!
//! * `e6`, `e7`, `e8`: `g1, g2, g3, g4` in `S_24`, `S_48`, `S_120` of types
//!   `2^(n/2)`, `3^(n/3)`, `3^8` / `4^12` / `5^24` and a transposition, with
//!   `g1 g2 g3 g4` a transposition and the group transitive. `g2` is fixed to
//!   `(1,2,3)(4,5,6)...` and `g1` runs over canonical representatives; each
//!   `g1` is completed to `(g3, g4, g5)` directly.
//! * [`s10_search`]: five-element products to 1 in `S_10`.
//! * [`dn_witness_search`]: the `D_n` tuples on `4n` points for small `n`.

mod case;
mod complete;
mod dn;
mod graph;
mod run;
mod s10;

pub use case::{allowed_product_types, CaseId, SearchCase};
pub use complete::complete_pair;
pub use dn::dn_witness_search;
pub use graph::{feasible, partial_components, GraphFilter, PartialGraph};
pub use run::{run_case, verify_solution, RunOptions, SearchStats, Solution, SolutionRecord, VerificationReport};
pub use s10::{s10_count, s10_search, XReading};
