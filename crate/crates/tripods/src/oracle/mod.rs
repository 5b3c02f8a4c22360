//! Independent brute-force oracles and deterministic instance generators.
//!
//! The oracles deliberately avoid the production code paths they are used to
//! check: tripods are enumerated by direct path-triple search rather than
//! through the reachability characterisation of [`crate::detect`], and
//! maximum linkages are recomputed by disjoint-path search rather than by
//! flow. Size caps are hard guards with explicit errors, never silent
//! truncation.

mod brute;
pub mod gen;
mod spec;

pub use brute::{
    brute_edge_packing_number, brute_max_disjoint_paths, brute_min_hitting_set,
    brute_min_separator_size, brute_packing_at_least, brute_packing_number,
    enumerate_tripods, find_disjoint_tripods, find_edge_disjoint_tripods, SearchBudget,
};
pub use spec::{generate, InstanceSpec, SpecParseError};

/// Errors raised by the oracles and generators.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("instance has {size} vertices, above the oracle cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("instance has {size} edges, above the oracle cap {cap}")]
    EdgeCapExceeded { size: usize, cap: usize },
    #[error("search budget exhausted after {0} expansions")]
    BudgetExhausted(u64),
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),
}
