//! Cyclic edge cuts.
//!
//! A set `S` of edges is a *cyclic cut* when `G - S` is disconnected and
//! every component of `G - S` contains a cycle; the cyclic
//! edge-connectivity is the size of a smallest one.

mod cut;
mod cycles;
mod ears;
mod oracle;

pub use cut::{cut_from_side, validate_cyclic_cut, CutValidation, EdgeCut};
pub use cycles::{
    canonical_cycle, enumerate_girth_cycles, find_separating_girth_cycle, SeparatingCycle,
};
pub use ears::{bridges, ear_decomposition, is_two_edge_connected, EarDecomposition};
pub use oracle::{
    cec_oracle, cec_oracle_smallest_side, size_cut_oracle, OracleResult, OracleStatus,
    DEFAULT_MAX_N, HARD_MAX_N,
};
