//! Exact solvers for the Grundy and weak Grundy numbers.

mod dp;
mod oracle;

pub use dp::{
    fill_table, grundy_number_dp, grundy_number_dp_with, weak_grundy_number_dp, weak_grundy_number_dp_with,
    DpConfig, DpTable, DP_CAP, DP_HARD_CAP,
};
pub(crate) use dp::subsets_of_size;
pub use oracle::{
    count_assignments, find_witness, grundy_oracle, search, weak_grundy_oracle, WitnessQuery, ORACLE_CAP,
    SEARCH_CAP,
};
