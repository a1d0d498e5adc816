//! Binomial trees, witnesses and witness-based algorithms.

mod search;
mod tree;

pub use search::{
    count_grundy_colorings_achieving, local_grundy_at_least_k, sparse_upper_bound, xp_grundy_at_least_k, Witness,
    BALL_CAP, XP_SIZE_CAP, XP_SUBSET_CAP,
};
pub use tree::{
    binomial_tree, canonical_level_coloring, dominant_subtree_count, remove_dominant_subtrees, PrunedTree,
    RootedTree, BINOMIAL_CAP,
};
