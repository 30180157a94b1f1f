//! Deciding whether a family is a (minimal) cutset, measuring its chains and
//! antichains, and extracting chains and antichains from cutsets.

mod antichain;
mod extraction;
mod reach;
pub(crate) mod table;
mod width;

pub use antichain::{
    contains_maximal_antichain, is_maximal_antichain, MAXIMAL_ANTICHAIN_SEARCH_LIMIT,
};
pub use extraction::{
    extract_antichain, extract_chain, AntichainExtraction, ChainExtraction, GroupKey,
};
pub use reach::{
    find_avoiding_chain, is_cutset, is_minimal_cutset, is_nontrivial, sole_meeting_chain,
};
pub use width::{
    height_layers, largest_antichain_in_family, longest_chain_in_family, LARGEST_ANTICHAIN_LIMIT,
    LONGEST_CHAIN_LIMIT,
};

/// Largest ground size for operations that tabulate all `2^n` subsets.
pub const TABLE_LIMIT: usize = 25;
