//! Cutsets of finite Boolean lattices.
//!
//! A cutset of `P(n)` is a family of subsets of `{0, …, n-1}` meeting every
//! maximal chain. The crate decides the cutset property and minimality by
//! reachability on the cover graph, finds longest chains, largest antichains
//! and maximal antichains inside families, and provides the finite versions
//! of the classical constructions around cutsets: ordinal chains through a
//! set, the two-point minimal cutset, block antichains, tree-order chains and
//! dense subsets of maximal chains.

pub mod analysis;
pub mod constructions;
mod error;
pub mod lattice;
pub mod oracle;
pub mod survey;
pub mod text;
pub mod verify;

pub use error::{Error, Result};
pub use lattice::{
    compare_sets, complete_to_maximal_chain, enumerate_maximal_chains, initial_segment, Chain,
    Family, GroundSize, MaximalChain, OrdinalIndex, SetOrdering, SubsetMask,
};
