//! Concrete finite constructions: ordinal chains and their witnesses, the
//! two-point minimal cutset, block antichains, tree-order chains, and the
//! dense subset of a maximal chain.

mod blocks;
mod ordinal;
mod tree;

pub use blocks::{block_antichain, BlockPartition};
pub use ordinal::{ordinal_chain, ordinal_witness, Direction, Witness};
pub use tree::{
    lower_set, separator_count, tree_chain_family, tree_order_compare, TreeChain, TreeNode,
    TreeUniverse, MAX_TREE_ELEMENTS,
};

use crate::analysis::TABLE_LIMIT;
use crate::error::{capacity, usage, Result};
use crate::lattice::{Family, GroundSize, MaximalChain, SubsetMask};

/// All sets containing exactly one of `x` and `y`. This is a minimal cutset
/// that avoids both `∅` and the full set.
pub fn separating_pair_cutset(x: usize, y: usize, n: GroundSize) -> Result<Family> {
    if x == y || x >= n.get() || y >= n.get() {
        return Err(usage(format!(
            "need two distinct elements below n={n}, got x={x}, y={y}"
        )));
    }
    capacity("ground size", n.get(), TABLE_LIMIT)?;
    let pair = 1u64 << x | 1u64 << y;
    let members = (0..=n.full_bits())
        .filter(|s| (s & pair).count_ones() == 1)
        .map(|s| SubsetMask::from_raw(s, n))
        .collect();
    Ok(Family::from_sorted_unchecked(n, members))
}

/// For each element `x`, the smallest set of the chain containing `x`.
/// Entry `x` of the result belongs to element `x`.
pub fn dense_subset(chain: &MaximalChain) -> Vec<SubsetMask> {
    let n = chain.ground().get();
    let mut out = vec![chain.ground().empty(); n];
    let mut acc = chain.ground().empty();
    for &x in chain.perm() {
        acc = acc.with(x as usize);
        out[x as usize] = acc;
    }
    out
}

/// True when the intersection of any two sets is again in the list.
pub fn is_intersection_closed(sets: &[SubsetMask]) -> bool {
    sets.iter()
        .all(|&a| sets.iter().all(|&b| sets.contains(&a.intersection(b))))
}
