//! Finite digit sequences under the tree order: a proper extension is larger,
//! otherwise the first differing digit decides.
//!
//! The universe with alphabet `k` and depth `λ` holds the partial sequences
//! (length `< λ`) and the leaves (length exactly `λ`). Indexing the partials
//! by their sorted position turns each leaf `f` into the set of partials below
//! it, and those sets form a chain.

use std::cmp::Ordering;

use crate::error::{capacity, usage, Result};
use crate::lattice::{Chain, GroundSize, SubsetMask, MAX_GROUND};

/// Upper bound on how many sequences a universe may enumerate.
pub const MAX_TREE_ELEMENTS: usize = 1 << 22;

/// A digit sequence, compared in tree order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TreeNode {
    digits: Vec<usize>,
}

impl TreeNode {
    pub fn digits(&self) -> &[usize] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// True when `other` is a proper extension of `self`.
    pub fn is_proper_prefix_of(&self, other: &TreeNode) -> bool {
        self.len() < other.len() && other.digits.starts_with(&self.digits)
    }
}

impl Ord for TreeNode {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.digits.iter().zip(&other.digits).find(|(a, b)| a != b) {
            Some((a, b)) => a.cmp(b),
            None => self.len().cmp(&other.len()),
        }
    }
}

impl PartialOrd for TreeNode {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Display for TreeNode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("(")?;
        for (i, d) in self.digits.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str(")")
    }
}

/// All sequences over `{0, …, k-1}` of length at most `depth`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TreeUniverse {
    arity: usize,
    depth: usize,
}

impl TreeUniverse {
    pub fn new(arity: usize, depth: usize) -> Result<Self> {
        if arity == 0 {
            return Err(usage("tree alphabet must have at least one digit"));
        }
        let u = TreeUniverse { arity, depth };
        let total = u.partial_count().saturating_add(u.leaf_count());
        capacity("tree universe size", total, MAX_TREE_ELEMENTS)?;
        Ok(u)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// `Σ_{i<depth} k^i`
    pub fn partial_count(&self) -> usize {
        (0..self.depth).fold(0usize, |acc, i| {
            acc.saturating_add(self.arity.saturating_pow(i as u32))
        })
    }

    pub fn leaf_count(&self) -> usize {
        self.arity.saturating_pow(self.depth as u32)
    }

    pub fn node(&self, digits: &[usize]) -> Result<TreeNode> {
        if digits.len() > self.depth {
            return Err(usage(format!(
                "sequence of length {} exceeds depth {}",
                digits.len(),
                self.depth
            )));
        }
        if let Some(d) = digits.iter().find(|&&d| d >= self.arity) {
            return Err(usage(format!(
                "digit {d} outside alphabet of size {}",
                self.arity
            )));
        }
        Ok(TreeNode {
            digits: digits.to_vec(),
        })
    }

    pub fn contains(&self, node: &TreeNode) -> bool {
        node.len() <= self.depth && node.digits.iter().all(|&d| d < self.arity)
    }

    pub fn is_leaf(&self, node: &TreeNode) -> bool {
        self.contains(node) && node.len() == self.depth
    }

    /// Sequences shorter than the depth, ascending in tree order.
    pub fn partials(&self) -> Vec<TreeNode> {
        let mut out = Vec::with_capacity(self.partial_count());
        if self.depth > 0 {
            self.preorder(&mut Vec::new(), self.depth - 1, &mut out);
        }
        out
    }

    /// Sequences of length exactly the depth, ascending in tree order.
    pub fn leaves(&self) -> Vec<TreeNode> {
        let mut out = Vec::with_capacity(self.leaf_count());
        self.collect_level(&mut Vec::new(), &mut out);
        out
    }

    /// Every element of the universe, ascending.
    pub fn elements(&self) -> Vec<TreeNode> {
        let mut out = Vec::new();
        self.preorder(&mut Vec::new(), self.depth, &mut out);
        out
    }

    // Preorder with children in digit order is exactly the tree order.
    fn preorder(&self, prefix: &mut Vec<usize>, max_len: usize, out: &mut Vec<TreeNode>) {
        out.push(TreeNode {
            digits: prefix.clone(),
        });
        if prefix.len() == max_len {
            return;
        }
        for d in 0..self.arity {
            prefix.push(d);
            self.preorder(prefix, max_len, out);
            prefix.pop();
        }
    }

    fn collect_level(&self, prefix: &mut Vec<usize>, out: &mut Vec<TreeNode>) {
        if prefix.len() == self.depth {
            out.push(TreeNode {
                digits: prefix.clone(),
            });
            return;
        }
        for d in 0..self.arity {
            prefix.push(d);
            self.collect_level(prefix, out);
            prefix.pop();
        }
    }
}

/// Tree-order comparison of two members of `universe`.
pub fn tree_order_compare(universe: &TreeUniverse, f: &TreeNode, g: &TreeNode) -> Result<Ordering> {
    for node in [f, g] {
        if !universe.contains(node) {
            return Err(usage(format!(
                "{node} is not in the universe (k={}, depth={})",
                universe.arity, universe.depth
            )));
        }
    }
    Ok(f.cmp(g))
}

/// The set of partials strictly below `f`, indexed by position in `partials`.
pub fn lower_set(partials: &[TreeNode], f: &TreeNode) -> Result<SubsetMask> {
    capacity("number of partial sequences", partials.len(), MAX_GROUND)?;
    let ground = GroundSize::new(partials.len())?;
    let bits = partials
        .iter()
        .enumerate()
        .filter(|(_, d)| *d < f)
        .fold(0u64, |acc, (i, _)| acc | 1 << i);
    Ok(SubsetMask::from_raw(bits, ground))
}

/// The chain of lower sets of all leaves, with the partials as ground set.
#[derive(Debug, Clone)]
pub struct TreeChain {
    pub universe: TreeUniverse,
    /// Ground element `i` is `partials[i]`.
    pub partials: Vec<TreeNode>,
    pub chain: Chain,
    /// Leaves whose lower set equals that of the preceding leaf.
    pub collapsed: usize,
}

pub fn tree_chain_family(arity: usize, depth: usize) -> Result<TreeChain> {
    if arity < 2 || depth < 1 {
        return Err(usage(format!(
            "tree chain needs k >= 2 and depth >= 1 (got k={arity}, depth={depth})"
        )));
    }
    let universe = TreeUniverse::new(arity, depth)?;
    capacity(
        "number of partial sequences",
        universe.partial_count(),
        MAX_GROUND,
    )?;
    let partials = universe.partials();
    let ground = GroundSize::new(partials.len())?;

    let mut sets: Vec<SubsetMask> = Vec::new();
    let mut collapsed = 0;
    for leaf in universe.leaves() {
        let c = lower_set(&partials, &leaf)?;
        if sets.last() == Some(&c) {
            collapsed += 1;
        } else {
            sets.push(c);
        }
    }
    let chain = Chain::new(ground, sets)?;
    Ok(TreeChain {
        universe,
        partials,
        chain,
        collapsed,
    })
}

/// Number of partials strictly between two leaves `f1 < f2`.
pub fn separator_count(universe: &TreeUniverse, f1: &TreeNode, f2: &TreeNode) -> Result<usize> {
    if !universe.is_leaf(f1) || !universe.is_leaf(f2) {
        return Err(usage(format!(
            "{f1} and {f2} must both be leaves of the universe"
        )));
    }
    if f1 >= f2 {
        return Err(usage(format!("separators need {f1} < {f2}")));
    }
    Ok(universe
        .partials()
        .iter()
        .filter(|d| f1 < *d && *d < f2)
        .count())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn node(u: &TreeUniverse, d: &[usize]) -> TreeNode {
        u.node(d).unwrap()
    }

    #[test]
    fn compare_examples() {
        let u = TreeUniverse::new(2, 2).unwrap();
        assert_eq!(
            tree_order_compare(&u, &node(&u, &[]), &node(&u, &[0])).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            tree_order_compare(&u, &node(&u, &[0, 1]), &node(&u, &[1])).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            tree_order_compare(&u, &node(&u, &[1, 0]), &node(&u, &[1, 0])).unwrap(),
            Ordering::Equal
        );
        assert_eq!(
            tree_order_compare(&u, &node(&u, &[1]), &node(&u, &[0, 1])).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn compare_rejects_foreign_digits() {
        let u = TreeUniverse::new(2, 2).unwrap();
        let big = TreeUniverse::new(3, 2).unwrap();
        assert!(u.node(&[2]).is_err());
        assert!(u.node(&[0, 0, 0]).is_err());
        assert!(tree_order_compare(&u, &node(&big, &[2]), &node(&u, &[0])).is_err());
    }

    #[test]
    fn universe_sizes() {
        for k in 1..=3 {
            for depth in 0..=4 {
                let u = TreeUniverse::new(k, depth).unwrap();
                let d = u.partials();
                let leaves = u.leaves();
                assert_eq!(d.len(), (0..depth).map(|i| k.pow(i as u32)).sum::<usize>());
                assert_eq!(leaves.len(), k.pow(depth as u32));
                assert!(d.windows(2).all(|w| w[0] < w[1]));
                assert!(leaves.windows(2).all(|w| w[0] < w[1]));
                assert_eq!(u.elements().len(), d.len() + leaves.len());
            }
        }
    }

    #[test]
    fn chain_examples() {
        let tc = tree_chain_family(2, 2).unwrap();
        assert_eq!(
            tc.partials
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>(),
            ["()", "(0)", "(1)"]
        );
        let bits: Vec<u64> = tc.chain.sets().iter().map(|s| s.bits()).collect();
        assert_eq!(bits, vec![0b011, 0b111]);
        assert_eq!(tc.collapsed, 2);

        let tc = tree_chain_family(2, 1).unwrap();
        let bits: Vec<u64> = tc.chain.sets().iter().map(|s| s.bits()).collect();
        assert_eq!(bits, vec![0b1]);

        assert_eq!(tree_chain_family(3, 2).unwrap().chain.len(), 3);
    }

    #[test]
    fn chain_capacity() {
        // 1 + 2 + … + 32 = 63 partials fits, one more level does not.
        assert!(tree_chain_family(2, 6).is_ok());
        assert!(tree_chain_family(2, 7).is_err());
        assert!(tree_chain_family(1, 3).is_err());
        assert!(tree_chain_family(2, 0).is_err());
    }

    #[test]
    fn separator_examples() {
        let u = TreeUniverse::new(2, 2).unwrap();
        assert_eq!(
            separator_count(&u, &node(&u, &[0, 1]), &node(&u, &[1, 0])).unwrap(),
            1
        );
        assert_eq!(
            separator_count(&u, &node(&u, &[0, 0]), &node(&u, &[0, 1])).unwrap(),
            0
        );
        let u3 = TreeUniverse::new(2, 3).unwrap();
        assert_eq!(
            separator_count(&u3, &node(&u3, &[0, 1, 1]), &node(&u3, &[1, 0, 0])).unwrap(),
            2
        );
    }

    #[test]
    fn separator_preconditions() {
        let u = TreeUniverse::new(2, 2).unwrap();
        assert!(separator_count(&u, &node(&u, &[1, 0]), &node(&u, &[0, 1])).is_err());
        assert!(separator_count(&u, &node(&u, &[0]), &node(&u, &[1, 1])).is_err());
        assert!(separator_count(&u, &node(&u, &[0, 0]), &node(&u, &[0, 0])).is_err());
    }
}
