//! Longest chains and largest antichains inside a family.

use std::collections::VecDeque;

use crate::error::{capacity, Result};
use crate::lattice::{Chain, Family, SubsetMask};

pub const LONGEST_CHAIN_LIMIT: usize = 1 << 20;
pub const LARGEST_ANTICHAIN_LIMIT: usize = 5000;

/// A longest chain inside the family. Among longest chains the one whose
/// member sequence (bottom to top) is lexicographically smallest by bit
/// pattern is returned.
pub fn longest_chain_in_family(family: &Family) -> Result<Chain> {
    capacity(
        "family size for longest chain",
        family.len(),
        LONGEST_CHAIN_LIMIT,
    )?;
    let members = family.members();
    let count = members.len();
    if count == 0 {
        return Ok(Chain::empty(family.ground()));
    }

    let mut by_size: Vec<usize> = (0..count).collect();
    by_size.sort_by_key(|&i| std::cmp::Reverse(members[i].len()));

    // height[i]: longest chain with members[i] at the bottom.
    let mut height = vec![0usize; count];
    let mut next = vec![usize::MAX; count];
    let full = family.ground().full_bits();
    let enumerate_limit = count.ilog2() as usize + 1;
    for &i in &by_size {
        let s = members[i];
        let mut best: Option<(usize, usize)> = None;
        let mut consider = |j: usize| {
            let better = match best {
                None => true,
                Some((h, b)) => height[j] > h || (height[j] == h && j < b),
            };
            if better {
                best = Some((height[j], j));
            }
        };
        let free = full & !s.bits();
        if (free.count_ones() as usize) <= enumerate_limit {
            // Walk the proper supersets of s directly.
            let mut extra = free;
            while extra != 0 {
                let candidate = SubsetMask::from_raw(s.bits() | extra, family.ground());
                if let Ok(j) = members.binary_search(&candidate) {
                    consider(j);
                }
                extra = (extra - 1) & free;
            }
        } else {
            for (j, &t) in members.iter().enumerate() {
                if s.is_proper_subset(t) {
                    consider(j);
                }
            }
        }
        match best {
            Some((h, j)) => {
                height[i] = h + 1;
                next[i] = j;
            }
            None => height[i] = 1,
        }
    }

    // Indices follow bit-pattern order, so the first tallest index is the
    // smallest possible bottom, and `next` always picks the smallest successor.
    let top = *height.iter().max().expect("non-empty");
    let mut i = height.iter().position(|&h| h == top).expect("max exists");
    let mut sets = Vec::with_capacity(top);
    loop {
        sets.push(members[i]);
        if next[i] == usize::MAX {
            break;
        }
        i = next[i];
    }
    Ok(Chain::from_sorted_unchecked(family.ground(), sets))
}

/// Splits the family into antichains by height: layer `k` holds the members
/// whose longest chain from below has `k + 1` sets. The number of layers
/// equals the length of a longest chain.
pub fn height_layers(family: &Family) -> Vec<Family> {
    let members = family.members();
    let mut order: Vec<usize> = (0..members.len()).collect();
    order.sort_by_key(|&i| members[i].len());
    let mut depth = vec![0usize; members.len()];
    for (pos, &i) in order.iter().enumerate() {
        depth[i] = order[..pos]
            .iter()
            .filter(|&&j| members[j].is_proper_subset(members[i]))
            .map(|&j| depth[j] + 1)
            .max()
            .unwrap_or(0);
    }
    let layers = depth.iter().max().map_or(0, |d| d + 1);
    (0..layers)
        .map(|k| {
            let sets = members
                .iter()
                .zip(&depth)
                .filter(|(_, &d)| d == k)
                .map(|(&m, _)| m)
                .collect();
            Family::from_sorted_unchecked(family.ground(), sets)
        })
        .collect()
}

/// A largest antichain inside the family.
///
/// Uses the chain-cover duality: a maximum matching in the bipartite graph of
/// strict inclusions gives a minimum chain cover, and the vertices left
/// uncovered by the corresponding König vertex cover form an antichain of
/// size `|F| − matching`.
pub fn largest_antichain_in_family(family: &Family) -> Result<Family> {
    capacity(
        "family size for largest antichain",
        family.len(),
        LARGEST_ANTICHAIN_LIMIT,
    )?;
    let members = family.members();
    let adj: Vec<Vec<usize>> = members
        .iter()
        .map(|&a| {
            members
                .iter()
                .enumerate()
                .filter(|(_, &b)| a.is_proper_subset(b))
                .map(|(j, _)| j)
                .collect()
        })
        .collect();

    let matching = Matching::maximum(&adj, members.len());
    let (left_reached, right_reached) = matching.alternating_reach(&adj);
    let antichain: Vec<SubsetMask> = (0..members.len())
        .filter(|&i| left_reached[i] && !right_reached[i])
        .map(|i| members[i])
        .collect();
    debug_assert_eq!(antichain.len(), members.len() - matching.size());
    Ok(Family::from_sorted_unchecked(family.ground(), antichain))
}

/// Hopcroft–Karp on a bipartite graph whose left and right sides are both
/// indexed `0..n`.
struct Matching {
    left: Vec<Option<usize>>,
    right: Vec<Option<usize>>,
}

impl Matching {
    fn maximum(adj: &[Vec<usize>], n: usize) -> Self {
        let mut m = Matching {
            left: vec![None; n],
            right: vec![None; n],
        };
        let mut dist = vec![usize::MAX; n];
        while m.layer(adj, &mut dist) {
            let mut it = vec![0usize; n];
            for u in 0..n {
                if m.left[u].is_none() {
                    m.augment(adj, u, &mut dist, &mut it);
                }
            }
        }
        m
    }

    fn size(&self) -> usize {
        self.left.iter().filter(|x| x.is_some()).count()
    }

    fn layer(&self, adj: &[Vec<usize>], dist: &mut [usize]) -> bool {
        let mut queue = VecDeque::new();
        for (u, d) in dist.iter_mut().enumerate() {
            if self.left[u].is_none() {
                *d = 0;
                queue.push_back(u);
            } else {
                *d = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                match self.right[v] {
                    None => found = true,
                    Some(w) if dist[w] == usize::MAX => {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                    Some(_) => {}
                }
            }
        }
        found
    }

    fn augment(
        &mut self,
        adj: &[Vec<usize>],
        u: usize,
        dist: &mut [usize],
        it: &mut [usize],
    ) -> bool {
        while it[u] < adj[u].len() {
            let v = adj[u][it[u]];
            it[u] += 1;
            let ok = match self.right[v] {
                None => true,
                Some(w) => dist[w] == dist[u] + 1 && self.augment(adj, w, dist, it),
            };
            if ok {
                self.left[u] = Some(v);
                self.right[v] = Some(u);
                return true;
            }
        }
        dist[u] = usize::MAX;
        false
    }

    /// Vertices reachable from free left vertices along alternating paths.
    fn alternating_reach(&self, adj: &[Vec<usize>]) -> (Vec<bool>, Vec<bool>) {
        let n = self.left.len();
        let mut left = vec![false; n];
        let mut right = vec![false; n];
        let mut queue: VecDeque<usize> = (0..n).filter(|&u| self.left[u].is_none()).collect();
        for &u in &queue {
            left[u] = true;
        }
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if right[v] || self.left[u] == Some(v) {
                    continue;
                }
                right[v] = true;
                if let Some(w) = self.right[v] {
                    if !left[w] {
                        left[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        (left, right)
    }
}
