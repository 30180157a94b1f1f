//! Brute-force reference implementations, used to cross-check the fast
//! algorithms. None of these share code paths with [`crate::analysis`].

use crate::error::{capacity, Result};
use crate::lattice::{enumerate_maximal_chains, Family, GroundSize};

/// Largest family accepted by the subfamily enumerators.
pub const SUBFAMILY_LIMIT: usize = 20;

/// Checks every one of the `n!` maximal chains.
pub fn is_cutset_by_chains(family: &Family) -> Result<bool> {
    Ok(enumerate_maximal_chains(family.ground())?.all(|c| c.sets().any(|s| family.contains(s))))
}

/// Number of cutsets over `P(n)` by inclusion–exclusion over sets of maximal
/// chains: `Σ_S (−1)^|S| · 2^(2^n − |∪S|)`. Only for `n <= 3`.
pub fn count_cutsets_by_inclusion_exclusion(n: GroundSize) -> Result<u64> {
    capacity("ground size for inclusion-exclusion", n.get(), 3)?;
    let chains: Vec<u64> = enumerate_maximal_chains(n)?
        .map(|c| c.sets().fold(0u64, |acc, s| acc | 1 << s.bits()))
        .collect();
    let universe = 1u32 << n.get();
    let mut total: i128 = 0;
    for pick in 0u64..1 << chains.len() {
        let covered = chains
            .iter()
            .enumerate()
            .filter(|(i, _)| pick >> i & 1 == 1)
            .fold(0u64, |acc, (_, &c)| acc | c);
        let term = 1i128 << (universe - covered.count_ones());
        if pick.count_ones() % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total as u64)
}

/// Pairwise comparability of family members as one bitmask per member.
fn comparability(family: &Family) -> Vec<u32> {
    let m = family.members();
    m.iter()
        .enumerate()
        .map(|(i, &a)| {
            m.iter()
                .enumerate()
                .filter(|&(j, &b)| j != i && a.is_comparable(b))
                .fold(0u32, |acc, (j, _)| acc | 1 << j)
        })
        .collect()
}

fn best_subfamily(family: &Family, want_comparable: bool) -> Result<usize> {
    capacity(
        "family size for subfamily enumeration",
        family.len(),
        SUBFAMILY_LIMIT,
    )?;
    let comp = comparability(family);
    let k = family.len();
    let all = (1u32 << k) - 1;
    let mut best = 0;
    for pick in 0u32..=all {
        let size = pick.count_ones() as usize;
        if size <= best {
            continue;
        }
        let ok = (0..k).filter(|i| pick >> i & 1 == 1).all(|i| {
            let others = pick & !(1 << i);
            if want_comparable {
                comp[i] & others == others
            } else {
                comp[i] & others == 0
            }
        });
        if ok {
            best = size;
        }
    }
    Ok(best)
}

/// Size of a largest antichain, by trying every subfamily.
pub fn largest_antichain_size_by_subsets(family: &Family) -> Result<usize> {
    best_subfamily(family, false)
}

/// Size of a longest chain, by trying every subfamily.
pub fn longest_chain_size_by_subsets(family: &Family) -> Result<usize> {
    best_subfamily(family, true)
}
