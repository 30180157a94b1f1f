use super::TABLE_LIMIT;
use crate::error::{capacity, Result};
use crate::lattice::{Family, GroundSize, SubsetMask};

/// Largest ground size accepted by [`contains_maximal_antichain`].
pub const MAXIMAL_ANTICHAIN_SEARCH_LIMIT: usize = 6;

/// An antichain to which no subset of the ground set can be added: every
/// subset is comparable with some member.
pub fn is_maximal_antichain(family: &Family) -> Result<bool> {
    capacity("ground size", family.ground().get(), TABLE_LIMIT)?;
    if family.is_empty() || !family.is_antichain() {
        return Ok(false);
    }
    Ok(family
        .ground()
        .subsets()
        .all(|t| family.iter().any(|&m| t.is_comparable(m))))
}

/// For `n <= 6`, bit `t` of the result is set iff subset `t` of the ground
/// set is comparable with `s`.
fn comparable_cover(n: GroundSize, s: SubsetMask) -> u64 {
    (0..=n.full_bits())
        .filter(|&t| t & s.bits() == t || t & s.bits() == s.bits())
        .fold(0u64, |acc, t| acc | 1 << t)
}

/// A subfamily that is a maximal antichain of `P(n)`, or `None`.
///
/// Depth-first search over antichains of the family, adding members in
/// sorted order. A branch is abandoned as soon as the chosen members together
/// with every still-compatible later member cannot cover all of `P(n)`.
pub fn contains_maximal_antichain(family: &Family) -> Result<Option<Family>> {
    let n = family.ground();
    capacity(
        "ground size for maximal antichain search",
        n.get(),
        MAXIMAL_ANTICHAIN_SEARCH_LIMIT,
    )?;
    let everything = if n.get() == 6 {
        u64::MAX
    } else {
        (1u64 << (1 << n.get())) - 1
    };
    let covers: Vec<u64> = family.iter().map(|&m| comparable_cover(n, m)).collect();
    let search = Search {
        members: family.members(),
        covers: &covers,
        everything,
    };
    let mut chosen = Vec::new();
    Ok(search
        .run(0, 0, &mut chosen)
        .then(|| Family::from_sorted_unchecked(n, chosen)))
}

struct Search<'a> {
    members: &'a [SubsetMask],
    covers: &'a [u64],
    everything: u64,
}

impl Search<'_> {
    fn run(&self, from: usize, covered: u64, chosen: &mut Vec<SubsetMask>) -> bool {
        if covered == self.everything {
            return true;
        }
        // A member is incomparable with everything chosen so far exactly when
        // it is not yet covered.
        let open = |k: &usize| covered >> self.members[*k].bits() & 1 == 0;
        let reachable = (from..self.members.len())
            .filter(open)
            .fold(covered, |acc, k| acc | self.covers[k]);
        if reachable != self.everything {
            return false;
        }
        for k in (from..self.members.len()).filter(open) {
            chosen.push(self.members[k]);
            if self.run(k + 1, covered | self.covers[k], chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}
