use std::fmt;

use crate::error::Result;
use crate::lattice::{initial_segment, Chain, Family, OrdinalIndex, SubsetMask};

/// The maximal chain through `a` built from initial segments:
/// `{∅, X} ∪ {a − α : α ≤ n} ∪ {a ∪ α : α ≤ n}`, ordered by inclusion.
pub fn ordinal_chain(a: SubsetMask) -> Chain {
    let ground = a.ground();
    let mut sets = Vec::with_capacity(2 * ground.get() + 4);
    sets.push(ground.empty());
    sets.push(ground.full());
    for alpha in 0..=ground.get() {
        let seg = segment(alpha, a);
        sets.push(a.difference(seg));
        sets.push(a.union(seg));
    }
    // Every term is comparable with every other, so size order is inclusion order.
    sets.sort_unstable_by_key(|s| (s.len(), s.bits()));
    sets.dedup();
    Chain::from_sorted_unchecked(ground, sets)
}

fn segment(alpha: usize, a: SubsetMask) -> SubsetMask {
    initial_segment(OrdinalIndex::new(alpha), a.ground()).expect("alpha <= n")
}

/// Which half of the ordinal chain a witness came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    /// `A ∪ α`
    Union,
    /// `A − α`
    Minus,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Union => "union",
            Direction::Minus => "minus",
        })
    }
}

/// A member of a family found on the ordinal chain of some set `A`:
/// `result = A ∪ α` or `result = A − α`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Witness {
    pub direction: Direction,
    pub alpha: OrdinalIndex,
    pub result: SubsetMask,
}

/// Scans the ordinal chain of `a` for a member of `family`: first `a ∪ α` for
/// `α = 0, 1, …, n`, then `a − α` likewise. `α = 0` is allowed, so `a` itself
/// being a member gives `(Union, 0, a)`.
///
/// `None` means the family misses the whole ordinal chain, which cannot happen
/// for a cutset.
pub fn ordinal_witness(family: &Family, a: SubsetMask) -> Result<Option<Witness>> {
    family.ground().ensure_same(a.ground())?;
    let n = a.ground().get();
    let scan = [Direction::Union, Direction::Minus]
        .into_iter()
        .flat_map(|d| (0..=n).map(move |alpha| (d, alpha)));
    for (direction, alpha) in scan {
        let seg = segment(alpha, a);
        let result = match direction {
            Direction::Union => a.union(seg),
            Direction::Minus => a.difference(seg),
        };
        if family.contains(result) {
            return Ok(Some(Witness {
                direction,
                alpha: OrdinalIndex::new(alpha),
                result,
            }));
        }
    }
    Ok(None)
}
