//! Pulling a chain or an antichain out of a cutset.
//!
//! Every source set `A` has a witness `A ∪ α` or `A − α` in the cutset. The
//! sources are grouped by `(direction, α)`; the largest group (ties go to
//! `Union`, then to the smaller `α`) is mapped through its common operation.
//! A monotone map sends a chain to a chain. An antichain stays an antichain
//! as long as no two sources differ only inside the segment `α`; collisions
//! are removed otherwise.

use std::collections::BTreeMap;

use super::reach::find_avoiding_chain;
use crate::constructions::{ordinal_witness, Direction, Witness};
use crate::error::{Error, Result};
use crate::lattice::{Chain, Family, OrdinalIndex, SubsetMask};

/// The `(direction, α)` class chosen for extraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupKey {
    pub direction: Direction,
    pub alpha: OrdinalIndex,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainExtraction {
    /// `None` only for an empty source.
    pub key: Option<GroupKey>,
    /// Number of source sets in the chosen group.
    pub group_size: usize,
    pub chain: Chain,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntichainExtraction {
    pub key: Option<GroupKey>,
    pub group_size: usize,
    pub antichain: Family,
    /// Group members whose image coincided with an earlier image.
    pub collapsed: usize,
    /// Distinct images dropped because they were comparable to a kept one.
    pub dropped: usize,
}

fn require_cutset(cutset: &Family) -> Result<()> {
    if let Some(chain) = find_avoiding_chain(cutset)? {
        return Err(Error::Precondition(format!(
            "family is not a cutset: the maximal chain with order {:?} avoids it",
            chain.perm()
        )));
    }
    Ok(())
}

/// Witnesses for every source set, grouped by key, together with the key of
/// the largest group.
fn largest_group(
    cutset: &Family,
    sources: &[SubsetMask],
) -> Result<(Option<GroupKey>, Vec<Witness>)> {
    let mut groups: BTreeMap<GroupKey, Vec<Witness>> = BTreeMap::new();
    for &a in sources {
        let w = ordinal_witness(cutset, a)?.expect("a cutset meets the ordinal chain of every set");
        groups
            .entry(GroupKey {
                direction: w.direction,
                alpha: w.alpha,
            })
            .or_default()
            .push(w);
    }
    // BTreeMap order is Union before Minus, then ascending α, so the first
    // strict maximum respects the tie-break.
    let mut best: Option<(GroupKey, Vec<Witness>)> = None;
    for (key, ws) in groups {
        if best.as_ref().is_none_or(|(_, b)| ws.len() > b.len()) {
            best = Some((key, ws));
        }
    }
    Ok(match best {
        Some((k, ws)) => (Some(k), ws),
        None => (None, Vec::new()),
    })
}

pub fn extract_chain(cutset: &Family, source: &Chain) -> Result<ChainExtraction> {
    cutset.ground().ensure_same(source.ground())?;
    require_cutset(cutset)?;
    let (key, group) = largest_group(cutset, source.sets())?;
    let mut images: Vec<SubsetMask> = group.iter().map(|w| w.result).collect();
    images.sort_unstable_by_key(|s| (s.len(), s.bits()));
    images.dedup();
    Ok(ChainExtraction {
        key,
        group_size: group.len(),
        chain: Chain::new(cutset.ground(), images)?,
    })
}

pub fn extract_antichain(cutset: &Family, source: &Family) -> Result<AntichainExtraction> {
    cutset.ground().ensure_same(source.ground())?;
    if !source.is_antichain() {
        return Err(Error::Precondition(
            "source family is not an antichain".into(),
        ));
    }
    require_cutset(cutset)?;
    let (key, group) = largest_group(cutset, source.members())?;
    let images = Family::new(cutset.ground(), group.iter().map(|w| w.result))?;
    let collapsed = group.len() - images.len();

    let mut kept: Vec<SubsetMask> = Vec::with_capacity(images.len());
    for &s in &images {
        if kept.iter().all(|&k| !k.is_comparable(s)) {
            kept.push(s);
        }
    }
    let dropped = images.len() - kept.len();
    Ok(AntichainExtraction {
        key,
        group_size: group.len(),
        antichain: Family::new(cutset.ground(), kept)?,
        collapsed,
        dropped,
    })
}
