use super::table::{
    reach_from_bottom, reach_target_from_below, reach_to_top, walk_up, SubsetTable,
};
use super::TABLE_LIMIT;
use crate::error::{capacity, usage, Result};
use crate::lattice::{Family, MaximalChain, SubsetMask};

fn check_table_capacity(family: &Family) -> Result<()> {
    capacity(
        "ground size for reachability",
        family.ground().get(),
        TABLE_LIMIT,
    )
}

/// True when every maximal chain of `P(n)` meets the family.
///
/// Decided by reachability on the cover graph: the family is a cutset iff no
/// saturated path from `∅` to the full set avoids it.
pub fn is_cutset(family: &Family) -> Result<bool> {
    check_table_capacity(family)?;
    let n = family.ground();
    if family.contains(n.empty()) || family.contains(n.full()) {
        return Ok(true);
    }
    let up = reach_to_top(n, &SubsetTable::of_family(family));
    Ok(!up.get(0))
}

/// Neither `∅` nor the full set is a member.
pub fn is_nontrivial(family: &Family) -> bool {
    let n = family.ground();
    !family.contains(n.empty()) && !family.contains(n.full())
}

/// A maximal chain disjoint from the family, or `None` for a cutset. At each
/// step the smallest element that keeps the rest of the path open is added.
pub fn find_avoiding_chain(family: &Family) -> Result<Option<MaximalChain>> {
    check_table_capacity(family)?;
    let n = family.ground();
    let up = reach_to_top(n, &SubsetTable::of_family(family));
    if !up.get(0) {
        return Ok(None);
    }
    let order = walk_up(n, &up, 0, n.full_bits());
    Ok(Some(MaximalChain::from_order(n, &order)))
}

/// A cutset none of whose members can be dropped: every member is the only
/// point where some maximal chain meets the family.
pub fn is_minimal_cutset(family: &Family) -> Result<bool> {
    if !is_cutset(family)? {
        return Ok(false);
    }
    let n = family.ground();
    let blocked = SubsetTable::of_family(family);
    let down = reach_from_bottom(n, &blocked);
    let up = reach_to_top(n, &blocked);
    let full = n.full_bits();
    // Paths below (above) a member consist of proper subsets (supersets), so
    // avoiding the whole family is the same as avoiding everything but it.
    Ok(family.iter().all(|m| {
        let s = m.bits();
        let below = s == 0 || m.elements().any(|x| down.get(s & !(1 << x)));
        let above = s == full || m.complement().elements().any(|y| up.get(s | 1 << y));
        below && above
    }))
}

/// A maximal chain meeting the family only at `set`, if one exists.
pub fn sole_meeting_chain(family: &Family, set: SubsetMask) -> Result<Option<MaximalChain>> {
    check_table_capacity(family)?;
    if !family.contains(set) {
        return Err(usage(format!("{set} is not a member of the family")));
    }
    let n = family.ground();
    let blocked = SubsetTable::of_family(family);
    let s = set.bits();

    let below = reach_target_from_below(n, &blocked, s);
    if !below.get(0) {
        return Ok(None);
    }
    let up = reach_to_top(n, &blocked);
    let full = n.full_bits();
    if s != full && !set.complement().elements().any(|y| up.get(s | 1 << y)) {
        return Ok(None);
    }
    let mut order = walk_up(n, &below, 0, s);
    order.extend(walk_up(n, &up, s, full));
    Ok(Some(MaximalChain::from_order(n, &order)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::separating_pair_cutset;
    use crate::lattice::{enumerate_maximal_chains, GroundSize};

    fn g(n: usize) -> GroundSize {
        GroundSize::new(n).unwrap()
    }

    fn fam(n: usize, sets: &[&[usize]]) -> Family {
        Family::new(
            g(n),
            sets.iter()
                .map(|s| SubsetMask::from_elements(g(n), s.iter().copied()).unwrap()),
        )
        .unwrap()
    }

    fn brute_force(f: &Family) -> bool {
        enumerate_maximal_chains(f.ground())
            .unwrap()
            .all(|c| c.sets().any(|s| f.contains(s)))
    }

    #[test]
    fn cutset_examples() {
        assert!(is_cutset(&fam(2, &[&[0], &[1]])).unwrap());
        assert!(!is_cutset(&fam(2, &[&[0]])).unwrap());
        for n in 0..=5 {
            assert!(is_cutset(&fam(n, &[&[]])).unwrap());
        }
        assert!(!is_cutset(&Family::empty(g(0))).unwrap());
    }

    #[test]
    fn cutset_capacity() {
        assert!(matches!(
            is_cutset(&Family::empty(g(26))),
            Err(crate::Error::Capacity { limit: 25, .. })
        ));
    }

    #[test]
    fn nontrivial_examples() {
        assert!(is_nontrivial(&fam(2, &[&[0], &[1]])));
        assert!(!is_nontrivial(&fam(2, &[&[]])));
        assert!(!is_nontrivial(&fam(2, &[&[0, 1]])));
    }

    #[test]
    fn avoiding_chain_examples() {
        let c = find_avoiding_chain(&fam(2, &[&[0]])).unwrap().unwrap();
        assert_eq!(c.perm(), &[1, 0]);
        let t3 = separating_pair_cutset(0, 1, g(3)).unwrap();
        assert_eq!(find_avoiding_chain(&t3).unwrap(), None);
        let c = find_avoiding_chain(&Family::empty(g(1))).unwrap().unwrap();
        assert_eq!(c.perm(), &[0]);
    }

    #[test]
    fn exhaustive_agreement_at_three() {
        let n = g(3);
        for code in 0u64..256 {
            let f = Family::from_bits(n, (0..8).filter(|s| code >> s & 1 == 1)).unwrap();
            let expected = brute_force(&f);
            assert_eq!(is_cutset(&f).unwrap(), expected, "{f:?}");
            match find_avoiding_chain(&f).unwrap() {
                None => assert!(expected),
                Some(c) => {
                    assert!(!expected);
                    assert!(c.sets().all(|s| !f.contains(s)));
                }
            }
        }
    }

    #[test]
    fn minimal_examples() {
        let t3 = separating_pair_cutset(0, 1, g(3)).unwrap();
        assert!(is_minimal_cutset(&t3).unwrap());
        assert!(is_minimal_cutset(&Family::level(g(3), 1).unwrap()).unwrap());
        let extra = t3
            .with(SubsetMask::from_elements(g(3), [0, 1]).unwrap())
            .unwrap();
        assert!(is_cutset(&extra).unwrap());
        assert!(!is_minimal_cutset(&extra).unwrap());
        assert!(!is_minimal_cutset(&fam(2, &[&[0]])).unwrap());
        assert!(is_minimal_cutset(&fam(3, &[&[]])).unwrap());
        assert!(!is_minimal_cutset(&fam(1, &[&[], &[0]])).unwrap());
    }

    #[test]
    fn minimality_matches_removal_oracle() {
        // Cutsets are upward closed, so minimality only needs single removals.
        let n = g(3);
        for code in 0u64..256 {
            let f = Family::from_bits(n, (0..8).filter(|s| code >> s & 1 == 1)).unwrap();
            let expected = brute_force(&f) && f.iter().all(|&m| !brute_force(&f.without(m)));
            assert_eq!(is_minimal_cutset(&f).unwrap(), expected, "{f:?}");
        }
    }

    #[test]
    fn sole_meeting_examples() {
        let t3 = separating_pair_cutset(0, 1, g(3)).unwrap();
        let s0 = SubsetMask::from_elements(g(3), [0]).unwrap();
        let c = sole_meeting_chain(&t3, s0).unwrap().unwrap();
        assert_eq!(c.perm(), &[0, 1, 2]);

        let f = fam(1, &[&[], &[0]]);
        let s = SubsetMask::from_elements(g(1), [0]).unwrap();
        assert_eq!(sole_meeting_chain(&f, s).unwrap(), None);

        let lvl = Family::level(g(3), 1).unwrap();
        let s2 = SubsetMask::from_elements(g(3), [2]).unwrap();
        let c = sole_meeting_chain(&lvl, s2).unwrap().unwrap();
        assert_eq!(c.perm()[0], 2);

        assert!(sole_meeting_chain(&t3, SubsetMask::from_elements(g(3), [2]).unwrap()).is_err());
    }

    #[test]
    fn sole_meeting_chains_meet_only_their_member() {
        let n = g(4);
        let t = separating_pair_cutset(1, 2, n).unwrap();
        for &m in &t {
            let c = sole_meeting_chain(&t, m).unwrap().unwrap();
            let hits: Vec<_> = c.sets().filter(|s| t.contains(*s)).collect();
            assert_eq!(hits, vec![m]);
        }
    }
}
