use crate::lattice::{Family, GroundSize};

/// One bit per subset of the ground set, indexed by bit pattern.
#[derive(Clone)]
pub(crate) struct SubsetTable {
    words: Vec<u64>,
}

impl SubsetTable {
    pub fn new(n: GroundSize) -> Self {
        let bits = 1usize << n.get();
        SubsetTable {
            words: vec![0; bits.div_ceil(64)],
        }
    }

    pub fn of_family(family: &Family) -> Self {
        let mut t = SubsetTable::new(family.ground());
        for m in family {
            t.set(m.bits());
        }
        t
    }

    #[inline]
    pub fn get(&self, s: u64) -> bool {
        self.words[(s >> 6) as usize] >> (s & 63) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, s: u64) {
        self.words[(s >> 6) as usize] |= 1 << (s & 63);
    }
}

/// `T` is marked iff `T` is unblocked and some saturated path from `∅` to `T`
/// avoids every blocked set.
pub(crate) fn reach_from_bottom(n: GroundSize, blocked: &SubsetTable) -> SubsetTable {
    let mut reach = SubsetTable::new(n);
    // Removing an element lowers the bit pattern, so numeric order is a
    // topological order of the cover relation.
    for s in 0..=n.full_bits() {
        if blocked.get(s) {
            continue;
        }
        let ok = s == 0 || {
            let mut rest = s;
            let mut found = false;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                if reach.get(s ^ bit) {
                    found = true;
                    break;
                }
                rest ^= bit;
            }
            found
        };
        if ok {
            reach.set(s);
        }
    }
    reach
}

/// `T` is marked iff `T` is unblocked and some saturated path from `T` to the
/// full set avoids every blocked set.
pub(crate) fn reach_to_top(n: GroundSize, blocked: &SubsetTable) -> SubsetTable {
    let full = n.full_bits();
    let mut reach = SubsetTable::new(n);
    for s in (0..=full).rev() {
        if blocked.get(s) {
            continue;
        }
        let ok = s == full || {
            let mut rest = full & !s;
            let mut found = false;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                if reach.get(s | bit) {
                    found = true;
                    break;
                }
                rest ^= bit;
            }
            found
        };
        if ok {
            reach.set(s);
        }
    }
    reach
}

/// Submasks `T` of `target` from which a saturated path to `target` avoids
/// the blocked sets (the target itself counts as unblocked).
pub(crate) fn reach_target_from_below(
    n: GroundSize,
    blocked: &SubsetTable,
    target: u64,
) -> SubsetTable {
    let mut reach = SubsetTable::new(n);
    reach.set(target);
    if target == 0 {
        return reach;
    }
    // Decreasing submask enumeration visits supersets first.
    let mut t = (target - 1) & target;
    loop {
        if !blocked.get(t) {
            let mut rest = target & !t;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                if reach.get(t | bit) {
                    reach.set(t);
                    break;
                }
                rest ^= bit;
            }
        }
        if t == 0 {
            break;
        }
        t = (t - 1) & target;
    }
    reach
}

/// Walks upward from `start` to the full set, always adding the smallest
/// element whose successor is marked in `reach`. Returns the added elements.
pub(crate) fn walk_up(n: GroundSize, reach: &SubsetTable, start: u64, stop: u64) -> Vec<u8> {
    let mut order = Vec::new();
    let mut cur = start;
    while cur != stop {
        let next = (0..n.get())
            .filter(|&x| stop >> x & 1 == 1 && cur >> x & 1 == 0)
            .find(|&x| reach.get(cur | 1 << x))
            .expect("reachability table guarantees a successor");
        order.push(next as u8);
        cur |= 1 << next;
    }
    order
}
