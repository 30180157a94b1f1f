//! Subsets of a finite ground set `{0, …, n-1}` as 64-bit masks, together
//! with families, chains and maximal chains of the Boolean lattice `P(n)`.
//!
//! Ordinals are finitized as initial segments: the ordinal `α` stands for the
//! set `{0, …, α-1}`, so `A ∪ α` and `A − α` are ordinary mask operations.

use std::fmt;

use crate::error::{capacity, usage, Error, Result};

/// Largest ground set representable by a mask.
pub const MAX_GROUND: usize = 63;

/// Largest ground set for which all `n!` maximal chains may be enumerated.
pub const MAX_CHAIN_ENUMERATION: usize = 10;

/// Number of elements in the ground set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroundSize(u8);

impl GroundSize {
    pub fn new(n: usize) -> Result<Self> {
        capacity("ground size", n, MAX_GROUND)?;
        Ok(GroundSize(n as u8))
    }

    #[inline]
    pub const fn get(self) -> usize {
        self.0 as usize
    }

    /// Bit pattern of the whole ground set.
    #[inline]
    pub const fn full_bits(self) -> u64 {
        if self.0 == 0 {
            0
        } else {
            u64::MAX >> (64 - self.0 as u32)
        }
    }

    pub fn empty(self) -> SubsetMask {
        SubsetMask {
            bits: 0,
            ground: self,
        }
    }

    pub fn full(self) -> SubsetMask {
        SubsetMask {
            bits: self.full_bits(),
            ground: self,
        }
    }

    /// All `2^n` subsets in increasing bit-pattern order.
    pub fn subsets(self) -> impl Iterator<Item = SubsetMask> {
        (0..=self.full_bits()).map(move |bits| SubsetMask { bits, ground: self })
    }

    pub(crate) fn ensure_same(self, other: GroundSize) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(usage(format!(
                "ground size mismatch: n={} versus n={}",
                self.0, other.0
            )))
        }
    }
}

impl fmt::Display for GroundSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A subset of `{0, …, n-1}`. Bits at positions `>= n` are always zero.
///
/// Masks order by bit pattern first, which is the order families keep their
/// members in.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetMask {
    bits: u64,
    ground: GroundSize,
}

impl SubsetMask {
    pub fn new(bits: u64, ground: GroundSize) -> Result<Self> {
        if bits & !ground.full_bits() != 0 {
            return Err(usage(format!(
                "bit pattern {bits:#x} has elements outside a ground set of size {ground}"
            )));
        }
        Ok(SubsetMask { bits, ground })
    }

    #[inline]
    pub(crate) const fn from_raw(bits: u64, ground: GroundSize) -> Self {
        SubsetMask { bits, ground }
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(
        ground: GroundSize,
        elements: I,
    ) -> Result<Self> {
        let mut bits = 0u64;
        for x in elements {
            if x >= ground.get() {
                return Err(Error::Range {
                    what: "element",
                    value: x,
                    max: ground.get().saturating_sub(1),
                });
            }
            bits |= 1 << x;
        }
        Ok(SubsetMask { bits, ground })
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.bits
    }

    #[inline]
    pub const fn ground(self) -> GroundSize {
        self.ground
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn is_full(self) -> bool {
        self.bits == self.ground.full_bits()
    }

    #[inline]
    pub fn contains(self, x: usize) -> bool {
        x < 64 && self.bits >> x & 1 == 1
    }

    #[inline]
    pub fn is_subset(self, other: SubsetMask) -> bool {
        self.bits & !other.bits == 0
    }

    #[inline]
    pub fn is_proper_subset(self, other: SubsetMask) -> bool {
        self.is_subset(other) && self.bits != other.bits
    }

    /// True when one of the two sets contains the other.
    #[inline]
    pub fn is_comparable(self, other: SubsetMask) -> bool {
        self.is_subset(other) || other.is_subset(self)
    }

    #[track_caller]
    pub fn union(self, other: SubsetMask) -> SubsetMask {
        assert_eq!(self.ground, other.ground, "ground size mismatch");
        SubsetMask::from_raw(self.bits | other.bits, self.ground)
    }

    #[track_caller]
    pub fn intersection(self, other: SubsetMask) -> SubsetMask {
        assert_eq!(self.ground, other.ground, "ground size mismatch");
        SubsetMask::from_raw(self.bits & other.bits, self.ground)
    }

    #[track_caller]
    pub fn difference(self, other: SubsetMask) -> SubsetMask {
        assert_eq!(self.ground, other.ground, "ground size mismatch");
        SubsetMask::from_raw(self.bits & !other.bits, self.ground)
    }

    pub fn complement(self) -> SubsetMask {
        SubsetMask::from_raw(!self.bits & self.ground.full_bits(), self.ground)
    }

    /// `self ∪ {x}`. Panics if `x` lies outside the ground set.
    #[track_caller]
    pub fn with(self, x: usize) -> SubsetMask {
        assert!(x < self.ground.get(), "element {x} outside ground set");
        SubsetMask::from_raw(self.bits | 1 << x, self.ground)
    }

    pub fn without(self, x: usize) -> SubsetMask {
        if x >= 64 {
            return self;
        }
        SubsetMask::from_raw(self.bits & !(1 << x), self.ground)
    }

    /// Elements in ascending order.
    pub fn elements(self) -> Elements {
        Elements(self.bits)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.elements().collect()
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.elements().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Iterator over the elements of a [`SubsetMask`].
#[derive(Debug, Clone)]
pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

/// A finite ordinal `α`, read as the set of its predecessors `{0, …, α-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrdinalIndex(usize);

impl OrdinalIndex {
    pub const fn new(alpha: usize) -> Self {
        OrdinalIndex(alpha)
    }

    pub const fn get(self) -> usize {
        self.0
    }
}

impl fmt::Display for OrdinalIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The initial segment `{0, …, α-1}`.
pub fn initial_segment(alpha: OrdinalIndex, n: GroundSize) -> Result<SubsetMask> {
    if alpha.get() > n.get() {
        return Err(Error::Range {
            what: "ordinal",
            value: alpha.get(),
            max: n.get(),
        });
    }
    let bits = if alpha.get() == 0 {
        0
    } else {
        u64::MAX >> (64 - alpha.get() as u32)
    };
    Ok(SubsetMask::from_raw(bits, n))
}

/// Outcome of comparing two sets under inclusion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SetOrdering {
    Equal,
    /// The left set is a proper subset of the right one.
    Less,
    Greater,
    Incomparable,
}

pub fn compare_sets(a: SubsetMask, b: SubsetMask) -> Result<SetOrdering> {
    a.ground.ensure_same(b.ground)?;
    Ok(match (a.is_subset(b), b.is_subset(a)) {
        (true, true) => SetOrdering::Equal,
        (true, false) => SetOrdering::Less,
        (false, true) => SetOrdering::Greater,
        (false, false) => SetOrdering::Incomparable,
    })
}

/// A duplicate-free collection of subsets, sorted by bit pattern.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Family {
    ground: GroundSize,
    members: Vec<SubsetMask>,
}

impl Family {
    pub fn new<I: IntoIterator<Item = SubsetMask>>(ground: GroundSize, members: I) -> Result<Self> {
        let mut members: Vec<SubsetMask> = members.into_iter().collect();
        for m in &members {
            ground.ensure_same(m.ground)?;
        }
        members.sort_unstable();
        members.dedup();
        Ok(Family { ground, members })
    }

    pub fn from_bits<I: IntoIterator<Item = u64>>(ground: GroundSize, bits: I) -> Result<Self> {
        let members = bits
            .into_iter()
            .map(|b| SubsetMask::new(b, ground))
            .collect::<Result<Vec<_>>>()?;
        Family::new(ground, members)
    }

    /// Builds a family from sorted, duplicate-free, in-bounds masks.
    pub(crate) fn from_sorted_unchecked(ground: GroundSize, members: Vec<SubsetMask>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Family { ground, members }
    }

    pub fn empty(ground: GroundSize) -> Self {
        Family {
            ground,
            members: Vec::new(),
        }
    }

    /// All subsets of the given size, i.e. one level of `P(n)`.
    pub fn level(ground: GroundSize, size: usize) -> Result<Self> {
        if size > ground.get() {
            return Err(Error::Range {
                what: "level",
                value: size,
                max: ground.get(),
            });
        }
        let mut members = Vec::new();
        if size == 0 {
            members.push(ground.empty());
        } else {
            // Gosper's hack visits k-subsets in increasing numeric order.
            let mut bits: u64 = (1u64 << size) - 1;
            let limit = ground.full_bits();
            loop {
                members.push(SubsetMask::from_raw(bits, ground));
                if bits == limit >> (ground.get() - size) << (ground.get() - size) {
                    break;
                }
                let c = bits & bits.wrapping_neg();
                let r = bits + c;
                bits = (((r ^ bits) >> 2) / c) | r;
            }
        }
        Ok(Family::from_sorted_unchecked(ground, members))
    }

    #[inline]
    pub fn ground(&self) -> GroundSize {
        self.ground
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    #[inline]
    pub fn members(&self) -> &[SubsetMask] {
        &self.members
    }

    pub fn iter(&self) -> std::slice::Iter<'_, SubsetMask> {
        self.members.iter()
    }

    pub fn contains(&self, set: SubsetMask) -> bool {
        set.ground == self.ground && self.members.binary_search(&set).is_ok()
    }

    pub fn with(&self, set: SubsetMask) -> Result<Family> {
        self.ground.ensure_same(set.ground)?;
        let mut members = self.members.clone();
        if let Err(pos) = members.binary_search(&set) {
            members.insert(pos, set);
        }
        Ok(Family::from_sorted_unchecked(self.ground, members))
    }

    pub fn without(&self, set: SubsetMask) -> Family {
        let members = self.members.iter().copied().filter(|&m| m != set).collect();
        Family::from_sorted_unchecked(self.ground, members)
    }

    pub fn is_subfamily_of(&self, other: &Family) -> bool {
        self.ground == other.ground && self.members.iter().all(|&m| other.contains(m))
    }

    /// Pairwise incomparable members.
    pub fn is_antichain(&self) -> bool {
        self.members
            .iter()
            .enumerate()
            .all(|(i, &a)| self.members[i + 1..].iter().all(|&b| !a.is_comparable(b)))
    }

    /// Pairwise comparable members.
    pub fn is_chain(&self) -> bool {
        let mut sorted = self.members.clone();
        sorted.sort_by_key(|m| m.len());
        sorted.windows(2).all(|w| w[0].is_proper_subset(w[1]))
    }
}

impl fmt::Debug for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Family(n={}) ", self.ground)?;
        f.debug_set().entries(self.members.iter()).finish()
    }
}

impl<'a> IntoIterator for &'a Family {
    type Item = &'a SubsetMask;
    type IntoIter = std::slice::Iter<'a, SubsetMask>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// Sets strictly increasing under inclusion.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Chain {
    ground: GroundSize,
    sets: Vec<SubsetMask>,
}

impl Chain {
    /// Validates that `sets` is strictly increasing under inclusion.
    pub fn new(ground: GroundSize, sets: Vec<SubsetMask>) -> Result<Self> {
        for s in &sets {
            ground.ensure_same(s.ground)?;
        }
        if let Some(w) = sets.windows(2).find(|w| !w[0].is_proper_subset(w[1])) {
            return Err(usage(format!(
                "not a chain: {} is not a proper subset of {}",
                w[0], w[1]
            )));
        }
        Ok(Chain { ground, sets })
    }

    pub(crate) fn from_sorted_unchecked(ground: GroundSize, sets: Vec<SubsetMask>) -> Self {
        debug_assert!(sets.windows(2).all(|w| w[0].is_proper_subset(w[1])));
        Chain { ground, sets }
    }

    /// Orders the members of a family by size and checks they form a chain.
    pub fn from_family(family: &Family) -> Result<Self> {
        let mut sets = family.members().to_vec();
        sets.sort_by_key(|s| s.len());
        Chain::new(family.ground(), sets)
    }

    pub fn empty(ground: GroundSize) -> Self {
        Chain {
            ground,
            sets: Vec::new(),
        }
    }

    pub fn ground(&self) -> GroundSize {
        self.ground
    }

    pub fn sets(&self) -> &[SubsetMask] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, set: SubsetMask) -> bool {
        self.sets.contains(&set)
    }

    /// True when the chain runs from `∅` to the full set in single-element steps.
    pub fn is_saturated_maximal(&self) -> bool {
        self.sets.len() == self.ground.get() + 1
            && self.sets.first().is_some_and(|s| s.is_empty())
            && self.sets.windows(2).all(|w| w[1].len() == w[0].len() + 1)
    }

    pub fn to_family(&self) -> Family {
        Family::new(self.ground, self.sets.iter().copied()).expect("chain members share the ground")
    }
}

impl fmt::Debug for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.sets.iter().enumerate() {
            if i > 0 {
                f.write_str(" < ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// A maximal chain of `P(n)`, stored as the order in which elements are added:
/// `∅ ⊂ {p0} ⊂ {p0,p1} ⊂ … ⊂ X`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct MaximalChain {
    ground: GroundSize,
    perm: [u8; MAX_GROUND],
}

impl MaximalChain {
    pub fn new(ground: GroundSize, perm: &[usize]) -> Result<Self> {
        let n = ground.get();
        if perm.len() != n {
            return Err(usage(format!(
                "permutation has {} entries, expected {n}",
                perm.len()
            )));
        }
        let mut seen = 0u64;
        let mut buf = [0u8; MAX_GROUND];
        for (slot, &x) in buf.iter_mut().zip(perm) {
            if x >= n || seen >> x & 1 == 1 {
                return Err(usage(format!("{perm:?} is not a permutation of 0..{n}")));
            }
            seen |= 1 << x;
            *slot = x as u8;
        }
        Ok(MaximalChain { ground, perm: buf })
    }

    pub(crate) fn from_order(ground: GroundSize, order: &[u8]) -> Self {
        let mut perm = [0u8; MAX_GROUND];
        perm[..order.len()].copy_from_slice(order);
        MaximalChain { ground, perm }
    }

    /// The identity order `0, 1, …, n-1`.
    pub fn identity(ground: GroundSize) -> Self {
        let mut perm = [0u8; MAX_GROUND];
        for (i, p) in perm.iter_mut().enumerate().take(ground.get()) {
            *p = i as u8;
        }
        MaximalChain { ground, perm }
    }

    pub fn ground(&self) -> GroundSize {
        self.ground
    }

    pub fn perm(&self) -> &[u8] {
        &self.perm[..self.ground.get()]
    }

    /// The set at the given level, i.e. the first `level` elements of the order.
    pub fn set_at(&self, level: usize) -> SubsetMask {
        let bits = self.perm()[..level]
            .iter()
            .fold(0u64, |acc, &x| acc | 1 << x);
        SubsetMask::from_raw(bits, self.ground)
    }

    /// The `n + 1` sets of the chain, from `∅` to the full set.
    pub fn sets(&self) -> impl Iterator<Item = SubsetMask> + '_ {
        let ground = self.ground;
        std::iter::once(ground.empty()).chain(self.perm().iter().scan(0u64, move |acc, &x| {
            *acc |= 1 << x;
            Some(SubsetMask::from_raw(*acc, ground))
        }))
    }

    pub fn contains_set(&self, set: SubsetMask) -> bool {
        set.ground == self.ground && self.set_at(set.len()) == set
    }

    /// Index of `x` in the insertion order.
    pub fn position(&self, x: usize) -> Option<usize> {
        self.perm().iter().position(|&p| p as usize == x)
    }

    pub fn to_chain(&self) -> Chain {
        Chain::from_sorted_unchecked(self.ground, self.sets().collect())
    }
}

impl fmt::Debug for MaximalChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MaximalChain{:?}", self.perm())
    }
}

/// Every maximal chain of `P(n)` in lexicographic permutation order.
pub fn enumerate_maximal_chains(n: GroundSize) -> Result<MaximalChains> {
    capacity(
        "ground size for chain enumeration",
        n.get(),
        MAX_CHAIN_ENUMERATION,
    )?;
    Ok(MaximalChains {
        current: Some(MaximalChain::identity(n)),
    })
}

/// Iterator returned by [`enumerate_maximal_chains`].
#[derive(Debug, Clone)]
pub struct MaximalChains {
    current: Option<MaximalChain>,
}

impl Iterator for MaximalChains {
    type Item = MaximalChain;

    fn next(&mut self) -> Option<MaximalChain> {
        let out = self.current?;
        let mut next = out;
        let n = next.ground.get();
        self.current = next_permutation(&mut next.perm[..n]).then_some(next);
        Some(out)
    }
}

fn next_permutation(p: &mut [u8]) -> bool {
    let Some(i) = p.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = p
        .iter()
        .rposition(|&x| x > p[i])
        .expect("pivot has a successor");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// Extends a chain to a maximal chain, filling each gap with the missing
/// elements in ascending order.
pub fn complete_to_maximal_chain(chain: &Chain) -> MaximalChain {
    let ground = chain.ground();
    let mut order = Vec::with_capacity(ground.get());
    let mut prev = 0u64;
    for &s in chain.sets().iter().chain(std::iter::once(&ground.full())) {
        order.extend(
            SubsetMask::from_raw(s.bits() & !prev, ground)
                .elements()
                .map(|x| x as u8),
        );
        prev = s.bits();
    }
    MaximalChain::from_order(ground, &order)
}
