use crate::error::{capacity, usage, Result};
use crate::lattice::{Family, GroundSize, SubsetMask, MAX_GROUND};

/// A ground set of `p·q·s` elements cut into `p` outer blocks, each made of
/// `q` inner blocks of `s` consecutive elements. Inner block `(i, j)` covers
/// `[(i·q + j)·s, (i·q + j + 1)·s)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BlockPartition {
    outer: usize,
    inner: usize,
    atom: usize,
}

impl BlockPartition {
    pub fn new(outer: usize, inner: usize, atom: usize) -> Result<Self> {
        if outer == 0 || inner == 0 || atom == 0 {
            return Err(usage(format!(
                "block counts must be positive (p={outer}, q={inner}, s={atom})"
            )));
        }
        let total = outer
            .checked_mul(inner)
            .and_then(|v| v.checked_mul(atom))
            .unwrap_or(usize::MAX);
        capacity("block partition ground size p*q*s", total, MAX_GROUND)?;
        Ok(BlockPartition { outer, inner, atom })
    }

    pub fn outer(&self) -> usize {
        self.outer
    }

    pub fn inner(&self) -> usize {
        self.inner
    }

    pub fn atom(&self) -> usize {
        self.atom
    }

    pub fn ground(&self) -> GroundSize {
        GroundSize::new(self.outer * self.inner * self.atom).expect("checked in new")
    }

    pub fn block(&self, outer: usize, inner: usize) -> SubsetMask {
        assert!(outer < self.outer && inner < self.inner);
        let start = (outer * self.inner + inner) * self.atom;
        let bits = ((1u64 << self.atom) - 1) << start;
        SubsetMask::from_raw(bits, self.ground())
    }

    /// Union of the blocks `(i, choice[i])`.
    pub fn select(&self, choice: &[usize]) -> Result<SubsetMask> {
        if choice.len() != self.outer || choice.iter().any(|&c| c >= self.inner) {
            return Err(usage(format!(
                "choice {choice:?} is not a function from 0..{} to 0..{}",
                self.outer, self.inner
            )));
        }
        Ok(choice
            .iter()
            .enumerate()
            .fold(self.ground().empty(), |acc, (i, &j)| {
                acc.union(self.block(i, j))
            }))
    }

    /// All `q^p` choice functions in lexicographic order.
    pub fn choices(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        let total = self.inner.pow(self.outer as u32);
        (0..total).map(move |mut idx| {
            let mut f = vec![0; self.outer];
            for slot in f.iter_mut().rev() {
                *slot = idx % self.inner;
                idx /= self.inner;
            }
            f
        })
    }
}

/// One selected-union set per choice function; the result is an antichain in
/// which distinct members differ by at least one whole block.
pub fn block_antichain(part: &BlockPartition) -> Family {
    let members: Vec<SubsetMask> = part
        .choices()
        .map(|f| part.select(&f).expect("valid choice"))
        .collect();
    Family::new(part.ground(), members).expect("same ground")
}
