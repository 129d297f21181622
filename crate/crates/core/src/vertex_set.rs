use std::fmt;

/// A set of vertex indices, stored as a bitset.
///
/// Indices refer to the canonical (insertion) order of a host
/// [`ArtinSystem`](crate::ArtinSystem). Iteration is always ascending, so
/// anything derived from a `VertexSet` inherits the canonical order.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    blocks: Vec<u64>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// The set `{0, 1, .., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut s = Self::new();
        for i in 0..n {
            s.insert(i);
        }
        s
    }

    pub fn singleton(i: usize) -> Self {
        let mut s = Self::new();
        s.insert(i);
        s
    }

    pub fn insert(&mut self, i: usize) -> bool {
        let (b, bit) = (i / 64, i % 64);
        if self.blocks.len() <= b {
            self.blocks.resize(b + 1, 0);
        }
        let was = self.blocks[b] >> bit & 1 == 1;
        self.blocks[b] |= 1 << bit;
        !was
    }

    pub fn remove(&mut self, i: usize) -> bool {
        let (b, bit) = (i / 64, i % 64);
        if b >= self.blocks.len() {
            return false;
        }
        let was = self.blocks[b] >> bit & 1 == 1;
        self.blocks[b] &= !(1 << bit);
        self.trim();
        was
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        let b = i / 64;
        b < self.blocks.len() && self.blocks[b] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(bi, &block)| {
            let mut rest = block;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let tz = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(bi * 64 + tz)
            })
        })
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn union(&self, other: &Self) -> Self {
        let n = self.blocks.len().max(other.blocks.len());
        let blocks = (0..n)
            .map(|i| self.block(i) | other.block(i))
            .collect::<Vec<_>>();
        Self::from_blocks(blocks)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let n = self.blocks.len().min(other.blocks.len());
        Self::from_blocks((0..n).map(|i| self.blocks[i] & other.blocks[i]).collect())
    }

    pub fn difference(&self, other: &Self) -> Self {
        Self::from_blocks(
            (0..self.blocks.len())
                .map(|i| self.blocks[i] & !other.block(i))
                .collect(),
        )
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.blocks
            .iter()
            .enumerate()
            .all(|(i, b)| b & !other.block(i) == 0)
    }

    fn block(&self, i: usize) -> u64 {
        self.blocks.get(i).copied().unwrap_or(0)
    }

    fn from_blocks(blocks: Vec<u64>) -> Self {
        let mut s = Self { blocks };
        s.trim();
        s
    }

    fn trim(&mut self) {
        while self.blocks.last() == Some(&0) {
            self.blocks.pop();
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::new();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
