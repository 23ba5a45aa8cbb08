//! Fixed-width bitset backing inversion sets, descent sets and order matrices.

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct BitSet {
    blocks: Vec<u64>,
    width: usize,
}

impl BitSet {
    pub fn new(width: usize) -> Self {
        BitSet {
            blocks: vec![0; width.div_ceil(64)],
            width,
        }
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    pub fn insert(&mut self, bit: usize) {
        debug_assert!(bit < self.width);
        self.blocks[bit / 64] |= 1 << (bit % 64);
    }

    #[inline]
    pub fn remove(&mut self, bit: usize) {
        self.blocks[bit / 64] &= !(1 << (bit % 64));
    }

    #[inline]
    pub fn contains(&self, bit: usize) -> bool {
        bit < self.width && self.blocks[bit / 64] & (1 << (bit % 64)) != 0
    }

    #[inline]
    pub fn is_subset(&self, other: &BitSet) -> bool {
        debug_assert_eq!(self.width, other.width);
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & !b == 0)
    }

    /// `self |= other`; returns whether anything changed.
    #[inline]
    pub fn union_with(&mut self, other: &BitSet) -> bool {
        let mut changed = false;
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            let next = *a | b;
            changed |= next != *a;
            *a = next;
        }
        changed
    }

    pub fn complement(&self) -> BitSet {
        let mut out = BitSet::new(self.width);
        for (o, s) in out.blocks.iter_mut().zip(&self.blocks) {
            *o = !s;
        }
        if !self.width.is_multiple_of(64) {
            if let Some(last) = out.blocks.last_mut() {
                *last &= (1u64 << (self.width % 64)) - 1;
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(i, &block)| {
            let mut rest = block;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let tz = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * 64 + tz)
            })
        })
    }

    /// Single-block view, for callers that know `width <= 64`.
    #[inline]
    pub(crate) fn low_block(&self) -> u64 {
        self.blocks.first().copied().unwrap_or(0)
    }
}
