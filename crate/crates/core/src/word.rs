//! Permutation words, inversion and descent statistics, and the weak order.
//!
//! A [`Word`] is always a permutation of `1..=n` in one-line form. Sequences on
//! other alphabets (the results of deleting letters, concatenating or
//! projecting) are [`Letters`]; [`Letters::standardize`] maps the `k`-th
//! smallest letter to `k` to re-enter the [`Word`] type.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Index of the value pair `(i, j)`, `1 <= i < j`, in the triangular layout.
#[inline]
pub(crate) fn pair_index(i: u32, j: u32) -> usize {
    debug_assert!(1 <= i && i < j);
    let (i, j) = (i as usize, j as usize);
    (j - 1) * (j - 2) / 2 + i - 1
}

#[inline]
fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// A sequence of distinct positive letters on an arbitrary alphabet.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Letters(Vec<u32>);

impl Letters {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        let mut seen = std::collections::HashSet::with_capacity(letters.len());
        for &a in &letters {
            if a == 0 {
                return Err(Error::NonPositiveEntry);
            }
            if !seen.insert(a) {
                return Err(Error::DuplicateEntry(a));
            }
        }
        Ok(Letters(letters))
    }

    pub(crate) fn from_vec_unchecked(letters: Vec<u32>) -> Self {
        Letters(letters)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The letters in increasing order, `m_1 < ... < m_n`.
    pub fn alphabet(&self) -> Vec<u32> {
        let mut a = self.0.clone();
        a.sort_unstable();
        a
    }

    /// `self \ {m}`.
    pub fn remove_value(&self, m: u32) -> Result<Letters> {
        let at = self
            .0
            .iter()
            .position(|&a| a == m)
            .ok_or(Error::ValueAbsent(m))?;
        let mut out = self.0.clone();
        out.remove(at);
        Ok(Letters(out))
    }

    /// Keeps the letters `m_lo..=m_hi` (ranks in the alphabet, 1-based).
    pub fn project(&self, lo: usize, hi: usize) -> Result<Letters> {
        let n = self.len();
        if !(1 <= lo && lo < hi && hi <= n) {
            return Err(Error::BoundsViolation { lo, hi, n });
        }
        let alphabet = self.alphabet();
        let (min, max) = (alphabet[lo - 1], alphabet[hi - 1]);
        Ok(Letters(
            self.0
                .iter()
                .copied()
                .filter(|&a| min <= a && a <= max)
                .collect(),
        ))
    }

    pub fn reverse(&self) -> Letters {
        Letters(self.0.iter().rev().copied().collect())
    }

    /// Relabels `m_k -> k`.
    pub fn standardize(&self) -> Word {
        let alphabet = self.alphabet();
        let entries = self
            .0
            .iter()
            .map(|a| alphabet.binary_search(a).unwrap() as u32 + 1)
            .collect();
        Word::from_permutation_unchecked(entries)
    }
}

/// The colligation `[x, y]` of two words on disjoint alphabets.
pub fn colligate(x: &Letters, y: &Letters) -> Result<Letters> {
    let left: std::collections::HashSet<u32> = x.0.iter().copied().collect();
    if let Some(&a) = y.0.iter().find(|a| left.contains(a)) {
        return Err(Error::AlphabetOverlap(a));
    }
    Ok(Letters(x.0.iter().chain(&y.0).copied().collect()))
}

/// A permutation of `1..=n` in word form `[a_1, ..., a_n]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    entries: Vec<u32>,
    /// `positions[v - 1]` is the 0-based index of `v`.
    positions: Vec<usize>,
}

impl Word {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::EmptyWord);
        }
        let mut seen = std::collections::HashSet::with_capacity(n);
        for &v in &entries {
            if v == 0 {
                return Err(Error::NonPositiveEntry);
            }
            if !seen.insert(v) {
                return Err(Error::DuplicateEntry(v));
            }
        }
        let mut positions = vec![usize::MAX; n];
        for (at, &v) in entries.iter().enumerate() {
            if let Some(slot) = positions.get_mut(v as usize - 1) {
                *slot = at;
            }
        }
        if let Some(missing) = positions.iter().position(|&p| p == usize::MAX) {
            return Err(Error::NotPermutation {
                n,
                missing: missing as u32 + 1,
            });
        }
        Ok(Word { entries, positions })
    }

    pub(crate) fn from_permutation_unchecked(entries: Vec<u32>) -> Self {
        let mut positions = vec![0; entries.len()];
        for (at, &v) in entries.iter().enumerate() {
            positions[v as usize - 1] = at;
        }
        Word { entries, positions }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_permutation_unchecked((1..=n as u32).collect())
    }

    pub fn longest(n: usize) -> Self {
        Self::from_permutation_unchecked((1..=n as u32).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.entries
    }

    pub fn to_letters(&self) -> Letters {
        Letters(self.entries.clone())
    }

    /// `p_w(v)`, 1-based.
    #[inline]
    pub fn position(&self, v: u32) -> usize {
        self.positions[v as usize - 1] + 1
    }

    pub fn inversion_set(&self) -> InversionSet {
        let n = self.len();
        let mut bits = BitSet::new(pair_count(n));
        for j in 2..=n as u32 {
            let pj = self.positions[j as usize - 1];
            for i in 1..j {
                if pj < self.positions[i as usize - 1] {
                    bits.insert(pair_index(i, j));
                }
            }
        }
        InversionSet { n, bits }
    }

    /// `tau(w) = { i : p_w(i+1) < p_w(i) }`.
    pub fn tau(&self) -> TauSet {
        let n = self.len();
        let mut set = TauSet::empty(n);
        for i in 1..n {
            if self.positions[i] < self.positions[i - 1] {
                set.insert(i);
            }
        }
        set
    }

    pub fn reverse(&self) -> Word {
        Self::from_permutation_unchecked(self.entries.iter().rev().copied().collect())
    }

    pub fn remove_value(&self, m: u32) -> Result<Letters> {
        Letters(self.entries.clone()).remove_value(m)
    }

    /// `pi_{i,j}(w)`: the subsequence of values in `i..=j`.
    pub fn project(&self, i: usize, j: usize) -> Result<Letters> {
        let n = self.len();
        if !(1 <= i && i < j && j <= n) {
            return Err(Error::BoundsViolation { lo: i, hi: j, n });
        }
        Ok(Letters(
            self.entries
                .iter()
                .copied()
                .filter(|&v| i as u32 <= v && v <= j as u32)
                .collect(),
        ))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.entries.iter().join(","))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{self}")
    }
}

impl fmt::Display for Letters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().join(","))
    }
}

pub(crate) fn parse_integers(text: &str) -> Result<Vec<u32>> {
    let trimmed = text.trim();
    let inner = match (trimmed.strip_prefix('['), trimmed.strip_suffix(']')) {
        (Some(_), Some(_)) => &trimmed[1..trimmed.len() - 1],
        (None, None) => trimmed,
        _ => return Err(Error::Parse(format!("unbalanced brackets in {text:?}"))),
    };
    inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|tok| !tok.is_empty())
        .map(|tok| {
            tok.parse::<u32>()
                .map_err(|_| Error::Parse(format!("{tok:?} is not a non-negative integer")))
        })
        .collect()
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::new(parse_integers(s)?)
    }
}

impl FromStr for Letters {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Letters::new(parse_integers(s)?)
    }
}

/// Value pairs `(i, j)`, `i < j`, with `j` occurring before `i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct InversionSet {
    n: usize,
    bits: BitSet,
}

impl InversionSet {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, i: u32, j: u32) -> bool {
        i >= 1 && i < j && j as usize <= self.n && self.bits.contains(pair_index(i, j))
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn is_subset(&self, other: &InversionSet) -> bool {
        self.n == other.n && self.bits.is_subset(&other.bits)
    }

    /// Pairs not in the set, among all `n(n-1)/2`.
    pub fn complement(&self) -> InversionSet {
        InversionSet {
            n: self.n,
            bits: self.bits.complement(),
        }
    }

    /// Pairs in ascending `(j, i)` order.
    pub fn pairs(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.len());
        for j in 2..=self.n as u32 {
            for i in 1..j {
                if self.bits.contains(pair_index(i, j)) {
                    out.push((i, j));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// The raw mask, valid when `n <= 11` (at most 55 pairs).
    pub fn mask(&self) -> u64 {
        debug_assert!(pair_count(self.n) <= 64);
        self.bits.low_block()
    }
}

/// A subset of `{1, ..., n-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TauSet {
    n: usize,
    bits: BitSet,
}

impl TauSet {
    pub fn empty(n: usize) -> Self {
        TauSet {
            n,
            bits: BitSet::new(n.saturating_sub(1)),
        }
    }

    pub fn from_indices(n: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut set = Self::empty(n);
        for i in indices {
            set.insert(i);
        }
        set
    }

    pub(crate) fn insert(&mut self, i: usize) {
        assert!(
            1 <= i && i < self.n,
            "tau index {i} out of range for n = {}",
            self.n
        );
        self.bits.insert(i - 1);
    }

    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && self.bits.contains(i - 1)
    }

    pub fn is_subset(&self, other: &TauSet) -> bool {
        self.n == other.n && self.bits.is_subset(&other.bits)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().map(|b| b + 1)
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn mask(&self) -> u64 {
        self.bits.low_block()
    }
}

impl fmt::Debug for TauSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// `w <=_D y`: every inversion of `w` is an inversion of `y`.
pub fn weak_leq(w: &Word, y: &Word) -> Result<bool> {
    if w.len() != y.len() {
        return Err(Error::SizeMismatch {
            left: w.len(),
            right: y.len(),
        });
    }
    Ok(w.inversion_set().is_subset(&y.inversion_set()))
}

/// All `n!` words in lexicographic order.
pub fn enumerate_words(n: usize, limits: &Limits) -> Result<impl Iterator<Item = Word>> {
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    limits.check_enumeration(n)?;
    Ok((1..=n as u32)
        .permutations(n)
        .map(Word::from_permutation_unchecked))
}
