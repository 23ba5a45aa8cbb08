//! Young diagrams in the column convention, and tableaux stored by columns.
//!
//! Shapes list *column* lengths: `(3, 2)` is the diagram with a column of
//! three boxes followed by a column of two. Tableaux may live on any alphabet
//! of distinct positive integers; [`Tableau::standard`] additionally demands
//! the entries be exactly `1..=n`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::rs::rs_tableau;
use crate::word::{enumerate_words, TauSet};

/// A partition written by column lengths, `lambda_1 >= ... >= lambda_k > 0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct ColumnShape(Vec<usize>);

impl ColumnShape {
    pub fn new(columns: Vec<usize>) -> Result<Self> {
        if columns.contains(&0) {
            return Err(Error::EmptyColumn {
                column: columns.iter().position(|&c| c == 0).unwrap() + 1,
            });
        }
        if columns.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::ShapeNotDecreasing);
        }
        Ok(ColumnShape(columns))
    }

    pub fn columns(&self) -> &[usize] {
        &self.0
    }

    /// Total number of boxes.
    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn num_columns(&self) -> usize {
        self.0.len()
    }

    /// `lambda'_i = #{ j : lambda_j >= i }`.
    pub fn conjugate(&self) -> ColumnShape {
        let height = self.0.first().copied().unwrap_or(0);
        ColumnShape(
            (1..=height)
                .map(|i| self.0.iter().take_while(|&&l| l >= i).count())
                .collect(),
        )
    }
}

impl fmt::Display for ColumnShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// Dominance on diagrams with the same number of boxes: `a <= b` when every
/// prefix sum of `a` is at most the matching prefix sum of `b`.
pub fn dominance_leq(a: &ColumnShape, b: &ColumnShape) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    Ok(dominance_leq_unchecked(a.columns(), b.columns()))
}

pub(crate) fn dominance_leq_unchecked(a: &[usize], b: &[usize]) -> bool {
    let (mut sa, mut sb) = (0, 0);
    for (x, y) in a.iter().zip(b) {
        sa += x;
        sb += y;
        if sa > sb {
            return false;
        }
    }
    true
}

/// A corner box, 1-based `(row, col)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Corner {
    pub row: usize,
    pub col: usize,
}

/// A Young tableau stored as its columns, top to bottom.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Tableau {
    columns: Vec<Vec<u32>>,
}

impl Tableau {
    /// Validates a tableau on an arbitrary alphabet of positive integers.
    pub fn from_columns(columns: Vec<Vec<u32>>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for (c, col) in columns.iter().enumerate() {
            if col.is_empty() {
                return Err(Error::EmptyColumn { column: c + 1 });
            }
            for &v in col {
                if v == 0 {
                    return Err(Error::NonPositiveEntry);
                }
                if !seen.insert(v) {
                    return Err(Error::DuplicateEntry(v));
                }
            }
        }
        if columns.windows(2).any(|p| p[0].len() < p[1].len()) {
            return Err(Error::ShapeNotDecreasing);
        }
        for (c, col) in columns.iter().enumerate() {
            if col.windows(2).any(|p| p[0] >= p[1]) {
                return Err(Error::NonIncreasingColumn { column: c + 1 });
            }
        }
        for pair in columns.windows(2) {
            if let Some(row) = pair[1].iter().zip(&pair[0]).position(|(r, l)| l >= r) {
                return Err(Error::RowViolation { row: row + 1 });
            }
        }
        Ok(Tableau { columns })
    }

    /// A standard tableau: valid, with entries exactly `1..=n`.
    pub fn standard(columns: Vec<Vec<u32>>) -> Result<Self> {
        Tableau::from_columns(columns)?.require_standard()
    }

    pub fn require_standard(self) -> Result<Self> {
        if self.is_standard() {
            Ok(self)
        } else {
            Err(Error::NotStandard { n: self.n() })
        }
    }

    /// Builds from rows, top to bottom (left-justified).
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::Parse("empty row".into()));
        }
        if rows.windows(2).any(|p| p[0].len() < p[1].len()) {
            return Err(Error::RowsNotDecreasing);
        }
        let width = rows.first().map_or(0, Vec::len);
        let columns = (0..width)
            .map(|c| rows.iter().map_while(|r| r.get(c).copied()).collect())
            .collect();
        Tableau::from_columns(columns)
    }

    pub(crate) fn from_columns_unchecked(mut columns: Vec<Vec<u32>>) -> Self {
        while columns.last().is_some_and(Vec::is_empty) {
            columns.pop();
        }
        debug_assert!(
            Tableau::from_columns(columns.clone()).is_ok(),
            "invalid tableau {columns:?}"
        );
        Tableau { columns }
    }

    /// A single box.
    pub fn singleton(v: u32) -> Self {
        Tableau {
            columns: vec![vec![v]],
        }
    }

    pub fn columns(&self) -> &[Vec<u32>] {
        &self.columns
    }

    /// The `i`-th column, 1-based; empty past the last column.
    pub fn column(&self, i: usize) -> &[u32] {
        i.checked_sub(1)
            .and_then(|i| self.columns.get(i))
            .map_or(&[], Vec::as_slice)
    }

    pub fn num_columns(&self) -> usize {
        self.columns.len()
    }

    pub fn num_rows(&self) -> usize {
        self.columns.first().map_or(0, Vec::len)
    }

    pub fn n(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        (0..self.num_rows())
            .map(|r| {
                self.columns
                    .iter()
                    .map_while(|c| c.get(r).copied())
                    .collect()
            })
            .collect()
    }

    pub fn shape(&self) -> ColumnShape {
        ColumnShape(self.columns.iter().map(Vec::len).collect())
    }

    /// The entries in increasing order.
    pub fn alphabet(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self.columns.iter().flatten().copied().collect();
        out.sort_unstable();
        out
    }

    pub fn is_standard(&self) -> bool {
        self.alphabet().iter().zip(1u32..).all(|(&a, k)| a == k)
    }

    pub fn contains(&self, v: u32) -> bool {
        self.columns.iter().any(|c| c.binary_search(&v).is_ok())
    }

    /// 1-based `(row, col)` of `v`.
    pub fn locate(&self, v: u32) -> Option<(usize, usize)> {
        self.columns
            .iter()
            .enumerate()
            .find_map(|(c, col)| col.binary_search(&v).ok().map(|r| (r + 1, c + 1)))
    }

    /// `r_T(v)`.
    pub fn row_of(&self, v: u32) -> Option<usize> {
        self.locate(v).map(|(r, _)| r)
    }

    /// `c_T(v)`.
    pub fn col_of(&self, v: u32) -> Option<usize> {
        self.locate(v).map(|(_, c)| c)
    }

    /// `omega_i(T)`, the largest entry of column `i`.
    pub fn omega(&self, i: usize) -> Option<u32> {
        self.column(i).last().copied()
    }

    pub fn max_entry(&self) -> Option<u32> {
        self.columns.iter().filter_map(|c| c.last()).max().copied()
    }

    /// `{ k : r_T(m_{k+1}) > r_T(m_k) }` over the sorted alphabet.
    pub fn tau(&self) -> TauSet {
        let alphabet = self.alphabet();
        let n = alphabet.len();
        TauSet::from_indices(
            n,
            (1..n).filter(|&k| self.row_of(alphabet[k]) > self.row_of(alphabet[k - 1])),
        )
    }

    pub fn transpose(&self) -> Tableau {
        Tableau {
            columns: self.rows(),
        }
    }

    /// All corners, left to right.
    pub fn corners(&self) -> Vec<Corner> {
        let len = |i: usize| self.columns.get(i).map_or(0, Vec::len);
        (0..self.columns.len())
            .filter(|&i| len(i + 1) < len(i))
            .map(|i| Corner {
                row: len(i),
                col: i + 1,
            })
            .collect()
    }

    /// Relabels the `k`-th smallest entry to `k`.
    pub fn standardize(&self) -> Tableau {
        let alphabet = self.alphabet();
        self.map_entries(|v| alphabet.binary_search(&v).unwrap() as u32 + 1)
    }

    /// Applies an order-preserving relabeling.
    pub fn map_entries(&self, f: impl Fn(u32) -> u32) -> Tableau {
        Tableau {
            columns: self
                .columns
                .iter()
                .map(|c| c.iter().map(|&v| f(v)).collect())
                .collect(),
        }
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.rows();
        write!(f, "{}", rows.iter().map(|r| r.iter().join(" ")).join("; "))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau({self})")
    }
}

fn parse_entries(text: &str) -> Result<Vec<u32>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| Error::Parse(format!("{t:?} is not a non-negative integer")))
        })
        .collect()
}

impl FromStr for Tableau {
    type Err = Error;

    /// Row form `1 3; 2 4; 5`, or column form `cols: 1 2 5 | 3 4`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("cols:") {
            let columns = rest
                .split('|')
                .map(parse_entries)
                .collect::<Result<Vec<_>>>()?;
            let columns = if columns.len() == 1 && columns[0].is_empty() {
                vec![]
            } else {
                columns
            };
            return Tableau::from_columns(columns);
        }
        if s.is_empty() {
            return Ok(Tableau::default());
        }
        let rows = s
            .split(';')
            .map(parse_entries)
            .collect::<Result<Vec<_>>>()?;
        Tableau::from_rows(rows)
    }
}

/// Every standard tableau with `n` boxes and at most `max_columns` columns,
/// ordered by their row-form text.
pub fn enumerate_tableaux(
    n: usize,
    max_columns: Option<usize>,
    limits: &Limits,
) -> Result<Vec<Tableau>> {
    let mut seen = BTreeSet::new();
    for w in enumerate_words(n, limits)? {
        let t = rs_tableau(&w);
        if max_columns.is_none_or(|m| t.num_columns() <= m) {
            seen.insert(t);
        }
    }
    Ok(sort_by_text(seen.into_iter().collect()))
}

pub(crate) fn sort_by_text(mut tableaux: Vec<Tableau>) -> Vec<Tableau> {
    tableaux.sort_by_cached_key(|t| t.to_string());
    tableaux
}
