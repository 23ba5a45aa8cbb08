//! Column insertion, corner deletion by pushing left, jeu de taquin and Young cells.
//!
//! Insertion goes "from the left": the tableau of `[a_1, ..., a_n]` is built
//! by inserting `a_n` first and `a_1` last, each letter entering column 1 and
//! bumping the smallest larger entry on to the next column.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::tableau::{Corner, Tableau};
use crate::word::{enumerate_words, Letters, Word};

/// Result of a single-column operation. `displaced == None` stands for the
/// infinite letter: the column grew without displacing anything.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ColumnOutcome {
    pub column: Vec<u32>,
    pub displaced: Option<u32>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DeletionOutcome {
    pub tableau: Tableau,
    /// The letter pushed out of the first column, `c^T`.
    pub pushed_out: u32,
}

/// `j -> C`: replaces the smallest entry greater than `j`, or appends `j`.
pub fn insert_column(j: u32, column: &[u32]) -> Result<ColumnOutcome> {
    match column.binary_search(&j) {
        Ok(_) => Err(Error::EntryPresent(j)),
        Err(at) => {
            let mut column = column.to_vec();
            if at == column.len() {
                column.push(j);
                Ok(ColumnOutcome {
                    column,
                    displaced: None,
                })
            } else {
                let bumped = std::mem::replace(&mut column[at], j);
                Ok(ColumnOutcome {
                    column,
                    displaced: Some(bumped),
                })
            }
        }
    }
}

/// In-place column insertion; returns the bumped letter.
fn insert_into(j: u32, column: &mut Vec<u32>) -> Option<u32> {
    match column.binary_search(&j) {
        Ok(_) => unreachable!("letter {j} already present"),
        Err(at) if at == column.len() => {
            column.push(j);
            None
        }
        Err(at) => Some(std::mem::replace(&mut column[at], j)),
    }
}

/// `j => T`, also reporting the corner the insertion created.
pub fn insert_traced(j: u32, t: &Tableau) -> Result<(Tableau, Corner)> {
    if t.contains(j) {
        return Err(Error::EntryPresent(j));
    }
    if j == 0 {
        return Err(Error::NonPositiveEntry);
    }
    let mut columns = t.columns().to_vec();
    let mut letter = j;
    let mut c = 0;
    loop {
        if c == columns.len() {
            columns.push(vec![letter]);
            break;
        }
        match insert_into(letter, &mut columns[c]) {
            Some(bumped) => {
                letter = bumped;
                c += 1;
            }
            None => break,
        }
    }
    let corner = Corner {
        row: columns[c].len(),
        col: c + 1,
    };
    Ok((Tableau::from_columns_unchecked(columns), corner))
}

/// `j => T`, the insertion algorithm.
pub fn insert(j: u32, t: &Tableau) -> Result<Tableau> {
    insert_traced(j, t).map(|(t, _)| t)
}

/// The insertion tableau of a sequence of distinct letters.
pub fn rs_letters(letters: &[u32]) -> Tableau {
    let mut columns: Vec<Vec<u32>> = Vec::new();
    for &a in letters.iter().rev() {
        let mut pending = Some(a);
        for col in columns.iter_mut() {
            match pending {
                Some(letter) => pending = insert_into(letter, col),
                None => break,
            }
        }
        if let Some(letter) = pending {
            columns.push(vec![letter]);
        }
    }
    Tableau::from_columns_unchecked(columns)
}

/// `T(w)`.
pub fn rs_tableau(w: &Word) -> Tableau {
    rs_letters(w.as_slice())
}

/// The successive tableaux `_1T(w), ..., _nT(w)`.
pub fn rs_steps(w: &Word) -> Vec<Tableau> {
    let mut current = Tableau::default();
    w.as_slice()
        .iter()
        .rev()
        .map(|&a| {
            current = insert(a, &current).expect("letters of a word are distinct");
            current.clone()
        })
        .collect()
}

/// `C <- j`: replaces the greatest entry smaller than `j` by `j`.
pub fn push_left_column(column: &[u32], j: u32) -> Result<ColumnOutcome> {
    let top = *column
        .first()
        .ok_or(Error::PushBelowTop { value: j, top: 0 })?;
    match column.binary_search(&j) {
        Ok(_) => Err(Error::EntryPresent(j)),
        Err(at) if j < top || at == 0 => Err(Error::PushBelowTop { value: j, top }),
        Err(at) => {
            let mut column = column.to_vec();
            let pushed = std::mem::replace(&mut column[at - 1], j);
            Ok(ColumnOutcome {
                column,
                displaced: Some(pushed),
            })
        }
    }
}

/// `T <= c`: deletes the corner at the bottom of column `col` (1-based).
pub fn delete_corner(t: &Tableau, col: usize) -> Result<DeletionOutcome> {
    if !t.corners().iter().any(|c| c.col == col) {
        return Err(Error::NoCorner(col));
    }
    let mut columns = t.columns().to_vec();
    let mut letter = columns[col - 1].pop().expect("corner column is non-empty");
    for c in (0..col - 1).rev() {
        let column = &mut columns[c];
        // Greatest entry smaller than `letter`; exists since rows increase.
        let at = column.partition_point(|&a| a < letter);
        letter = std::mem::replace(&mut column[at - 1], letter);
    }
    Ok(DeletionOutcome {
        tableau: Tableau::from_columns_unchecked(columns),
        pushed_out: letter,
    })
}

/// Deletes the corner holding `entry`.
pub fn delete_corner_entry(t: &Tableau, entry: u32) -> Result<DeletionOutcome> {
    match t.locate(entry) {
        Some((row, col)) if t.column(col).len() == row && t.column(col + 1).len() < row => {
            delete_corner(t, col)
        }
        Some((_, col)) => Err(Error::NoCorner(col)),
        None => Err(Error::EntryAbsent(entry)),
    }
}

/// Removes a single entry by jeu de taquin.
fn slide_out(columns: &mut Vec<Vec<u32>>, entry: u32) -> Result<()> {
    let (mut c, mut r) = columns
        .iter()
        .enumerate()
        .find_map(|(c, col)| col.binary_search(&entry).ok().map(|r| (c, r)))
        .ok_or(Error::EntryAbsent(entry))?;
    loop {
        let right = columns.get(c + 1).and_then(|col| col.get(r)).copied();
        let below = columns[c].get(r + 1).copied();
        match (right, below) {
            (None, None) => {
                columns[c].pop();
                if columns[c].is_empty() {
                    columns.remove(c);
                }
                return Ok(());
            }
            (Some(x), b) if b.is_none_or(|b| x < b) => {
                columns[c][r] = x;
                c += 1;
            }
            (_, Some(b)) => {
                columns[c][r] = b;
                r += 1;
            }
            (Some(_), None) => unreachable!(),
        }
    }
}

/// `T \ entries`, removing the entries in increasing order.
pub fn jdt_remove(t: &Tableau, entries: &BTreeSet<u32>) -> Result<Tableau> {
    jdt_remove_in_order(t, entries.iter().copied())
}

/// `T \ entries`, removing the entries in the given order.
pub fn jdt_remove_in_order(t: &Tableau, order: impl IntoIterator<Item = u32>) -> Result<Tableau> {
    let mut columns = t.columns().to_vec();
    for e in order {
        slide_out(&mut columns, e)?;
    }
    Ok(Tableau::from_columns_unchecked(columns))
}

/// `pi_{s,t}(T)`: keeps the entries `m_s..=m_t` of the sorted alphabet.
pub fn project_tableau(t: &Tableau, s: usize, u: usize) -> Result<Tableau> {
    let n = t.n();
    if !(1 <= s && s < u && u <= n) {
        return Err(Error::BoundsViolation { lo: s, hi: u, n });
    }
    let alphabet = t.alphabet();
    let outside: BTreeSet<u32> = alphabet[..s - 1]
        .iter()
        .chain(&alphabet[u..])
        .copied()
        .collect();
    jdt_remove(t, &outside)
}

/// `C_T`, by filtering every word of size `n` through the insertion.
pub fn cell(t: &Tableau, limits: &Limits) -> Result<Vec<Word>> {
    let t = t.clone().require_standard()?;
    let n = t.n();
    if n == 0 {
        return Ok(vec![]);
    }
    let words: Vec<Word> = enumerate_words(n, limits)?.collect();
    let mut out: Vec<Word> = words
        .into_par_iter()
        .filter(|w| rs_tableau(w) == t)
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// `C_T` by the corner recursion `C_T = ⊔_i ⊔_{y' in C_{T <= c_i}} [c_i^T, y']`.
/// Works on any alphabet; used as an independent check on [`cell`].
pub fn cell_by_corners(t: &Tableau) -> Vec<Letters> {
    fn go(t: &Tableau, prefix: &mut Vec<u32>, out: &mut Vec<Letters>) {
        if t.is_empty() {
            out.push(Letters::from_vec_unchecked(prefix.clone()));
            return;
        }
        for corner in t.corners() {
            let d = delete_corner(t, corner.col).expect("listed corner");
            prefix.push(d.pushed_out);
            go(&d.tableau, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(t, &mut Vec::with_capacity(t.n()), &mut out);
    out.sort_unstable();
    out
}
