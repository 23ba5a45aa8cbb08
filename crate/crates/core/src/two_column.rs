//! Tableaux with at most two columns: the canonical word, the fast comparison
//! and the explicit covers. Tableaux with a single column are admitted
//! throughout (empty second column).

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::rs::{delete_corner_entry, insert, project_tableau};
use crate::tableau::{sort_by_text, Tableau};
use crate::word::{weak_leq, Word};

/// One step `T_(i-1) = T_(i) <= z_i`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TraceStep {
    /// `z_i`, the largest entry of `T_(i)`.
    pub max: u32,
    /// `a_i`, the value pushed out of the first column.
    pub pushed: u32,
    /// Column of `z_i` in `T_(i)`.
    pub column: usize,
}

/// The full deletion sequence `T = T_(n), ..., T_(1)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DeletionTrace {
    steps: Vec<TraceStep>,
    snapshots: Vec<Tableau>,
    second_column: BTreeMap<u32, (usize, u32)>,
}

impl DeletionTrace {
    /// Runs the deletion sequence on any tableau with at most two columns.
    pub fn new(t: &Tableau) -> Result<Self> {
        require_two_columns(t)?;
        let n = t.n();
        let mut steps = Vec::with_capacity(n);
        let mut snapshots = Vec::with_capacity(n);
        let mut second_column = BTreeMap::new();
        let mut current = t.clone();
        while let Some(max) = current.max_entry() {
            let column = current.col_of(max).expect("maximum is present");
            let next = delete_corner_entry(&current, max).expect("maximum is a corner");
            if column == 2 {
                second_column.insert(max, (snapshots.len(), next.pushed_out));
            }
            steps.push(TraceStep {
                max,
                pushed: next.pushed_out,
                column,
            });
            snapshots.push(std::mem::replace(&mut current, next.tableau));
        }
        Ok(DeletionTrace {
            steps,
            snapshots,
            second_column,
        })
    }

    /// Steps in execution order, `i = n` first.
    pub fn steps(&self) -> &[TraceStep] {
        &self.steps
    }

    /// `T_(n), ..., T_(1)`.
    pub fn snapshots(&self) -> &[Tableau] {
        &self.snapshots
    }

    /// `T_(i)`, the snapshot with `i` boxes.
    pub fn snapshot(&self, i: usize) -> Option<&Tableau> {
        let n = self.snapshots.len();
        (1..=n).contains(&i).then(|| &self.snapshots[n - i])
    }

    /// `T{x}` for `x` in the second column.
    pub fn brace(&self, x: u32) -> Option<&Tableau> {
        self.second_column.get(&x).map(|&(k, _)| &self.snapshots[k])
    }

    /// `x^{T{x}}` for `x` in the second column.
    pub fn pushed_from(&self, x: u32) -> Option<u32> {
        self.second_column.get(&x).map(|&(_, a)| a)
    }

    /// Pairs `(x, x^{T{x}})` over the second column, ascending in `x`.
    pub fn second_column_map(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.second_column.iter().map(|(&x, &(_, a))| (x, a))
    }
}

/// `w_T` with the trace that produced it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CanonicalWord {
    pub word: Word,
    pub trace: DeletionTrace,
}

/// Maximal runs `{a, a+1, ..., a+k}` of the second column.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Run {
    pub start: u32,
    pub extra: u32,
}

impl Run {
    pub fn end(&self) -> u32 {
        self.start + self.extra
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RunDecomposition {
    pub runs: Vec<Run>,
}

impl RunDecomposition {
    pub fn ends(&self) -> impl Iterator<Item = u32> + '_ {
        self.runs.iter().map(Run::end)
    }
}

fn require_two_columns(t: &Tableau) -> Result<()> {
    match t.num_columns() {
        0..=2 => Ok(()),
        c => Err(Error::TooManyColumns(c)),
    }
}

fn require_two_rows(t: &Tableau) -> Result<()> {
    match t.num_rows() {
        0..=2 => Ok(()),
        r => Err(Error::TooManyRows(r)),
    }
}

fn require_same_size(t: &Tableau, s: &Tableau) -> Result<()> {
    if t.n() == s.n() {
        Ok(())
    } else {
        Err(Error::SizeMismatch {
            left: t.n(),
            right: s.n(),
        })
    }
}

/// `w_T = [a_n, ..., a_1]`.
pub fn canonical_word(t: &Tableau) -> Result<CanonicalWord> {
    require_two_columns(t)?;
    let t = t.clone().require_standard()?;
    let trace = DeletionTrace::new(&t)?;
    let word = Word::from_permutation_unchecked(trace.steps.iter().map(|s| s.pushed).collect());
    Ok(CanonicalWord { word, trace })
}

/// `w_T <=_D w_S`.
pub fn fast_leq_words(t: &Tableau, s: &Tableau) -> Result<bool> {
    require_same_size(t, s)?;
    weak_leq(&canonical_word(t)?.word, &canonical_word(s)?.word)
}

/// `<S_2> ⊆ <T_2>` and `x^{S{x}} ∈ <T_1>` for every `x ∈ <S_2>`.
pub fn fast_leq_criterion(t: &Tableau, s: &Tableau) -> Result<bool> {
    require_same_size(t, s)?;
    require_two_columns(t)?;
    let s_trace = canonical_word(s)?.trace;
    let t = t.clone().require_standard()?;
    let holds = s_trace
        .second_column_map()
        .all(|(x, pushed)| t.col_of(x) == Some(2) && t.col_of(pushed) == Some(1));
    Ok(holds)
}

/// The common order on two-column tableaux. Debug builds cross-check the two
/// deciders.
pub fn two_column_leq(t: &Tableau, s: &Tableau) -> Result<bool> {
    let fast = fast_leq_criterion(t, s)?;
    debug_assert_eq!(
        Some(fast),
        fast_leq_words(t, s).ok(),
        "deciders disagree on {t} vs {s}"
    );
    Ok(fast)
}

pub fn runs(t: &Tableau) -> RunDecomposition {
    let mut out: Vec<Run> = Vec::new();
    for &x in t.column(2) {
        match out.last_mut() {
            Some(run) if run.end() + 1 == x => run.extra += 1,
            _ => out.push(Run { start: x, extra: 0 }),
        }
    }
    RunDecomposition { runs: out }
}

/// `T<x> = (T_1 + {x}, T_2 \ {x})`.
pub fn t_angle(t: &Tableau, x: u32) -> Result<Tableau> {
    require_two_columns(t)?;
    if t.col_of(x) != Some(2) {
        return Err(Error::NotInSecondColumn(x));
    }
    let mut first = t.column(1).to_vec();
    let at = first.partition_point(|&a| a < x);
    first.insert(at, x);
    let second = t.column(2).iter().copied().filter(|&a| a != x).collect();
    Ok(Tableau::from_columns_unchecked(vec![first, second]))
}

/// The cover from the run decomposition: `T<e>` for every run end `e` with
/// `pi_{1,e}(T) = T{e}`.
pub fn cover(t: &Tableau) -> Result<Vec<Tableau>> {
    let trace = canonical_word(t)?.trace;
    let mut out = Vec::new();
    for e in runs(t).ends() {
        let projected = project_tableau(t, 1, e as usize)?;
        if trace.brace(e) == Some(&projected) {
            out.push(t_angle(t, e)?);
        }
    }
    Ok(sort_by_text(out))
}

/// The cover by recursion on the largest entry. Works on any alphabet.
pub fn cover_recursive(t: &Tableau) -> Result<Vec<Tableau>> {
    require_two_columns(t)?;
    let mut out = sort_by_text(recursive(t));
    // The two branches of the recursion can produce the same tableau.
    out.dedup();
    Ok(out)
}

fn recursive(t: &Tableau) -> Vec<Tableau> {
    if t.num_columns() < 2 {
        return vec![];
    }
    let n = t.max_entry().expect("non-empty");
    if t.col_of(n) == Some(1) {
        let rest = delete_corner_entry(t, n)
            .expect("maximum is a corner")
            .tableau;
        return recursive(&rest)
            .iter()
            .map(|s| insert(n, s).expect("fresh letter"))
            .collect();
    }
    let omega = t.omega(1).expect("non-empty first column");
    let mut first = t.column(1).to_vec();
    first.pop();
    let mut second = t.column(2).to_vec();
    second.pop();
    let reduced = Tableau::from_columns_unchecked(vec![first, second]);
    let mut out: Vec<Tableau> = recursive(&reduced)
        .iter()
        .map(|s| insert(omega, &insert(n, s).expect("fresh letter")).expect("fresh letter"))
        .collect();
    out.push(t_angle(t, n).expect("largest entry is in the second column"));
    out
}

/// `w_S`, the reverse of the canonical word of the transpose.
pub fn two_row_canonical_word(s: &Tableau) -> Result<Word> {
    require_two_rows(s)?;
    Ok(canonical_word(&s.transpose())?.word.reverse())
}

/// The order on two-row tableaux, through transposition.
pub fn two_row_leq(t: &Tableau, s: &Tableau) -> Result<bool> {
    require_two_rows(t)?;
    require_two_rows(s)?;
    fast_leq_words(&s.transpose(), &t.transpose())
}
