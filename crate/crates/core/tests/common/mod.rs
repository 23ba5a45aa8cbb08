//! Brute-force oracles and exhaustive checks shared by the integration tests.
//! Each check returns the number of cases examined, or a description of the
//! first failure.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use tableaux_core::{
    canonical_word, chain_leq, cover, cover_recursive, delete_corner, enumerate_tableaux,
    enumerate_words, fast_leq_criterion, fast_leq_words, insert, insert_traced, jdt_remove,
    jdt_remove_in_order, project_tableau, rs_letters, rs_tableau, two_row_canonical_word,
    two_row_leq, weak_leq, Limits, Tableau, Word,
};

pub type Check = Result<usize, String>;

pub fn limits() -> Limits {
    Limits::with_override(9)
}

pub fn rows(text: &str) -> Tableau {
    text.parse().unwrap()
}

pub fn cols(columns: &[&[u32]]) -> Tableau {
    Tableau::from_columns(columns.iter().map(|c| c.to_vec()).collect()).unwrap()
}

pub fn word(entries: &[u32]) -> Word {
    Word::new(entries.to_vec()).unwrap()
}

pub fn words(n: usize) -> Vec<Word> {
    enumerate_words(n, &limits()).unwrap().collect()
}

pub fn tableaux(n: usize) -> Vec<Tableau> {
    enumerate_tableaux(n, None, &limits()).unwrap()
}

pub fn two_column(n: usize) -> Vec<Tableau> {
    enumerate_tableaux(n, Some(2), &limits()).unwrap()
}

pub fn two_row(n: usize) -> Vec<Tableau> {
    tableaux(n)
        .into_iter()
        .filter(|t| t.num_rows() <= 2)
        .collect()
}

pub fn involutions(n: usize) -> usize {
    let (mut a, mut b) = (1usize, 1usize);
    for k in 2..=n {
        (a, b) = (b, b + (k - 1) * a);
    }
    if n == 0 {
        1
    } else {
        b
    }
}

/// Inverted value pairs `(i, j)`, `i < j`, `j` occurring before `i`.
pub fn inversions(w: &[u32]) -> BTreeSet<(u32, u32)> {
    let mut out = BTreeSet::new();
    for a in 0..w.len() {
        for b in a + 1..w.len() {
            if w[a] > w[b] {
                out.insert((w[b], w[a]));
            }
        }
    }
    out
}

pub fn weak_leq_oracle(w: &[u32], y: &[u32]) -> bool {
    inversions(w).is_subset(&inversions(y))
}

pub fn tau_oracle(w: &[u32]) -> BTreeSet<usize> {
    let pos = |v: u32| w.iter().position(|&a| a == v).unwrap();
    (1..w.len() as u32)
        .filter(|&i| pos(i + 1) < pos(i))
        .map(|i| i as usize)
        .collect()
}

/// Schensted row insertion left to right; yields the same tableau as
/// column insertion from the left.
pub fn row_insertion(w: &[u32]) -> Tableau {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for &letter in w {
        let mut x = letter;
        let mut r = 0;
        loop {
            if r == rows.len() {
                rows.push(vec![x]);
                break;
            }
            match rows[r].iter().position(|&y| y > x) {
                Some(p) => {
                    x = std::mem::replace(&mut rows[r][p], x);
                    r += 1;
                }
                None => {
                    rows[r].push(x);
                    break;
                }
            }
        }
    }
    Tableau::from_rows(rows).unwrap()
}

pub fn dominance_oracle(a: &[usize], b: &[usize]) -> bool {
    let len = a.len().max(b.len());
    let (mut sa, mut sb) = (0, 0);
    for k in 0..len {
        sa += a.get(k).copied().unwrap_or(0);
        sb += b.get(k).copied().unwrap_or(0);
        if sa > sb {
            return false;
        }
    }
    true
}

/// The chain order straight from the definition, one projection per pair.
pub fn chain_leq_oracle(t: &Tableau, s: &Tableau) -> bool {
    let n = t.n();
    (1..n).all(|i| {
        (i + 1..=n).all(|j| {
            let a = project_tableau(t, i, j).unwrap().shape();
            let b = project_tableau(s, i, j).unwrap().shape();
            dominance_oracle(a.columns(), b.columns())
        })
    })
}

#[allow(clippy::needless_range_loop)]
pub fn closure(rel: &mut [Vec<bool>]) {
    let size = rel.len();
    for k in 0..size {
        for a in 0..size {
            if rel[a][k] {
                for b in 0..size {
                    if rel[k][b] {
                        rel[a][b] = true;
                    }
                }
            }
        }
    }
}

/// The Duflo order as the closure of the edges induced by weak-order covers
/// (adjacent ascents swapped), built without the pair scan.
pub fn duflo_by_weak_covers(n: usize) -> (Vec<Tableau>, Vec<Vec<bool>>) {
    let nodes = tableaux(n);
    let index: HashMap<&Tableau, usize> = nodes.iter().zip(0..).collect();
    let mut rel = vec![vec![false; nodes.len()]; nodes.len()];
    for (a, row) in rel.iter_mut().enumerate() {
        row[a] = true;
    }
    for w in words(n) {
        let from = index[&rs_tableau(&w)];
        let v = w.as_slice();
        for k in 0..v.len().saturating_sub(1) {
            if v[k] < v[k + 1] {
                let mut y = v.to_vec();
                y.swap(k, k + 1);
                rel[from][index[&rs_tableau(&word(&y))]] = true;
            }
        }
    }
    closure(&mut rel);
    (nodes, rel)
}

/// Covers read off a reflexive order matrix.
pub fn brute_covers(rel: &[Vec<bool>], a: usize) -> Vec<usize> {
    let size = rel.len();
    let strictly = |x: usize, y: usize| x != y && rel[x][y];
    (0..size)
        .filter(|&b| strictly(a, b) && !(0..size).any(|c| strictly(a, c) && strictly(c, b)))
        .collect()
}

fn fail<T>(msg: String) -> Result<T, String> {
    Err(msg)
}

/// `c^T => (T <= c) = T` for every corner, and `(j => T) <= j_T = T` for
/// every fresh letter.
pub fn check_insert_delete_inverse(n: usize) -> Check {
    let mut count = 0;
    for t in tableaux(n) {
        for corner in t.corners() {
            let d = delete_corner(&t, corner.col).unwrap();
            if insert(d.pushed_out, &d.tableau).unwrap() != t {
                return fail(format!(
                    "reinsertion after deleting corner {corner:?} of {t}"
                ));
            }
            count += 1;
        }
    }
    let smaller = if n >= 2 {
        tableaux(n - 1)
    } else {
        vec![Tableau::default()]
    };
    for t in smaller {
        for j in 1..=n as u32 {
            let shifted = t.map_entries(|v| if v >= j { v + 1 } else { v });
            let (grown, corner) = insert_traced(j, &shifted).unwrap();
            let d = delete_corner(&grown, corner.col).unwrap();
            if d.tableau != shifted || d.pushed_out != j {
                return fail(format!("deletion after inserting {j} into {shifted}"));
            }
            count += 1;
        }
    }
    Ok(count)
}

/// Removing a random subset in two random orders gives the same tableau.
pub fn check_jdt_confluence(n: usize, samples: usize, seed: u64) -> Check {
    let mut rng = StdRng::seed_from_u64(seed ^ n as u64);
    for _ in 0..samples {
        let mut perm: Vec<u32> = (1..=n as u32).collect();
        perm.shuffle(&mut rng);
        let t = rs_tableau(&word(&perm));
        let size = rng.gen_range(1..=n);
        let mut subset: Vec<u32> = perm[..size].to_vec();
        let sorted: BTreeSet<u32> = subset.iter().copied().collect();
        let reference = jdt_remove(&t, &sorted).unwrap();
        for _ in 0..2 {
            subset.shuffle(&mut rng);
            let other = jdt_remove_in_order(&t, subset.iter().copied()).unwrap();
            if other != reference {
                return fail(format!("{t} minus {subset:?}: {other} vs {reference}"));
            }
        }
    }
    Ok(samples)
}

/// Removing the complement of a random interval `[s, t]` in two random
/// orders gives the same tableau.
pub fn check_projection_removal_confluence(n: usize, samples: usize, seed: u64) -> Check {
    let mut rng = StdRng::seed_from_u64(seed ^ n as u64);
    for _ in 0..samples {
        let mut perm: Vec<u32> = (1..=n as u32).collect();
        perm.shuffle(&mut rng);
        let t = rs_tableau(&word(&perm));
        let s = rng.gen_range(1..=n as u32);
        let u = rng.gen_range(s..=n as u32);
        let mut outside: Vec<u32> = (1..=n as u32).filter(|&v| v < s || v > u).collect();
        let reference = jdt_remove(&t, &outside.iter().copied().collect()).unwrap();
        for _ in 0..2 {
            outside.shuffle(&mut rng);
            let other = jdt_remove_in_order(&t, outside.iter().copied()).unwrap();
            if other != reference {
                return fail(format!("{t} outside [{s},{u}]: {other} vs {reference}"));
            }
        }
    }
    Ok(samples)
}

/// `pi_{s,t}(T(w)) = T(pi_{s,t}(w))` for all words and all `s < t`.
pub fn check_projection_commutation(n: usize) -> Check {
    let mut count = 0;
    for w in words(n) {
        let t = rs_tableau(&w);
        for s in 1..n {
            for u in s + 1..=n {
                let left = project_tableau(&t, s, u).unwrap();
                let right = rs_letters(w.project(s, u).unwrap().as_slice());
                if left != right {
                    return fail(format!("{w} on [{s},{u}]: {left} vs {right}"));
                }
                count += 1;
            }
        }
    }
    Ok(count)
}

pub fn check_tau_compatibility(n: usize) -> Check {
    let ws = words(n);
    for w in &ws {
        let from_tableau: BTreeSet<usize> = rs_tableau(w).tau().iter().collect();
        if from_tableau != tau_oracle(w.as_slice()) {
            return fail(format!("tau of {w}"));
        }
    }
    Ok(ws.len())
}

/// Every word of a two-column cell lies below the canonical word.
pub fn check_cell_maximality(n: usize) -> Check {
    let mut canonical: HashMap<Tableau, Word> = HashMap::new();
    for t in two_column(n) {
        let w = canonical_word(&t).unwrap().word;
        if rs_tableau(&w) != t {
            return fail(format!("canonical word {w} does not insert to {t}"));
        }
        canonical.insert(t, w);
    }
    let mut count = 0;
    for y in words(n) {
        let t = rs_tableau(&y);
        if let Some(w) = canonical.get(&t) {
            if !weak_leq(&y, w).unwrap() {
                return fail(format!("{y} not below {w} in the cell of {t}"));
            }
            count += 1;
        }
    }
    Ok(count)
}

pub fn check_criterion_matches_words(n: usize) -> Check {
    let ts = two_column(n);
    for t in &ts {
        for s in &ts {
            if fast_leq_criterion(t, s).unwrap() != fast_leq_words(t, s).unwrap() {
                return fail(format!("T={t} S={s}"));
            }
        }
    }
    Ok(ts.len() * ts.len())
}

/// Every cover element has shape `(l1 + 1, l2 - 1)`.
pub fn check_cover_shape_law(n: usize) -> Check {
    let mut count = 0;
    for t in two_column(n) {
        let shape = t.shape();
        let (l1, l2) = (
            shape.columns()[0],
            shape.columns().get(1).copied().unwrap_or(0),
        );
        let expected: Vec<usize> = [l1 + 1, l2.saturating_sub(1)]
            .into_iter()
            .filter(|&l| l > 0)
            .collect();
        let explicit = cover(&t).unwrap();
        if explicit != cover_recursive(&t).unwrap() {
            return fail(format!("explicit and recursive covers differ at {t}"));
        }
        for s in explicit {
            if s.shape().columns() != expected.as_slice() {
                return fail(format!("cover {s} of {t} has shape {}", s.shape()));
            }
            count += 1;
        }
    }
    Ok(count)
}

/// Same-shape distinct pairs are incomparable; a strict relation moves
/// entries from the second column into the first.
pub fn check_column_monotonicity(n: usize) -> Check {
    let ts = two_column(n);
    let set = |t: &Tableau, c: usize| t.column(c).iter().copied().collect::<BTreeSet<u32>>();
    for t in &ts {
        for s in &ts {
            if t == s {
                continue;
            }
            let leq = fast_leq_words(t, s).unwrap();
            if t.shape() == s.shape() && leq {
                return fail(format!("same shape but related: T={t} S={s}"));
            }
            if leq {
                let first = set(t, 1).is_subset(&set(s, 1)) && set(t, 1) != set(s, 1);
                let second = set(s, 2).is_subset(&set(t, 2)) && set(s, 2) != set(t, 2);
                if !(first && second) {
                    return fail(format!("column sets not monotone: T={t} S={s}"));
                }
            }
        }
    }
    Ok(ts.len() * ts.len())
}

/// `T(reverse w)` is the transpose of `T(w)`.
pub fn check_transpose_reverse(n: usize) -> Check {
    let ws = words(n);
    for w in &ws {
        if rs_tableau(&w.reverse()) != rs_tableau(w).transpose() {
            return fail(format!("{w}"));
        }
    }
    Ok(ws.len())
}

/// On two-row tableaux, the transposed comparison agrees with the chain
/// oracle and with the two-row canonical words.
pub fn check_two_row_order(n: usize) -> Check {
    let ts = two_row(n);
    let words: Vec<Word> = ts
        .iter()
        .map(|t| two_row_canonical_word(t).unwrap())
        .collect();
    for (a, t) in ts.iter().enumerate() {
        if rs_tableau(&words[a]) != *t {
            return fail(format!("two-row word {} does not insert to {t}", words[a]));
        }
        for (b, s) in ts.iter().enumerate() {
            let got = two_row_leq(t, s).unwrap();
            if got != fast_leq_words(&s.transpose(), &t.transpose()).unwrap()
                || got != chain_leq_oracle(t, s)
                || got != weak_leq(&words[a], &words[b]).unwrap()
            {
                return fail(format!("T={t} S={s}"));
            }
        }
    }
    Ok(ts.len() * ts.len())
}

/// The chain order from the library agrees with the definition.
pub fn check_chain_matches_oracle(ts: &[Tableau]) -> Check {
    for t in ts {
        for s in ts {
            if chain_leq(t, s).unwrap() != chain_leq_oracle(t, s) {
                return fail(format!("T={t} S={s}"));
            }
        }
    }
    Ok(ts.len() * ts.len())
}
