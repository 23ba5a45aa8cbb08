mod common;

use std::collections::BTreeSet;

use common::*;
use itertools::Itertools;
use proptest::prelude::*;
use tableaux_core::{
    cell, cell_by_corners, delete_corner_entry, insert, jdt_remove, jdt_remove_in_order,
    project_tableau, rs_letters, rs_steps, rs_tableau, weak_leq, Word,
};

fn ok(check: Check) {
    if let Err(msg) = check {
        panic!("{msg}");
    }
}

#[test]
fn column_insertion_matches_row_insertion() {
    for n in 1..=7 {
        for w in words(n) {
            assert_eq!(rs_tableau(&w), row_insertion(w.as_slice()), "{w}");
        }
    }
}

#[test]
fn steps_insert_from_the_right() {
    let w = word(&[2, 5, 1, 4, 3]);
    let steps = rs_steps(&w);
    let texts: Vec<String> = steps.iter().map(ToString::to_string).collect();
    assert_eq!(texts, ["3", "3; 4", "1 3; 4", "1 3; 4; 5", "1 3; 2 4; 5"]);
    for n in 1..=6 {
        for w in words(n) {
            let steps = rs_steps(&w);
            assert_eq!(steps.len(), n);
            assert_eq!(steps.last(), Some(&rs_tableau(&w)));
            let mut t = Default::default();
            for &j in w.as_slice().iter().rev() {
                t = insert(j, &t).unwrap();
            }
            assert_eq!(t, rs_tableau(&w));
        }
    }
}

#[test]
fn insertion_and_corner_deletion_are_inverse() {
    for n in 1..=7 {
        ok(check_insert_delete_inverse(n));
    }
}

#[test]
fn transpose_matches_reversed_word() {
    for n in 1..=7 {
        ok(check_transpose_reverse(n));
    }
}

#[test]
fn projection_commutes_with_insertion() {
    for n in 2..=7 {
        ok(check_projection_commutation(n));
    }
}

#[test]
fn tau_is_constant_on_cells() {
    for n in 1..=7 {
        ok(check_tau_compatibility(n));
    }
}

#[test]
fn cells_by_filtering_and_by_corners_agree() {
    for n in 1..=6 {
        let mut total = 0;
        for t in tableaux(n) {
            let filtered: Vec<Vec<u32>> = cell(&t, &limits())
                .unwrap()
                .iter()
                .map(|w| w.as_slice().to_vec())
                .collect();
            let recursive: Vec<Vec<u32>> = cell_by_corners(&t)
                .iter()
                .map(|l| l.as_slice().to_vec())
                .collect();
            assert_eq!(filtered, recursive, "{t}");
            total += filtered.len();
        }
        assert_eq!(total, (1..=n).product::<usize>());
    }
}

#[test]
fn corner_recursion_works_on_any_alphabet() {
    let t = cols(&[&[2, 7, 9], &[5, 11]]);
    let cell = cell_by_corners(&t);
    assert!(!cell.is_empty());
    for letters in cell {
        assert_eq!(rs_letters(letters.as_slice()), t);
    }
}

#[test]
fn canonical_words_are_maximal_in_their_cells() {
    for n in 1..=7 {
        ok(check_cell_maximality(n));
    }
}

#[test]
fn removing_the_maximum_drops_its_box() {
    for n in 2..=6 {
        for t in tableaux(n) {
            let max = n as u32;
            let dropped = jdt_remove(&t, &BTreeSet::from([max])).unwrap();
            let mut columns = t.columns().to_vec();
            let c = t.col_of(max).unwrap() - 1;
            columns[c].pop();
            columns.retain(|col| !col.is_empty());
            assert_eq!(dropped.columns(), columns.as_slice());
            // Corner deletion pushes left instead, so it differs unless the
            // maximum sits in the first column.
            let pushed = delete_corner_entry(&t, max).unwrap();
            assert_eq!(pushed.tableau == dropped, c == 0, "{t}");
        }
    }
}

#[test]
fn projections_are_independent_of_removal_order() {
    for n in 2..=8 {
        ok(check_projection_removal_confluence(n, 300, 17));
    }
    // Exhaustively for small n, every order of the complement.
    for n in 2..=5 {
        for t in tableaux(n) {
            for s in 1..=n {
                for u in s + 1..=n {
                    let expected = project_tableau(&t, s, u).unwrap();
                    let outside: Vec<u32> = (1..=n as u32)
                        .filter(|&v| (v as usize) < s || v as usize > u)
                        .collect();
                    for order in outside.iter().copied().permutations(outside.len()) {
                        assert_eq!(jdt_remove_in_order(&t, order).unwrap(), expected);
                    }
                }
            }
        }
    }
}

#[test]
fn arbitrary_subsets_depend_on_removal_order() {
    let t = rows("1 2; 3 4");
    let first = jdt_remove_in_order(&t, [1, 3]).unwrap();
    let second = jdt_remove_in_order(&t, [3, 1]).unwrap();
    assert_eq!(first, rows("2 4"));
    assert_eq!(second, rows("2; 4"));
    assert_eq!(jdt_remove(&t, &BTreeSet::from([1, 3])).unwrap(), first);
    // Sampled over arbitrary subsets the claim fails too.
    assert!(check_jdt_confluence(6, 500, 1).is_err());
}

/// `w` with a fresh letter `m` in front, shifting the values at or above `m`.
fn prepend(m: u32, w: &Word) -> Word {
    let mut entries = vec![m];
    entries.extend(w.as_slice().iter().map(|&v| if v >= m { v + 1 } else { v }));
    word(&entries)
}

#[test]
fn weak_order_survives_fresh_letters() {
    for n in 1..=5 {
        let ws = words(n);
        for w in &ws {
            for y in &ws {
                if !weak_leq(w, y).unwrap() {
                    continue;
                }
                for m in 1..=n as u32 + 1 {
                    assert!(
                        weak_leq(&prepend(m, w), &prepend(m, y)).unwrap(),
                        "{w} {y} {m}"
                    );
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn random_words_insert_like_rows(
        w in (1usize..=12).prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
    ) {
        prop_assert_eq!(rs_tableau(&word(&w)), row_insertion(&w));
    }

    #[test]
    fn random_projections_commute(
        (w, s, u) in (2usize..=12).prop_flat_map(|n| (
            Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle(),
            1..=n,
            1..=n,
        ))
    ) {
        prop_assume!(s != u);
        let (s, u) = (s.min(u), s.max(u));
        let w = word(&w);
        let left = project_tableau(&rs_tableau(&w), s, u).unwrap();
        prop_assert_eq!(left, rs_letters(w.project(s, u).unwrap().as_slice()));
    }
}
