//! Robinson-Schensted insertion, jeu de taquin, and the induced Duflo and
//! chain orders on standard Young tableaux, with the fast machinery for
//! tableaux of at most two columns.
//!
//! Shapes list column lengths. Tableaux are stored column by column.

mod bitset;
mod error;
mod limits;
pub mod orders;
pub mod rs;
mod tableau;
pub mod two_column;
pub mod verify;
mod word;

pub use bitset::BitSet;
pub use error::{Error, Result};
pub use limits::{Limits, DUFLO_CEILING, HARD_CEILING, LIMIT_ENV};
pub use orders::{
    chain_leq, chain_poset, chain_profile, duflo_base_relation, duflo_poset, hasse_reduce,
    root_position_set, subspace_leq, transitive_closure, ChainProfile, OrderVerdict, PosetKind,
    RootPositionSet, TableauPoset,
};
pub use rs::{
    cell, cell_by_corners, delete_corner, delete_corner_entry, insert, insert_column,
    insert_traced, jdt_remove, jdt_remove_in_order, project_tableau, push_left_column, rs_letters,
    rs_steps, rs_tableau, ColumnOutcome, DeletionOutcome,
};
pub use tableau::{dominance_leq, enumerate_tableaux, ColumnShape, Corner, Tableau};
pub use two_column::{
    canonical_word, cover, cover_recursive, fast_leq_criterion, fast_leq_words, runs, t_angle,
    two_column_leq, two_row_canonical_word, two_row_leq, CanonicalWord, DeletionTrace, Run,
    RunDecomposition, TraceStep,
};
pub use word::{colligate, enumerate_words, weak_leq, InversionSet, Letters, TauSet, Word};
