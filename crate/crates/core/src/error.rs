use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the word is empty")]
    EmptyWord,
    #[error("entry {0} occurs more than once")]
    DuplicateEntry(u32),
    #[error("entries do not cover 1..={n} (missing {missing})")]
    NotPermutation { n: usize, missing: u32 },
    #[error("entry 0 is not a positive integer")]
    NonPositiveEntry,
    #[error("value {0} does not occur")]
    ValueAbsent(u32),
    #[error("alphabets overlap in {0}")]
    AlphabetOverlap(u32),
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("bounds violation: need 1 <= {lo} < {hi} <= {n}")]
    BoundsViolation { lo: usize, hi: usize, n: usize },
    #[error("n = {n} exceeds the configured limit {limit}")]
    LimitExceeded { n: usize, limit: usize },

    #[error("column {column} is not strictly increasing")]
    NonIncreasingColumn { column: usize },
    #[error("row {row} is not strictly increasing")]
    RowViolation { row: usize },
    #[error("column lengths are not weakly decreasing")]
    ShapeNotDecreasing,
    #[error("empty column {column}")]
    EmptyColumn { column: usize },
    #[error("entries are not exactly 1..={n}")]
    NotStandard { n: usize },
    #[error("rows are not weakly decreasing in length")]
    RowsNotDecreasing,

    #[error("{0} is already an entry")]
    EntryPresent(u32),
    #[error("cannot push {value} left into a column whose top entry is {top}")]
    PushBelowTop { value: u32, top: u32 },
    #[error("no corner in column {0}")]
    NoCorner(usize),
    #[error("entry {0} is absent from the tableau")]
    EntryAbsent(u32),

    #[error("tableau has {0} columns, at most 2 allowed")]
    TooManyColumns(usize),
    #[error("tableau has {0} rows, at most 2 allowed")]
    TooManyRows(usize),
    #[error("tableau has neither at most two columns nor at most two rows")]
    ShapeOutOfScope,
    #[error("{0} is not in the second column")]
    NotInSecondColumn(u32),

    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("antisymmetry violated between {0} and {1}")]
    AntisymmetryViolation(String, String),
    #[error("tableau {0} is not a node of the poset")]
    NodeAbsent(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable variant name, used by the CLI in diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::EmptyWord => "EmptyWord",
            Error::DuplicateEntry(_) => "DuplicateEntry",
            Error::NotPermutation { .. } => "NotPermutation",
            Error::NonPositiveEntry => "NonPositiveEntry",
            Error::ValueAbsent(_) => "ValueAbsent",
            Error::AlphabetOverlap(_) => "AlphabetOverlap",
            Error::SizeMismatch { .. } => "SizeMismatch",
            Error::BoundsViolation { .. } => "BoundsViolation",
            Error::LimitExceeded { .. } => "LimitExceeded",
            Error::NonIncreasingColumn { .. } => "NonIncreasingColumn",
            Error::RowViolation { .. } => "RowViolation",
            Error::ShapeNotDecreasing => "ShapeNotDecreasing",
            Error::EmptyColumn { .. } => "EmptyColumn",
            Error::NotStandard { .. } => "NotStandard",
            Error::RowsNotDecreasing => "RowsNotDecreasing",
            Error::EntryPresent(_) => "EntryPresent",
            Error::PushBelowTop { .. } => "PushBelowTop",
            Error::NoCorner(_) => "NoCorner",
            Error::EntryAbsent(_) => "EntryAbsent",
            Error::TooManyColumns(_) => "TooManyColumns",
            Error::TooManyRows(_) => "TooManyRows",
            Error::ShapeOutOfScope => "ShapeOutOfScope",
            Error::NotInSecondColumn(_) => "NotInSecondColumn",
            Error::NotAPartialOrder(_) => "NotAPartialOrder",
            Error::AntisymmetryViolation(..) => "AntisymmetryViolation",
            Error::NodeAbsent(_) => "NodeAbsent",
            Error::Parse(_) => "Parse",
        }
    }
}
