use crate::error::{Error, Result};

/// Environment variable consulted when no explicit limit is given.
pub const LIMIT_ENV: &str = "TABLEAUX_LIMIT_N";

/// Absolute cap on exhaustive enumeration (9! = 362880 words).
pub const HARD_CEILING: usize = 9;

/// The Duflo pair scan is refused at the hard ceiling even when the
/// enumeration limit is raised to it.
pub const DUFLO_CEILING: usize = HARD_CEILING - 1;

/// Caps on the exhaustive constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest n for word/tableau enumeration, cells and the chain poset.
    pub enumeration: usize,
    /// Largest n for the Duflo poset.
    pub duflo: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration: 8,
            duflo: 7,
        }
    }
}

impl Limits {
    /// A single override raising (or lowering) every cap, clamped to the
    /// hard ceilings.
    pub fn with_override(n: usize) -> Self {
        Limits {
            enumeration: n.min(HARD_CEILING),
            duflo: n.min(DUFLO_CEILING),
        }
    }

    /// Explicit override first, then the environment, then defaults.
    pub fn resolve(explicit: Option<usize>) -> Result<Self> {
        if let Some(n) = explicit {
            return Ok(Self::with_override(n));
        }
        match std::env::var(LIMIT_ENV) {
            Ok(raw) => raw
                .trim()
                .parse::<usize>()
                .map(Self::with_override)
                .map_err(|_| Error::Parse(format!("{LIMIT_ENV}={raw:?} is not an integer"))),
            Err(_) => Ok(Self::default()),
        }
    }

    pub fn check_enumeration(&self, n: usize) -> Result<()> {
        check(n, self.enumeration.min(HARD_CEILING))
    }

    pub fn check_duflo(&self, n: usize) -> Result<()> {
        check(n, self.duflo.min(DUFLO_CEILING))
    }
}

fn check(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        Err(Error::LimitExceeded { n, limit })
    } else {
        Ok(())
    }
}
