//! Exhaustive verification suites over all tableaux of a given size.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::orders::{chain_leq, chain_poset, duflo_poset, TableauPoset};
use crate::tableau::{enumerate_tableaux, Tableau};
use crate::two_column::{canonical_word, cover, cover_recursive};
use crate::word::{weak_leq, Word};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    All,
    Thm311,
    Cor312,
    Prop316,
    Coincide,
    Extension,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = [
        "all",
        "thm311",
        "cor312",
        "prop316",
        "coincide",
        "extension",
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Thm311 => "thm311",
            Suite::Cor312 => "cor312",
            Suite::Prop316 => "prop316",
            Suite::Coincide => "coincide",
            Suite::Extension => "extension",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            Suite::All,
            Suite::Thm311,
            Suite::Cor312,
            Suite::Prop316,
            Suite::Coincide,
            Suite::Extension,
        ]
        .into_iter()
        .find(|suite| suite.name() == s)
        .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// A failing or witnessing pair, printed as `T=<row-form> S=<row-form> order=<kind>`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairReport {
    pub t: Tableau,
    pub s: Tableau,
    pub order: String,
}

impl fmt::Display for PairReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T={} S={} order={}", self.t, self.s, self.order)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CheckResult {
    pub name: String,
    pub population: usize,
    pub passed: bool,
    pub counterexample: Option<PairReport>,
    /// A pair whose existence is what the check asserts.
    pub witness: Option<PairReport>,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} cases)", self.name, self.population)?;
        if let Some(c) = &self.counterexample {
            write!(f, " counterexample: {c}")?;
        }
        if let Some(w) = &self.witness {
            write!(f, " witness: {w}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub n: usize,
    pub checks: Vec<CheckResult>,
    pub elapsed: Duration,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let verdict = if self.passed() { "ok" } else { "FAILED" };
        write!(
            f,
            "n={} {verdict}: {} checks in {:.3}s",
            self.n,
            self.checks.len(),
            self.elapsed.as_secs_f64()
        )
    }
}

/// Lazily built shared inputs, so `all` constructs each poset once.
struct Context<'a> {
    n: usize,
    limits: &'a Limits,
    two_column: Option<Vec<(Tableau, Word)>>,
    duflo: Option<TableauPoset>,
    chain: Option<TableauPoset>,
}

impl<'a> Context<'a> {
    fn two_column(&mut self) -> Result<&[(Tableau, Word)]> {
        if self.two_column.is_none() {
            let nodes = enumerate_tableaux(self.n, Some(2), self.limits)?;
            self.two_column = Some(
                nodes
                    .into_iter()
                    .map(|t| {
                        let w = canonical_word(&t).expect("two columns").word;
                        (t, w)
                    })
                    .collect(),
            );
        }
        Ok(self.two_column.as_deref().unwrap())
    }

    fn duflo(&mut self) -> Result<&TableauPoset> {
        if self.duflo.is_none() {
            self.duflo = Some(duflo_poset(self.n, self.limits)?);
        }
        Ok(self.duflo.as_ref().unwrap())
    }

    fn chain(&mut self) -> Result<&TableauPoset> {
        if self.chain.is_none() {
            self.chain = Some(chain_poset(self.n, self.limits)?);
        }
        Ok(self.chain.as_ref().unwrap())
    }
}

fn first_failing_pair<T: Sync>(
    items: &[T],
    bad: impl Fn(&T, &T) -> bool + Sync,
) -> Option<(usize, usize)> {
    (0..items.len())
        .into_par_iter()
        .filter_map(|a| {
            (0..items.len())
                .find(|&b| bad(&items[a], &items[b]))
                .map(|b| (a, b))
        })
        .min()
}

fn pair(t: &Tableau, s: &Tableau, order: &str) -> PairReport {
    PairReport {
        t: t.clone(),
        s: s.clone(),
        order: order.to_string(),
    }
}

/// Chain order equals inversion containment of canonical words on two-column tableaux.
pub fn check_thm311(n: usize, limits: &Limits) -> Result<CheckResult> {
    limits.check_enumeration(n)?;
    let mut ctx = context(n, limits);
    thm311(&mut ctx)
}

fn thm311(ctx: &mut Context) -> Result<CheckResult> {
    let items = ctx.two_column()?;
    let fail = first_failing_pair(items, |(t, wt), (s, ws)| {
        chain_leq(t, s).unwrap() != weak_leq(wt, ws).unwrap()
    });
    Ok(CheckResult {
        name: "thm311".into(),
        population: items.len() * items.len(),
        passed: fail.is_none(),
        counterexample: fail.map(|(a, b)| pair(&items[a].0, &items[b].0, "chain")),
        witness: None,
    })
}

fn cor312(ctx: &mut Context) -> Result<CheckResult> {
    let restricted = ctx.duflo()?.restrict(|t| t.num_columns() <= 2);
    let items = ctx.two_column()?;
    debug_assert!(restricted.nodes().iter().eq(items.iter().map(|(t, _)| t)));
    let fail = first_failing_pair(&(0..items.len()).collect::<Vec<_>>(), |&a, &b| {
        restricted.leq_index(a, b) != weak_leq(&items[a].1, &items[b].1).unwrap()
    });
    Ok(CheckResult {
        name: "cor312".into(),
        population: items.len() * items.len(),
        passed: fail.is_none(),
        counterexample: fail.map(|(a, b)| pair(&items[a].0, &items[b].0, "duflo")),
        witness: None,
    })
}

fn prop316(ctx: &mut Context) -> Result<CheckResult> {
    let restricted = ctx.duflo()?.restrict(|t| t.num_columns() <= 2);
    let items = ctx.two_column()?;
    let fail = items.par_iter().find_first(|(t, _)| {
        let explicit = cover(t).unwrap();
        explicit != cover_recursive(t).unwrap() || explicit != restricted.cover_of(t).unwrap()
    });
    Ok(CheckResult {
        name: "prop316".into(),
        population: items.len(),
        passed: fail.is_none(),
        counterexample: fail.map(|(t, _)| {
            let got = cover(t).unwrap();
            let s = got.first().cloned().unwrap_or_default();
            pair(t, &s, "duflo-cover")
        }),
        witness: None,
    })
}

fn coincide(ctx: &mut Context) -> Result<CheckResult> {
    let chain = ctx.chain()?.clone();
    let duflo = ctx.duflo()?;
    let size = duflo.nodes().len();
    let fail = first_failing_pair(&(0..size).collect::<Vec<_>>(), |&a, &b| {
        duflo.leq_index(a, b) != chain.leq_index(a, b)
    });
    Ok(CheckResult {
        name: "coincide".into(),
        population: size * size,
        passed: fail.is_none(),
        counterexample: fail.map(|(a, b)| {
            let order = if chain.leq_index(a, b) {
                "chain"
            } else {
                "duflo"
            };
            pair(&duflo.nodes()[a], &duflo.nodes()[b], order)
        }),
        witness: None,
    })
}

fn extension(ctx: &mut Context) -> Result<CheckResult> {
    let chain = ctx.chain()?.clone();
    let duflo = ctx.duflo()?;
    let size = duflo.nodes().len();
    let indices: Vec<usize> = (0..size).collect();
    let not_contained = first_failing_pair(&indices, |&a, &b| {
        duflo.leq_index(a, b) && !chain.leq_index(a, b)
    });
    let proper = first_failing_pair(&indices, |&a, &b| {
        chain.leq_index(a, b) && !duflo.leq_index(a, b)
    });
    let nodes = duflo.nodes();
    Ok(CheckResult {
        name: "extension".into(),
        population: size * size,
        passed: not_contained.is_none() && proper.is_some(),
        counterexample: not_contained.map(|(a, b)| pair(&nodes[a], &nodes[b], "duflo")),
        witness: proper.map(|(a, b)| pair(&nodes[a], &nodes[b], "chain")),
    })
}

fn context(n: usize, limits: &Limits) -> Context<'_> {
    Context {
        n,
        limits,
        two_column: None,
        duflo: None,
        chain: None,
    }
}

/// Runs a suite. `all` runs the two-column checks, then coincidence for
/// `n <= 5` and proper extension beyond.
pub fn run_suite(suite: Suite, n: usize, limits: &Limits) -> Result<VerifyReport> {
    let start = Instant::now();
    match suite {
        Suite::Thm311 => limits.check_enumeration(n)?,
        _ => limits.check_duflo(n)?,
    }
    let mut ctx = context(n, limits);
    let checks = match suite {
        Suite::Thm311 => vec![thm311(&mut ctx)?],
        Suite::Cor312 => vec![cor312(&mut ctx)?],
        Suite::Prop316 => vec![prop316(&mut ctx)?],
        Suite::Coincide => vec![coincide(&mut ctx)?],
        Suite::Extension => vec![extension(&mut ctx)?],
        Suite::All => vec![
            thm311(&mut ctx)?,
            cor312(&mut ctx)?,
            prop316(&mut ctx)?,
            if n <= 5 {
                coincide(&mut ctx)?
            } else {
                extension(&mut ctx)?
            },
        ],
    };
    Ok(VerifyReport {
        n,
        checks,
        elapsed: start.elapsed(),
    })
}
