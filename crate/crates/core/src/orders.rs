//! The induced Duflo order, the chain order and root-position sets, plus the
//! poset machinery (closure, Hasse reduction, DOT/JSON export).

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::rs::{jdt_remove_in_order, rs_tableau};
use crate::tableau::{dominance_leq_unchecked, enumerate_tableaux, ColumnShape, Tableau};
use crate::word::{enumerate_words, pair_index, Word};

/// Four-way answer of a partial-order comparison.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum OrderVerdict {
    Less,
    Greater,
    Equal,
    Incomparable,
}

impl OrderVerdict {
    pub fn from_leq(a_le_b: bool, b_le_a: bool) -> Self {
        match (a_le_b, b_le_a) {
            (true, true) => OrderVerdict::Equal,
            (true, false) => OrderVerdict::Less,
            (false, true) => OrderVerdict::Greater,
            (false, false) => OrderVerdict::Incomparable,
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            OrderVerdict::Less => OrderVerdict::Greater,
            OrderVerdict::Greater => OrderVerdict::Less,
            v => v,
        }
    }
}

impl fmt::Display for OrderVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The shapes `D_<i,j>(T) = sh(pi_{i,j}(T))` for all `1 <= i < j <= n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChainProfile {
    n: usize,
    diagrams: BTreeMap<(usize, usize), ColumnShape>,
}

impl ChainProfile {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&ColumnShape> {
        self.diagrams.get(&(i, j))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &ColumnShape)> {
        self.diagrams.iter()
    }

    /// Every diagram of `self` is dominated by the matching one of `other`.
    pub fn dominated_by(&self, other: &ChainProfile) -> bool {
        self.n == other.n
            && self
                .diagrams
                .iter()
                .zip(other.diagrams.values())
                .all(|((_, a), b)| dominance_leq_unchecked(a.columns(), b.columns()))
    }
}

/// Computes all projected shapes. Indices refer to ranks in the alphabet.
pub fn chain_profile(t: &Tableau) -> ChainProfile {
    let alphabet = t.alphabet();
    let n = alphabet.len();
    let mut diagrams = BTreeMap::new();
    // `upper` runs through pi_{i,n}(T); removing the smallest entry is a slide.
    let mut upper = t.clone();
    for i in 1..n {
        let mut p = upper.clone();
        for j in (i + 1..=n).rev() {
            diagrams.insert((i, j), p.shape());
            p = jdt_remove_in_order(&p, [alphabet[j - 1]]).expect("entry of the tableau");
        }
        upper = jdt_remove_in_order(&upper, [alphabet[i - 1]]).expect("entry of the tableau");
    }
    ChainProfile { n, diagrams }
}

/// `T <=_C S`.
pub fn chain_leq(t: &Tableau, s: &Tableau) -> Result<bool> {
    if t.n() != s.n() {
        return Err(Error::SizeMismatch {
            left: t.n(),
            right: s.n(),
        });
    }
    Ok(chain_profile(t).dominated_by(&chain_profile(s)))
}

/// Pairs `(i, j)`, `i < j`, with `p_w(i) < p_w(j)`: the root spaces of `n ∩^w n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootPositionSet {
    n: usize,
    bits: BitSet,
}

impl RootPositionSet {
    pub fn contains(&self, i: u32, j: u32) -> bool {
        i >= 1 && i < j && j as usize <= self.n && self.bits.contains(pair_index(i, j))
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn is_subset(&self, other: &RootPositionSet) -> bool {
        self.n == other.n && self.bits.is_subset(&other.bits)
    }

    pub fn pairs(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for i in 1..=self.n as u32 {
            for j in i + 1..=self.n as u32 {
                if self.contains(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

pub fn root_position_set(w: &Word) -> RootPositionSet {
    let n = w.len();
    let mut bits = BitSet::new(n * n.saturating_sub(1) / 2);
    for j in 2..=n as u32 {
        for i in 1..j {
            if w.position(i) < w.position(j) {
                bits.insert(pair_index(i, j));
            }
        }
    }
    RootPositionSet { n, bits }
}

/// `n ∩^y n ⊆ n ∩^w n`.
pub fn subspace_leq(w: &Word, y: &Word) -> Result<bool> {
    if w.len() != y.len() {
        return Err(Error::SizeMismatch {
            left: w.len(),
            right: y.len(),
        });
    }
    Ok(root_position_set(y).is_subset(&root_position_set(w)))
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum PosetKind {
    Duflo,
    Chain,
}

impl PosetKind {
    pub fn name(self) -> &'static str {
        match self {
            PosetKind::Duflo => "duflo",
            PosetKind::Chain => "chain",
        }
    }
}

impl fmt::Display for PosetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PosetKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "duflo" => Ok(PosetKind::Duflo),
            "chain" => Ok(PosetKind::Chain),
            _ => Err(Error::Parse(format!("unknown order {s:?}"))),
        }
    }
}

/// A finite poset of tableaux of fixed size, nodes ordered by row-form text.
#[derive(Clone, Debug)]
pub struct TableauPoset {
    n: usize,
    kind: PosetKind,
    nodes: Vec<Tableau>,
    index: HashMap<Tableau, usize>,
    leq: Vec<BitSet>,
    hasse: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct PosetExport<'a> {
    n: usize,
    kind: &'a str,
    nodes: Vec<String>,
    hasse: &'a [(usize, usize)],
}

impl TableauPoset {
    /// Builds from a reflexive order relation; fails unless it is a partial order.
    pub fn from_relation(
        n: usize,
        kind: PosetKind,
        nodes: Vec<Tableau>,
        leq: Vec<BitSet>,
    ) -> Result<Self> {
        let hasse = hasse_reduce(&leq).map_err(|e| match e {
            Error::AntisymmetryViolation(a, b) => Error::AntisymmetryViolation(
                nodes[a.parse::<usize>().unwrap()].to_string(),
                nodes[b.parse::<usize>().unwrap()].to_string(),
            ),
            e => e,
        })?;
        let index = nodes.iter().cloned().zip(0..).collect();
        Ok(TableauPoset {
            n,
            kind,
            nodes,
            index,
            leq,
            hasse,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> PosetKind {
        self.kind
    }

    pub fn nodes(&self) -> &[Tableau] {
        &self.nodes
    }

    pub fn hasse(&self) -> &[(usize, usize)] {
        &self.hasse
    }

    pub fn relation(&self) -> &[BitSet] {
        &self.leq
    }

    pub fn index_of(&self, t: &Tableau) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn leq_index(&self, a: usize, b: usize) -> bool {
        self.leq[a].contains(b)
    }

    pub fn leq(&self, t: &Tableau, s: &Tableau) -> Result<bool> {
        let a = self.require(t)?;
        let b = self.require(s)?;
        Ok(self.leq_index(a, b))
    }

    pub fn verdict(&self, t: &Tableau, s: &Tableau) -> Result<OrderVerdict> {
        Ok(OrderVerdict::from_leq(self.leq(t, s)?, self.leq(s, t)?))
    }

    fn require(&self, t: &Tableau) -> Result<usize> {
        self.index_of(t)
            .ok_or_else(|| Error::NodeAbsent(t.to_string()))
    }

    /// Out-neighbours of `t` in the Hasse diagram.
    pub fn cover_of(&self, t: &Tableau) -> Result<Vec<Tableau>> {
        let a = self.require(t)?;
        Ok(self
            .hasse
            .iter()
            .filter(|&&(from, _)| from == a)
            .map(|&(_, to)| self.nodes[to].clone())
            .collect())
    }

    /// The induced subposet on the nodes satisfying `keep`.
    pub fn restrict(&self, keep: impl Fn(&Tableau) -> bool) -> TableauPoset {
        let kept: Vec<usize> = (0..self.nodes.len())
            .filter(|&i| keep(&self.nodes[i]))
            .collect();
        let leq = kept
            .iter()
            .map(|&a| {
                let mut row = BitSet::new(kept.len());
                for (k, &b) in kept.iter().enumerate() {
                    if self.leq[a].contains(b) {
                        row.insert(k);
                    }
                }
                row
            })
            .collect();
        let nodes = kept.iter().map(|&i| self.nodes[i].clone()).collect();
        TableauPoset::from_relation(self.n, self.kind, nodes, leq)
            .expect("restriction of a partial order is a partial order")
    }

    pub fn to_json(&self) -> String {
        let export = PosetExport {
            n: self.n,
            kind: self.kind.name(),
            nodes: self.nodes.iter().map(Tableau::to_string).collect(),
            hasse: &self.hasse,
        };
        let mut out = serde_json::to_string(&export).expect("plain data serializes");
        out.push('\n');
        out
    }

    pub fn to_dot(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        writeln!(out, "digraph {}_{} {{", self.kind, self.n).unwrap();
        writeln!(out, "  rankdir=BT;").unwrap();
        writeln!(out, "  node [shape=box];").unwrap();
        for (i, t) in self.nodes.iter().enumerate() {
            writeln!(out, "  {i} [label=\"{t}\"];").unwrap();
        }
        for (a, b) in &self.hasse {
            writeln!(out, "  {a} -> {b};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

/// Transitive closure of a relation given by rows (Warshall, bit-parallel).
pub fn transitive_closure(rows: &[BitSet]) -> Vec<BitSet> {
    let mut out = rows.to_vec();
    for k in 0..out.len() {
        let pivot = out[k].clone();
        for row in out.iter_mut() {
            if row.contains(k) {
                row.union_with(&pivot);
            }
        }
    }
    out
}

/// The Hasse diagram of a partial order given as a reflexive `leq` matrix.
///
/// Errors name the offending node indices when the relation is not reflexive,
/// antisymmetric or transitive.
pub fn hasse_reduce(leq: &[BitSet]) -> Result<Vec<(usize, usize)>> {
    let size = leq.len();
    for (a, row) in leq.iter().enumerate() {
        if row.width() != size {
            return Err(Error::NotAPartialOrder(format!(
                "row {a} has the wrong width"
            )));
        }
        if !row.contains(a) {
            return Err(Error::NotAPartialOrder(format!(
                "{a} is not related to itself"
            )));
        }
        for b in row.iter() {
            if b != a && leq[b].contains(a) {
                return Err(Error::AntisymmetryViolation(a.to_string(), b.to_string()));
            }
            if !leq[b].is_subset(row) {
                return Err(Error::NotAPartialOrder(format!(
                    "not transitive through {a} <= {b}"
                )));
            }
        }
    }
    let mut edges = Vec::new();
    for (a, row) in leq.iter().enumerate() {
        let mut strict = row.clone();
        strict.remove(a);
        let mut covered = BitSet::new(size);
        for c in strict.iter() {
            let mut above = leq[c].clone();
            above.remove(c);
            covered.union_with(&above);
        }
        edges.extend(
            strict
                .iter()
                .filter(|&b| !covered.contains(b))
                .map(|b| (a, b)),
        );
    }
    Ok(edges)
}

/// Precomputed cell data for the word-pair scan.
struct CellTable {
    nodes: Vec<Tableau>,
    inversions: Vec<Vec<u64>>,
    tau: Vec<u64>,
}

fn cell_table(n: usize, limits: &Limits) -> Result<CellTable> {
    let nodes = enumerate_tableaux(n, None, limits)?;
    let index: HashMap<&Tableau, usize> = nodes.iter().zip(0..).collect();
    let mut inversions = vec![Vec::new(); nodes.len()];
    let mut tau = vec![0; nodes.len()];
    for w in enumerate_words(n, limits)? {
        let c = index[&rs_tableau(&w)];
        inversions[c].push(w.inversion_set().mask());
        tau[c] = w.tau().mask();
    }
    Ok(CellTable {
        nodes,
        inversions,
        tau,
    })
}

/// Nodes and the witness relation: `P -> Q` iff some `w in C_P`, `y in C_Q`
/// have `w <=_D y` (reflexive, not closed).
pub fn duflo_base_relation(n: usize, limits: &Limits) -> Result<(Vec<Tableau>, Vec<BitSet>)> {
    limits.check_duflo(n)?;
    let table = cell_table(n, limits)?;
    let shapes: Vec<Vec<usize>> = table
        .nodes
        .iter()
        .map(|t| t.shape().columns().to_vec())
        .collect();
    let size = table.nodes.len();
    let rows = (0..size)
        .into_par_iter()
        .map(|p| {
            let mut row = BitSet::new(size);
            row.insert(p);
            for q in 0..size {
                if q == p
                    || table.tau[p] & !table.tau[q] != 0
                    || !dominance_leq_unchecked(&shapes[p], &shapes[q])
                {
                    continue;
                }
                let witness = table.inversions[p]
                    .iter()
                    .any(|&w| table.inversions[q].iter().any(|&y| w & !y == 0));
                if witness {
                    row.insert(q);
                }
            }
            row
        })
        .collect();
    Ok((table.nodes, rows))
}

/// The induced Duflo order on all standard tableaux of size `n`.
pub fn duflo_poset(n: usize, limits: &Limits) -> Result<TableauPoset> {
    let (nodes, base) = duflo_base_relation(n, limits)?;
    let leq = transitive_closure(&base);
    TableauPoset::from_relation(n, PosetKind::Duflo, nodes, leq)
}

/// The chain order on all standard tableaux of size `n`.
pub fn chain_poset(n: usize, limits: &Limits) -> Result<TableauPoset> {
    let nodes = enumerate_tableaux(n, None, limits)?;
    let profiles: Vec<ChainProfile> = nodes.par_iter().map(chain_profile).collect();
    let size = nodes.len();
    let leq = (0..size)
        .into_par_iter()
        .map(|a| {
            let mut row = BitSet::new(size);
            for b in 0..size {
                if profiles[a].dominated_by(&profiles[b]) {
                    row.insert(b);
                }
            }
            row
        })
        .collect();
    TableauPoset::from_relation(n, PosetKind::Chain, nodes, leq)
}
