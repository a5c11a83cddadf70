//! Oriented bipartite graphs, their scores, and JSON / DOT serialization.
//!
//! A graph `D(U, V)` has parts `U = {u0, .., u(m-1)}` and `V = {v0, .., v(n-1)}`.
//! Every `(u, v)` pair holds exactly one [`ArcState`]. The score of `u` is
//! `n + d⁺(u) − d⁻(u)` and the score of `v` is `m + d⁺(v) − d⁻(v)`.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest number of `(u, v)` pairs a single graph may hold.
pub const MAX_PAIRS: usize = 1 << 30;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("both parts must be nonempty (got m = {m}, n = {n})")]
    EmptyPart { m: usize, n: usize },
    #[error("graph with {m} x {n} pairs exceeds the supported size")]
    TooLarge { m: usize, n: usize },
    #[error("u-index {u} out of range for m = {m}")]
    UOutOfRange { u: usize, m: usize },
    #[error("v-index {v} out of range for n = {n}")]
    VOutOfRange { v: usize, n: usize },
    #[error("pair ({u}, {v}) listed more than once")]
    DuplicatePair { u: usize, v: usize },
    #[error("block layout does not partition part {part}: {reason}")]
    BadBlocks { part: &'static str, reason: String },
    #[error("malformed graph document: {0}")]
    Malformed(String),
}

/// Orientation of a single `(u, v)` pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum ArcState {
    #[default]
    Absent,
    /// `u` dominates `v`.
    UtoV,
    /// `v` dominates `u`.
    VtoU,
}

impl ArcState {
    pub const ALL: [ArcState; 3] = [ArcState::Absent, ArcState::UtoV, ArcState::VtoU];

    pub fn reversed(self) -> ArcState {
        match self {
            ArcState::Absent => ArcState::Absent,
            ArcState::UtoV => ArcState::VtoU,
            ArcState::VtoU => ArcState::UtoV,
        }
    }
}

/// Oriented bipartite graph stored as two bit matrices (`u → v` and `v → u`),
/// one row of `u64` words per `u`. A pair never has both bits set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BipartiteOrientedGraph {
    m: usize,
    n: usize,
    words: usize,
    forward: Vec<u64>,
    backward: Vec<u64>,
}

impl fmt::Debug for BipartiteOrientedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arcs: Vec<_> = self.arcs().collect();
        f.debug_struct("BipartiteOrientedGraph")
            .field("m", &self.m)
            .field("n", &self.n)
            .field("arcs", &arcs)
            .finish()
    }
}

impl BipartiteOrientedGraph {
    /// The empty oriented bipartite graph on `m + n` vertices.
    pub fn new(m: usize, n: usize) -> Result<Self, GraphError> {
        if m == 0 || n == 0 {
            return Err(GraphError::EmptyPart { m, n });
        }
        if m.checked_mul(n).is_none_or(|pairs| pairs > MAX_PAIRS) {
            return Err(GraphError::TooLarge { m, n });
        }
        let words = n.div_ceil(64);
        Ok(Self {
            m,
            n,
            words,
            forward: vec![0; m * words],
            backward: vec![0; m * words],
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check(&self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.m {
            return Err(GraphError::UOutOfRange { u, m: self.m });
        }
        if v >= self.n {
            return Err(GraphError::VOutOfRange { v, n: self.n });
        }
        Ok(())
    }

    #[inline]
    fn slot(&self, u: usize, v: usize) -> (usize, u64) {
        (u * self.words + v / 64, 1u64 << (v % 64))
    }

    /// Overwrites the state of `(u, v)`.
    pub fn set_arc(&mut self, u: usize, v: usize, state: ArcState) -> Result<(), GraphError> {
        self.check(u, v)?;
        self.put(u, v, state);
        Ok(())
    }

    /// Unchecked write for callers that already validated the indices.
    #[inline]
    pub(crate) fn put(&mut self, u: usize, v: usize, state: ArcState) {
        let (word, bit) = self.slot(u, v);
        match state {
            ArcState::Absent => {
                self.forward[word] &= !bit;
                self.backward[word] &= !bit;
            }
            ArcState::UtoV => {
                self.forward[word] |= bit;
                self.backward[word] &= !bit;
            }
            ArcState::VtoU => {
                self.forward[word] &= !bit;
                self.backward[word] |= bit;
            }
        }
    }

    pub fn arc(&self, u: usize, v: usize) -> Result<ArcState, GraphError> {
        self.check(u, v)?;
        Ok(self.get(u, v))
    }

    #[inline]
    pub(crate) fn get(&self, u: usize, v: usize) -> ArcState {
        let (word, bit) = self.slot(u, v);
        if self.forward[word] & bit != 0 {
            ArcState::UtoV
        } else if self.backward[word] & bit != 0 {
            ArcState::VtoU
        } else {
            ArcState::Absent
        }
    }

    fn row(&self, u: usize) -> (&[u64], &[u64]) {
        let range = u * self.words..(u + 1) * self.words;
        (&self.forward[range.clone()], &self.backward[range])
    }

    /// `(d⁺(u), d⁻(u))`.
    pub fn u_degrees(&self, u: usize) -> Result<(usize, usize), GraphError> {
        self.check(u, 0)?;
        let (fwd, bwd) = self.row(u);
        let out = fwd.iter().map(|w| w.count_ones() as usize).sum();
        let inc = bwd.iter().map(|w| w.count_ones() as usize).sum();
        Ok((out, inc))
    }

    /// `(d⁺(v), d⁻(v))`.
    pub fn v_degrees(&self, v: usize) -> Result<(usize, usize), GraphError> {
        self.check(0, v)?;
        let (mut out, mut inc) = (0, 0);
        for u in 0..self.m {
            match self.get(u, v) {
                ArcState::VtoU => out += 1,
                ArcState::UtoV => inc += 1,
                ArcState::Absent => {}
            }
        }
        Ok((out, inc))
    }

    /// `a_u = n + d⁺(u) − d⁻(u)`, always in `[0, 2n]`.
    pub fn score_u(&self, u: usize) -> Result<usize, GraphError> {
        let (out, inc) = self.u_degrees(u)?;
        Ok(self.n + out - inc)
    }

    /// `b_v = m + d⁺(v) − d⁻(v)`, always in `[0, 2m]`.
    pub fn score_v(&self, v: usize) -> Result<usize, GraphError> {
        let (out, inc) = self.v_degrees(v)?;
        Ok(self.m + out - inc)
    }

    /// Scores of every `u` in index order.
    pub fn u_scores(&self) -> Vec<usize> {
        (0..self.m)
            .map(|u| {
                let (fwd, bwd) = self.row(u);
                let out: u32 = fwd.iter().map(|w| w.count_ones()).sum();
                let inc: u32 = bwd.iter().map(|w| w.count_ones()).sum();
                self.n + out as usize - inc as usize
            })
            .collect()
    }

    /// Scores of every `v` in index order, computed in one pass over the rows.
    pub fn v_scores(&self) -> Vec<usize> {
        let mut scores = vec![self.m as isize; self.n];
        for u in 0..self.m {
            let (fwd, bwd) = self.row(u);
            for (w, (&f, &b)) in fwd.iter().zip(bwd).enumerate() {
                for_each_bit(f, |bit| scores[w * 64 + bit] -= 1);
                for_each_bit(b, |bit| scores[w * 64 + bit] += 1);
            }
        }
        scores.into_iter().map(|s| s as usize).collect()
    }

    pub fn score_sequences(&self) -> ScoreSequencePair {
        let mut a = self.u_scores();
        let mut b = self.v_scores();
        a.sort_unstable();
        b.sort_unstable();
        ScoreSequencePair { a, b }
    }

    pub fn score_set(&self) -> ScoreSet {
        self.u_scores().into_iter().chain(self.v_scores()).collect()
    }

    /// Every non-absent pair as `(u, v, state)` in row-major order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize, ArcState)> + '_ {
        (0..self.m).flat_map(move |u| {
            (0..self.n).filter_map(move |v| match self.get(u, v) {
                ArcState::Absent => None,
                s => Some((u, v, s)),
            })
        })
    }

    pub fn arc_count(&self) -> usize {
        self.forward
            .iter()
            .chain(&self.backward)
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    /// The graph with every arc flipped.
    pub fn reversed(&self) -> Self {
        Self {
            m: self.m,
            n: self.n,
            words: self.words,
            forward: self.backward.clone(),
            backward: self.forward.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        self.to_json_with_blocks(None)
    }

    pub fn to_json_with_blocks(&self, blocks: Option<&BlockLayout>) -> String {
        let doc = GraphDoc {
            m: self.m,
            n: self.n,
            arcs: self
                .arcs()
                .map(|(u, v, s)| ArcDoc {
                    u,
                    v,
                    dir: match s {
                        ArcState::UtoV => Dir::Uv,
                        _ => Dir::Vu,
                    },
                })
                .collect(),
            blocks: blocks.cloned(),
        };
        serde_json::to_string(&doc).expect("graph document serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        Self::from_json_with_blocks(text).map(|(g, _)| g)
    }

    /// Parses a graph document, returning the optional block annotation too.
    pub fn from_json_with_blocks(text: &str) -> Result<(Self, Option<BlockLayout>), GraphError> {
        let doc: GraphDoc =
            serde_json::from_str(text).map_err(|e| GraphError::Malformed(e.to_string()))?;
        let mut g = Self::new(doc.m, doc.n)?;
        let mut seen = BTreeSet::new();
        for arc in &doc.arcs {
            g.check(arc.u, arc.v)?;
            if !seen.insert((arc.u, arc.v)) {
                return Err(GraphError::DuplicatePair { u: arc.u, v: arc.v });
            }
            let state = match arc.dir {
                Dir::Uv => ArcState::UtoV,
                Dir::Vu => ArcState::VtoU,
            };
            g.put(arc.u, arc.v, state);
        }
        if let Some(blocks) = &doc.blocks {
            blocks.validate(doc.m, doc.n)?;
        }
        Ok((g, doc.blocks))
    }

    /// Graphviz description with clusters `cluster_U` and `cluster_V`.
    /// Output depends only on the graph and the labels.
    pub fn to_dot(&self, blocks: Option<&BlockLayout>) -> String {
        let mut out = String::new();
        out.push_str("digraph D {\n");
        out.push_str("  rankdir=LR;\n");
        out.push_str("  node [shape=circle];\n");
        let u_scores = self.u_scores();
        let v_scores = self.v_scores();
        for (part, prefix, scores, part_blocks) in [
            ("U", 'u', &u_scores, blocks.map(|b| &b.u)),
            ("V", 'v', &v_scores, blocks.map(|b| &b.v)),
        ] {
            let _ = writeln!(out, "  subgraph cluster_{part} {{");
            let _ = writeln!(out, "    label=\"{part}\";");
            out.push_str("    rank=same;\n");
            for (i, score) in scores.iter().enumerate() {
                let block = part_blocks
                    .and_then(|bs| bs.iter().find(|b| b.from <= i && i < b.to))
                    .map(|b| format!(" {}", b.label))
                    .unwrap_or_default();
                let _ = writeln!(
                    out,
                    "    {prefix}{i} [label=\"{prefix}{i}{block}\\n{score}\"];"
                );
            }
            out.push_str("  }\n");
        }
        for (u, v, s) in self.arcs() {
            match s {
                ArcState::UtoV => {
                    let _ = writeln!(out, "  u{u} -> v{v};");
                }
                _ => {
                    let _ = writeln!(out, "  v{v} -> u{u};");
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

#[inline]
fn for_each_bit(mut word: u64, mut f: impl FnMut(usize)) {
    while word != 0 {
        f(word.trailing_zeros() as usize);
        word &= word - 1;
    }
}

/// Nondecreasing score sequences `[a_1..a_m]` and `[b_1..b_n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ScoreSequencePair {
    a: Vec<usize>,
    b: Vec<usize>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{side} sequence is not nondecreasing at position {position}")]
pub struct NotMonotone {
    pub side: &'static str,
    pub position: usize,
}

pub(crate) fn first_descent(seq: &[usize]) -> Option<usize> {
    seq.windows(2).position(|w| w[0] > w[1]).map(|i| i + 1)
}

impl ScoreSequencePair {
    pub fn new(a: Vec<usize>, b: Vec<usize>) -> Result<Self, NotMonotone> {
        if let Some(position) = first_descent(&a) {
            return Err(NotMonotone { side: "a", position });
        }
        if let Some(position) = first_descent(&b) {
            return Err(NotMonotone { side: "b", position });
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> &[usize] {
        &self.a
    }

    pub fn b(&self) -> &[usize] {
        &self.b
    }

    /// `a_i <= 2n` and `b_j <= 2m`.
    pub fn within_bounds(&self) -> bool {
        let (m, n) = (self.a.len(), self.b.len());
        self.a.iter().all(|&x| x <= 2 * n) && self.b.iter().all(|&x| x <= 2 * m)
    }
}

/// Strictly increasing set of nonnegative scores.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ScoreSet(Vec<usize>);

impl ScoreSet {
    /// Sorts and deduplicates.
    pub fn new(mut values: Vec<usize>) -> Self {
        values.sort_unstable();
        values.dedup();
        Self(values)
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }
}

impl FromIterator<usize> for ScoreSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

impl From<&[usize]> for ScoreSet {
    fn from(values: &[usize]) -> Self {
        Self::new(values.to_vec())
    }
}

impl<const N: usize> From<[usize; N]> for ScoreSet {
    fn from(values: [usize; N]) -> Self {
        Self::new(values.to_vec())
    }
}

impl fmt::Display for ScoreSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

/// Labelled contiguous index range `[from, to)` of one part, with the score
/// every vertex in it is expected to have.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub label: String,
    pub from: usize,
    pub to: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub score: Option<usize>,
}

impl Block {
    pub fn len(&self) -> usize {
        self.to - self.from
    }

    pub fn is_empty(&self) -> bool {
        self.to == self.from
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockLayout {
    #[serde(rename = "U")]
    pub u: Vec<Block>,
    #[serde(rename = "V")]
    pub v: Vec<Block>,
}

impl BlockLayout {
    /// Blocks of each part must tile `[0, m)` / `[0, n)` in order.
    pub fn validate(&self, m: usize, n: usize) -> Result<(), GraphError> {
        fn tiles(blocks: &[Block], len: usize, part: &'static str) -> Result<(), GraphError> {
            let mut next = 0;
            for b in blocks {
                if b.from != next || b.to < b.from {
                    return Err(GraphError::BadBlocks {
                        part,
                        reason: format!("block {} starts at {} (expected {next})", b.label, b.from),
                    });
                }
                next = b.to;
            }
            if next != len {
                return Err(GraphError::BadBlocks {
                    part,
                    reason: format!("blocks cover [0, {next}) but part has {len} vertices"),
                });
            }
            Ok(())
        }
        tiles(&self.u, m, "U")?;
        tiles(&self.v, n, "V")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    m: usize,
    n: usize,
    arcs: Vec<ArcDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    blocks: Option<BlockLayout>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArcDoc {
    u: usize,
    v: usize,
    dir: Dir,
}

#[derive(Serialize, Deserialize)]
enum Dir {
    #[serde(rename = "uv")]
    Uv,
    #[serde(rename = "vu")]
    Vu,
}
