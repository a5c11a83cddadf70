//! Exhaustive enumeration of small oriented bipartite graphs.
//!
//! The graphs of shape `(m, n)` are numbered `0 .. 3^(mn)`. Pair `(u, v)` is
//! digit `k = u·n + v` of the base-3 index (digit 0 least significant), with
//! `0 = Absent`, `1 = UtoV`, `2 = VtoU`. Scans split the index space into
//! contiguous shards, accumulate per shard and merge with an associative,
//! commutative operation, so results never depend on the shard count.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::ops::Range;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::criteria::check_bipartite_pair;
use crate::graph::{ArcState, BipartiteOrientedGraph, ScoreSequencePair, ScoreSet};

/// Default per-shape cap on the number of assignments, `3^16`.
pub const DEFAULT_BUDGET: u64 = 43_046_721;

/// `3^40` is the largest power of three that fits in a `u64`.
pub const MAX_ENUMERABLE_PAIRS: usize = 40;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("shape {m}x{n} needs 3^{} assignments, over the budget of {budget}", m * n)]
    BudgetExceeded { m: usize, n: usize, budget: u64 },
    #[error("both parts must be nonempty (got m = {m}, n = {n})")]
    EmptyPart { m: usize, n: usize },
    #[error("index {index} outside the {m}x{n} enumeration space")]
    IndexOutOfRange { m: usize, n: usize, index: u64 },
    #[error("graph has shape {got_m}x{got_n}, space is {m}x{n}")]
    ShapeMismatch { m: usize, n: usize, got_m: usize, got_n: usize },
    #[error("malformed catalog line {line}: {reason}")]
    MalformedCatalog { line: usize, reason: String },
}

type Result<T> = std::result::Result<T, OracleError>;

/// All arc assignments of one shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationSpace {
    m: usize,
    n: usize,
    total: u64,
}

impl EnumerationSpace {
    pub fn new(m: usize, n: usize, budget: u64) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(OracleError::EmptyPart { m, n });
        }
        let total = m
            .checked_mul(n)
            .filter(|&pairs| pairs <= MAX_ENUMERABLE_PAIRS)
            .map(|pairs| 3u64.pow(pairs as u32))
            .filter(|&total| total <= budget)
            .ok_or(OracleError::BudgetExceeded { m, n, budget })?;
        Ok(Self { m, n, total })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn decode(&self, index: u64) -> Result<BipartiteOrientedGraph> {
        Ok(Cursor::at(self, index)?.graph)
    }

    pub fn encode(&self, graph: &BipartiteOrientedGraph) -> Result<u64> {
        if (graph.m(), graph.n()) != (self.m, self.n) {
            return Err(OracleError::ShapeMismatch {
                m: self.m,
                n: self.n,
                got_m: graph.m(),
                got_n: graph.n(),
            });
        }
        let mut index = 0u64;
        for u in (0..self.m).rev() {
            for v in (0..self.n).rev() {
                index = index * 3 + digit_of(graph.get(u, v)) as u64;
            }
        }
        Ok(index)
    }

    /// Splits `0..total` into at most `shards` contiguous, nonempty ranges.
    pub fn shards(&self, shards: usize) -> Vec<Range<u64>> {
        let count = (shards.max(1) as u64).min(self.total);
        let step = self.total / count;
        let extra = self.total % count;
        let mut start = 0;
        (0..count)
            .map(|i| {
                let len = step + u64::from(i < extra);
                let range = start..start + len;
                start += len;
                range
            })
            .collect()
    }
}

fn digit_of(state: ArcState) -> u8 {
    match state {
        ArcState::Absent => 0,
        ArcState::UtoV => 1,
        ArcState::VtoU => 2,
    }
}

const STATE_OF: [ArcState; 3] = [ArcState::Absent, ArcState::UtoV, ArcState::VtoU];

/// Position in an enumeration, with incrementally maintained scores.
#[derive(Debug, Clone)]
pub struct Cursor {
    index: u64,
    n: usize,
    digits: Vec<u8>,
    graph: BipartiteOrientedGraph,
    u_scores: Vec<usize>,
    v_scores: Vec<usize>,
}

impl Cursor {
    pub fn at(space: &EnumerationSpace, index: u64) -> Result<Self> {
        if index >= space.total {
            return Err(OracleError::IndexOutOfRange { m: space.m, n: space.n, index });
        }
        let (m, n) = (space.m, space.n);
        let mut graph = BipartiteOrientedGraph::new(m, n).expect("shape validated by the space");
        let mut digits = vec![0u8; m * n];
        let mut rest = index;
        for (k, digit) in digits.iter_mut().enumerate() {
            *digit = (rest % 3) as u8;
            rest /= 3;
            graph.put(k / n, k % n, STATE_OF[*digit as usize]);
        }
        let u_scores = graph.u_scores();
        let v_scores = graph.v_scores();
        Ok(Self { index, n, digits, graph, u_scores, v_scores })
    }

    /// Moves to `index + 1`; returns `false` (and wraps to 0) past the end.
    pub fn advance(&mut self) -> bool {
        for k in 0..self.digits.len() {
            let (u, v) = (k / self.n, k % self.n);
            let next = (self.digits[k] + 1) % 3;
            self.digits[k] = next;
            self.graph.put(u, v, STATE_OF[next as usize]);
            match next {
                // Absent → UtoV and VtoU → Absent both move one unit of score from v to u.
                1 | 0 => {
                    self.u_scores[u] += 1;
                    self.v_scores[v] -= 1;
                }
                _ => {
                    self.u_scores[u] -= 2;
                    self.v_scores[v] += 2;
                }
            }
            if next != 0 {
                self.index += 1;
                return true;
            }
        }
        self.index = 0;
        false
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn graph(&self) -> &BipartiteOrientedGraph {
        &self.graph
    }

    pub fn u_scores(&self) -> &[usize] {
        &self.u_scores
    }

    pub fn v_scores(&self) -> &[usize] {
        &self.v_scores
    }

    /// Score set as a bitmask (bit `s` set iff some vertex scores `s`).
    /// Scores never exceed `2·max(m, n) ≤ 80`.
    pub fn score_mask(&self) -> u128 {
        self.u_scores
            .iter()
            .chain(&self.v_scores)
            .fold(0u128, |mask, &s| mask | (1u128 << s))
    }

    /// Sorted `a` followed by sorted `b`, written into `buf`.
    fn flat_sequences(&self, buf: &mut Vec<usize>) {
        let m = self.u_scores.len();
        buf.clear();
        buf.extend_from_slice(&self.u_scores);
        buf.extend_from_slice(&self.v_scores);
        buf[..m].sort_unstable();
        buf[m..].sort_unstable();
    }
}

fn mask_of(set: &ScoreSet) -> Option<u128> {
    set.values()
        .iter()
        .try_fold(0u128, |mask, &s| (s < 128).then(|| mask | (1u128 << s)))
}

fn set_of_mask(mut mask: u128) -> ScoreSet {
    let mut values = Vec::new();
    while mask != 0 {
        values.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    ScoreSet::new(values)
}

fn default_shards() -> usize {
    rayon::current_num_threads() * 8
}

/// Visits every graph of shape `(m, n)` in index order.
pub fn enumerate_graphs(
    m: usize,
    n: usize,
    budget: u64,
    mut visitor: impl FnMut(&Cursor),
) -> Result<u64> {
    let space = EnumerationSpace::new(m, n, budget)?;
    let mut cursor = Cursor::at(&space, 0)?;
    let mut visits = 0u64;
    loop {
        visitor(&cursor);
        visits += 1;
        if !cursor.advance() {
            return Ok(visits);
        }
    }
}

/// Parallel fold over the whole space: each shard folds into its own
/// accumulator, accumulators are combined with `merge`.
pub fn par_fold<A, I, F, M>(space: &EnumerationSpace, shards: usize, init: I, visit: F, merge: M) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(&mut A, &Cursor) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    space
        .shards(shards)
        .into_par_iter()
        .map(|range| {
            let mut acc = init();
            let mut cursor = Cursor::at(space, range.start).expect("shard inside space");
            loop {
                visit(&mut acc, &cursor);
                if cursor.index() + 1 == range.end {
                    break;
                }
                cursor.advance();
            }
            acc
        })
        .reduce(&init, &merge)
}

/// Smallest index whose graph satisfies `pred`.
pub fn par_find_first(
    space: &EnumerationSpace,
    shards: usize,
    pred: impl Fn(&Cursor) -> bool + Sync + Send,
) -> Option<u64> {
    space.shards(shards).into_par_iter().find_map_first(|range| {
        let mut cursor = Cursor::at(space, range.start).expect("shard inside space");
        loop {
            if pred(&cursor) {
                return Some(cursor.index());
            }
            if cursor.index() + 1 == range.end {
                return None;
            }
            cursor.advance();
        }
    })
}

/// A graph identified by its shape and enumeration index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Witness {
    pub m: usize,
    pub n: usize,
    pub index: u64,
}

impl Witness {
    pub fn decode(&self) -> Result<BipartiteOrientedGraph> {
        EnumerationSpace::new(self.m, self.n, u64::MAX)?.decode(self.index)
    }
}

/// Every score set and score-sequence pair attained within the shape
/// bounds, each with its smallest `(m, n, index)` witness.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RealizabilityCatalog {
    pub m_max: usize,
    pub n_max: usize,
    pub sets: BTreeMap<ScoreSet, Witness>,
    pub pairs: BTreeMap<ScoreSequencePair, Witness>,
}

#[derive(Default)]
struct ShapeTally {
    sets: HashMap<u128, u64>,
    pairs: HashMap<Vec<usize>, u64>,
    scratch: Vec<usize>,
}

fn keep_min<K: Eq + std::hash::Hash>(into: &mut HashMap<K, u64>, from: HashMap<K, u64>) {
    for (k, idx) in from {
        into.entry(k).and_modify(|e| *e = (*e).min(idx)).or_insert(idx);
    }
}

fn check_bounds(m_max: usize, n_max: usize, budget: u64) -> Result<()> {
    EnumerationSpace::new(m_max, n_max, budget).map(|_| ())
}

/// Catalog over all shapes `1 ≤ m ≤ m_max`, `1 ≤ n ≤ n_max`.
pub fn catalog_up_to(
    m_max: usize,
    n_max: usize,
    budget: u64,
    with_pairs: bool,
    shards: usize,
) -> Result<RealizabilityCatalog> {
    check_bounds(m_max, n_max, budget)?;
    let mut catalog = RealizabilityCatalog { m_max, n_max, ..Default::default() };
    for m in 1..=m_max {
        for n in 1..=n_max {
            let space = EnumerationSpace::new(m, n, budget)?;
            let tally = par_fold(
                &space,
                shards,
                ShapeTally::default,
                |t: &mut ShapeTally, c| {
                    t.sets.entry(c.score_mask()).or_insert(c.index());
                    if with_pairs {
                        let mut buf = std::mem::take(&mut t.scratch);
                        c.flat_sequences(&mut buf);
                        if !t.pairs.contains_key(buf.as_slice()) {
                            t.pairs.insert(buf.clone(), c.index());
                        }
                        t.scratch = buf;
                    }
                },
                |mut a, b| {
                    keep_min(&mut a.sets, b.sets);
                    keep_min(&mut a.pairs, b.pairs);
                    a
                },
            );
            let witness = |index| Witness { m, n, index };
            for (mask, index) in tally.sets {
                let entry = catalog.sets.entry(set_of_mask(mask)).or_insert(witness(index));
                *entry = (*entry).min(witness(index));
            }
            for (flat, index) in tally.pairs {
                let pair = ScoreSequencePair::new(flat[..m].to_vec(), flat[m..].to_vec())
                    .expect("sorted halves");
                catalog.pairs.insert(pair, witness(index));
            }
        }
    }
    Ok(catalog)
}

pub fn realizable_sets_up_to(m_max: usize, n_max: usize, budget: u64) -> Result<RealizabilityCatalog> {
    catalog_up_to(m_max, n_max, budget, true, default_shards())
}

/// Looks for a graph with score set exactly `set` among all shapes within
/// the bounds. `None` means no such graph exists within the bounds only.
pub fn bounded_search(set: &ScoreSet, m_max: usize, n_max: usize, budget: u64) -> Result<Option<Witness>> {
    check_bounds(m_max, n_max, budget)?;
    let Some(target) = mask_of(set) else {
        return Ok(None);
    };
    if set.is_empty() {
        return Ok(None);
    }
    for m in 1..=m_max {
        for n in 1..=n_max {
            // Every score is at most 2·max(m, n).
            if set.max().unwrap() > 2 * m.max(n) {
                continue;
            }
            let space = EnumerationSpace::new(m, n, budget)?;
            if let Some(index) = par_find_first(&space, default_shards(), |c| c.score_mask() == target) {
                return Ok(Some(Witness { m, n, index }));
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Counterexample {
    /// A realized pair that fails the criterion.
    NotNecessary { pair: ScoreSequencePair, witness: Witness },
    /// A pair passing the criterion that no graph realizes.
    NotSufficient { pair: ScoreSequencePair },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub m: usize,
    pub n: usize,
    pub graphs: u64,
    pub realized_pairs: usize,
    pub passing_candidates: usize,
    pub necessity_ok: bool,
    pub sufficiency_ok: bool,
    pub counterexamples: Vec<Counterexample>,
}

/// Nondecreasing sequences of length `len` with entries in `0..=max`, in
/// lexicographic order.
pub fn nondecreasing_sequences(len: usize, max: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..=max).combinations_with_replacement(len)
}

/// Compares the bipartite criterion with the realized sequence pairs of
/// shape `(m, n)` in both directions.
pub fn criterion_equivalence(m: usize, n: usize, budget: u64) -> Result<EquivalenceReport> {
    let space = EnumerationSpace::new(m, n, budget)?;
    let realized: HashMap<Vec<usize>, u64> = par_fold(
        &space,
        default_shards(),
        HashMap::new,
        |seen: &mut HashMap<Vec<usize>, u64>, c| {
            let mut buf = Vec::with_capacity(m + n);
            c.flat_sequences(&mut buf);
            seen.entry(buf).or_insert(c.index());
        },
        |mut a, b| {
            keep_min(&mut a, b);
            a
        },
    );

    let mut counterexamples = Vec::new();
    let mut realized_sorted: Vec<_> = realized.iter().collect();
    realized_sorted.sort();
    for (flat, &index) in realized_sorted {
        let pair = ScoreSequencePair::new(flat[..m].to_vec(), flat[m..].to_vec()).expect("sorted");
        if !check_bipartite_pair(&pair).is_valid() {
            counterexamples.push(Counterexample::NotNecessary {
                pair,
                witness: Witness { m, n, index },
            });
        }
    }
    let necessity_ok = counterexamples.is_empty();

    let realized_keys: HashSet<&Vec<usize>> = realized.keys().collect();
    let b_candidates: Vec<Vec<usize>> = nondecreasing_sequences(n, 2 * m).collect();
    let mut passing = 0usize;
    let mut sufficiency_ok = true;
    for a in nondecreasing_sequences(m, 2 * n) {
        for b in &b_candidates {
            let pair = ScoreSequencePair::new(a.clone(), b.clone()).expect("generated sorted");
            if !check_bipartite_pair(&pair).is_valid() {
                continue;
            }
            passing += 1;
            let flat: Vec<usize> = a.iter().chain(b).copied().collect();
            if !realized_keys.contains(&flat) {
                sufficiency_ok = false;
                counterexamples.push(Counterexample::NotSufficient { pair });
            }
        }
    }

    Ok(EquivalenceReport {
        m,
        n,
        graphs: space.total(),
        realized_pairs: realized.len(),
        passing_candidates: passing,
        necessity_ok,
        sufficiency_ok,
        counterexamples,
    })
}

/// Which catalog keys to write.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogKind {
    Sets,
    Pairs,
    Both,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CatalogRecord {
    kind: String,
    key: serde_json::Value,
    m: usize,
    n: usize,
    index: String,
}

/// One JSON object per line; sets before pairs, keys in lexicographic order.
pub fn catalog_to_jsonl(catalog: &RealizabilityCatalog, kind: CatalogKind) -> String {
    let mut out = String::new();
    let mut emit = |kind: &str, key: serde_json::Value, w: &Witness| {
        let record = CatalogRecord {
            kind: kind.to_string(),
            key,
            m: w.m,
            n: w.n,
            index: w.index.to_string(),
        };
        out.push_str(&serde_json::to_string(&record).expect("record serializes"));
        out.push('\n');
    };
    if kind != CatalogKind::Pairs {
        for (set, w) in &catalog.sets {
            emit("set", serde_json::to_value(set).unwrap(), w);
        }
    }
    if kind != CatalogKind::Sets {
        for (pair, w) in &catalog.pairs {
            emit("pair", serde_json::to_value(pair).unwrap(), w);
        }
    }
    out
}

/// Parses catalog lines back; the shape bounds are not part of the format
/// and are left at 0.
pub fn catalog_from_jsonl(text: &str) -> Result<RealizabilityCatalog> {
    let mut catalog = RealizabilityCatalog::default();
    for (i, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let bad = |reason: String| OracleError::MalformedCatalog { line: i + 1, reason };
        let record: CatalogRecord = serde_json::from_str(line).map_err(|e| bad(e.to_string()))?;
        let index = record.index.parse::<u64>().map_err(|e| bad(e.to_string()))?;
        let witness = Witness { m: record.m, n: record.n, index };
        match record.kind.as_str() {
            "set" => {
                let values: Vec<usize> =
                    serde_json::from_value(record.key).map_err(|e| bad(e.to_string()))?;
                catalog.sets.insert(ScoreSet::new(values), witness);
            }
            "pair" => {
                let pair: ScoreSequencePair =
                    serde_json::from_value(record.key).map_err(|e| bad(e.to_string()))?;
                catalog.pairs.insert(pair, witness);
            }
            other => return Err(bad(format!("unknown kind {other:?}"))),
        }
    }
    Ok(catalog)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn visit_counts() {
        assert_eq!(enumerate_graphs(1, 1, DEFAULT_BUDGET, |_| {}).unwrap(), 3);
        assert_eq!(enumerate_graphs(2, 2, DEFAULT_BUDGET, |_| {}).unwrap(), 81);
        assert_eq!(enumerate_graphs(3, 3, DEFAULT_BUDGET, |_| {}).unwrap(), 19683);
    }

    #[test]
    fn budget_is_enforced() {
        assert_eq!(
            EnumerationSpace::new(3, 3, 19682),
            Err(OracleError::BudgetExceeded { m: 3, n: 3, budget: 19682 })
        );
        assert!(EnumerationSpace::new(5, 5, DEFAULT_BUDGET).is_err());
        assert!(EnumerationSpace::new(7, 7, u64::MAX).is_err());
        assert!(EnumerationSpace::new(5, 8, u64::MAX).is_ok());
        assert!(EnumerationSpace::new(0, 2, DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn incremental_scores_match_graph() {
        enumerate_graphs(2, 3, DEFAULT_BUDGET, |c| {
            assert_eq!(c.u_scores(), c.graph().u_scores().as_slice());
            assert_eq!(c.v_scores(), c.graph().v_scores().as_slice());
        })
        .unwrap();
    }

    #[test]
    fn decode_encode_cover_space_once() {
        let space = EnumerationSpace::new(2, 2, DEFAULT_BUDGET).unwrap();
        let mut seen = HashSet::new();
        for index in 0..space.total() {
            let g = space.decode(index).unwrap();
            assert_eq!(space.encode(&g).unwrap(), index);
            assert!(seen.insert(g.to_json()));
        }
        assert!(space.decode(81).is_err());
        let other = BipartiteOrientedGraph::new(1, 2).unwrap();
        assert!(space.encode(&other).is_err());
    }

    #[test]
    fn digit_order_is_row_major_little_endian() {
        let space = EnumerationSpace::new(2, 2, DEFAULT_BUDGET).unwrap();
        let g = space.decode(1).unwrap();
        assert_eq!(g.arc(0, 0).unwrap(), ArcState::UtoV);
        let g = space.decode(2 * 3).unwrap();
        assert_eq!(g.arc(0, 1).unwrap(), ArcState::VtoU);
        let g = space.decode(27).unwrap();
        assert_eq!(g.arc(1, 1).unwrap(), ArcState::UtoV);
    }

    #[test]
    fn shards_tile_the_space() {
        let space = EnumerationSpace::new(2, 2, DEFAULT_BUDGET).unwrap();
        for count in [1, 2, 7, 81, 500] {
            let shards = space.shards(count);
            assert_eq!(shards.first().unwrap().start, 0);
            assert_eq!(shards.last().unwrap().end, 81);
            assert!(shards.windows(2).all(|w| w[0].end == w[1].start));
            assert!(shards.iter().all(|r| !r.is_empty()));
        }
    }

    #[test]
    fn one_by_one_catalog() {
        let cat = realizable_sets_up_to(1, 1, DEFAULT_BUDGET).unwrap();
        let keys: Vec<_> = cat.sets.keys().cloned().collect();
        assert_eq!(keys, vec![ScoreSet::from([0, 2]), ScoreSet::from([1])]);
        assert_eq!(cat.pairs.len(), 3);
        let u_scores: HashSet<usize> = cat.pairs.keys().map(|p| p.a()[0]).collect();
        assert_eq!(u_scores, HashSet::from([0, 1, 2]));
    }

    #[test]
    fn empty_graph_witnesses_singletons() {
        let cat = realizable_sets_up_to(2, 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(cat.sets[&ScoreSet::from([2])], Witness { m: 2, n: 2, index: 0 });
        assert!(!cat.sets.contains_key(&ScoreSet::from([0])));
    }

    #[test]
    fn search_examples() {
        let w = bounded_search(&ScoreSet::from([1]), 1, 1, DEFAULT_BUDGET).unwrap().unwrap();
        assert_eq!(w, Witness { m: 1, n: 1, index: 0 });
        assert_eq!(w.decode().unwrap().arc_count(), 0);
        assert_eq!(bounded_search(&ScoreSet::from([0]), 3, 3, DEFAULT_BUDGET).unwrap(), None);
        assert!(bounded_search(&ScoreSet::from([1]), 9, 9, DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn small_equivalence() {
        let r = criterion_equivalence(1, 1, DEFAULT_BUDGET).unwrap();
        assert!(r.necessity_ok && r.sufficiency_ok);
        assert_eq!((r.graphs, r.realized_pairs, r.passing_candidates), (3, 3, 3));
        let r = criterion_equivalence(2, 2, DEFAULT_BUDGET).unwrap();
        assert!(r.necessity_ok && r.sufficiency_ok && r.counterexamples.is_empty());
    }

    #[test]
    fn jsonl_round_trip() {
        let cat = realizable_sets_up_to(2, 2, DEFAULT_BUDGET).unwrap();
        let text = catalog_to_jsonl(&cat, CatalogKind::Both);
        assert!(text.starts_with(r#"{"kind":"set","key":[0,1,3],"m":1,"n":2,"index":"1"}"#));
        assert!(text.lines().any(|l| l == r#"{"kind":"set","key":[0,2],"m":1,"n":1,"index":"1"}"#));
        let back = catalog_from_jsonl(&text).unwrap();
        assert_eq!(back.sets, cat.sets);
        assert_eq!(back.pairs, cat.pairs);
        assert!(catalog_from_jsonl(r#"{"kind":"tree","key":[],"m":1,"n":1,"index":"0"}"#).is_err());
        assert!(catalog_from_jsonl(r#"{"kind":"set","key":[1],"m":1,"n":1,"index":"x"}"#).is_err());
    }
}
