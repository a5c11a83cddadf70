//! Explicit oriented bipartite graphs realizing prescribed score sets.
//!
//! Every builder lays out labelled vertex blocks `X_i ⊆ U` and `Y_j ⊆ V`,
//! records the score each block is expected to reach, and wires whole-block
//! domination rules. Where a block is only partly dominated, the dominated
//! vertices are always the lowest-indexed ones and form their own block.
//!
//! | family                | builder              |
//! |-----------------------|----------------------|
//! | `{a}`                 | [`build_singleton`]  |
//! | `{a1, a2}`            | [`build_doubleton`]  |
//! | `{a1, a2, a3}`        | [`build_triple`]     |
//! | `{a, ad, .., ad^n}`   | [`build_geometric`]  |
//! | `{a, a+d, .., a+nd}`  | [`build_arithmetic`] |

use std::ops::Range;

use thiserror::Error;

use crate::criteria::check_bipartite_pair;
use crate::graph::{ArcState, BipartiteOrientedGraph, Block, BlockLayout, GraphError, ScoreSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("score set is empty")]
    EmptySet,
    #[error("score set {0} contains 0; only sets of positive integers are covered")]
    ContainsZero(ScoreSet),
    #[error(
        "no construction covers {0}: it is neither of size 1-3 nor an arithmetic or \
         geometric progression (realizability of general sets is an open conjecture)"
    )]
    Unsupported(ScoreSet),
    #[error("construction parameters overflow")]
    Overflow,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("self-check failed: {0}")]
    SelfCheck(String),
}

type Result<T> = std::result::Result<T, ConstructionError>;

/// Which construction a score set is routed to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Singleton { a: usize },
    Doubleton { a1: usize, a2: usize },
    Triple { a1: usize, a2: usize, a3: usize },
    /// `{a·d^i : 0 ≤ i ≤ n}`.
    Geometric { a: usize, d: usize, n: usize },
    /// `{a + i·d : 0 ≤ i ≤ n}`.
    Arithmetic { a: usize, d: usize, n: usize },
    Unsupported,
}

/// A constructed graph together with its block layout.
#[derive(Debug, Clone)]
pub struct Realization {
    pub graph: BipartiteOrientedGraph,
    pub blocks: BlockLayout,
    pub requested: ScoreSet,
}

impl Realization {
    pub fn to_json(&self) -> String {
        self.graph.to_json_with_blocks(Some(&self.blocks))
    }

    pub fn to_dot(&self) -> String {
        self.graph.to_dot(Some(&self.blocks))
    }

    /// Checks that the blocks tile both parts and that every vertex reaches
    /// the score of its block.
    pub fn audit_blocks(&self) -> std::result::Result<(), String> {
        self.blocks
            .validate(self.graph.m(), self.graph.n())
            .map_err(|e| e.to_string())?;
        for (part, blocks, scores) in [
            ("U", &self.blocks.u, self.graph.u_scores()),
            ("V", &self.blocks.v, self.graph.v_scores()),
        ] {
            for block in blocks {
                let expected = block.score.ok_or_else(|| format!("block {} has no score", block.label))?;
                if let Some(i) = (block.from..block.to).find(|&i| scores[i] != expected) {
                    return Err(format!(
                        "{part} vertex {i} in block {} scores {} (expected {expected})",
                        block.label, scores[i]
                    ));
                }
            }
        }
        Ok(())
    }

    /// Score set matches the request and the sequence pair passes the
    /// bipartite criterion.
    pub fn verify(&self) -> Result<()> {
        let got = self.graph.score_set();
        if got != self.requested {
            return Err(ConstructionError::SelfCheck(format!(
                "graph has score set {got}, requested {}",
                self.requested
            )));
        }
        let verdict = check_bipartite_pair(&self.graph.score_sequences());
        if let Some(v) = verdict.witness {
            return Err(ConstructionError::SelfCheck(format!(
                "score sequences fail the bipartite criterion {v}"
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Part {
    U,
    V,
}

/// Block layout under construction plus whole-block domination rules.
#[derive(Default)]
struct Layout {
    blocks: BlockLayout,
    m: usize,
    n: usize,
    /// (dominating part, dominating range, dominated range in the other part)
    rules: Vec<(Part, Range<usize>, Range<usize>)>,
}

impl Layout {
    fn push(&mut self, part: Part, label: impl Into<String>, size: usize, score: usize) -> Range<usize> {
        let (len, blocks) = match part {
            Part::U => (&mut self.m, &mut self.blocks.u),
            Part::V => (&mut self.n, &mut self.blocks.v),
        };
        let range = *len..*len + size;
        *len += size;
        if size > 0 {
            blocks.push(Block {
                label: label.into(),
                from: range.start,
                to: range.end,
                score: Some(score),
            });
        }
        range
    }

    fn x(&mut self, label: impl Into<String>, size: usize, score: usize) -> Range<usize> {
        self.push(Part::U, label, size, score)
    }

    fn y(&mut self, label: impl Into<String>, size: usize, score: usize) -> Range<usize> {
        self.push(Part::V, label, size, score)
    }

    /// Every vertex of `xs ⊆ U` dominates every vertex of `ys ⊆ V`.
    fn x_over_y(&mut self, xs: &Range<usize>, ys: &Range<usize>) {
        self.rules.push((Part::U, xs.clone(), ys.clone()));
    }

    /// Every vertex of `ys ⊆ V` dominates every vertex of `xs ⊆ U`.
    fn y_over_x(&mut self, ys: &Range<usize>, xs: &Range<usize>) {
        self.rules.push((Part::V, ys.clone(), xs.clone()));
    }

    /// Applies index-driven rules over lists of `(i, block)`: `X_i → Y_j`
    /// when `x_wins(i, j)`, `Y_j → X_i` when `y_wins(j, i)`.
    fn cross(
        &mut self,
        xs: &[(usize, Range<usize>)],
        ys: &[(usize, Range<usize>)],
        x_wins: impl Fn(usize, usize) -> bool,
        y_wins: impl Fn(usize, usize) -> bool,
    ) {
        for (i, xr) in xs {
            for (j, yr) in ys {
                let (x, y) = (x_wins(*i, *j), y_wins(*j, *i));
                assert!(!(x && y), "conflicting rules for X{i} and Y{j}");
                if x {
                    self.x_over_y(xr, yr);
                }
                if y {
                    self.y_over_x(yr, xr);
                }
            }
        }
    }

    fn finish(self, requested: ScoreSet) -> Result<Realization> {
        let mut graph = BipartiteOrientedGraph::new(self.m, self.n)?;
        for (part, from, to) in self.rules {
            for s in from.clone() {
                for t in to.clone() {
                    match part {
                        Part::U => graph.put(s, t, ArcState::UtoV),
                        Part::V => graph.put(t, s, ArcState::VtoU),
                    }
                }
            }
        }
        Ok(Realization { graph, blocks: self.blocks, requested })
    }
}

fn add(a: usize, b: usize) -> Result<usize> {
    a.checked_add(b).ok_or(ConstructionError::Overflow)
}

fn mul(a: usize, b: usize) -> Result<usize> {
    a.checked_mul(b).ok_or(ConstructionError::Overflow)
}

/// Positive difference of a size formula; a non-positive result is a bug.
fn positive_size(minuend: usize, subtrahend: usize, what: &str) -> usize {
    match minuend.checked_sub(subtrahend) {
        Some(size) if size > 0 => size,
        _ => panic!("{what}: size formula {minuend} - {subtrahend} is not positive"),
    }
}

fn invalid(msg: impl Into<String>) -> ConstructionError {
    ConstructionError::InvalidParameters(msg.into())
}

fn singleton_layout(a: usize) -> Layout {
    let mut l = Layout::default();
    let half = a / 2;
    let x1 = l.x("X1", half, a);
    let x2 = l.x("X2", half, a);
    if a % 2 == 1 {
        l.x("x", 1, a);
    }
    let y1 = l.y("Y1", half, a);
    let y2 = l.y("Y2", half, a);
    if a % 2 == 1 {
        l.y("y", 1, a);
    }
    l.x_over_y(&x1, &y1);
    l.x_over_y(&x2, &y2);
    l.y_over_x(&y1, &x2);
    l.y_over_x(&y2, &x1);
    l
}

/// `{a}`: blocks `X1, X2, Y1, Y2` of size `⌊a/2⌋` with `X_i → Y_i` and
/// `Y_i → X_j` (`i ≠ j`), plus one isolated vertex per part when `a` is odd.
/// The result is `a × a` with every score equal to `a`.
pub fn build_singleton(a: usize) -> Result<Realization> {
    if a == 0 {
        return Err(invalid("singleton score must be positive ({0} has no realization)"));
    }
    singleton_layout(a).finish(ScoreSet::from([a]))
}

/// `{a1, a2}`: the singleton graph for `a1` plus `a2 − a1` isolated vertices
/// in `U`. `U` scores stay `a1`, `V` scores rise to `a2`.
pub fn build_doubleton(a1: usize, a2: usize) -> Result<Realization> {
    if a1 == 0 || a1 >= a2 {
        return Err(invalid(format!("doubleton needs 1 <= a1 < a2 (got {a1}, {a2})")));
    }
    let mut l = singleton_layout(a1);
    for block in &mut l.blocks.v {
        block.score = Some(a2);
    }
    l.x("X", a2 - a1, a1);
    l.finish(ScoreSet::from([a1, a2]))
}

/// `{a1, a2, a3}`.
///
/// When `a3 > 2·a2`: `|X1| = a2`, `|X2| = a3 − 2a2`, `|Y1| = a1`,
/// `|Y2| = a3 − 2a1`, with `X2 → Y1` and `Y2 → X1`.
///
/// Otherwise: `U = X1` (`a2` vertices), `|Y1| = a1`, `|Y2| = a2 − a1`, and
/// every `Y2` vertex dominates the first `a3 − a2` vertices of `X1`.
pub fn build_triple(a1: usize, a2: usize, a3: usize) -> Result<Realization> {
    if a1 == 0 || a1 >= a2 || a2 >= a3 {
        return Err(invalid(format!(
            "triple needs 1 <= a1 < a2 < a3 (got {a1}, {a2}, {a3})"
        )));
    }
    let requested = ScoreSet::from([a1, a2, a3]);
    let mut l = Layout::default();
    let twice_a2 = mul(2, a2)?;
    if a3 > twice_a2 {
        let x1 = l.x("X1", a2, a1);
        let x2 = l.x("X2", a3 - twice_a2, a3);
        let y1 = l.y("Y1", a1, a2);
        let y2 = l.y("Y2", a3 - 2 * a1, a3);
        l.x_over_y(&x2, &y1);
        l.y_over_x(&y2, &x1);
    } else {
        let dominated = l.x("X1:dominated", a3 - a2, a1);
        l.x("X1:rest", twice_a2 - a3, a2);
        l.y("Y1", a1, a2);
        let y2 = l.y("Y2", a2 - a1, a3);
        l.y_over_x(&y2, &dominated);
    }
    l.finish(requested)
}

/// Block sizes `|X_i| = |Y_i| = 2^i·a − 2·Σ_{j<i, j≠2} |X_j|` for `3 ≤ i ≤ n`
/// in the ratio-2 construction, where `|X_0| = |X_1| = a`.
pub fn ratio_two_block_sizes(a: usize, n: usize) -> Result<Vec<usize>> {
    let mut below = mul(2, a)?;
    let mut sizes = Vec::new();
    for i in 3..=n {
        let target = mul(a, 1usize.checked_shl(i as u32).ok_or(ConstructionError::Overflow)?)?;
        let size = positive_size(target, mul(2, below)?, "ratio-2 block");
        sizes.push(size);
        below += size;
    }
    Ok(sizes)
}

/// `{a, ad, .., ad^n}` with `d ≥ 2`.
///
/// For `d ≥ 3` a base graph (`|X0| = |Y0| = a`, `|X1| = |Y1| = ad − 2a`,
/// `X1 → Y0`, `Y1 → X0`) is grown layer by layer: layer `i` adds
/// `ad^i − 2s` vertices to each part (`s` = current part size), new `X`
/// vertices dominate all current `V` and new `Y` vertices all current `U`.
///
/// For `d = 2`: `U = X0 ∪ X1 ∪ X3 ∪ .. ∪ Xn`, `V = Y0 ∪ Y2 ∪ Y3 ∪ .. ∪ Yn`,
/// `X_i → Y_j` and `Y_i → X_j` whenever `i > j`.
pub fn build_geometric(a: usize, d: usize, n: usize) -> Result<Realization> {
    if a == 0 || d < 2 {
        return Err(invalid(format!("geometric needs a >= 1, d >= 2 (got a={a}, d={d})")));
    }
    let mut terms = vec![a];
    for _ in 0..n {
        terms.push(mul(*terms.last().unwrap(), d)?);
    }
    match n {
        0 => return build_singleton(a),
        1 => return build_doubleton(a, terms[1]),
        _ => {}
    }
    let requested = ScoreSet::new(terms.clone());
    let mut l = Layout::default();
    if d == 2 {
        let sizes = ratio_two_block_sizes(a, n)?;
        let mut xs = vec![(0, l.x("X0", a, a)), (1, l.x("X1", a, 2 * a))];
        let mut ys = vec![(0, l.y("Y0", a, a)), (2, l.y("Y2", a, terms[2]))];
        for (i, &size) in (3..=n).zip(&sizes) {
            xs.push((i, l.x(format!("X{i}"), size, terms[i])));
        }
        for (i, &size) in (3..=n).zip(&sizes) {
            ys.push((i, l.y(format!("Y{i}"), size, terms[i])));
        }
        l.cross(&xs, &ys, |i, j| i > j, |i, j| i > j);
        return l.finish(requested);
    }
    // d >= 3: base graph for {a, ad}, then one layer per further term.
    let inner = positive_size(terms[1], 2 * a, "geometric base block");
    let x0 = l.x("X0", a, a);
    let x1 = l.x("X1", inner, terms[1]);
    let y0 = l.y("Y0", a, a);
    let y1 = l.y("Y1", inner, terms[1]);
    l.x_over_y(&x1, &y0);
    l.y_over_x(&y1, &x0);
    for (i, &term) in terms.iter().enumerate().skip(2) {
        // Both parts have the same size before every layer.
        let current = l.m;
        let size = positive_size(term, mul(2, current)?, "geometric layer");
        let x = l.x(format!("X{i}"), size, term);
        let y = l.y(format!("Y{i}"), size, term);
        l.x_over_y(&x, &(0..current));
        l.y_over_x(&y, &(0..current));
    }
    l.finish(requested)
}

/// `{a, a+d, .., a+nd}` with `a, d ≥ 1`, split by how `d` compares to `a`.
pub fn build_arithmetic(a: usize, d: usize, n: usize) -> Result<Realization> {
    if a == 0 || d == 0 {
        return Err(invalid(format!("arithmetic needs a >= 1, d >= 1 (got a={a}, d={d})")));
    }
    let terms = (0..=n)
        .map(|i| add(a, mul(i, d)?))
        .collect::<Result<Vec<_>>>()?;
    let requested = ScoreSet::new(terms.clone());
    if n == 0 {
        return build_singleton(a);
    }
    match d.cmp(&a) {
        std::cmp::Ordering::Greater => arithmetic_wide(a, d, &terms, requested),
        std::cmp::Ordering::Equal => arithmetic_equal(a, &terms, requested),
        std::cmp::Ordering::Less if n == 1 => build_doubleton(a, terms[1]),
        std::cmp::Ordering::Less => arithmetic_narrow(a, d, &terms, requested),
    }
}

/// `d > a`: blocks `X_i`, `Y_i` (`0 ≤ i ≤ n`) of size `a` for even `i` and
/// `d − a` for odd `i`; the higher-indexed block always dominates.
fn arithmetic_wide(a: usize, d: usize, terms: &[usize], requested: ScoreSet) -> Result<Realization> {
    let mut l = Layout::default();
    let size = |i: usize| if i.is_multiple_of(2) { a } else { d - a };
    let xs: Vec<_> = (0..terms.len())
        .map(|i| (i, l.x(format!("X{i}"), size(i), terms[i])))
        .collect();
    let ys: Vec<_> = (0..terms.len())
        .map(|i| (i, l.y(format!("Y{i}"), size(i), terms[i])))
        .collect();
    l.cross(&xs, &ys, |i, j| i > j, |i, j| i > j);
    l.finish(requested)
}

/// Part size of the `d > a` construction: `nd/2 + a` for even `n`,
/// `(n+1)d/2` for odd `n`.
pub fn arithmetic_wide_part_size(a: usize, d: usize, n: usize) -> usize {
    if n.is_multiple_of(2) {
        n * d / 2 + a
    } else {
        (n + 1) * d / 2
    }
}

/// `d = a`, `n ≥ 1`: `U = X0 ∪ X1 ∪ X3 ∪ .. ∪ X(2k−1)`,
/// `V = Y0 ∪ Y2 ∪ .. ∪ Y(2k−2)` (plus `Y(2k)` when `n = 2k`), all blocks of
/// size `a`. `X_i → Y_j` iff `i > j`; `Y_i → X_j` iff `i > j > 0`.
fn arithmetic_equal(a: usize, terms: &[usize], requested: ScoreSet) -> Result<Realization> {
    let n = terms.len() - 1;
    let k = n.div_ceil(2);
    let mut l = Layout::default();
    let x0_score = if n % 2 == 1 { mul(k, a)? } else { mul(k + 1, a)? };
    let mut xs = vec![(0, l.x("X0", a, x0_score))];
    for i in (1..2 * k).step_by(2) {
        xs.push((i, l.x(format!("X{i}"), a, terms[i])));
    }
    let mut ys = Vec::new();
    for j in (0..=n).step_by(2) {
        ys.push((j, l.y(format!("Y{j}"), a, terms[j])));
    }
    l.cross(&xs, &ys, |i, j| i > j, |i, j| i > j && j > 0);
    l.finish(requested)
}

/// `d < a`, `n ≥ 2`, `k = ⌊n/2⌋`: `U = X0 ∪ X1 ∪ X3 ∪ .. ∪ X(2k−1)` (plus
/// `X(2k+1)` for odd `n`), `V = Y0 ∪ Y2 ∪ .. ∪ Y(2k)`; `|X0| = |Y0| = a`, the
/// rest have size `d`. `X_i → Y_j` iff `i > j > 1`; `Y_i → X_j` iff
/// `i > j > 0`; every `X_i` with `i ≥ 3` dominates the same first `d`
/// vertices of `Y0`.
fn arithmetic_narrow(a: usize, d: usize, terms: &[usize], requested: ScoreSet) -> Result<Realization> {
    let n = terms.len() - 1;
    let k = n / 2;
    let mut l = Layout::default();
    let kd = mul(k, d)?;
    let mut xs = vec![(0, l.x("X0", a, add(a, kd)?))];
    for i in (1..=n).step_by(2) {
        let score = if i == 1 { a } else { terms[i] };
        xs.push((i, l.x(format!("X{i}"), d, score)));
    }
    let y0_rest_score = if n.is_multiple_of(2) { add(a, kd)? } else { add(add(a, kd)?, d)? };
    let y0_dominated = l.y("Y0:dominated", d, a + d);
    l.y("Y0:rest", a - d, y0_rest_score);
    let mut ys = Vec::new();
    for j in (2..=n).step_by(2) {
        ys.push((j, l.y(format!("Y{j}"), d, terms[j])));
    }
    l.cross(&xs, &ys, |i, j| i > j && j > 1, |i, j| i > j && j > 0);
    for (i, xr) in &xs {
        if *i > 2 {
            l.x_over_y(xr, &y0_dominated);
        }
    }
    l.finish(requested)
}

/// Routes a score set to a construction. Sets of size 1-3 go to the
/// small-set builders even when they are also progressions.
pub fn classify(set: &ScoreSet) -> Result<Family> {
    let v = set.values();
    if v.is_empty() {
        return Err(ConstructionError::EmptySet);
    }
    if v[0] == 0 {
        return Err(ConstructionError::ContainsZero(set.clone()));
    }
    Ok(match *v {
        [a] => Family::Singleton { a },
        [a1, a2] => Family::Doubleton { a1, a2 },
        [a1, a2, a3] => Family::Triple { a1, a2, a3 },
        _ => {
            let n = v.len() - 1;
            let d = v[1] - v[0];
            if v.windows(2).all(|w| w[1] - w[0] == d) {
                Family::Arithmetic { a: v[0], d, n }
            } else if v[1].is_multiple_of(v[0])
                && v[1] / v[0] >= 2
                && v.windows(2).all(|w| w[1] % w[0] == 0 && w[1] / w[0] == v[1] / v[0])
            {
                Family::Geometric { a: v[0], d: v[1] / v[0], n }
            } else {
                Family::Unsupported
            }
        }
    })
}

/// Builds a realization of `set` and verifies it before returning.
pub fn realize(set: &ScoreSet) -> Result<Realization> {
    let realization = match classify(set)? {
        Family::Singleton { a } => build_singleton(a)?,
        Family::Doubleton { a1, a2 } => build_doubleton(a1, a2)?,
        Family::Triple { a1, a2, a3 } => build_triple(a1, a2, a3)?,
        Family::Geometric { a, d, n } => build_geometric(a, d, n)?,
        Family::Arithmetic { a, d, n } => build_arithmetic(a, d, n)?,
        Family::Unsupported => return Err(ConstructionError::Unsupported(set.clone())),
    };
    realization.verify()?;
    Ok(realization)
}
