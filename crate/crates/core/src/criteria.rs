//! Realizability criteria for score sequences.
//!
//! * Oriented graphs on `n` vertices: a nondecreasing `[a_1..a_n]` is a score
//!   sequence iff `Σ_{i≤k} a_i ≥ k(k−1)` for every `k`, with equality at `k = n`.
//! * Oriented bipartite graphs: nondecreasing `[a_1..a_m]`, `[b_1..b_n]` are
//!   score sequences iff `Σ_{i≤p} a_i + Σ_{j≤q} b_j ≥ 2pq` for every
//!   `1 ≤ p ≤ m`, `1 ≤ q ≤ n`, with equality at `(m, n)`.
//!
//! Both checks report the first violated constraint in scan order.

use std::fmt;

use thiserror::Error;

use crate::graph::{first_descent, NotMonotone, ScoreSequencePair};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CriterionError {
    #[error(transparent)]
    NotMonotone(#[from] NotMonotone),
}

/// Which kind of constraint failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Failure {
    /// `lhs < rhs` for an inequality.
    BelowBound,
    /// The closing constraint must hold with equality but `lhs > rhs`.
    EqualityFails,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    Prefix { k: usize, lhs: u64, rhs: u64, failure: Failure },
    Pair { p: usize, q: usize, lhs: u64, rhs: u64, failure: Failure },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (at, lhs, rhs, failure) = match *self {
            Violation::Prefix { k, lhs, rhs, failure } => (format!("k={k}"), lhs, rhs, failure),
            Violation::Pair { p, q, lhs, rhs, failure } => {
                (format!("(p,q)=({p},{q})"), lhs, rhs, failure)
            }
        };
        match failure {
            Failure::BelowBound => write!(f, "at {at}: {lhs} < {rhs}"),
            Failure::EqualityFails => write!(f, "at {at}: {lhs} != {rhs} (equality required)"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CriterionVerdict {
    pub witness: Option<Violation>,
}

impl CriterionVerdict {
    pub fn is_valid(&self) -> bool {
        self.witness.is_none()
    }

    const VALID: Self = Self { witness: None };
}

fn prefix_sums(seq: &[usize]) -> Vec<u64> {
    let mut sums = Vec::with_capacity(seq.len() + 1);
    sums.push(0u64);
    for &x in seq {
        sums.push(sums.last().unwrap() + x as u64);
    }
    sums
}

fn judge(lhs: u64, rhs: u64, closing: bool) -> Option<Failure> {
    if lhs < rhs {
        Some(Failure::BelowBound)
    } else if closing && lhs != rhs {
        Some(Failure::EqualityFails)
    } else {
        None
    }
}

/// Score-sequence test for (non-bipartite) oriented graphs.
pub fn check_oriented_scores(seq: &[usize]) -> Result<CriterionVerdict, CriterionError> {
    if let Some(position) = first_descent(seq) {
        return Err(NotMonotone { side: "scores", position }.into());
    }
    let sums = prefix_sums(seq);
    let n = seq.len();
    for k in 1..=n {
        let rhs = (k as u64) * (k as u64 - 1);
        if let Some(failure) = judge(sums[k], rhs, k == n) {
            return Ok(CriterionVerdict {
                witness: Some(Violation::Prefix { k, lhs: sums[k], rhs, failure }),
            });
        }
    }
    Ok(CriterionVerdict::VALID)
}

/// Score-sequence-pair test for oriented bipartite graphs, `O(mn)` after
/// prefix sums.
pub fn check_bipartite_pair(pair: &ScoreSequencePair) -> CriterionVerdict {
    let (sa, sb) = (prefix_sums(pair.a()), prefix_sums(pair.b()));
    let (m, n) = (pair.a().len(), pair.b().len());
    for p in 1..=m {
        for q in 1..=n {
            let lhs = sa[p] + sb[q];
            let rhs = 2 * p as u64 * q as u64;
            if let Some(failure) = judge(lhs, rhs, p == m && q == n) {
                return CriterionVerdict {
                    witness: Some(Violation::Pair { p, q, lhs, rhs, failure }),
                };
            }
        }
    }
    CriterionVerdict::VALID
}

/// Convenience wrapper validating monotonicity of raw sequences first.
pub fn check_bipartite_sequences(
    a: &[usize],
    b: &[usize],
) -> Result<CriterionVerdict, CriterionError> {
    let pair = ScoreSequencePair::new(a.to_vec(), b.to_vec())?;
    Ok(check_bipartite_pair(&pair))
}
