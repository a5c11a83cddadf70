//! Score sets of oriented bipartite graphs.
//!
//! * [`graph`]: the graph model, scores, JSON and DOT output.
//! * [`criteria`]: score-sequence criteria for oriented and oriented bipartite graphs.
//! * [`constructions`]: explicit realizations of singleton, doubleton, triple,
//!   geometric and arithmetic score sets.
//! * [`oracle`]: exhaustive enumeration of small graphs as ground truth.
//! * [`cli`]: the `scoreset` command-line tool.

pub mod cli;
pub mod constructions;
pub mod criteria;
pub mod graph;
pub mod oracle;

pub use constructions::{classify, realize, Family, Realization};
pub use criteria::{check_bipartite_pair, check_oriented_scores, CriterionVerdict};
pub use graph::{ArcState, BipartiteOrientedGraph, ScoreSequencePair, ScoreSet};
