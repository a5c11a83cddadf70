//! Command-line front end.
//!
//! Exit codes: 0 = answered (including negative answers), 1 = bad input or
//! I/O failure, 2 = unsupported score-set family, 3 = enumeration budget
//! exceeded.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::constructions::{realize, ConstructionError};
use crate::criteria::{check_bipartite_sequences, check_oriented_scores, CriterionVerdict};
use crate::graph::{BipartiteOrientedGraph, ScoreSet};
use crate::oracle::{
    bounded_search, catalog_to_jsonl, catalog_up_to, CatalogKind, OracleError,
    RealizabilityCatalog, DEFAULT_BUDGET,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_BAD_INPUT: i32 = 1;
pub const EXIT_UNSUPPORTED: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Largest `--max-value` accepted by conjecture-scan (2^20 subsets).
const MAX_SCAN_VALUE: usize = 20;

#[derive(Parser, Debug)]
#[command(name = "scoreset", version, about = "Score sets of oriented bipartite graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a graph whose score set is exactly the given set.
    Realize {
        #[arg(long)]
        set: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Score sequences and score set of a graph JSON file.
    Score {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = ScoreFormat::Summary)]
        format: ScoreFormat,
    },
    /// Bipartite score-sequence criterion for a pair of sequences.
    CheckPair {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Oriented-graph score-sequence criterion.
    CheckOriented {
        #[arg(long, allow_hyphen_values = true)]
        scores: String,
    },
    /// Catalog of realizable score sets or sequence pairs for all shapes up to (m, n).
    Enumerate {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Emit::Sets)]
        emit: Emit,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Exhaustive search for a graph with the given score set.
    Search {
        #[arg(long)]
        set: String,
        #[arg(long)]
        max_m: usize,
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Status of every nonempty subset of {1..max-value}.
    ConjectureScan {
        #[arg(long)]
        max_value: usize,
        #[arg(long)]
        max_m: usize,
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GraphFormat {
    Json,
    Dot,
    Summary,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ScoreFormat {
    Json,
    Summary,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Emit {
    Sets,
    Pairs,
}

/// Failure carrying the exit code it maps to.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn bad_input(message: impl Into<String>) -> Self {
        Self { code: EXIT_BAD_INPUT, message: message.into() }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        let code = match e {
            OracleError::BudgetExceeded { .. } => EXIT_BUDGET,
            _ => EXIT_BAD_INPUT,
        };
        Self { code, message: e.to_string() }
    }
}

impl From<ConstructionError> for Failure {
    fn from(e: ConstructionError) -> Self {
        let code = match e {
            ConstructionError::Unsupported(_) => EXIT_UNSUPPORTED,
            _ => EXIT_BAD_INPUT,
        };
        Self { code, message: e.to_string() }
    }
}

type Outcome = Result<(), Failure>;

/// Parses a comma-separated list of nonnegative integers.
pub fn parse_list(text: &str) -> Result<Vec<usize>, String> {
    text.split(',')
        .map(str::trim)
        .map(|item| {
            item.parse::<usize>()
                .map_err(|_| format!("not a nonnegative integer: {item:?}"))
        })
        .collect()
}

/// Parses a set flag; unsorted or repeated values are normalized with a warning.
fn parse_set(text: &str, err: &mut dyn Write) -> Result<ScoreSet, Failure> {
    let values = parse_list(text).map_err(Failure::bad_input)?;
    let set = ScoreSet::new(values.clone());
    if set.values() != values.as_slice() {
        let _ = writeln!(err, "warning: set {text} sorted and deduplicated to {set}");
    }
    Ok(set)
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Outcome {
    match path {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::bad_input(format!("cannot write {}: {e}", path.display()))),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| Failure::bad_input(format!("cannot write output: {e}"))),
    }
}

fn verdict_text(verdict: &CriterionVerdict) -> String {
    match verdict.witness {
        None => "valid\n".to_string(),
        Some(v) => format!("invalid {v}\n"),
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_BAD_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(()) => EXIT_OK,
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            failure.code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match command {
        Command::Realize { set, format, out: path } => {
            let set = parse_set(&set, err)?;
            let started = Instant::now();
            let r = realize(&set)?;
            let text = match format {
                GraphFormat::Json => format!("{}\n", r.to_json()),
                GraphFormat::Dot => r.to_dot(),
                GraphFormat::Summary => {
                    let _ = writeln!(err, "built in {:.3?}", started.elapsed());
                    let seq = r.graph.score_sequences();
                    let mut s = String::new();
                    let _ = writeln!(s, "requested score set: {set}");
                    let _ = writeln!(s, "m = {}, n = {}, arcs = {}", r.graph.m(), r.graph.n(), r.graph.arc_count());
                    let _ = writeln!(s, "score set: {}", r.graph.score_set());
                    let _ = writeln!(s, "a = {:?}", seq.a());
                    let _ = writeln!(s, "b = {:?}", seq.b());
                    for (part, blocks) in [("U", &r.blocks.u), ("V", &r.blocks.v)] {
                        for b in blocks {
                            let _ = writeln!(
                                s,
                                "  {part} {:<14} [{}, {}) size {} score {}",
                                b.label,
                                b.from,
                                b.to,
                                b.len(),
                                b.score.unwrap_or_default()
                            );
                        }
                    }
                    s.push_str("self-check: ok\n");
                    s
                }
            };
            emit(out, path.as_deref(), &text)
        }
        Command::Score { graph, format } => {
            let text = std::fs::read_to_string(&graph)
                .map_err(|e| Failure::bad_input(format!("cannot read {}: {e}", graph.display())))?;
            let g = BipartiteOrientedGraph::from_json(&text).map_err(|e| Failure::bad_input(e.to_string()))?;
            let seq = g.score_sequences();
            let set = g.score_set();
            let text = match format {
                ScoreFormat::Json => format!(
                    "{}\n",
                    serde_json::json!({
                        "m": g.m(),
                        "n": g.n(),
                        "a": seq.a(),
                        "b": seq.b(),
                        "score_set": set,
                    })
                ),
                ScoreFormat::Summary => format!(
                    "m = {}, n = {}\na = {:?}\nb = {:?}\nscore set: {set}\n",
                    g.m(),
                    g.n(),
                    seq.a(),
                    seq.b()
                ),
            };
            emit(out, None, &text)
        }
        Command::CheckPair { a, b } => {
            let a = parse_list(&a).map_err(Failure::bad_input)?;
            let b = parse_list(&b).map_err(Failure::bad_input)?;
            let verdict = check_bipartite_sequences(&a, &b).map_err(|e| Failure::bad_input(e.to_string()))?;
            emit(out, None, &verdict_text(&verdict))
        }
        Command::CheckOriented { scores } => {
            let scores = parse_list(&scores).map_err(Failure::bad_input)?;
            let verdict = check_oriented_scores(&scores).map_err(|e| Failure::bad_input(e.to_string()))?;
            emit(out, None, &verdict_text(&verdict))
        }
        Command::Enumerate { m, n, emit: kind, out: path, budget } => {
            let with_pairs = matches!(kind, Emit::Pairs);
            let started = Instant::now();
            let catalog = catalog_up_to(m, n, budget, with_pairs, rayon::current_num_threads() * 8)?;
            let _ = writeln!(err, "enumerated shapes up to {m}x{n} in {:.3?}", started.elapsed());
            let kind = if with_pairs { CatalogKind::Pairs } else { CatalogKind::Sets };
            emit(out, path.as_deref(), &catalog_to_jsonl(&catalog, kind))
        }
        Command::Search { set, max_m, max_n, budget } => {
            let set = parse_set(&set, err)?;
            let text = match bounded_search(&set, max_m, max_n, budget)? {
                Some(w) => {
                    let g = w.decode()?;
                    format!("witness m={} n={} index={}\n{}\n", w.m, w.n, w.index, g.to_json())
                }
                None => format!("not realizable within bounds (m <= {max_m}, n <= {max_n})\n"),
            };
            emit(out, None, &text)
        }
        Command::ConjectureScan { max_value, max_m, max_n, budget } => {
            if max_value == 0 || max_value > MAX_SCAN_VALUE {
                return Err(Failure::bad_input(format!(
                    "--max-value must be in 1..={MAX_SCAN_VALUE}"
                )));
            }
            // Validate the bounds before any work.
            crate::oracle::EnumerationSpace::new(max_m, max_n, budget)?;
            let mut catalog: Option<RealizabilityCatalog> = None;
            let (mut constructed, mut witnessed, mut unknown) = (0usize, 0usize, 0usize);
            let mut text = String::new();
            for bits in 1u32..(1 << max_value) {
                let set: ScoreSet = (1..=max_value).filter(|v| bits & (1 << (v - 1)) != 0).collect();
                let status = match realize(&set) {
                    Ok(_) => {
                        constructed += 1;
                        "constructed".to_string()
                    }
                    Err(ConstructionError::Unsupported(_)) => {
                        if catalog.is_none() {
                            catalog = Some(catalog_up_to(
                                max_m,
                                max_n,
                                budget,
                                false,
                                rayon::current_num_threads() * 8,
                            )?);
                        }
                        match catalog.as_ref().unwrap().sets.get(&set) {
                            Some(w) => {
                                witnessed += 1;
                                format!("oracle-witnessed m={} n={} index={}", w.m, w.n, w.index)
                            }
                            None => {
                                unknown += 1;
                                "unknown-within-bounds".to_string()
                            }
                        }
                    }
                    Err(e) => return Err(e.into()),
                };
                let _ = writeln!(text, "{set}\t{status}");
            }
            let _ = writeln!(
                text,
                "total {}: constructed {constructed}, oracle-witnessed {witnessed}, unknown-within-bounds {unknown}",
                constructed + witnessed + unknown
            );
            emit(out, None, &text)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("scoreset").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn parse_list_rejects_garbage() {
        assert_eq!(parse_list("1, 2,5").unwrap(), vec![1, 2, 5]);
        assert!(parse_list("1,x").is_err());
        assert!(parse_list("-1").is_err());
        assert!(parse_list("").is_err());
    }

    #[test]
    fn realize_summary() {
        let (code, out, _) = call(&["realize", "--set", "7", "--format", "summary"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("m = 7, n = 7"));
        assert!(out.contains("score set: {7}"));
    }

    #[test]
    fn realize_exit_codes() {
        let (code, _, err) = call(&["realize", "--set", "3,5,8,14"]);
        assert_eq!(code, EXIT_UNSUPPORTED);
        assert!(err.contains("conjecture"));
        for zero in ["0", "0,1", "0,1,2"] {
            assert_eq!(call(&["realize", "--set", zero]).0, EXIT_BAD_INPUT);
        }
        assert_eq!(call(&["realize", "--set", "a,b"]).0, EXIT_BAD_INPUT);
        assert_eq!(call(&["realize", "--bogus"]).0, EXIT_BAD_INPUT);
        assert_eq!(call(&[]).0, EXIT_BAD_INPUT);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn unsorted_set_warns() {
        let (code, out, err) = call(&["realize", "--set", "5,1,2,2", "--format", "summary"]);
        assert_eq!(code, EXIT_OK);
        assert!(err.contains("warning"));
        assert!(out.contains("score set: {1,2,5}"));
    }

    #[test]
    fn criteria_commands() {
        let (code, out, _) = call(&["check-pair", "--a", "0", "--b", "0"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.starts_with("invalid at (p,q)=(1,1)"));
        let (_, out, _) = call(&["check-pair", "--a", "1,1,5", "--b", "2,5,5,5"]);
        assert_eq!(out, "valid\n");
        let (_, out, _) = call(&["check-oriented", "--scores", "1,1"]);
        assert_eq!(out, "valid\n");
        assert_eq!(call(&["check-oriented", "--scores", "2,1"]).0, EXIT_BAD_INPUT);
        assert_eq!(call(&["check-oriented", "--scores", "-1,1"]).0, EXIT_BAD_INPUT);
    }

    #[test]
    fn search_and_budget() {
        let (code, out, _) = call(&["search", "--set", "0", "--max-m", "3", "--max-n", "3"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.starts_with("not realizable within bounds"));
        let (code, out, _) = call(&["search", "--set", "1", "--max-m", "1", "--max-n", "1"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.starts_with("witness m=1 n=1 index=0"));
        let (code, _, _) = call(&["search", "--set", "1", "--max-m", "5", "--max-n", "5"]);
        assert_eq!(code, EXIT_BUDGET);
        let (code, _, _) = call(&["enumerate", "--m", "3", "--n", "3", "--budget", "100"]);
        assert_eq!(code, EXIT_BUDGET);
    }

    #[test]
    fn enumerate_emits_sorted_catalog() {
        let (code, out, _) = call(&["enumerate", "--m", "1", "--n", "1", "--emit", "sets"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(
            out,
            "{\"kind\":\"set\",\"key\":[0,2],\"m\":1,\"n\":1,\"index\":\"1\"}\n\
             {\"kind\":\"set\",\"key\":[1],\"m\":1,\"n\":1,\"index\":\"0\"}\n"
        );
        let (_, out, _) = call(&["enumerate", "--m", "1", "--n", "1", "--emit", "pairs"]);
        assert_eq!(out.lines().count(), 3);
        assert!(out.lines().all(|l| l.contains("\"kind\":\"pair\"")));
    }

    #[test]
    fn conjecture_scan_small() {
        let (code, out, _) = call(&["conjecture-scan", "--max-value", "4", "--max-m", "2", "--max-n", "2"]);
        assert_eq!(code, EXIT_OK);
        // Every subset of {1..4} has at most three elements or is an arithmetic progression.
        assert_eq!(out.lines().count(), 16);
        assert!(out.contains("{1,2,3,4}\tconstructed"));
        assert!(out.ends_with("total 15: constructed 15, oracle-witnessed 0, unknown-within-bounds 0\n"));
        assert_eq!(call(&["conjecture-scan", "--max-value", "0", "--max-m", "1", "--max-n", "1"]).0, EXIT_BAD_INPUT);
    }
}
