//! Acceptance suite. Each test checks one exit criterion and prints a
//! single PASS/FAIL line for it.

use std::collections::BTreeMap;
use std::time::Instant;

use scoreset::constructions::{
    arithmetic_wide_part_size, build_arithmetic, build_doubleton, build_geometric, build_singleton,
    build_triple, ratio_two_block_sizes, realize, ConstructionError, Realization,
};
use scoreset::criteria::check_bipartite_pair;
use scoreset::graph::ScoreSet;
use scoreset::oracle::{bounded_search, criterion_equivalence, realizable_sets_up_to, DEFAULT_BUDGET};

fn report(id: u32, title: &str, outcome: Result<String, String>) {
    match outcome {
        Ok(detail) => println!("[PASS] criterion {id}: {title} ({detail})"),
        Err(detail) => {
            println!("[FAIL] criterion {id}: {title} ({detail})");
            panic!("criterion {id} failed: {detail}");
        }
    }
}

struct Case {
    name: String,
    /// Construction branch, for coverage accounting.
    branch: String,
    requested: ScoreSet,
    realization: Realization,
}

/// Every parameter tuple of the construction grid.
fn grid() -> Vec<Case> {
    let mut cases = Vec::new();
    let mut push = |name: String,
                    branch: String,
                    requested: Vec<usize>,
                    r: Result<Realization, ConstructionError>| {
        let realization = r.unwrap_or_else(|e| panic!("{name}: {e}"));
        cases.push(Case { name, branch, requested: ScoreSet::new(requested), realization });
    };
    for a in 1..=10 {
        let parity = if a % 2 == 0 { "even" } else { "odd" };
        push(format!("singleton({a})"), format!("singleton/{parity}"), vec![a], build_singleton(a));
    }
    for a2 in 1..=10 {
        for a1 in 1..a2 {
            push(format!("doubleton({a1},{a2})"), "doubleton".into(), vec![a1, a2], build_doubleton(a1, a2));
        }
    }
    for a3 in 1..=12 {
        for a2 in 1..a3 {
            for a1 in 1..a2 {
                let branch = if a3 > 2 * a2 { "triple/wide" } else { "triple/narrow" };
                let name = format!("triple({a1},{a2},{a3})");
                push(name, branch.into(), vec![a1, a2, a3], build_triple(a1, a2, a3));
            }
        }
    }
    for a in 1..=4 {
        for d in 2..=5usize {
            for n in 0..=5 {
                let terms = (0..=n as u32).map(|i| a * d.pow(i)).collect();
                let branch = match (n, d) {
                    (0, _) => "geometric/singleton",
                    (1, _) => "geometric/doubleton",
                    (_, 2) => "geometric/ratio-2",
                    _ => "geometric/layered",
                };
                let name = format!("geometric({a},{d},{n})");
                push(name, branch.into(), terms, build_geometric(a, d, n));
            }
        }
    }
    for a in 1..=6 {
        for d in 1..=6 {
            for n in 0..=6 {
                let terms = (0..=n).map(|i| a + i * d).collect();
                let case = match d.cmp(&a) {
                    std::cmp::Ordering::Greater => "d>a",
                    std::cmp::Ordering::Equal => "d=a",
                    std::cmp::Ordering::Less => "d<a",
                };
                let parity = if n % 2 == 0 { "even" } else { "odd" };
                let name = format!("arithmetic({a},{d},{n})");
                push(name, format!("arithmetic/{case}/{parity}"), terms, build_arithmetic(a, d, n));
            }
        }
    }
    cases
}

#[test]
fn criterion_1_construction_grid() {
    let started = Instant::now();
    let cases = grid();
    let mismatches: Vec<String> = cases
        .iter()
        .filter(|c| c.realization.graph.score_set() != c.requested)
        .map(|c| format!("{} gave {}", c.name, c.realization.graph.score_set()))
        .collect();

    let mut branches: BTreeMap<&str, usize> = BTreeMap::new();
    for c in &cases {
        *branches.entry(c.branch.as_str()).or_default() += 1;
    }
    let required = [
        "singleton/even",
        "singleton/odd",
        "doubleton",
        "triple/wide",
        "triple/narrow",
        "geometric/ratio-2",
        "geometric/layered",
        "arithmetic/d>a/even",
        "arithmetic/d>a/odd",
        "arithmetic/d=a/even",
        "arithmetic/d=a/odd",
        "arithmetic/d<a/even",
        "arithmetic/d<a/odd",
    ];
    let missing: Vec<_> = required.iter().filter(|b| !branches.contains_key(*b)).collect();
    let outcome = if !mismatches.is_empty() {
        Err(format!("{} mismatches, first: {}", mismatches.len(), mismatches[0]))
    } else if !missing.is_empty() {
        Err(format!("branches not exercised: {missing:?}"))
    } else {
        Ok(format!(
            "{} graphs exact over {} branches, {:.2?}",
            cases.len(),
            branches.len(),
            started.elapsed()
        ))
    };
    report(1, "construction score sets equal requested sets", outcome);
}

#[test]
fn criterion_2_criterion_compliance() {
    let cases = grid();
    let mut failures = Vec::new();
    for c in &cases {
        let g = &c.realization.graph;
        let seq = g.score_sequences();
        let total: usize = seq.a().iter().chain(seq.b()).sum();
        if !check_bipartite_pair(&seq).is_valid() || total != 2 * g.m() * g.n() {
            failures.push(c.name.clone());
        }
    }
    let outcome = if failures.is_empty() {
        Ok(format!("{} graphs pass, all with sum = 2mn", cases.len()))
    } else {
        Err(format!("{} failures, first: {}", failures.len(), failures[0]))
    };
    report(2, "constructed graphs satisfy the bipartite criterion", outcome);
}

#[test]
fn criterion_3_criterion_equivalence() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut graphs = 0;
    for m in 1..=3 {
        for n in 1..=3 {
            let r = criterion_equivalence(m, n, DEFAULT_BUDGET).unwrap();
            graphs += r.graphs;
            if !(r.necessity_ok && r.sufficiency_ok) {
                failures.push(format!("{m}x{n}: {:?}", r.counterexamples.first()));
            }
        }
    }
    let outcome = if failures.is_empty() {
        Ok(format!("{graphs} graphs over 9 shapes, {:.2?}", started.elapsed()))
    } else {
        Err(failures.join("; "))
    };
    report(3, "criterion necessary and sufficient for m, n <= 3", outcome);
}

#[test]
fn criterion_4_remark_sets_unrealizable() {
    let started = Instant::now();
    let mut problems = Vec::new();
    for set in [vec![0], vec![0, 1], vec![0, 1, 2]] {
        let set = ScoreSet::new(set);
        match bounded_search(&set, 4, 4, DEFAULT_BUDGET) {
            Ok(None) => {}
            Ok(Some(w)) => problems.push(format!("{set} witnessed by {w:?}")),
            Err(e) => problems.push(format!("{set}: {e}")),
        }
        if realize(&set).is_ok() {
            problems.push(format!("realize accepted {set}"));
        }
    }
    let outcome = if problems.is_empty() {
        Ok(format!("no witness in any shape up to 4x4, {:.2?}", started.elapsed()))
    } else {
        Err(problems.join("; "))
    };
    report(4, "{0}, {0,1}, {0,1,2} have no realization and are rejected", outcome);
}

/// Ratio-2 block sizes from the defining sum, evaluated independently of
/// the library: |X_0| = |X_1| = a, then |X_i| = 2^i a − 2 Σ_{j<i, j≠2} |X_j|.
fn ratio_two_sizes_by_prefix_sums(a: usize, last: usize) -> Vec<usize> {
    let mut earlier = vec![a, a];
    let mut sizes = Vec::new();
    for i in 3..=last {
        let prefix: usize = earlier.iter().sum();
        let size = (1usize << i) * a - 2 * prefix;
        earlier.push(size);
        sizes.push(size);
    }
    sizes
}

#[test]
fn criterion_5_formula_audits() {
    let mut problems = Vec::new();
    // Frozen from the prefix-sum evaluation: 8-4, 16-12, 32-20, 64-44.
    let frozen = vec![4, 4, 12, 20];
    let oracle = ratio_two_sizes_by_prefix_sums(1, 6);
    if oracle != frozen {
        problems.push(format!("prefix-sum routine gave {oracle:?}"));
    }
    let library = ratio_two_block_sizes(1, 6).unwrap();
    if library != frozen {
        problems.push(format!("library sizes {library:?}"));
    }
    let built = build_geometric(1, 2, 6).unwrap();
    let built_sizes: Vec<usize> = built.blocks.u.iter().skip(2).map(|b| b.len()).collect();
    if built_sizes != frozen {
        problems.push(format!("built graph blocks {built_sizes:?}"));
    }

    let mut checked = 0;
    for a in 1..=6 {
        for d in (a + 1)..=6 {
            for n in 0..=6 {
                let r = build_arithmetic(a, d, n).unwrap();
                // n = 0 is delegated to the singleton construction (|U| = a),
                // which agrees with the closed form nd/2 + a.
                let expected = arithmetic_wide_part_size(a, d, n);
                if r.graph.m() != expected || r.graph.n() != expected {
                    problems.push(format!(
                        "arithmetic({a},{d},{n}): {}x{} vs {expected}",
                        r.graph.m(),
                        r.graph.n()
                    ));
                }
                checked += 1;
            }
        }
    }
    let outcome = if problems.is_empty() {
        Ok(format!("ratio-2 sizes {frozen:?}; {checked} wide arithmetic part sizes match"))
    } else {
        Err(problems.join("; "))
    };
    report(5, "block and part size formulas", outcome);
}

#[test]
fn criterion_6_one_by_one_catalog() {
    let catalog = realizable_sets_up_to(1, 1, DEFAULT_BUDGET).unwrap();
    let keys: Vec<ScoreSet> = catalog.sets.keys().cloned().collect();
    let expected = vec![ScoreSet::from([0, 2]), ScoreSet::from([1])];
    let outcome = if keys == expected {
        Ok("keys {0,2} and {1}".into())
    } else {
        Err(format!("keys {keys:?}"))
    };
    report(6, "1x1 catalog score sets", outcome);
}
