//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Runs without the libtest harness so the PASS/FAIL lines are always shown.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

mod common;

use common::a2_oracle;
use ls_crystal::explorer::{explore, extremal_scan, orbit_injectivity_check, weight_multiplicities};
use ls_crystal::export::{to_dot, to_json};
use ls_crystal::verify::{operator_checks, order_checks, similarity_checks, Check, VerifyConfig};
use ls_crystal::{BigGraph, BigPath, BigWeight, CartanMatrix, CrystalElem, OrderConfig};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn from_checks(checks: &[Check]) -> Outcome {
    let failed: Vec<String> = checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| format!("{}: {}", c.name, c.detail))
        .collect();
    if failed.is_empty() {
        let summary: Vec<String> = checks
            .iter()
            .map(|c| format!("{} ({})", c.name, c.detail))
            .collect();
        outcome(true, summary.join(", "))
    } else {
        outcome(false, failed.join("; "))
    }
}

fn graph(a1: u32, a2: u32, depth: u32) -> BigGraph {
    let cm = CartanMatrix::new(a1, a2).unwrap();
    explore(
        &BigPath::highest(cm, BigWeight::lambda()),
        depth,
        &OrderConfig::default(),
    )
    .unwrap()
}

fn w(a: i64, b: i64) -> BigWeight {
    BigWeight::from_ints(a, b)
}

/// Edge set keyed by weights; valid when weights label nodes uniquely.
fn weight_edges(g: &BigGraph) -> BTreeSet<(BigWeight, u32, BigWeight)> {
    g.edges
        .iter()
        .map(|e| (g.nodes[e.src].wt(), e.i.number(), g.nodes[e.dst].wt()))
        .collect()
}

fn criterion_1() -> Outcome {
    let g = graph(1, 1, 8);
    let tally = weight_multiplicities(&g);
    let oracle_paths = a2_oracle::enumerate((0, 1), 3, 12);
    let oracle_orbit = a2_oracle::orbit((0, 1));
    let oracle_weights: BTreeSet<BigWeight> = oracle_orbit.iter().map(|&(a, b)| w(a, b)).collect();
    // Paths with more than one segment would show up here; for a minuscule
    // shape there are none, so every oracle path is straight.
    let oracle_straight: BTreeSet<BigWeight> = oracle_paths
        .iter()
        .filter(|(d, _)| d.len() == 1)
        .map(|(d, _)| w(d[0].0, d[0].1))
        .collect();
    let node_texts: BTreeSet<String> = g.nodes.iter().map(|p| p.to_text()).collect();
    let oracle_texts: BTreeSet<String> = oracle_straight
        .iter()
        .map(|nu| BigPath::straight(g.cartan, g.shape.clone(), nu.clone()).to_text())
        .collect();
    // The standard crystal of the dual of the natural A2 module.
    let expected_edges = BTreeSet::from([(w(0, 1), 2, w(1, -1)), (w(1, -1), 1, w(-1, 0))]);
    let checks = [
        ("3 nodes", g.len() == 3),
        ("multiplicities 1", tally.values().all(|&c| c == 1)),
        (
            "weights = W Lambda_2",
            tally.keys().cloned().collect::<BTreeSet<_>>() == oracle_weights,
        ),
        ("oracle enumerates 3 paths", oracle_paths.len() == 3),
        ("nodes = oracle paths", node_texts == oracle_texts),
        ("edges = standard crystal", weight_edges(&g) == expected_edges),
        ("fixed point reached", g.is_closed()),
    ];
    let bad: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    outcome(bad.is_empty(), format!("{} nodes, failed: {:?}", g.len(), bad))
}

fn criterion_2() -> Outcome {
    let g = graph(0, 0, 6);
    // B(Lambda_1) (x) B(-Lambda_2) for A1 x A1: the first factor is {+,-}
    // with f_1: + -> -, the second is {-,+} with f_2: + -> - in its own
    // coordinate, and the operators act factorwise.
    let mut oracle_nodes = BTreeSet::new();
    let mut oracle_edges = BTreeSet::new();
    for s1 in [1i64, -1] {
        for s2 in [1i64, -1] {
            oracle_nodes.insert(w(s1, s2));
            if s1 == 1 {
                oracle_edges.insert((w(s1, s2), 1, w(-1, s2)));
            }
            if s2 == 1 {
                oracle_edges.insert((w(s1, s2), 2, w(s1, -1)));
            }
        }
    }
    let nodes: BTreeSet<BigWeight> = g.nodes.iter().map(|p| p.wt()).collect();
    let ok = g.len() == 4 && nodes == oracle_nodes && weight_edges(&g) == oracle_edges && g.is_closed();
    outcome(ok, format!("{} nodes, {} edges", g.len(), g.edges.len()))
}

fn criterion_3(g8: &BigGraph) -> Outcome {
    let at_lambda = g8.weight_tally.get(&BigWeight::lambda()).copied().unwrap_or(0);
    let parents = g8.parentage();
    let seed = g8.seed_id();
    let orphans = (0..g8.len())
        .filter(|&k| k != seed && parents[k].is_none())
        .count();
    // Walk every parent chain back to the seed, re-applying the operators.
    let mut broken = 0;
    for k in 0..g8.len() {
        let mut at = k;
        let mut hops = 0;
        while at != seed && hops <= g8.len() {
            let Some(p) = parents[at] else { break };
            let from = &g8.nodes[p.node];
            let step = if p.lowered {
                from.lower(p.i)
            } else {
                from.raise(p.i)
            };
            if step.as_ref() != Some(&g8.nodes[at]) {
                broken += 1;
                break;
            }
            at = p.node;
            hops += 1;
        }
        if at != seed {
            broken += 1;
        }
    }
    let scan = extremal_scan(g8, 6);
    let inj = orbit_injectivity_check::<num_bigint::BigInt>(&g8.cartan, 6);
    let ok = at_lambda == 1 && orphans == 0 && broken == 0 && scan.passed() && inj.passed();
    outcome(
        ok,
        format!(
            "{} nodes; mult(lambda)={at_lambda}; orphans={orphans}; broken chains={broken}; \
             extremal {}/{} expected, {} unmatched; injectivity {} pairs, {} violations",
            g8.len(),
            scan.extremal.len(),
            scan.expected.len(),
            scan.unmatched.len(),
            inj.pairs,
            inj.violations.len()
        ),
    )
}

fn criterion_4(g8: &BigGraph) -> Outcome {
    from_checks(&operator_checks(g8))
}

fn criterion_5() -> Outcome {
    let g6 = graph(3, 3, 6);
    let cfg = VerifyConfig {
        depth: 6,
        similarity_factors: vec![2, 3],
        diagram: (2, 2),
        ..Default::default()
    };
    from_checks(&similarity_checks(&g6, &cfg))
}

fn criterion_6() -> Outcome {
    let cm = CartanMatrix::new(3, 3).unwrap();
    let cfg = VerifyConfig {
        word_bound: 8,
        ..Default::default()
    };
    match order_checks::<num_bigint::BigInt>(cm, &cfg) {
        Ok(checks) => from_checks(&checks),
        Err(e) => outcome(false, e.to_string()),
    }
}

fn criterion_7() -> Outcome {
    let run = || {
        let g = graph(3, 3, 5);
        (to_json(&g), to_dot(&g))
    };
    let first = run();
    let same = (0..3).all(|_| run() == first);
    outcome(
        same,
        format!(
            "{} JSON bytes, {} DOT bytes, 4 runs",
            first.0.len(),
            first.1.len()
        ),
    )
}

fn main() -> ExitCode {
    // libtest flags (e.g. `--quiet`, filters) are accepted and ignored.
    let mut all = true;
    let mut report = |n: u32, limit: Option<Duration>, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let mut o = f();
        let took = start.elapsed();
        if let Some(limit) = limit {
            if took > limit {
                o.passed = false;
                o.detail = format!("over time limit {:?}; {}", limit, o.detail);
            }
        }
        all &= o.passed;
        println!(
            "criterion {n}: {} ({:.2}s) {}",
            if o.passed { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            o.detail
        );
    };
    report(1, Some(Duration::from_secs(1)), &mut criterion_1);
    report(2, Some(Duration::from_secs(1)), &mut criterion_2);
    let start = Instant::now();
    let g8 = graph(3, 3, 8);
    let explore_time = start.elapsed();
    report(
        3,
        Some(Duration::from_secs(60).saturating_sub(explore_time)),
        &mut || criterion_3(&g8),
    );
    report(4, None, &mut || criterion_4(&g8));
    report(5, Some(Duration::from_secs(120)), &mut criterion_5);
    report(6, None, &mut criterion_6);
    report(7, None, &mut criterion_7);
    println!(
        "explore depth 8: {} nodes in {:.2}s",
        g8.len(),
        explore_time.as_secs_f64()
    );
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
