//! Verification suites run from the command line and the acceptance tests.
//!
//! Every suite explores (or enumerates) a bounded piece of the crystal for
//! `lambda = Lambda_1 - Lambda_2` and returns a [`Report`] with one entry per
//! property; a suite passes when every entry does.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::cartan::{CartanMatrix, SimpleIndex, Weight};
use crate::crystal::{CrystalElem, TensorElem};
use crate::error::{Error, Result};
use crate::explorer::{explore, extremal_scan, orbit_injectivity_check, CrystalGraph};
use crate::order::{ChainStep, OrbitOrder, OrderConfig};
use crate::path::{check_path_axioms, LsPath};
use crate::scalar::{Frac, Scalar};
use crate::similarity::{check_diagram, check_dilation_commutes, check_similarity};
use crate::similarity::{sigma_m, split};
use crate::weyl::{act, orbit, WeylGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Operators,
    Order,
    Extremal,
    Similarity,
    All,
}

impl Suite {
    pub const EACH: [Suite; 4] = [Suite::Operators, Suite::Order, Suite::Extremal, Suite::Similarity];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Operators => "operators",
            Suite::Order => "order",
            Suite::Extremal => "extremal",
            Suite::Similarity => "similarity",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            Suite::Operators,
            Suite::Order,
            Suite::Extremal,
            Suite::Similarity,
            Suite::All,
        ]
        .into_iter()
        .find(|x| x.name() == s)
        .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Exploration radius around `pi_lambda`.
    pub depth: u32,
    /// Word-length bound for extremality, injectivity and the orbit used by
    /// the order suite.
    pub word_bound: u32,
    pub order: OrderConfig,
    pub similarity_factors: Vec<u32>,
    pub diagram: (u32, u32),
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            depth: 6,
            word_bound: 6,
            order: OrderConfig::default(),
            similarity_factors: vec![2, 3],
            diagram: (2, 2),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Counts on success, the first few counterexamples on failure.
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }

    fn from_failures(name: &str, total: usize, failures: &[String]) -> Self {
        let detail = if failures.is_empty() {
            format!("{total} checked")
        } else {
            let shown: Vec<&str> = failures.iter().take(3).map(String::as_str).collect();
            format!("{} of {total} failed: {}", failures.len(), shown.join("; "))
        };
        Check::new(name, failures.is_empty(), detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub cartan: CartanMatrix,
    pub suite: Suite,
    pub depth: u32,
    pub word_bound: u32,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite={} cartan=({},{}) depth={} word_bound={}",
            self.suite.name(),
            self.cartan.a1(),
            self.cartan.a2(),
            self.depth,
            self.word_bound
        )?;
        for c in &self.checks {
            writeln!(
                f,
                "[{}] {}: {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.detail
            )?;
        }
        write!(f, "{}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

fn explore_lambda<T: Scalar>(cm: CartanMatrix, cfg: &VerifyConfig) -> Result<CrystalGraph<T>> {
    explore(&LsPath::highest(cm, Weight::lambda()), cfg.depth, &cfg.order)
}

pub fn run<T: Scalar>(cm: CartanMatrix, suite: Suite, cfg: &VerifyConfig) -> Result<Report> {
    cfg.order.validate()?;
    let needs_graph = suite != Suite::Order;
    let graph = if needs_graph {
        Some(explore_lambda::<T>(cm, cfg)?)
    } else {
        None
    };
    let mut checks = Vec::new();
    for s in Suite::EACH {
        if suite != Suite::All && suite != s {
            continue;
        }
        let part = match s {
            Suite::Operators => operator_checks(graph.as_ref().expect("explored")),
            Suite::Order => order_checks::<T>(cm, cfg)?,
            Suite::Extremal => extremal_checks(graph.as_ref().expect("explored"), cfg.word_bound),
            Suite::Similarity => similarity_checks(graph.as_ref().expect("explored"), cfg),
            Suite::All => unreachable!(),
        };
        checks.extend(part);
    }
    Ok(Report {
        cartan: cm,
        suite,
        depth: cfg.depth,
        word_bound: cfg.word_bound,
        checks,
    })
}

/// Path axioms on every node plus graph-level properties.
pub fn operator_checks<T: Scalar>(g: &CrystalGraph<T>) -> Vec<Check> {
    let axioms: Vec<String> = g
        .nodes
        .par_iter()
        .filter_map(|p| check_path_axioms(p).err().map(|e| format!("{p}: {e}")))
        .collect();
    let edge_failures: Vec<String> = g
        .edges
        .iter()
        .filter(|e| {
            g.nodes[e.src].lower(e.i).as_ref() != Some(&g.nodes[e.dst])
                || g.nodes[e.dst].raise(e.i).as_ref() != Some(&g.nodes[e.src])
        })
        .map(|e| format!("{} -{}-> {}", e.src, e.i, e.dst))
        .collect();
    let weyl: Vec<String> = g
        .nodes
        .par_iter()
        .filter_map(|p| weyl_action_failure(p).map(|e| format!("{p}: {e}")))
        .collect();
    let at_shape = g.weight_tally.get(&g.shape).copied().unwrap_or(0);
    let mut checks = vec![
        Check::from_failures("operator axioms", g.len(), &axioms),
        Check::from_failures("edge biconditional", g.edges.len(), &edge_failures),
        Check::from_failures(
            &format!("S_i^2 = id and wt(S_w pi) = w wt(pi), l(w) <= {WEYL_CHECK_LENGTH}"),
            g.len(),
            &weyl,
        ),
        Check::new(
            "multiplicity at the shape weight is 1",
            at_shape == 1,
            format!("count {at_shape}"),
        ),
        Check::new(
            "parentage to the seed",
            g.is_connected(),
            format!("{} nodes", g.len()),
        ),
    ];
    if g.cartan.coxeter_number().is_some() {
        checks.push(Check::new(
            "finite type closes",
            g.is_closed(),
            format!("{} nodes", g.len()),
        ));
    }
    checks
}

/// Word-length bound for the Weyl action checks in [`operator_checks`].
pub const WEYL_CHECK_LENGTH: u32 = 4;

fn weyl_action_failure<T: Scalar>(p: &LsPath<T>) -> Option<String> {
    let cm = *p.cartan();
    for i in SimpleIndex::ALL {
        let once = p.reflect_action(i)?;
        if once.reflect_action(i).as_ref() != Some(p) {
            return Some(format!("S_{i}^2 != id"));
        }
    }
    for w in WeylGroup::of(&cm).words_up_to(WEYL_CHECK_LENGTH) {
        match p.weyl_act(&w) {
            Some(q) if q.wt() == act(&cm, &w, &p.wt()) => {}
            Some(_) => return Some(format!("wt(S_{w} pi) != {w} wt(pi)")),
            None => return Some(format!("S_{w} undefined")),
        }
    }
    None
}

pub fn extremal_checks<T: Scalar>(g: &CrystalGraph<T>, word_bound: u32) -> Vec<Check> {
    let scan = extremal_scan(g, word_bound);
    let inj = orbit_injectivity_check::<T>(&g.cartan, word_bound);
    vec![
        Check::new(
            "extremal nodes are exactly the orbit paths present",
            scan.passed(),
            format!(
                "{} extremal, {} expected, {} unmatched",
                scan.extremal.len(),
                scan.expected.len(),
                scan.unmatched.len()
            ),
        ),
        Check::new(
            "S_x pi = S_y pi iff x lambda = y lambda",
            inj.passed(),
            format!(
                "{} pairs, {} weight collisions, {} violations",
                inj.pairs,
                inj.collisions,
                inj.violations.len()
            ),
        ),
    ]
}

pub fn similarity_checks<T: Scalar>(g: &CrystalGraph<T>, cfg: &VerifyConfig) -> Vec<Check> {
    let mut checks = Vec::new();
    for &m in &cfg.similarity_factors {
        let failures: Vec<String> = g
            .nodes
            .par_iter()
            .flat_map_iter(|p| {
                let r = check_similarity(p, m);
                r.failures()
                    .map(|c| format!("{}: {}", r.path, c.name))
                    .collect::<Vec<_>>()
            })
            .collect();
        checks.push(Check::from_failures(
            &format!("Sigma_{m} identities"),
            g.len(),
            &failures,
        ));
        let dil: Vec<String> = g
            .nodes
            .par_iter()
            .filter(|p| !check_dilation_commutes(*p, m))
            .map(|p| p.to_text())
            .collect();
        checks.push(Check::from_failures(
            &format!("dilation by {m} commutes"),
            g.len(),
            &dil,
        ));

        let images: HashSet<TensorElem<LsPath<T>>> = g.nodes.par_iter().map(|p| sigma_m(p, m)).collect();
        checks.push(Check::new(
            format!("Sigma_{m} injective"),
            images.len() == g.len(),
            format!("{} nodes, {} distinct images", g.len(), images.len()),
        ));

        let locality: Vec<String> = g
            .nodes
            .par_iter()
            .filter_map(|p| concatenation_failure(p, m).map(|e| format!("{p}: {e}")))
            .collect();
        checks.push(Check::from_failures(
            &format!("operators on {m}-fold concatenations are local and match the profile route"),
            g.len(),
            &locality,
        ));
    }
    let (m, n) = cfg.diagram;
    let diag: Vec<String> = g
        .nodes
        .par_iter()
        .filter(|p| !check_diagram(*p, m, n))
        .map(|p| p.to_text())
        .collect();
    checks.push(Check::from_failures(
        &format!("diagram ({m},{n}) commutes"),
        g.len(),
        &diag,
    ));
    checks
}

/// On `split(dilate(pi, m), m)`: each operator changes exactly one piece, and
/// the tensor-transported result equals the one computed from the profile of
/// the whole path.
fn concatenation_failure<T: Scalar>(p: &LsPath<T>, m: u32) -> Option<String> {
    let c = match split(&crate::similarity::dilate(p, m), m) {
        Ok(c) => c,
        Err(e) => return Some(e.to_string()),
    };
    for i in SimpleIndex::ALL {
        let pairs = [
            (c.raise(i), c.raise_by_profile(i), "e"),
            (c.lower(i), c.lower_by_profile(i), "f"),
        ];
        for (via_tensor, via_profile, op) in pairs {
            if via_tensor != via_profile {
                return Some(format!("{op}_{i}: tensor and profile routes differ"));
            }
            if let Some(next) = via_tensor {
                let changed = c
                    .pieces()
                    .iter()
                    .zip(next.pieces())
                    .filter(|(a, b)| a != b)
                    .count();
                if changed != 1 {
                    return Some(format!("{op}_{i} changed {changed} pieces"));
                }
            }
        }
    }
    None
}

/// Re-checks a sigma-chain certificate using `order` for the distance tests.
pub fn verify_certificate<T: Scalar>(
    order: &OrbitOrder<T>,
    sigma: &Frac<T>,
    nu: &Weight<T>,
    nu_prime: &Weight<T>,
    chain: &[ChainStep<T>],
) -> std::result::Result<(), String> {
    let cm = order.cartan();
    let mut at = nu.clone();
    for (k, step) in chain.iter().enumerate() {
        if step.from != at {
            return Err(format!("step {k} starts at {} not {at}", step.from));
        }
        let pair = step.root.pair(&step.from);
        if pair >= T::zero() {
            return Err(format!("step {k}: pairing {pair} is not negative"));
        }
        if step.root.reflect(&step.from) != step.to {
            return Err(format!("step {k}: target is not the reflection"));
        }
        if crate::weyl::act(cm, &step.root.reflection_word, &step.from) != step.to {
            return Err(format!("step {k}: reflection word disagrees with the root"));
        }
        if !(sigma.clone() * Frac::from_integer(pair)).is_integer() {
            return Err(format!("step {k}: sigma times pairing is not an integer"));
        }
        if order.dist(&step.from, &step.to) != Ok(1) {
            return Err(format!("step {k}: dist {} -> {} is not 1", step.from, step.to));
        }
        at = step.to.clone();
    }
    if at != *nu_prime {
        return Err(format!("chain ends at {at} not {nu_prime}"));
    }
    Ok(())
}

/// Candidate `sigma` values for a pair: every `k/d` in `(0,1)` with `d` up to
/// `max_den`.
fn sigma_grid<T: Scalar>(max_den: i64) -> Vec<Frac<T>> {
    let mut out: Vec<Frac<T>> = (2..=max_den)
        .flat_map(|d| (1..d).map(move |k| Frac::new(T::from_int(k), T::from_int(d))))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Antisymmetry, transitivity, monotonicity under larger bounds, and
/// certificate re-verification on the orbit of `lambda` up to `word_bound`.
pub fn order_checks<T: Scalar>(cm: CartanMatrix, cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let small = OrbitOrder::<T>::new(cm, cfg.order)?;
    let wider = OrderConfig {
        max_reflection_length: cfg.order.max_reflection_length + 4,
        max_chain_length: cfg.order.max_chain_length + 4,
        max_orbit_length: cfg.order.max_orbit_length,
    };
    let large = OrbitOrder::<T>::new(cm, wider)?;
    let orb = orbit(&cm, &Weight::lambda(), cfg.word_bound);
    let shortcut = small.length_shortcut_disagreements(
        &orb.points
            .iter()
            .map(|(w, mu)| (*w, mu.clone()))
            .collect::<Vec<_>>(),
    );
    let points: Vec<Weight<T>> = {
        let mut v: Vec<Weight<T>> = orb.weights().cloned().collect();
        v.sort();
        v.dedup();
        v
    };
    let n = points.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
    let ge: Vec<bool> = pairs
        .par_iter()
        .map(|&(a, b)| small.greater_equal(&points[a], &points[b]))
        .collect();
    let ge_large: Vec<bool> = pairs
        .par_iter()
        .map(|&(a, b)| large.greater_equal(&points[a], &points[b]))
        .collect();
    let rel = |a: usize, b: usize| ge[a * n + b];

    let mut reflexive = Vec::new();
    let mut antisym = Vec::new();
    for a in 0..n {
        if !rel(a, a) {
            reflexive.push(points[a].to_string());
        }
        for b in a + 1..n {
            if rel(a, b) && rel(b, a) {
                antisym.push(format!("{} ~ {}", points[a], points[b]));
            }
        }
    }
    let trans: Vec<String> = (0..n)
        .into_par_iter()
        .flat_map_iter(|a| {
            let mut bad = Vec::new();
            for b in (0..n).filter(|&b| rel(a, b)) {
                for c in (0..n).filter(|&c| rel(b, c)) {
                    if !rel(a, c) {
                        bad.push(format!("{} >= {} >= {}", points[a], points[b], points[c]));
                    }
                }
            }
            bad
        })
        .collect();
    let monotone: Vec<String> = pairs
        .iter()
        .enumerate()
        .filter(|&(k, _)| ge[k] && !ge_large[k])
        .map(|(_, &(a, b))| format!("{} >= {}", points[a], points[b]))
        .collect();
    let dist_monotone: Vec<String> = pairs
        .par_iter()
        .enumerate()
        .filter(|&(k, &(a, b))| {
            ge[k]
                && a != b
                && large.dist(&points[a], &points[b]).ok() < small.dist(&points[a], &points[b]).ok()
        })
        .map(|(_, &(a, b))| format!("dist {} -> {}", points[a], points[b]))
        .collect();

    // Certificates: search with `small`, re-verify with a fresh oracle so no
    // memoized distance is reused.
    let checker = OrbitOrder::<T>::new(cm, cfg.order)?;
    let grid = sigma_grid::<T>(6);
    let strict: Vec<(usize, usize)> = pairs
        .iter()
        .copied()
        .filter(|&(a, b)| a != b && rel(a, b))
        .collect();
    let cert_results: Vec<(usize, Vec<String>)> = strict
        .par_iter()
        .map(|&(a, b)| {
            let mut found = 0;
            let mut bad = Vec::new();
            for sigma in &grid {
                match small.sigma_chain(sigma, &points[a], &points[b]) {
                    Ok(Some(chain)) => {
                        found += 1;
                        if let Err(e) = verify_certificate(&checker, sigma, &points[a], &points[b], &chain) {
                            bad.push(format!("{} > {} at {sigma}: {e}", points[a], points[b]));
                        }
                    }
                    Ok(None) => {}
                    Err(e) => bad.push(format!("{} > {} at {sigma}: {e}", points[a], points[b])),
                }
            }
            (found, bad)
        })
        .collect();
    let certificates: usize = cert_results.iter().map(|r| r.0).sum();
    let cert_bad: Vec<String> = cert_results.into_iter().flat_map(|r| r.1).collect();

    let size = format!("{n} orbit points");
    Ok(vec![
        Check::from_failures(&format!("reflexive ({size})"), n, &reflexive),
        Check::from_failures("antisymmetric", n * (n - 1) / 2, &antisym),
        Check::from_failures("transitive", strict.len(), &trans),
        Check::from_failures("monotone under larger bounds", strict.len(), &monotone),
        Check::from_failures(
            "dist non-decreasing under larger bounds",
            strict.len(),
            &dist_monotone,
        ),
        Check::from_failures(
            &format!("sigma-chain certificates ({certificates} found)"),
            certificates,
            &cert_bad,
        ),
        // Logged only: the shortcut is a conjecture, not part of the definition.
        Check::new(
            "signed-length shortcut (informational)",
            true,
            format!("{} of {} pairs disagree", shortcut.len(), n * n),
        ),
    ])
}
