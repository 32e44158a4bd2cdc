//! Bounded breadth-first exploration of a path crystal, weight tallies, and
//! the structural scans run on explored graphs.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use rayon::prelude::*;

use crate::cartan::{CartanMatrix, SimpleIndex, Weight};
use crate::crystal::{is_extremal_bounded, CrystalElem};
use crate::error::{Error, Result};
use crate::order::{OrbitOrder, OrderConfig};
use crate::path::LsPath;
use crate::scalar::Scalar;
use crate::weyl::{act, WeylGroup, WeylWord};

/// Number of explored nodes re-validated against the LS conditions per run.
pub const DEFAULT_AUDIT_SAMPLE: usize = 24;

/// An `f_i`-arrow `src -> dst` (so `e_i` maps `dst` back to `src`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub src: usize,
    pub i: SimpleIndex,
    pub dst: usize,
}

/// The part of `B(mu)` within a given operator radius of a seed path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalGraph<T: Scalar> {
    pub cartan: CartanMatrix,
    pub shape: Weight<T>,
    pub seed: LsPath<T>,
    pub depth: u32,
    /// Sorted by canonical text form; a node's id is its position.
    pub nodes: Vec<LsPath<T>>,
    /// Sorted.
    pub edges: Vec<Edge>,
    pub weight_tally: BTreeMap<Weight<T>, usize>,
}

fn neighbors<T: Scalar>(p: &LsPath<T>) -> Vec<LsPath<T>> {
    let mut out = Vec::with_capacity(4);
    for i in SimpleIndex::ALL {
        out.extend(p.lower(i));
        out.extend(p.raise(i));
    }
    out
}

/// Explores everything within `depth` raising/lowering moves of `seed`,
/// re-validating a sample of the result.
pub fn explore<T: Scalar>(seed: &LsPath<T>, depth: u32, cfg: &OrderConfig) -> Result<CrystalGraph<T>> {
    explore_with_audit(seed, depth, cfg, DEFAULT_AUDIT_SAMPLE)
}

pub fn explore_with_audit<T: Scalar>(
    seed: &LsPath<T>,
    depth: u32,
    cfg: &OrderConfig,
    audit_sample: usize,
) -> Result<CrystalGraph<T>> {
    let order = OrbitOrder::new(*seed.cartan(), *cfg)?;
    seed.validate(&order)?;

    let mut seen: HashSet<LsPath<T>> = HashSet::from([seed.clone()]);
    let mut frontier = vec![seed.clone()];
    for _ in 0..depth {
        if frontier.is_empty() {
            break;
        }
        let found: Vec<Vec<LsPath<T>>> = frontier.par_iter().map(neighbors).collect();
        let mut next = Vec::new();
        for p in found.into_iter().flatten() {
            if seen.insert(p.clone()) {
                next.push(p);
            }
        }
        frontier = next;
    }

    let mut keyed: Vec<(String, LsPath<T>)> = seen.into_iter().map(|p| (p.to_text(), p)).collect();
    keyed.par_sort_unstable_by(|a, b| a.0.cmp(&b.0));
    let nodes: Vec<LsPath<T>> = keyed.into_iter().map(|(_, p)| p).collect();
    let graph = assemble(*seed.cartan(), seed.shape().clone(), seed.clone(), depth, nodes);

    audit(&graph, &order, audit_sample)?;
    Ok(graph)
}

/// Builds edges and tallies for a node list already in canonical order.
pub(crate) fn assemble<T: Scalar>(
    cartan: CartanMatrix,
    shape: Weight<T>,
    seed: LsPath<T>,
    depth: u32,
    nodes: Vec<LsPath<T>>,
) -> CrystalGraph<T> {
    let index: HashMap<&LsPath<T>, usize> = nodes.iter().enumerate().map(|(k, p)| (p, k)).collect();
    let mut edges: Vec<Edge> = nodes
        .par_iter()
        .enumerate()
        .flat_map_iter(|(src, p)| {
            SimpleIndex::ALL
                .into_iter()
                .filter_map(|i| {
                    let dst = *index.get(&p.lower(i)?)?;
                    Some(Edge { src, i, dst })
                })
                .collect::<Vec<_>>()
        })
        .collect();
    edges.sort();
    let mut weight_tally = BTreeMap::new();
    for p in &nodes {
        *weight_tally.entry(p.wt()).or_insert(0) += 1;
    }
    drop(index);
    CrystalGraph {
        cartan,
        shape,
        seed,
        depth,
        nodes,
        edges,
        weight_tally,
    }
}

fn audit<T: Scalar>(g: &CrystalGraph<T>, order: &OrbitOrder<T>, sample: usize) -> Result<()> {
    if sample == 0 || g.nodes.is_empty() {
        return Ok(());
    }
    let stride = g.nodes.len().div_ceil(sample).max(1);
    g.nodes
        .par_iter()
        .step_by(stride)
        .try_for_each(|p| p.validate(order).map_err(|e| Error::Audit(format!("{p}: {e}"))))
}

/// How a node was first reached from the seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Parent {
    pub node: usize,
    pub i: SimpleIndex,
    /// `true` if the child is `f_i(parent)`, `false` if `e_i(parent)`.
    pub lowered: bool,
}

impl<T: Scalar> CrystalGraph<T> {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node_id(&self, p: &LsPath<T>) -> Option<usize> {
        let key = p.to_text();
        self.nodes.binary_search_by(|q| q.to_text().cmp(&key)).ok()
    }

    pub fn seed_id(&self) -> usize {
        self.node_id(&self.seed).expect("seed is a node")
    }

    /// BFS parents over the edge set, starting at the seed. `None` for the seed
    /// and for unreachable nodes.
    pub fn parentage(&self) -> Vec<Option<Parent>> {
        let n = self.nodes.len();
        let mut adj: Vec<Vec<(usize, SimpleIndex, bool)>> = vec![Vec::new(); n];
        for e in &self.edges {
            adj[e.src].push((e.dst, e.i, true));
            adj[e.dst].push((e.src, e.i, false));
        }
        let seed = self.seed_id();
        let mut parent = vec![None; n];
        let mut visited = vec![false; n];
        visited[seed] = true;
        let mut queue = VecDeque::from([seed]);
        while let Some(x) = queue.pop_front() {
            for &(y, i, lowered) in &adj[x] {
                if !visited[y] {
                    visited[y] = true;
                    parent[y] = Some(Parent { node: x, i, lowered });
                    queue.push_back(y);
                }
            }
        }
        parent
    }

    /// Every node has an operator path back to the seed.
    pub fn is_connected(&self) -> bool {
        let seed = self.seed_id();
        self.parentage()
            .iter()
            .enumerate()
            .all(|(k, p)| k == seed || p.is_some())
    }

    /// No operator leads outside the node set (true once a finite crystal is
    /// exhausted).
    pub fn is_closed(&self) -> bool {
        let set: HashSet<&LsPath<T>> = self.nodes.iter().collect();
        self.nodes
            .par_iter()
            .all(|p| neighbors(p).iter().all(|q| set.contains(q)))
    }
}

/// Exact weight tally over the explored nodes.
pub fn weight_multiplicities<T: Scalar>(g: &CrystalGraph<T>) -> BTreeMap<Weight<T>, usize> {
    let mut tally = BTreeMap::new();
    for p in &g.nodes {
        *tally.entry(p.wt()).or_insert(0) += 1;
    }
    tally
}

/// Result of [`extremal_scan`].
#[derive(Debug, Clone)]
pub struct ExtremalScan<T: Scalar> {
    /// Node ids passing the bounded extremality test.
    pub extremal: Vec<usize>,
    /// Extremal nodes identified as `S_w pi_mu`, with the word.
    pub matched: Vec<(usize, WeylWord)>,
    /// Extremal nodes not of the form `S_w pi_mu` for any enumerated `w`.
    pub unmatched: Vec<usize>,
    /// Straight paths `pi_{w mu}` with `l(w) <= bound` that are nodes.
    pub expected: Vec<usize>,
    pub word_bound: u32,
    _marker: std::marker::PhantomData<T>,
}

impl<T: Scalar> ExtremalScan<T> {
    /// Extremal nodes are exactly the orbit images present in the graph.
    pub fn passed(&self) -> bool {
        self.unmatched.is_empty() && self.extremal == self.expected
    }
}

/// Finds the nodes that pass [`is_extremal_bounded`] and matches them with
/// `S_w pi_mu` for words up to `word_bound`.
pub fn extremal_scan<T: Scalar>(g: &CrystalGraph<T>, word_bound: u32) -> ExtremalScan<T> {
    let group = WeylGroup::of(&g.cartan);
    let base = LsPath::highest(g.cartan, g.shape.clone());
    let images: HashMap<LsPath<T>, WeylWord> = group
        .words_up_to(word_bound)
        .into_iter()
        .rev()
        .filter_map(|w| Some((base.weyl_act(&w)?, w)))
        .collect();

    let extremal: Vec<usize> = (0..g.nodes.len())
        .into_par_iter()
        .filter(|&k| is_extremal_bounded(&g.nodes[k], word_bound))
        .collect();
    let mut matched = Vec::new();
    let mut unmatched = Vec::new();
    for &k in &extremal {
        match images.get(&g.nodes[k]) {
            Some(w) => matched.push((k, *w)),
            None => unmatched.push(k),
        }
    }
    let mut expected: Vec<usize> = group
        .words_up_to(word_bound)
        .iter()
        .map(|w| LsPath::straight(g.cartan, g.shape.clone(), act(&g.cartan, w, &g.shape)))
        .filter_map(|p| g.node_id(&p))
        .collect();
    expected.sort();
    expected.dedup();
    ExtremalScan {
        extremal,
        matched,
        unmatched,
        expected,
        word_bound,
        _marker: std::marker::PhantomData,
    }
}

/// Outcome of [`orbit_injectivity_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InjectivityReport {
    pub words: usize,
    pub pairs: usize,
    /// Pairs where `S_x pi_lambda = S_y pi_lambda` and `x lambda = y lambda` disagree.
    pub violations: Vec<(WeylWord, WeylWord)>,
    /// Pairs of distinct words with `x lambda = y lambda`.
    pub collisions: usize,
}

impl InjectivityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// For `lambda = Lambda_1 - Lambda_2`: `S_x pi_lambda = S_y pi_lambda` iff
/// `x lambda = y lambda`, over all word pairs up to `word_bound`.
pub fn orbit_injectivity_check<T: Scalar>(cm: &CartanMatrix, word_bound: u32) -> InjectivityReport {
    let lambda = Weight::<T>::lambda();
    let base = LsPath::highest(*cm, lambda.clone());
    let words = WeylGroup::of(cm).words_up_to(word_bound);
    let data: Vec<(Option<LsPath<T>>, Weight<T>)> = words
        .par_iter()
        .map(|w| (base.weyl_act(w), act(cm, w, &lambda)))
        .collect();
    let mut violations = Vec::new();
    let mut pairs = 0;
    let mut collisions = 0;
    for a in 0..words.len() {
        for b in a + 1..words.len() {
            pairs += 1;
            let same_path = data[a].0.is_some() && data[a].0 == data[b].0;
            let same_weight = data[a].1 == data[b].1;
            if same_weight {
                collisions += 1;
            }
            if same_path != same_weight {
                violations.push((words[a], words[b]));
            }
        }
    }
    InjectivityReport {
        words: words.len(),
        pairs,
        violations,
        collisions,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type W = Weight<BigInt>;

    fn seed(a1: u32, a2: u32) -> LsPath<BigInt> {
        LsPath::highest(CartanMatrix::new(a1, a2).unwrap(), W::lambda())
    }

    #[test]
    fn finite_a2_has_three_nodes() {
        let g = explore(&seed(1, 1), 6, &OrderConfig::default()).unwrap();
        assert_eq!(g.len(), 3);
        assert!(g.weight_tally.values().all(|&c| c == 1));
        assert!(g.is_closed());
        let scan = extremal_scan(&g, 6);
        assert_eq!(scan.extremal.len(), 3);
        assert!(scan.passed());
    }

    #[test]
    fn a1_times_a1_has_four_nodes() {
        let g = explore(&seed(0, 0), 4, &OrderConfig::default()).unwrap();
        assert_eq!(g.len(), 4);
        assert_eq!(g.edges.len(), 4);
        assert!(g.is_closed());
    }

    #[test]
    fn depth_zero_and_one() {
        let g = explore(&seed(3, 3), 0, &OrderConfig::default()).unwrap();
        assert_eq!(g.len(), 1);
        assert!(g.edges.is_empty());
        assert_eq!(weight_multiplicities(&g)[&W::lambda()], 1);
        assert_eq!(extremal_scan(&g, 4).extremal, vec![0]);

        let g = explore(&seed(3, 3), 1, &OrderConfig::default()).unwrap();
        assert_eq!(g.len(), 3);
        assert_eq!(g.edges.len(), 2);
        assert!(g.is_connected());
    }

    #[test]
    fn edges_are_biconditional() {
        let g = explore(&seed(3, 3), 4, &OrderConfig::default()).unwrap();
        for e in &g.edges {
            assert_eq!(g.nodes[e.src].lower(e.i).as_ref(), Some(&g.nodes[e.dst]));
            assert_eq!(g.nodes[e.dst].raise(e.i).as_ref(), Some(&g.nodes[e.src]));
        }
        assert_eq!(g.weight_tally, weight_multiplicities(&g));
    }

    #[test]
    fn hyperbolic_extremal_scan() {
        let g = explore(&seed(3, 3), 4, &OrderConfig::default()).unwrap();
        let scan = extremal_scan(&g, 4);
        assert!(scan.passed());
        assert!(scan.extremal.iter().all(|&k| g.nodes[k].is_straight()));
    }

    #[test]
    fn injectivity() {
        let c = CartanMatrix::new(3, 3).unwrap();
        assert!(orbit_injectivity_check::<BigInt>(&c, 5).passed());
        assert!(orbit_injectivity_check::<BigInt>(&c, 0).passed());
        let r = orbit_injectivity_check::<BigInt>(&CartanMatrix::new(0, 0).unwrap(), 3);
        assert!(r.passed());
        assert_eq!(r.words, 4);
    }

    #[test]
    fn rejects_invalid_seed() {
        let c = CartanMatrix::new(3, 3).unwrap();
        let bad = LsPath::straight(c, W::lambda(), W::from_ints(0, 1));
        assert!(explore(&bad, 2, &OrderConfig::default()).is_err());
    }
}
