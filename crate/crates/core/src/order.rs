//! The order `nu >= nu'` on a Weyl orbit, the chain distance, and sigma-chains.
//!
//! The defining quantifiers range over every positive real root, so every
//! answer here is relative to an [`OrderConfig`]: reflections are drawn from a
//! bounded root pool and chains are bounded in length. A `false` means "not
//! found within bounds".
//!
//! Each step `xi -> r_beta xi` with `<xi, beta^vee> < 0` adds a positive
//! multiple of a positive root, so chains from `nu` to `nu'` stay inside the
//! interval `nu <= xi <= nu'` of the dominance order. The search prunes every
//! weight that leaves that interval, which keeps level sets small.

use std::collections::{HashMap, HashSet};
use std::sync::Mutex;

use num_traits::{Signed, Zero};

use crate::cartan::{CartanMatrix, SimpleIndex, Weight};
use crate::error::{Error, Result};
use crate::scalar::{Frac, Scalar};
use crate::weyl::{orbit_word_of, positive_real_roots, RealRoot, WeylWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OrderConfig {
    /// Root pool: reflections of canonical length up to this bound.
    pub max_reflection_length: u32,
    /// Longest chain searched.
    pub max_chain_length: u32,
    /// Word-length bound for orbit membership tests.
    pub max_orbit_length: u32,
}

impl Default for OrderConfig {
    fn default() -> Self {
        OrderConfig {
            max_reflection_length: 9,
            max_chain_length: 12,
            max_orbit_length: 24,
        }
    }
}

impl OrderConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_reflection_length == 0 {
            return Err(Error::InvalidConfig("max_reflection_length must be at least 1"));
        }
        if self.max_chain_length == 0 {
            return Err(Error::InvalidConfig("max_chain_length must be at least 1"));
        }
        Ok(())
    }
}

/// One reflection step of a chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainStep<T> {
    pub from: Weight<T>,
    pub root: RealRoot<T>,
    pub to: Weight<T>,
}

type DistMemo<T> = HashMap<(Weight<T>, Weight<T>), Option<u32>>;

/// Order oracle for one Cartan matrix and one configuration.
///
/// Distances are memoized behind a mutex, so one instance can be shared
/// across threads.
#[derive(Debug)]
pub struct OrbitOrder<T> {
    cm: CartanMatrix,
    cfg: OrderConfig,
    roots: Vec<RealRoot<T>>,
    memo: Mutex<DistMemo<T>>,
}

impl<T: Scalar> OrbitOrder<T> {
    pub fn new(cm: CartanMatrix, cfg: OrderConfig) -> Result<Self> {
        cfg.validate()?;
        let roots = positive_real_roots(&cm, cfg.max_reflection_length);
        Ok(OrbitOrder {
            cm,
            cfg,
            roots,
            memo: Mutex::new(HashMap::new()),
        })
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cm
    }

    pub fn config(&self) -> &OrderConfig {
        &self.cfg
    }

    pub fn roots(&self) -> &[RealRoot<T>] {
        &self.roots
    }

    /// All `(beta, r_beta xi)` with `beta` in the pool and `<xi, beta^vee> < 0`.
    pub fn step_candidates(&self, xi: &Weight<T>) -> Vec<(RealRoot<T>, Weight<T>)> {
        self.roots
            .iter()
            .filter(|r| r.pair(xi).is_negative())
            .map(|r| (r.clone(), r.reflect(xi)))
            .collect()
    }

    /// `upper - xi` lies in `Q_+`.
    fn below(&self, xi: &Weight<T>, upper: &Weight<T>) -> bool {
        self.cm
            .weight_to_root(&(upper.clone() - xi.clone()))
            .is_some_and(|r| r.is_nonnegative())
    }

    fn compute_dist(&self, nu: &Weight<T>, nu_prime: &Weight<T>) -> Option<u32> {
        if nu == nu_prime {
            return Some(0);
        }
        if !self.below(nu, nu_prime) {
            return None;
        }
        let mut best = None;
        let mut level: HashSet<Weight<T>> = HashSet::from([nu.clone()]);
        for k in 1..=self.cfg.max_chain_length {
            let mut next = HashSet::new();
            for xi in &level {
                for r in &self.roots {
                    if !r.pair(xi).is_negative() {
                        continue;
                    }
                    let to = r.reflect(xi);
                    if self.below(&to, nu_prime) {
                        next.insert(to);
                    }
                }
            }
            if next.contains(nu_prime) {
                best = Some(k);
            }
            if next.is_empty() {
                break;
            }
            level = next;
        }
        best
    }

    /// Longest admissible chain from `nu` down to `nu_prime` within bounds.
    pub fn dist(&self, nu: &Weight<T>, nu_prime: &Weight<T>) -> Result<u32> {
        let key = (nu.clone(), nu_prime.clone());
        if let Some(hit) = self.memo.lock().expect("memo poisoned").get(&key) {
            return hit.ok_or(Error::NotComparable);
        }
        let d = self.compute_dist(nu, nu_prime);
        self.memo.lock().expect("memo poisoned").insert(key, d);
        d.ok_or(Error::NotComparable)
    }

    pub fn greater_equal(&self, nu: &Weight<T>, nu_prime: &Weight<T>) -> bool {
        self.dist(nu, nu_prime).is_ok()
    }

    pub fn greater(&self, nu: &Weight<T>, nu_prime: &Weight<T>) -> bool {
        nu != nu_prime && self.greater_equal(nu, nu_prime)
    }

    /// A sigma-chain certificate for `(nu, nu')`, if one exists within bounds.
    pub fn sigma_chain(
        &self,
        sigma: &Frac<T>,
        nu: &Weight<T>,
        nu_prime: &Weight<T>,
    ) -> Result<Option<Vec<ChainStep<T>>>> {
        if !sigma.is_positive() || *sigma >= Frac::from_integer(T::one()) {
            return Err(Error::SigmaOutOfRange);
        }
        if !self.greater(nu, nu_prime) {
            return Err(Error::NotComparable);
        }
        let mut dead = HashSet::new();
        let mut chain = Vec::new();
        if self.extend_chain(sigma, nu, nu_prime, &mut chain, &mut dead) {
            Ok(Some(chain))
        } else {
            Ok(None)
        }
    }

    pub fn sigma_chain_exists(&self, sigma: &Frac<T>, nu: &Weight<T>, nu_prime: &Weight<T>) -> Result<bool> {
        self.sigma_chain(sigma, nu, nu_prime).map(|c| c.is_some())
    }

    fn extend_chain(
        &self,
        sigma: &Frac<T>,
        xi: &Weight<T>,
        target: &Weight<T>,
        chain: &mut Vec<ChainStep<T>>,
        dead: &mut HashSet<Weight<T>>,
    ) -> bool {
        if xi == target {
            return true;
        }
        if chain.len() as u32 >= self.cfg.max_chain_length || dead.contains(xi) {
            return false;
        }
        for (root, to) in self.step_candidates(xi) {
            if !self.below(&to, target) {
                continue;
            }
            let scaled = sigma.clone() * Frac::from_integer(root.pair(xi));
            if !scaled.is_integer() || scaled.is_zero() {
                continue;
            }
            if self.dist(xi, &to) != Ok(1) {
                continue;
            }
            chain.push(ChainStep {
                from: xi.clone(),
                root,
                to: to.clone(),
            });
            if self.extend_chain(sigma, &to, target, chain, dead) {
                return true;
            }
            chain.pop();
        }
        dead.insert(xi.clone());
        false
    }

    /// Bounded membership test for the orbit `W shape`.
    pub fn in_orbit(&self, shape: &Weight<T>, nu: &Weight<T>) -> bool {
        orbit_word_of(&self.cm, shape, nu, self.cfg.max_orbit_length).is_some()
    }

    /// Pairs of orbit points where the bounded order and [`signed_length`]
    /// disagree. Words must be the shortest ones reaching their points.
    ///
    /// Empirical cross-check only. On the orbit of `Lambda_1 - Lambda_2` the
    /// bounded order has so far always been the chain given by the signed
    /// length, except in type A1 x A1 where it is a product order. Nothing
    /// else in the crate relies on it.
    pub fn length_shortcut_disagreements(
        &self,
        points: &[(WeylWord, Weight<T>)],
    ) -> Vec<(WeylWord, WeylWord)> {
        let mut out = Vec::new();
        for (x, nx) in points {
            for (y, ny) in points {
                if self.greater_equal(nx, ny) != (signed_length(x) >= signed_length(y)) {
                    out.push((*x, *y));
                }
            }
        }
        out
    }
}

/// `l(w)` if the rightmost letter of `w` is `r_1`, `-l(w)` if it is `r_2`.
pub fn signed_length(w: &WeylWord) -> i64 {
    match w.last() {
        None => 0,
        Some(SimpleIndex::One) => w.length() as i64,
        Some(SimpleIndex::Two) => -(w.length() as i64),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::SimpleIndex;
    use crate::scalar::frac;
    use num_bigint::BigInt;

    type W = Weight<BigInt>;

    fn order(a1: u32, a2: u32, refl: u32, chain: u32) -> OrbitOrder<BigInt> {
        let cfg = OrderConfig {
            max_reflection_length: refl,
            max_chain_length: chain,
            ..Default::default()
        };
        OrbitOrder::new(CartanMatrix::new(a1, a2).unwrap(), cfg).unwrap()
    }

    #[test]
    fn step_candidate_examples() {
        let o = order(3, 3, 1, 12);
        let steps = o.step_candidates(&W::lambda());
        assert_eq!(steps.len(), 1);
        assert_eq!(steps[0].0.reflection_word.first(), Some(SimpleIndex::Two));
        assert_eq!(steps[0].1, W::from_ints(-2, 1));

        let steps = o.step_candidates(&W::from_ints(-1, 2));
        assert_eq!(steps.len(), 1);
        assert_eq!(steps[0].0.reflection_word.first(), Some(SimpleIndex::One));
        assert_eq!(steps[0].1, W::lambda());

        assert!(o.step_candidates(&W::zero()).is_empty());
    }

    #[test]
    fn comparisons() {
        let o = order(3, 3, 9, 12);
        assert!(o.greater_equal(&W::from_ints(-1, 2), &W::lambda()));
        assert!(o.greater_equal(&W::lambda(), &W::from_ints(-2, 1)));
        assert!(o.greater_equal(&W::lambda(), &W::lambda()));
        assert!(!o.greater_equal(&W::lambda(), &W::from_ints(-1, 2)));
    }

    #[test]
    fn distances() {
        let o = order(3, 3, 9, 12);
        assert_eq!(o.dist(&W::lambda(), &W::lambda()), Ok(0));
        assert_eq!(o.dist(&W::from_ints(-1, 2), &W::lambda()), Ok(1));
        assert_eq!(o.dist(&W::from_ints(5, -2), &W::from_ints(-1, 2)), Ok(1));
        assert_eq!(
            o.dist(&W::lambda(), &W::from_ints(5, -2)),
            Err(Error::NotComparable)
        );
    }

    #[test]
    fn sigma_chains() {
        let o = order(3, 3, 9, 12);
        let top = W::from_ints(5, -2);
        let mid = W::from_ints(-1, 2);
        assert_eq!(o.sigma_chain_exists(&frac(1, 2), &top, &mid), Ok(true));
        assert_eq!(o.sigma_chain_exists(&frac(1, 3), &top, &mid), Ok(false));
        assert_eq!(o.sigma_chain_exists(&frac(1, 2), &mid, &W::lambda()), Ok(false));
        assert_eq!(
            o.sigma_chain_exists(&frac(1, 2), &mid, &top),
            Err(Error::NotComparable)
        );
        assert_eq!(
            o.sigma_chain_exists(&frac(3, 2), &top, &mid),
            Err(Error::SigmaOutOfRange)
        );
    }

    #[test]
    fn rejects_empty_bounds() {
        let cfg = OrderConfig {
            max_chain_length: 0,
            ..Default::default()
        };
        assert!(OrbitOrder::<i64>::new(CartanMatrix::new(3, 3).unwrap(), cfg).is_err());
    }

    #[test]
    fn finite_a2_order_is_a_chain() {
        // For the orbit of Lambda_2 in A2: (-1,0) > (1,-1) > (0,1).
        let o = order(1, 1, 9, 12);
        let low = W::from_ints(-1, 0);
        let mid = W::lambda();
        let top = W::from_ints(0, 1);
        assert!(o.greater(&low, &mid) && o.greater(&mid, &top) && o.greater(&low, &top));
        assert_eq!(o.dist(&low, &top), Ok(2));
        assert_eq!(o.sigma_chain_exists(&frac(1, 2), &low, &top), Ok(false));
    }
}
