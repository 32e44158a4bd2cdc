//! The crystal-element contract, tensor products, the Weyl group action on
//! normal crystals, and bounded extremality.

use num_traits::{Signed, ToPrimitive, Zero};

use crate::cartan::{CartanMatrix, SimpleIndex, Weight};
use crate::scalar::Scalar;
use crate::weyl::{WeylGroup, WeylWord};

/// An element of a normal crystal.
///
/// `phi_i - epsilon_i = <wt, alpha_i^vee>` is expected of every implementor.
pub trait CrystalElem: Clone + PartialEq + Sized {
    type Scalar: Scalar;

    fn cartan(&self) -> CartanMatrix;
    fn wt(&self) -> Weight<Self::Scalar>;
    fn epsilon(&self, i: SimpleIndex) -> Self::Scalar;
    fn phi(&self, i: SimpleIndex) -> Self::Scalar;
    fn raise(&self, i: SimpleIndex) -> Option<Self>;
    fn lower(&self, i: SimpleIndex) -> Option<Self>;

    fn raise_n(&self, i: SimpleIndex, n: usize) -> Option<Self> {
        let mut cur = self.clone();
        for _ in 0..n {
            cur = cur.raise(i)?;
        }
        Some(cur)
    }

    fn lower_n(&self, i: SimpleIndex, n: usize) -> Option<Self> {
        let mut cur = self.clone();
        for _ in 0..n {
            cur = cur.lower(i)?;
        }
        Some(cur)
    }

    /// `max { n : e_i^n b != 0 }` by repeated application.
    fn epsilon_by_count(&self, i: SimpleIndex) -> usize {
        let mut n = 0;
        let mut cur = self.clone();
        while let Some(next) = cur.raise(i) {
            cur = next;
            n += 1;
        }
        n
    }

    fn phi_by_count(&self, i: SimpleIndex) -> usize {
        let mut n = 0;
        let mut cur = self.clone();
        while let Some(next) = cur.lower(i) {
            cur = next;
            n += 1;
        }
        n
    }

    /// `S_i`: `f_i^k` if `k = <wt, alpha_i^vee> >= 0`, else `e_i^{-k}`.
    /// `None` only if the element is not normal.
    fn reflect_action(&self, i: SimpleIndex) -> Option<Self> {
        let k = self.wt().coord(i).clone();
        let steps = k.abs().to_usize()?;
        if k.is_negative() {
            self.raise_n(i, steps)
        } else {
            self.lower_n(i, steps)
        }
    }

    /// `S_w = S_{i_1} ... S_{i_k}` for `w = r_{i_1} ... r_{i_k}`.
    fn weyl_act(&self, w: &WeylWord) -> Option<Self> {
        let mut cur = self.clone();
        for i in w.letters().into_iter().rev() {
            cur = cur.reflect_action(i)?;
        }
        Some(cur)
    }
}

/// `b1 (x) b2` under the tensor product rule: `e_i` acts on `b1` iff
/// `phi_i(b1) >= epsilon_i(b2)`, `f_i` acts on `b1` iff `phi_i(b1) > epsilon_i(b2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TensorPair<A, B>(pub A, pub B);

impl<A, B> CrystalElem for TensorPair<A, B>
where
    A: CrystalElem,
    B: CrystalElem<Scalar = A::Scalar>,
{
    type Scalar = A::Scalar;

    fn cartan(&self) -> CartanMatrix {
        self.0.cartan()
    }

    fn wt(&self) -> Weight<A::Scalar> {
        self.0.wt() + self.1.wt()
    }

    fn epsilon(&self, i: SimpleIndex) -> A::Scalar {
        let shifted = self.1.epsilon(i) - self.0.wt().coord(i).clone();
        std::cmp::max(self.0.epsilon(i), shifted)
    }

    fn phi(&self, i: SimpleIndex) -> A::Scalar {
        let shifted = self.0.phi(i) + self.1.wt().coord(i).clone();
        std::cmp::max(self.1.phi(i), shifted)
    }

    fn raise(&self, i: SimpleIndex) -> Option<Self> {
        if self.0.phi(i) >= self.1.epsilon(i) {
            Some(TensorPair(self.0.raise(i)?, self.1.clone()))
        } else {
            Some(TensorPair(self.0.clone(), self.1.raise(i)?))
        }
    }

    fn lower(&self, i: SimpleIndex) -> Option<Self> {
        if self.0.phi(i) > self.1.epsilon(i) {
            Some(TensorPair(self.0.lower(i)?, self.1.clone()))
        } else {
            Some(TensorPair(self.0.clone(), self.1.lower(i)?))
        }
    }
}

/// `b_1 (x) ... (x) b_m`, bracketed from the left: `((b_1 (x) b_2) (x) b_3) ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TensorElem<E> {
    factors: Vec<E>,
}

impl<E: CrystalElem> TensorElem<E> {
    pub fn new(factors: Vec<E>) -> Self {
        assert!(!factors.is_empty(), "a tensor needs at least one factor");
        TensorElem { factors }
    }

    pub fn power(b: &E, m: usize) -> Self {
        TensorElem::new(vec![b.clone(); m])
    }

    pub fn factors(&self) -> &[E] {
        &self.factors
    }

    pub fn into_factors(self) -> Vec<E> {
        self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// `(epsilon_i, phi_i, <wt, alpha_i^vee>)` of every left prefix `b_1 (x) ... (x) b_k`.
    fn prefix_data(&self, i: SimpleIndex) -> Vec<(E::Scalar, E::Scalar, E::Scalar)> {
        let mut out: Vec<(E::Scalar, E::Scalar, E::Scalar)> = Vec::with_capacity(self.factors.len());
        for b in &self.factors {
            let (e, p, w) = (b.epsilon(i), b.phi(i), b.wt().coord(i).clone());
            let next = match out.last() {
                None => (e, p, w),
                Some((le, lp, lw)) => {
                    let (le, lp, lw) = (le.clone(), lp.clone(), lw.clone());
                    let eps = std::cmp::max(le, e - lw.clone());
                    let phi = std::cmp::max(p, lp + w.clone());
                    (eps, phi, lw + w)
                }
            };
            out.push(next);
        }
        out
    }

    /// Index of the factor the operator acts on, walking the left-bracketed
    /// binary rule from the outside in.
    fn acting_factor(&self, i: SimpleIndex, raising: bool) -> usize {
        let prefix = self.prefix_data(i);
        let mut k = self.factors.len() - 1;
        while k > 0 {
            let left_phi = &prefix[k - 1].1;
            let right_eps = self.factors[k].epsilon(i);
            let go_left = if raising {
                *left_phi >= right_eps
            } else {
                *left_phi > right_eps
            };
            if !go_left {
                return k;
            }
            k -= 1;
        }
        0
    }
}

impl<E: CrystalElem> CrystalElem for TensorElem<E> {
    type Scalar = E::Scalar;

    fn cartan(&self) -> CartanMatrix {
        self.factors[0].cartan()
    }

    fn wt(&self) -> Weight<E::Scalar> {
        self.factors
            .iter()
            .skip(1)
            .fold(self.factors[0].wt(), |acc, b| acc + b.wt())
    }

    fn epsilon(&self, i: SimpleIndex) -> E::Scalar {
        self.prefix_data(i).pop().expect("nonempty").0
    }

    fn phi(&self, i: SimpleIndex) -> E::Scalar {
        self.prefix_data(i).pop().expect("nonempty").1
    }

    fn raise(&self, i: SimpleIndex) -> Option<Self> {
        let k = self.acting_factor(i, true);
        let mut factors = self.factors.clone();
        factors[k] = factors[k].raise(i)?;
        Some(TensorElem { factors })
    }

    fn lower(&self, i: SimpleIndex) -> Option<Self> {
        let k = self.acting_factor(i, false);
        let mut factors = self.factors.clone();
        factors[k] = factors[k].lower(i)?;
        Some(TensorElem { factors })
    }
}

/// Checks extremality against every Weyl word of length at most
/// `max_word_length`: `e_i(S_w b) = 0` when `<wt(S_w b), alpha_i^vee> >= 0`, and
/// `f_i(S_w b) = 0` when it is `<= 0`.
pub fn is_extremal_bounded<E: CrystalElem>(b: &E, max_word_length: u32) -> bool {
    extremality_witness(b, max_word_length).is_none()
}

/// The first `(w, i)` violating extremality, if any.
pub fn extremality_witness<E: CrystalElem>(b: &E, max_word_length: u32) -> Option<(WeylWord, SimpleIndex)> {
    let group = WeylGroup::of(&b.cartan());
    let vanishes = |x: &E| -> Option<SimpleIndex> {
        for i in SimpleIndex::ALL {
            let k = x.wt().coord(i).clone();
            if !k.is_negative() && !x.epsilon(i).is_zero() {
                return Some(i);
            }
            if !k.is_positive() && !x.phi(i).is_zero() {
                return Some(i);
            }
        }
        None
    };
    if let Some(i) = vanishes(b) {
        return Some((WeylWord::Identity, i));
    }
    // S_w for alternating words sharing a rightmost letter is built incrementally.
    for start in SimpleIndex::ALL {
        let mut cur = b.clone();
        for len in 1..=max_word_length {
            let letter = if len % 2 == 1 { start } else { start.other() };
            let word = group.alternating(letter, len);
            if word.length() != len {
                break;
            }
            cur = match cur.reflect_action(letter) {
                Some(next) => next,
                None => return Some((word, letter)),
            };
            if let Some(i) = vanishes(&cur) {
                return Some((word, i));
            }
        }
    }
    None
}
