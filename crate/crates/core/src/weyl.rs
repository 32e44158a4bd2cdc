//! The rank-2 Weyl group: canonical alternating words, the action on weights,
//! positive real roots with their reflections, and orbit enumeration.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::cartan::{pairing, CartanMatrix, CorootVector, RootVector, SimpleIndex, Weight};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A Weyl group element as its alternating reduced word
/// `r_first r_other r_first ...` of length `len`.
///
/// Acting on a weight applies the rightmost letter first, so `r_first` acts last.
/// In finite type the longest element has two reduced words; the one starting
/// with `r_1` is canonical.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeylWord {
    Identity,
    Alt { first: SimpleIndex, len: u32 },
}

impl WeylWord {
    pub fn simple(i: SimpleIndex) -> Self {
        WeylWord::Alt { first: i, len: 1 }
    }

    pub fn length(&self) -> u32 {
        match self {
            WeylWord::Identity => 0,
            WeylWord::Alt { len, .. } => *len,
        }
    }

    pub fn first(&self) -> Option<SimpleIndex> {
        match self {
            WeylWord::Identity => None,
            WeylWord::Alt { first, .. } => Some(*first),
        }
    }

    /// Letters left to right.
    pub fn letters(&self) -> Vec<SimpleIndex> {
        match *self {
            WeylWord::Identity => Vec::new(),
            WeylWord::Alt { first, len } => (0..len)
                .map(|k| if k % 2 == 0 { first } else { first.other() })
                .collect(),
        }
    }

    /// Letter applied first when acting (the rightmost one).
    pub fn last(&self) -> Option<SimpleIndex> {
        match *self {
            WeylWord::Identity => None,
            WeylWord::Alt { first, len } => Some(if len % 2 == 1 { first } else { first.other() }),
        }
    }

    /// Parses `e` or a letter string such as `r1r2r1` (also accepts `121`).
    /// The result is only reduced, not folded; pass it through
    /// [`WeylGroup::from_letters`] for finite types.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "e" || s.is_empty() {
            return Ok(WeylWord::Identity);
        }
        let digits: String = s.chars().filter(|c| *c != 'r').collect();
        let mut letters = Vec::new();
        for c in digits.chars() {
            let d = c
                .to_digit(10)
                .ok_or_else(|| Error::Parse(format!("word `{s}`")))?;
            letters.push(SimpleIndex::try_from(d)?);
        }
        Ok(WeylGroup::infinite().from_letters(&letters))
    }

    fn sort_key(&self) -> (u32, u32) {
        (self.length(), self.first().map_or(0, SimpleIndex::number))
    }
}

impl Ord for WeylWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for WeylWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeylWord::Identity => write!(f, "e"),
            _ => {
                for l in self.letters() {
                    write!(f, "r{l}")?;
                }
                Ok(())
            }
        }
    }
}

/// Group structure (dihedral of order `2h`, or infinite dihedral).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeylGroup {
    coxeter: Option<u32>,
}

impl WeylGroup {
    pub fn of(cm: &CartanMatrix) -> Self {
        WeylGroup {
            coxeter: cm.coxeter_number(),
        }
    }

    pub fn infinite() -> Self {
        WeylGroup { coxeter: None }
    }

    pub fn is_finite(&self) -> bool {
        self.coxeter.is_some()
    }

    /// Number of elements, if finite.
    pub fn order(&self) -> Option<u32> {
        self.coxeter.map(|h| 2 * h)
    }

    /// Canonical form of the alternating word `(first, len)`.
    pub fn alternating(&self, first: SimpleIndex, len: u32) -> WeylWord {
        let Some(h) = self.coxeter else {
            return if len == 0 {
                WeylWord::Identity
            } else {
                WeylWord::Alt { first, len }
            };
        };
        // (r_a r_b)^h = e, so alternating words are periodic with period 2h.
        let n = len % (2 * h);
        if n == 0 {
            WeylWord::Identity
        } else if n < h {
            WeylWord::Alt { first, len: n }
        } else if n == h {
            WeylWord::Alt {
                first: SimpleIndex::One,
                len: h,
            }
        } else {
            // alt(first, n) is the inverse of the complementary word of length 2h - n
            // that continues the alternation; inverting reverses the letters.
            let k = 2 * h - n;
            let start = if n.is_multiple_of(2) { first } else { first.other() };
            let last_of_complement = if k % 2 == 1 { start } else { start.other() };
            WeylWord::Alt {
                first: last_of_complement,
                len: k,
            }
        }
    }

    /// Reduces an arbitrary letter sequence to canonical form.
    pub fn from_letters(&self, letters: &[SimpleIndex]) -> WeylWord {
        let mut stack: Vec<SimpleIndex> = Vec::with_capacity(letters.len());
        for &l in letters {
            if stack.last() == Some(&l) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        match stack.first() {
            None => WeylWord::Identity,
            Some(&first) => self.alternating(first, stack.len() as u32),
        }
    }

    pub fn compose(&self, x: &WeylWord, y: &WeylWord) -> WeylWord {
        let mut letters = x.letters();
        letters.extend(y.letters());
        self.from_letters(&letters)
    }

    pub fn inverse(&self, w: &WeylWord) -> WeylWord {
        let mut letters = w.letters();
        letters.reverse();
        self.from_letters(&letters)
    }

    /// All distinct group elements of length at most `max_len`, sorted by
    /// length then first letter.
    pub fn words_up_to(&self, max_len: u32) -> Vec<WeylWord> {
        let mut out = vec![WeylWord::Identity];
        let cap = self.coxeter.map_or(max_len, |h| max_len.min(h));
        for len in 1..=cap {
            for first in SimpleIndex::ALL {
                let w = self.alternating(first, len);
                if w.length() == len && !out.contains(&w) {
                    out.push(w);
                }
            }
        }
        out.sort();
        out
    }
}

/// Acts by `w` on a weight, rightmost letter first.
pub fn act<T: Scalar>(cm: &CartanMatrix, w: &WeylWord, mu: &Weight<T>) -> Weight<T> {
    w.letters()
        .iter()
        .rev()
        .fold(mu.clone(), |acc, &i| cm.reflect(i, &acc))
}

pub fn act_root<T: Scalar>(cm: &CartanMatrix, w: &WeylWord, beta: &RootVector<T>) -> RootVector<T> {
    w.letters()
        .iter()
        .rev()
        .fold(beta.clone(), |acc, &i| cm.reflect_root(i, &acc))
}

pub fn act_coroot<T: Scalar>(cm: &CartanMatrix, w: &WeylWord, h: &CorootVector<T>) -> CorootVector<T> {
    w.letters()
        .iter()
        .rev()
        .fold(h.clone(), |acc, &i| cm.reflect_coroot(i, &acc))
}

/// A positive real root `beta = w(alpha_i)` with its dual root and the
/// reflection `r_beta = w r_i w^{-1}` as a canonical word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RealRoot<T> {
    pub root: RootVector<T>,
    pub coroot: CorootVector<T>,
    pub reflection_word: WeylWord,
    root_weight: Weight<T>,
}

impl<T: Scalar> RealRoot<T> {
    /// `beta` in fundamental-weight coordinates.
    pub fn root_weight(&self) -> &Weight<T> {
        &self.root_weight
    }

    pub fn pair(&self, mu: &Weight<T>) -> T {
        pairing(mu, &self.coroot)
    }

    /// `r_beta mu = mu - <mu, beta^vee> beta`.
    pub fn reflect(&self, mu: &Weight<T>) -> Weight<T> {
        let c = self.pair(mu);
        mu.clone() - self.root_weight.scale(&c)
    }
}

/// Positive real roots whose reflections have canonical length at most
/// `max_reflection_length`, sorted by reflection length then first letter.
pub fn positive_real_roots<T: Scalar>(cm: &CartanMatrix, max_reflection_length: u32) -> Vec<RealRoot<T>> {
    let group = WeylGroup::of(cm);
    let mut out: Vec<RealRoot<T>> = Vec::new();
    let mut len = 1;
    while len <= max_reflection_length {
        for first in SimpleIndex::ALL {
            let word = group.alternating(first, len);
            if word.length() != len || out.iter().any(|r| r.reflection_word == word) {
                continue;
            }
            let k = (len - 1) / 2;
            let conj = group.alternating(first, k);
            let middle = if k % 2 == 0 { first } else { first.other() };
            let root = act_root(cm, &conj, &RootVector::simple(middle));
            let coroot = act_coroot(cm, &conj, &CorootVector::simple(middle));
            let root_weight = cm.root_to_weight(&root);
            out.push(RealRoot {
                root,
                coroot,
                reflection_word: word,
                root_weight,
            });
        }
        len += 2;
    }
    out.sort_by_key(|r| r.reflection_word);
    out
}

/// Two distinct words sending the base weight to the same point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Collision {
    pub word: WeylWord,
    pub earlier: WeylWord,
}

/// Bounded orbit `{w mu : l(w) <= bound}` keyed by the shortest word reaching
/// each distinct weight.
#[derive(Debug, Clone)]
pub struct Orbit<T> {
    pub points: BTreeMap<WeylWord, Weight<T>>,
    pub collisions: Vec<Collision>,
}

impl<T: Scalar> Orbit<T> {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn weights(&self) -> impl Iterator<Item = &Weight<T>> {
        self.points.values()
    }

    pub fn word_of(&self, mu: &Weight<T>) -> Option<WeylWord> {
        self.points.iter().find(|(_, v)| *v == mu).map(|(w, _)| *w)
    }
}

pub fn orbit<T: Scalar>(cm: &CartanMatrix, mu: &Weight<T>, max_word_length: u32) -> Orbit<T> {
    let group = WeylGroup::of(cm);
    let mut seen: HashMap<Weight<T>, WeylWord> = HashMap::new();
    let mut points = BTreeMap::new();
    let mut collisions = Vec::new();
    for w in group.words_up_to(max_word_length) {
        let image = act(cm, &w, mu);
        match seen.get(&image) {
            Some(earlier) => collisions.push(Collision {
                word: w,
                earlier: *earlier,
            }),
            None => {
                seen.insert(image.clone(), w);
                points.insert(w, image);
            }
        }
    }
    Orbit { points, collisions }
}

/// Searches for a word of length at most `max_word_length` with `w mu = target`.
pub fn orbit_word_of<T: Scalar>(
    cm: &CartanMatrix,
    mu: &Weight<T>,
    target: &Weight<T>,
    max_word_length: u32,
) -> Option<WeylWord> {
    if mu == target {
        return Some(WeylWord::Identity);
    }
    let group = WeylGroup::of(cm);
    let cap = group
        .coxeter
        .map_or(max_word_length, |h| max_word_length.min(2 * h));
    for start in SimpleIndex::ALL {
        let mut cur = mu.clone();
        for n in 1..=cap {
            let letter = if n % 2 == 1 { start } else { start.other() };
            cur = cm.reflect(letter, &cur);
            if &cur == target {
                return Some(group.alternating(letter, n));
            }
        }
    }
    None
}
