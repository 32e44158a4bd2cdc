//! Piecewise-linear paths `[0, 1] -> R (x) P` with rational breakpoints, and
//! the root operators defined through the height function
//! `H_i(t) = <pi(t), alpha_i^vee>`.
//!
//! Both LS paths and concatenations of LS paths are represented this way; the
//! operators only need the local minima of `H_i` to be integers.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::cartan::{CartanMatrix, SimpleIndex, Weight};
use crate::error::{Error, Result};
use crate::scalar::{fmt_frac, parse_frac, Frac, Scalar};

/// A point of `Q (x) P` in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QPoint<T: Scalar> {
    pub x1: Frac<T>,
    pub x2: Frac<T>,
}

impl<T: Scalar> QPoint<T> {
    pub fn zero() -> Self {
        QPoint {
            x1: Frac::zero(),
            x2: Frac::zero(),
        }
    }

    pub fn from_weight(w: &Weight<T>) -> Self {
        QPoint {
            x1: Frac::from_integer(w.m1.clone()),
            x2: Frac::from_integer(w.m2.clone()),
        }
    }

    /// `self + k * w`.
    pub fn add_scaled(&self, k: &Frac<T>, w: &Weight<T>) -> Self {
        QPoint {
            x1: self.x1.clone() + k.clone() * Frac::from_integer(w.m1.clone()),
            x2: self.x2.clone() + k.clone() * Frac::from_integer(w.m2.clone()),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        QPoint {
            x1: self.x1.clone() + other.x1.clone(),
            x2: self.x2.clone() + other.x2.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        QPoint {
            x1: self.x1.clone() - other.x1.clone(),
            x2: self.x2.clone() - other.x2.clone(),
        }
    }

    pub fn to_weight(&self) -> Option<Weight<T>> {
        if self.x1.is_integer() && self.x2.is_integer() {
            Some(Weight::new(self.x1.to_integer(), self.x2.to_integer()))
        } else {
            None
        }
    }
}

impl<T: Scalar> fmt::Display for QPoint<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", fmt_frac(&self.x1), fmt_frac(&self.x2))
    }
}

/// Corner values of `H_i` for one index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerProfile<T: Scalar> {
    /// `(cut, H_i(cut))` at every breakpoint, including 0 and 1.
    pub corners: Vec<(Frac<T>, Frac<T>)>,
    /// Minimum of `H_i` over `[0, 1]`; attained at a corner since `H_i` is affine
    /// on every segment.
    pub min: Frac<T>,
}

impl<T: Scalar> CornerProfile<T> {
    /// `m_i`, when integral (always, for LS paths).
    pub fn min_value(&self) -> Option<T> {
        self.min.is_integer().then(|| self.min.to_integer())
    }

    pub fn end_value(&self) -> &Frac<T> {
        &self.corners.last().expect("profile has corners").1
    }

    /// Values of every local minimum of `H_i`, plateaus counted once per corner.
    pub fn local_minima(&self) -> Vec<Frac<T>> {
        let h: Vec<&Frac<T>> = self.corners.iter().map(|(_, v)| v).collect();
        let n = h.len();
        (0..n)
            .filter(|&k| {
                let left_ok = k == 0 || h[k - 1] >= h[k];
                let right_ok = k + 1 == n || h[k + 1] >= h[k];
                left_ok && right_ok
            })
            .map(|k| h[k].clone())
            .collect()
    }
}

/// Canonical piecewise-linear path: directions `dirs[k]` on `[cuts[k], cuts[k+1]]`,
/// with `cuts` strictly increasing from 0 to 1 and no two consecutive equal
/// directions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlPath<T: Scalar> {
    dirs: Vec<Weight<T>>,
    cuts: Vec<Frac<T>>,
}

impl<T: Scalar> PlPath<T> {
    pub fn straight(nu: Weight<T>) -> Self {
        PlPath {
            dirs: vec![nu],
            cuts: vec![Frac::zero(), Frac::one()],
        }
    }

    /// Canonicalizes raw data: drops empty segments and merges equal adjacent
    /// directions. Cuts must be weakly increasing from exactly 0 to exactly 1.
    pub fn canonicalize(dirs: Vec<Weight<T>>, cuts: Vec<Frac<T>>) -> Result<Self> {
        if dirs.is_empty() {
            return Err(Error::MalformedPath("no directions".into()));
        }
        if cuts.len() != dirs.len() + 1 {
            return Err(Error::MalformedPath(format!(
                "{} directions need {} cuts, got {}",
                dirs.len(),
                dirs.len() + 1,
                cuts.len()
            )));
        }
        if !cuts[0].is_zero() || !cuts[cuts.len() - 1].is_one() {
            return Err(Error::MalformedPath("cuts must start at 0 and end at 1".into()));
        }
        if cuts.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::MalformedPath("cuts must be weakly increasing".into()));
        }
        let mut out_dirs: Vec<Weight<T>> = Vec::with_capacity(dirs.len());
        let mut out_cuts = vec![Frac::zero()];
        for (k, d) in dirs.into_iter().enumerate() {
            let end = cuts[k + 1].clone();
            if end == cuts[k] {
                continue;
            }
            if out_dirs.last() == Some(&d) {
                *out_cuts.last_mut().unwrap() = end;
            } else {
                out_dirs.push(d);
                out_cuts.push(end);
            }
        }
        Ok(PlPath {
            dirs: out_dirs,
            cuts: out_cuts,
        })
    }

    pub fn dirs(&self) -> &[Weight<T>] {
        &self.dirs
    }

    pub fn cuts(&self) -> &[Frac<T>] {
        &self.cuts
    }

    pub fn segments(&self) -> usize {
        self.dirs.len()
    }

    pub fn is_straight(&self) -> bool {
        self.dirs.len() == 1
    }

    /// Exact value `pi(t)`.
    pub fn evaluate(&self, t: &Frac<T>) -> Result<QPoint<T>> {
        if t.is_negative() || *t > Frac::one() {
            return Err(Error::TimeOutOfRange(fmt_frac(t)));
        }
        let mut acc = QPoint::zero();
        for (k, d) in self.dirs.iter().enumerate() {
            let (a, b) = (&self.cuts[k], &self.cuts[k + 1]);
            if t <= b {
                return Ok(acc.add_scaled(&(t.clone() - a.clone()), d));
            }
            acc = acc.add_scaled(&(b.clone() - a.clone()), d);
        }
        Ok(acc)
    }

    pub fn endpoint(&self) -> QPoint<T> {
        self.dirs
            .iter()
            .zip(self.cuts.windows(2))
            .fold(QPoint::zero(), |acc, (d, w)| {
                acc.add_scaled(&(w[1].clone() - w[0].clone()), d)
            })
    }

    pub fn profile(&self, i: SimpleIndex) -> CornerProfile<T> {
        let mut corners = Vec::with_capacity(self.cuts.len());
        let mut h = Frac::zero();
        corners.push((self.cuts[0].clone(), h.clone()));
        for (k, d) in self.dirs.iter().enumerate() {
            let len = self.cuts[k + 1].clone() - self.cuts[k].clone();
            h = h + len * Frac::from_integer(d.coord(i).clone());
            corners.push((self.cuts[k + 1].clone(), h.clone()));
        }
        let min = corners.iter().map(|(_, v)| v).min().expect("nonempty").clone();
        CornerProfile { corners, min }
    }

    fn integral_min(profile: &CornerProfile<T>) -> Frac<T> {
        assert!(
            profile.min.is_integer(),
            "minimum of H_i is not integral; the path violates the LS integrality condition"
        );
        profile.min.clone()
    }

    /// Raising operator: `None` when `m_i = 0`.
    pub fn raise(&self, cm: &CartanMatrix, i: SimpleIndex) -> Option<Self> {
        let profile = self.profile(i);
        let m = Self::integral_min(&profile);
        if m.is_zero() {
            return None;
        }
        let h: Vec<&Frac<T>> = profile.corners.iter().map(|(_, v)| v).collect();
        let level = m.clone() + Frac::one();
        let idx1 = h.iter().position(|v| **v == m).expect("minimum is attained");
        let t1 = self.cuts[idx1].clone();
        // last corner before t1 at or above m + 1; H(0) = 0 >= m + 1 guarantees one
        let k = (0..idx1).rev().find(|&k| *h[k] >= level).expect("H(0) >= m + 1");
        let t0 = interpolate(&self.cuts[k], &self.cuts[k + 1], h[k], h[k + 1], &level);
        Some(self.reflect_interval(cm, i, &t0, &t1))
    }

    /// Lowering operator: `None` when `H_i(1) - m_i = 0`.
    pub fn lower(&self, cm: &CartanMatrix, i: SimpleIndex) -> Option<Self> {
        let profile = self.profile(i);
        let m = Self::integral_min(&profile);
        if *profile.end_value() == m {
            return None;
        }
        let h: Vec<&Frac<T>> = profile.corners.iter().map(|(_, v)| v).collect();
        let level = m.clone() + Frac::one();
        let idx0 = h.iter().rposition(|v| **v == m).expect("minimum is attained");
        let t0 = self.cuts[idx0].clone();
        let k = (idx0 + 1..h.len())
            .find(|&k| *h[k] >= level)
            .expect("H(1) >= m + 1");
        let t1 = interpolate(&self.cuts[k - 1], &self.cuts[k], h[k - 1], h[k], &level);
        Some(self.reflect_interval(cm, i, &t0, &t1))
    }

    /// Replaces every direction on `[t0, t1]` by its image under `r_i`.
    /// Translation of the tail by `+-alpha_i` needs no bookkeeping: directions
    /// after `t1` are unchanged.
    fn reflect_interval(&self, cm: &CartanMatrix, i: SimpleIndex, t0: &Frac<T>, t1: &Frac<T>) -> Self {
        let mut dirs = Vec::with_capacity(self.dirs.len() + 2);
        let mut cuts = vec![Frac::zero()];
        for (k, d) in self.dirs.iter().enumerate() {
            let (a, b) = (&self.cuts[k], &self.cuts[k + 1]);
            let mut points = vec![a.clone()];
            for t in [t0, t1] {
                if a < t && t < b {
                    points.push(t.clone());
                }
            }
            points.push(b.clone());
            for w in points.windows(2) {
                let inside = *t0 <= w[0] && w[1] <= *t1;
                dirs.push(if inside { cm.reflect(i, d) } else { d.clone() });
                cuts.push(w[1].clone());
            }
        }
        PlPath::canonicalize(dirs, cuts).expect("splitting preserves well-formedness")
    }

    /// Scales every direction by `k`, keeping the cuts.
    pub fn scale(&self, k: &T) -> Self {
        PlPath {
            dirs: self.dirs.iter().map(|d| d.scale(k)).collect(),
            cuts: self.cuts.clone(),
        }
    }

    /// Cuts and directions of the part on `[a, b]`, with the cuts rescaled to
    /// `[0, 1]`. Directions are returned unscaled.
    pub(crate) fn restrict(&self, a: &Frac<T>, b: &Frac<T>) -> (Vec<Frac<T>>, Vec<Weight<T>>) {
        let width = b.clone() - a.clone();
        let mut cuts = vec![Frac::zero()];
        let mut dirs = Vec::new();
        for (k, d) in self.dirs.iter().enumerate() {
            let lo = std::cmp::max(&self.cuts[k], a);
            let hi = std::cmp::min(&self.cuts[k + 1], b);
            if lo >= hi {
                continue;
            }
            dirs.push(d.clone());
            cuts.push((hi.clone() - a.clone()) / width.clone());
        }
        (cuts, dirs)
    }

    /// Canonical text form `dirs=[(m1,m2),...];cuts=[p/q,...]`.
    pub fn to_text(&self) -> String {
        let dirs: Vec<String> = self.dirs.iter().map(|d| d.to_string()).collect();
        let cuts: Vec<String> = self.cuts.iter().map(fmt_frac).collect();
        format!("dirs=[{}];cuts=[{}]", dirs.join(","), cuts.join(","))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("path `{text}`"));
        let (d, c) = text.trim().split_once(';').ok_or_else(bad)?;
        let d = d
            .trim()
            .strip_prefix("dirs=[")
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(bad)?;
        let c = c
            .trim()
            .strip_prefix("cuts=[")
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(bad)?;
        let mut dirs = Vec::new();
        for chunk in d.split(')') {
            let chunk = chunk.trim().trim_start_matches(',').trim();
            if chunk.is_empty() {
                continue;
            }
            dirs.push(Weight::parse(&format!("{chunk})"))?);
        }
        let cuts = c
            .split(',')
            .map(|s| parse_frac(s).ok_or_else(bad))
            .collect::<Result<Vec<_>>>()?;
        PlPath::canonicalize(dirs, cuts)
    }
}

/// Time in `[a, b]` where the affine function with values `ha`, `hb` hits `level`.
fn interpolate<T: Scalar>(a: &Frac<T>, b: &Frac<T>, ha: &Frac<T>, hb: &Frac<T>, level: &Frac<T>) -> Frac<T> {
    if ha == level {
        return a.clone();
    }
    if hb == level {
        return b.clone();
    }
    a.clone() + (level.clone() - ha.clone()) / (hb.clone() - ha.clone()) * (b.clone() - a.clone())
}
