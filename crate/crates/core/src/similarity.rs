//! Dilation `pi -> m pi`, concatenation of paths, the splitting of
//! `B(m mu)` into `B(mu)^{*m}`, and the resulting embedding
//! `Sigma_m : B(mu) -> B(mu)^{(x) m}`.

use std::fmt;

use num_traits::{One, Zero};

use crate::cartan::{SimpleIndex, Weight};
use crate::crystal::{CrystalElem, TensorElem};
use crate::error::{Error, Result};
use crate::path::LsPath;
use crate::pl::{PlPath, QPoint};
use crate::scalar::{Frac, Scalar};

/// `Theta_m`: scales every direction (and the shape) by `m`; cuts are unchanged.
pub fn dilate<T: Scalar>(pi: &LsPath<T>, m: u32) -> LsPath<T> {
    pi.scaled(&T::from_int(m as i64))
}

/// `pi_1 * pi_2 * ... * pi_m`: the pieces traversed in order, each in time `1/m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Concatenation<T: Scalar> {
    pieces: Vec<LsPath<T>>,
}

impl<T: Scalar> Concatenation<T> {
    pub fn new(pieces: Vec<LsPath<T>>) -> Result<Self> {
        let first = pieces
            .first()
            .ok_or_else(|| Error::MalformedPath("empty concatenation".into()))?;
        if pieces
            .iter()
            .any(|p| p.shape() != first.shape() || p.cartan() != first.cartan())
        {
            return Err(Error::ShapeMismatch(
                "concatenated pieces must share a shape".into(),
            ));
        }
        Ok(Concatenation { pieces })
    }

    pub fn pieces(&self) -> &[LsPath<T>] {
        &self.pieces
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    fn m(&self) -> T {
        T::from_int(self.pieces.len() as i64)
    }

    /// `sum_{l<k} pi_l(1) + pi_k(m t - k + 1)` for `(k-1)/m <= t <= k/m`.
    pub fn evaluate(&self, t: &Frac<T>) -> Result<QPoint<T>> {
        if *t < Frac::zero() || *t > Frac::one() {
            return Err(Error::TimeOutOfRange(t.to_string()));
        }
        let m = Frac::from_integer(self.m());
        let mut acc = QPoint::zero();
        for (k, piece) in self.pieces.iter().enumerate() {
            let start = Frac::from_integer(T::from_int(k as i64));
            let local = m.clone() * t.clone() - start;
            if local <= Frac::one() {
                return Ok(acc.add(&piece.evaluate(&local)?));
            }
            acc = acc.add(&piece.pl().endpoint());
        }
        Ok(acc)
    }

    /// The concatenation as one piecewise-linear path on `[0, 1]`.
    pub fn to_pl(&self) -> PlPath<T> {
        let m = self.m();
        let mf = Frac::from_integer(m.clone());
        let mut dirs = Vec::new();
        let mut cuts = vec![Frac::zero()];
        for (k, piece) in self.pieces.iter().enumerate() {
            let offset = Frac::from_integer(T::from_int(k as i64));
            for (u, d) in piece.dirs().iter().enumerate() {
                dirs.push(d.scale(&m));
                cuts.push((offset.clone() + piece.cuts()[u + 1].clone()) / mf.clone());
            }
        }
        PlPath::canonicalize(dirs, cuts).expect("concatenated cuts are monotone")
    }

    pub fn to_tensor(&self) -> TensorElem<LsPath<T>> {
        TensorElem::new(self.pieces.clone())
    }

    pub fn from_tensor(t: TensorElem<LsPath<T>>) -> Self {
        Concatenation {
            pieces: t.into_factors(),
        }
    }

    /// `e_i` transported through `pi_1 * ... * pi_m -> pi_1 (x) ... (x) pi_m`.
    pub fn raise(&self, i: SimpleIndex) -> Option<Self> {
        self.to_tensor().raise(i).map(Self::from_tensor)
    }

    pub fn lower(&self, i: SimpleIndex) -> Option<Self> {
        self.to_tensor().lower(i).map(Self::from_tensor)
    }

    /// `e_i` computed directly from the height function of the concatenated
    /// path, then cut back into pieces.
    pub fn raise_by_profile(&self, i: SimpleIndex) -> Option<Self> {
        let cm = *self.pieces[0].cartan();
        let pl = self.to_pl().raise(&cm, i)?;
        Some(self.recut(&pl))
    }

    pub fn lower_by_profile(&self, i: SimpleIndex) -> Option<Self> {
        let cm = *self.pieces[0].cartan();
        let pl = self.to_pl().lower(&cm, i)?;
        Some(self.recut(&pl))
    }

    fn recut(&self, pl: &PlPath<T>) -> Self {
        let first = &self.pieces[0];
        let pieces = cut_pieces(pl, self.pieces.len() as u32, first)
            .expect("operators keep piece directions integral");
        Concatenation { pieces }
    }
}

impl<T: Scalar> fmt::Display for Concatenation<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pieces.iter().map(|p| p.to_text()).collect();
        write!(f, "{}", parts.join(" * "))
    }
}

/// Cuts `pl` at `k/m` into pieces whose directions are `1/m` of the originals.
fn cut_pieces<T: Scalar>(pl: &PlPath<T>, m: u32, template: &LsPath<T>) -> Result<Vec<LsPath<T>>> {
    let mt = T::from_int(m as i64);
    let denom = Frac::from_integer(mt.clone());
    (0..m)
        .map(|k| {
            let a = Frac::from_integer(T::from_int(k as i64)) / denom.clone();
            let b = Frac::from_integer(T::from_int(k as i64 + 1)) / denom.clone();
            let (cuts, dirs) = pl.restrict(&a, &b);
            let dirs = dirs
                .iter()
                .map(|d| {
                    d.div_exact(&mt)
                        .ok_or_else(|| Error::ShapeMismatch(format!("direction {d} not divisible by {m}")))
                })
                .collect::<Result<Vec<_>>>()?;
            LsPath::from_parts(*template.cartan(), template.shape().clone(), dirs, cuts)
        })
        .collect()
}

/// Splits a path of shape `m mu` into `m` paths of shape `mu` with
/// `pi = pi_1 * ... * pi_m`, where `pi_k(t) = pi(t/m + (k-1)/m) - pi((k-1)/m)`.
pub fn split<T: Scalar>(pi: &LsPath<T>, m: u32) -> Result<Concatenation<T>> {
    if m == 0 {
        return Err(Error::MalformedPath("split count must be positive".into()));
    }
    let mt = T::from_int(m as i64);
    let piece_shape = pi
        .shape()
        .div_exact(&mt)
        .ok_or_else(|| Error::ShapeMismatch(format!("shape {} is not divisible by {m}", pi.shape())))?;
    let template = LsPath::straight(*pi.cartan(), piece_shape.clone(), piece_shape);
    Ok(Concatenation {
        pieces: cut_pieces(pi.pl(), m, &template)?,
    })
}

/// `Sigma_m(pi)`: dilate by `m`, split into `m` pieces, read as a tensor.
pub fn sigma_m<T: Scalar>(pi: &LsPath<T>, m: u32) -> TensorElem<LsPath<T>> {
    split(&dilate(pi, m), m)
        .expect("a dilated path always splits")
        .to_tensor()
}

/// One identity checked by [`check_similarity`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimilarityReport {
    pub path: String,
    pub m: u32,
    pub checks: Vec<IdentityCheck>,
}

impl SimilarityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Checks every defining identity of `Sigma_m` at `pi`:
/// `Sigma_m(pi_mu) = pi_mu^{(x)m}`, `wt` scaling, `Sigma_m(e_i pi) = e_i^m Sigma_m(pi)`,
/// the same for `f_i`, and `epsilon_i`/`phi_i` scaling, for both indices.
pub fn check_similarity<T: Scalar>(pi: &LsPath<T>, m: u32) -> SimilarityReport {
    let mut checks = Vec::new();
    let mut push = |name: String, passed: bool| checks.push(IdentityCheck { name, passed });
    let mt = T::from_int(m as i64);
    let steps = m as usize;
    let image = sigma_m(pi, m);

    let straight = LsPath::highest(*pi.cartan(), pi.shape().clone());
    push(
        "Sigma_m(pi_mu) = pi_mu^(x)m".into(),
        sigma_m(&straight, m) == TensorElem::power(&straight, steps),
    );
    push(
        "wt(Sigma_m pi) = m wt(pi)".into(),
        image.wt() == pi.wt().scale(&mt),
    );
    for i in SimpleIndex::ALL {
        let lhs = pi.raise(i).map(|p| sigma_m(&p, m));
        push(
            format!("Sigma_m(e_{i} pi) = e_{i}^m Sigma_m(pi)"),
            lhs == image.raise_n(i, steps),
        );
        let lhs = pi.lower(i).map(|p| sigma_m(&p, m));
        push(
            format!("Sigma_m(f_{i} pi) = f_{i}^m Sigma_m(pi)"),
            lhs == image.lower_n(i, steps),
        );
        push(
            format!("epsilon_{i}(Sigma_m pi) = m epsilon_{i}(pi)"),
            image.epsilon(i) == pi.epsilon(i) * mt.clone(),
        );
        push(
            format!("phi_{i}(Sigma_m pi) = m phi_{i}(pi)"),
            image.phi(i) == pi.phi(i) * mt.clone(),
        );
    }
    SimilarityReport {
        path: pi.to_text(),
        m,
        checks,
    }
}

/// `Sigma_n^{(x)m} o Sigma_m = Sigma_{mn}` at `pi`.
pub fn check_diagram<T: Scalar>(pi: &LsPath<T>, m: u32, n: u32) -> bool {
    let via_m: Vec<LsPath<T>> = sigma_m(pi, m)
        .into_factors()
        .iter()
        .flat_map(|b| sigma_m(b, n).into_factors())
        .collect();
    via_m == sigma_m(pi, m * n).into_factors()
}

/// `Theta_m(f_i pi) = f_i^m Theta_m(pi)` and the same for `e_i`.
pub fn check_dilation_commutes<T: Scalar>(pi: &LsPath<T>, m: u32) -> bool {
    let big = dilate(pi, m);
    SimpleIndex::ALL.iter().all(|&i| {
        pi.lower(i).map(|p| dilate(&p, m)) == big.lower_n(i, m as usize)
            && pi.raise(i).map(|p| dilate(&p, m)) == big.raise_n(i, m as usize)
    })
}

/// Weight of a concatenation, `sum pi_k(1)`.
pub fn concatenation_weight<T: Scalar>(c: &Concatenation<T>) -> Weight<T> {
    c.pieces()
        .iter()
        .skip(1)
        .fold(c.pieces()[0].wt(), |acc, p| acc + p.wt())
}
