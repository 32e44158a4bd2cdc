//! Lakshmibai-Seshadri paths of a fixed shape and their crystal structure.

use std::fmt;

use crate::cartan::{CartanMatrix, SimpleIndex, Weight};
use crate::crystal::CrystalElem;
use crate::error::{Error, Result};
use crate::order::OrbitOrder;
use crate::pl::{CornerProfile, PlPath, QPoint};
use crate::scalar::{fmt_frac, Frac, Scalar};

/// An LS path `(nu_1 > ... > nu_s ; 0 = sigma_0 < ... < sigma_s = 1)` of shape `mu`.
///
/// Values are immutable and kept in canonical form, so structural equality is
/// path equality. Validity (the sigma-chain conditions) is not enforced at
/// construction; see [`LsPath::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LsPath<T: Scalar> {
    cm: CartanMatrix,
    shape: Weight<T>,
    path: PlPath<T>,
}

impl<T: Scalar> LsPath<T> {
    /// The straight line `pi_nu(t) = t nu`; `nu` should lie in `W shape`.
    pub fn straight(cm: CartanMatrix, shape: Weight<T>, nu: Weight<T>) -> Self {
        LsPath {
            cm,
            shape,
            path: PlPath::straight(nu),
        }
    }

    /// `pi_mu` for the shape itself.
    pub fn highest(cm: CartanMatrix, shape: Weight<T>) -> Self {
        let nu = shape.clone();
        LsPath::straight(cm, shape, nu)
    }

    /// Builds a path from raw directions and cuts, canonicalizing them.
    pub fn from_parts(
        cm: CartanMatrix,
        shape: Weight<T>,
        dirs: Vec<Weight<T>>,
        cuts: Vec<Frac<T>>,
    ) -> Result<Self> {
        Ok(LsPath {
            cm,
            shape,
            path: PlPath::canonicalize(dirs, cuts)?,
        })
    }

    /// Parses the canonical text form `dirs=[(m1,m2),...];cuts=[p/q,...]`.
    pub fn parse(cm: CartanMatrix, shape: Weight<T>, text: &str) -> Result<Self> {
        Ok(LsPath {
            cm,
            shape,
            path: PlPath::parse(text)?,
        })
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cm
    }

    pub fn shape(&self) -> &Weight<T> {
        &self.shape
    }

    pub fn dirs(&self) -> &[Weight<T>] {
        self.path.dirs()
    }

    pub fn cuts(&self) -> &[Frac<T>] {
        self.path.cuts()
    }

    pub fn pl(&self) -> &PlPath<T> {
        &self.path
    }

    pub fn is_straight(&self) -> bool {
        self.path.is_straight()
    }

    pub fn to_text(&self) -> String {
        self.path.to_text()
    }

    /// Checks every LS condition: directions in the orbit of the shape,
    /// strictly increasing cuts, and a sigma-chain certificate at every interior
    /// cut (within the order's bounds).
    pub fn validate(&self, order: &OrbitOrder<T>) -> Result<()> {
        if order.cartan() != &self.cm {
            return Err(Error::ShapeMismatch(
                "order built for another Cartan matrix".into(),
            ));
        }
        let cuts = self.cuts();
        if cuts.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::CutsNotMonotone);
        }
        // Each sigma-chain keeps consecutive directions in one orbit, so one
        // membership test covers them all.
        let first = &self.dirs()[0];
        if !order.in_orbit(&self.shape, first) {
            return Err(Error::NotInOrbit(first.to_string()));
        }
        for (u, pair) in self.dirs().windows(2).enumerate() {
            let sigma = &cuts[u + 1];
            match order.sigma_chain_exists(sigma, &pair[0], &pair[1]) {
                Ok(true) => {}
                Ok(false) | Err(Error::NotComparable) => return Err(Error::NotCertified(fmt_frac(sigma))),
                Err(e) => return Err(e),
            }
        }
        if self.path.endpoint().to_weight().is_none() {
            return Err(Error::NonIntegral(self.path.endpoint().to_string()));
        }
        Ok(())
    }

    pub fn is_valid(&self, order: &OrbitOrder<T>) -> bool {
        self.validate(order).is_ok()
    }

    pub fn evaluate(&self, t: &Frac<T>) -> Result<QPoint<T>> {
        self.path.evaluate(t)
    }

    /// `wt(pi) = pi(1)`, which is integral for LS paths.
    pub fn weight(&self) -> Result<Weight<T>> {
        let end = self.path.endpoint();
        end.to_weight().ok_or_else(|| Error::NonIntegral(end.to_string()))
    }

    pub fn profile(&self, i: SimpleIndex) -> CornerProfile<T> {
        self.path.profile(i)
    }

    /// Scales directions and shape by `k`.
    pub(crate) fn scaled(&self, k: &T) -> Self {
        LsPath {
            cm: self.cm,
            shape: self.shape.scale(k),
            path: self.path.scale(k),
        }
    }
}

impl<T: Scalar> CrystalElem for LsPath<T> {
    type Scalar = T;

    fn cartan(&self) -> CartanMatrix {
        self.cm
    }

    fn wt(&self) -> Weight<T> {
        self.weight().expect("LS path endpoints are integral")
    }

    /// `epsilon_i = -m_i`.
    fn epsilon(&self, i: SimpleIndex) -> T {
        let m = self.profile(i).min_value().expect("m_i is integral for LS paths");
        -m
    }

    /// `phi_i = H_i(1) - m_i`.
    fn phi(&self, i: SimpleIndex) -> T {
        let p = self.profile(i);
        let m = p.min_value().expect("m_i is integral for LS paths");
        p.end_value().to_integer() - m
    }

    fn raise(&self, i: SimpleIndex) -> Option<Self> {
        let path = self.path.raise(&self.cm, i)?;
        Some(LsPath {
            cm: self.cm,
            shape: self.shape.clone(),
            path,
        })
    }

    fn lower(&self, i: SimpleIndex) -> Option<Self> {
        let path = self.path.lower(&self.cm, i)?;
        Some(LsPath {
            cm: self.cm,
            shape: self.shape.clone(),
            path,
        })
    }
}

impl<T: Scalar> fmt::Display for LsPath<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Checks `epsilon_i`/`phi_i` from the height profile against operator counts,
/// and that every local minimum of `H_i` is an integer. Returns a description
/// of the first violation.
pub fn check_path_axioms<T: Scalar>(pi: &LsPath<T>) -> std::result::Result<(), String> {
    for i in SimpleIndex::ALL {
        let prof = pi.profile(i);
        if let Some(bad) = prof.local_minima().into_iter().find(|v| !v.is_integer()) {
            return Err(format!(
                "{pi}: non-integral local minimum {} of H_{i}",
                fmt_frac(&bad)
            ));
        }
        let eps = pi.epsilon(i);
        let phi = pi.phi(i);
        if eps.is_negative() || phi.is_negative() {
            return Err(format!("{pi}: negative epsilon/phi for i={i}"));
        }
        if phi.clone() - eps.clone() != pi.wt().coord(i).clone() {
            return Err(format!("{pi}: phi_{i} - epsilon_{i} != <wt, alpha_{i}^vee>"));
        }
        if eps.to_usize() != Some(pi.epsilon_by_count(i)) {
            return Err(format!("{pi}: epsilon_{i} = {eps} disagrees with raise count"));
        }
        if phi.to_usize() != Some(pi.phi_by_count(i)) {
            return Err(format!("{pi}: phi_{i} = {phi} disagrees with lower count"));
        }
        let alpha = pi.cartan().simple_root::<T>(i);
        if let Some(down) = pi.lower(i) {
            if down.raise(i).as_ref() != Some(pi) {
                return Err(format!("{pi}: raise(lower) != id for i={i}"));
            }
            if down.wt() != pi.wt() - alpha.clone() {
                return Err(format!("{pi}: wt(lower) != wt - alpha_{i}"));
            }
        }
        if let Some(up) = pi.raise(i) {
            if up.lower(i).as_ref() != Some(pi) {
                return Err(format!("{pi}: lower(raise) != id for i={i}"));
            }
            if up.wt() != pi.wt() + alpha {
                return Err(format!("{pi}: wt(raise) != wt + alpha_{i}"));
            }
        }
    }
    Ok(())
}
