//! Rank-2 Cartan data: the matrix, integral weights in the fundamental-weight
//! basis, simple roots and coroots, pairings and simple reflections.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// One of the two simple indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SimpleIndex {
    One,
    Two,
}

impl SimpleIndex {
    pub const ALL: [SimpleIndex; 2] = [SimpleIndex::One, SimpleIndex::Two];

    pub fn other(self) -> Self {
        match self {
            SimpleIndex::One => SimpleIndex::Two,
            SimpleIndex::Two => SimpleIndex::One,
        }
    }

    pub fn number(self) -> u32 {
        match self {
            SimpleIndex::One => 1,
            SimpleIndex::Two => 2,
        }
    }
}

impl TryFrom<u32> for SimpleIndex {
    type Error = Error;

    fn try_from(v: u32) -> Result<Self> {
        match v {
            1 => Ok(SimpleIndex::One),
            2 => Ok(SimpleIndex::Two),
            _ => Err(Error::BadIndex(v)),
        }
    }
}

impl fmt::Display for SimpleIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

/// Which family the Cartan matrix belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CartanKind {
    /// `a1 * a2 < 4`: finite dihedral Weyl group.
    Finite,
    /// `a1 * a2 > 4`: infinite dihedral Weyl group.
    Hyperbolic,
}

/// The generalized Cartan matrix `[[2, -a1], [-a2, 2]]`.
///
/// Entries follow `a_ij = <alpha_j, alpha_i^vee>`, so `<alpha_2, alpha_1^vee> = -a1`
/// and `<alpha_1, alpha_2^vee> = -a2`. The affine case `a1 * a2 = 4` is rejected:
/// the fundamental weights would not form a coordinate basis of the weight
/// lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CartanMatrix {
    a1: u32,
    a2: u32,
}

impl CartanMatrix {
    pub fn new(a1: u32, a2: u32) -> Result<Self> {
        if (a1 == 0) != (a2 == 0) {
            return Err(Error::InvalidCartan {
                a1,
                a2,
                reason: "off-diagonal zeros must be symmetric",
            });
        }
        if u64::from(a1) * u64::from(a2) == 4 {
            return Err(Error::InvalidCartan {
                a1,
                a2,
                reason: "affine type (a1*a2 = 4) is not supported",
            });
        }
        Ok(CartanMatrix { a1, a2 })
    }

    pub fn a1(&self) -> u32 {
        self.a1
    }

    pub fn a2(&self) -> u32 {
        self.a2
    }

    pub fn kind(&self) -> CartanKind {
        if self.product() < 4 {
            CartanKind::Finite
        } else {
            CartanKind::Hyperbolic
        }
    }

    fn product(&self) -> u64 {
        u64::from(self.a1) * u64::from(self.a2)
    }

    /// `4 - a1 a2`, never zero.
    pub fn determinant(&self) -> i64 {
        4 - self.product() as i64
    }

    /// Order of `r1 r2`, or `None` when the Weyl group is infinite.
    pub fn coxeter_number(&self) -> Option<u32> {
        match self.product() {
            0 => Some(2),
            1 => Some(3),
            2 => Some(4),
            3 => Some(6),
            _ => None,
        }
    }

    /// Matrix entry `a_ij = <alpha_j, alpha_i^vee>`.
    pub fn entry<T: Scalar>(&self, i: SimpleIndex, j: SimpleIndex) -> T {
        let v: i64 = match (i, j) {
            (SimpleIndex::One, SimpleIndex::One) | (SimpleIndex::Two, SimpleIndex::Two) => 2,
            (SimpleIndex::One, SimpleIndex::Two) => -(self.a1 as i64),
            (SimpleIndex::Two, SimpleIndex::One) => -(self.a2 as i64),
        };
        T::from_int(v)
    }

    /// `alpha_i` in fundamental-weight coordinates: `alpha_1 = (2, -a2)`,
    /// `alpha_2 = (-a1, 2)`.
    pub fn simple_root<T: Scalar>(&self, i: SimpleIndex) -> Weight<T> {
        Weight::new(self.entry(SimpleIndex::One, i), self.entry(SimpleIndex::Two, i))
    }

    /// `r_i mu = mu - <mu, alpha_i^vee> alpha_i`.
    pub fn reflect<T: Scalar>(&self, i: SimpleIndex, mu: &Weight<T>) -> Weight<T> {
        let c = mu.coord(i).clone();
        mu.clone() - self.simple_root(i).scale(&c)
    }

    pub fn root_to_weight<T: Scalar>(&self, beta: &RootVector<T>) -> Weight<T> {
        self.simple_root(SimpleIndex::One).scale(&beta.c1)
            + self.simple_root(SimpleIndex::Two).scale(&beta.c2)
    }

    /// Inverse of [`root_to_weight`](Self::root_to_weight); `None` when the
    /// weight is not in the root lattice.
    pub fn weight_to_root<T: Scalar>(&self, mu: &Weight<T>) -> Option<RootVector<T>> {
        let det = T::from_int(self.determinant());
        let a1 = T::from_int(self.a1 as i64);
        let a2 = T::from_int(self.a2 as i64);
        let two = T::from_int(2);
        let n1 = two.clone() * mu.m1.clone() + a1 * mu.m2.clone();
        let n2 = a2 * mu.m1.clone() + two * mu.m2.clone();
        if !n1.is_multiple_of(&det) || !n2.is_multiple_of(&det) {
            return None;
        }
        Some(RootVector::new(n1 / det.clone(), n2 / det))
    }

    /// Reflection of a root-lattice vector by `r_i`.
    pub fn reflect_root<T: Scalar>(&self, i: SimpleIndex, beta: &RootVector<T>) -> RootVector<T> {
        let c = self.root_to_weight(beta).coord(i).clone();
        let mut out = beta.clone();
        match i {
            SimpleIndex::One => out.c1 = out.c1 - c,
            SimpleIndex::Two => out.c2 = out.c2 - c,
        }
        out
    }

    /// Reflection of a coroot-lattice vector: `r_i h = h - <alpha_i, h> alpha_i^vee`.
    pub fn reflect_coroot<T: Scalar>(&self, i: SimpleIndex, h: &CorootVector<T>) -> CorootVector<T> {
        let c = pairing(&self.simple_root(i), h);
        let mut out = h.clone();
        match i {
            SimpleIndex::One => out.d1 = out.d1 - c,
            SimpleIndex::Two => out.d2 = out.d2 - c,
        }
        out
    }
}

impl fmt::Display for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[2, -{}], [-{}, 2]]", self.a1, self.a2)
    }
}

/// Integral weight `m1 Lambda_1 + m2 Lambda_2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight<T> {
    pub m1: T,
    pub m2: T,
}

impl<T: Scalar> Weight<T> {
    pub fn new(m1: T, m2: T) -> Self {
        Weight { m1, m2 }
    }

    pub fn from_ints(m1: i64, m2: i64) -> Self {
        Weight::new(T::from_int(m1), T::from_int(m2))
    }

    pub fn zero() -> Self {
        Weight::new(T::zero(), T::zero())
    }

    /// `Lambda_1 - Lambda_2`.
    pub fn lambda() -> Self {
        Weight::from_ints(1, -1)
    }

    pub fn fundamental(i: SimpleIndex) -> Self {
        match i {
            SimpleIndex::One => Weight::from_ints(1, 0),
            SimpleIndex::Two => Weight::from_ints(0, 1),
        }
    }

    /// `<mu, alpha_i^vee>`, i.e. the i-th coordinate.
    pub fn coord(&self, i: SimpleIndex) -> &T {
        match i {
            SimpleIndex::One => &self.m1,
            SimpleIndex::Two => &self.m2,
        }
    }

    pub fn scale(&self, k: &T) -> Self {
        Weight::new(self.m1.clone() * k.clone(), self.m2.clone() * k.clone())
    }

    /// Exact division of both coordinates; `None` if `k` does not divide them.
    pub fn div_exact(&self, k: &T) -> Option<Self> {
        if k.is_zero() || !self.m1.is_multiple_of(k) || !self.m2.is_multiple_of(k) {
            return None;
        }
        Some(Weight::new(
            self.m1.clone() / k.clone(),
            self.m2.clone() / k.clone(),
        ))
    }

    pub fn is_zero(&self) -> bool {
        self.m1.is_zero() && self.m2.is_zero()
    }

    pub fn is_dominant(&self) -> bool {
        !self.m1.is_negative() && !self.m2.is_negative()
    }

    pub fn is_antidominant(&self) -> bool {
        !self.m1.is_positive() && !self.m2.is_positive()
    }

    /// Parses `(m1,m2)` or `m1,m2`.
    pub fn parse(s: &str) -> Result<Self> {
        let body = s.trim();
        let body = body
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .unwrap_or(body);
        let (a, b) = body
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("weight `{s}`")))?;
        match (T::parse_decimal(a), T::parse_decimal(b)) {
            (Some(m1), Some(m2)) => Ok(Weight::new(m1, m2)),
            _ => Err(Error::Parse(format!("weight `{s}`"))),
        }
    }
}

impl<T: Scalar> Add for Weight<T> {
    type Output = Weight<T>;

    fn add(self, rhs: Self) -> Self {
        Weight::new(self.m1 + rhs.m1, self.m2 + rhs.m2)
    }
}

impl<T: Scalar> Sub for Weight<T> {
    type Output = Weight<T>;

    fn sub(self, rhs: Self) -> Self {
        Weight::new(self.m1 - rhs.m1, self.m2 - rhs.m2)
    }
}

impl<T: Scalar> Neg for Weight<T> {
    type Output = Weight<T>;

    fn neg(self) -> Self {
        Weight::new(-self.m1, -self.m2)
    }
}

impl<T: fmt::Display> fmt::Display for Weight<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m1, self.m2)
    }
}

/// `c1 alpha_1 + c2 alpha_2` in the root lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector<T> {
    pub c1: T,
    pub c2: T,
}

impl<T: Scalar> RootVector<T> {
    pub fn new(c1: T, c2: T) -> Self {
        RootVector { c1, c2 }
    }

    pub fn simple(i: SimpleIndex) -> Self {
        match i {
            SimpleIndex::One => RootVector::new(T::one(), T::zero()),
            SimpleIndex::Two => RootVector::new(T::zero(), T::one()),
        }
    }

    pub fn height(&self) -> T {
        self.c1.clone() + self.c2.clone()
    }

    pub fn abs_sum(&self) -> T {
        self.c1.abs() + self.c2.abs()
    }

    /// Membership in `Q_+`: both coefficients nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        !self.c1.is_negative() && !self.c2.is_negative()
    }
}

impl<T: fmt::Display> fmt::Display for RootVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.c1, self.c2)
    }
}

/// `d1 alpha_1^vee + d2 alpha_2^vee`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CorootVector<T> {
    pub d1: T,
    pub d2: T,
}

impl<T: Scalar> CorootVector<T> {
    pub fn new(d1: T, d2: T) -> Self {
        CorootVector { d1, d2 }
    }

    pub fn simple(i: SimpleIndex) -> Self {
        match i {
            SimpleIndex::One => CorootVector::new(T::one(), T::zero()),
            SimpleIndex::Two => CorootVector::new(T::zero(), T::one()),
        }
    }
}

/// `<mu, d1 alpha_1^vee + d2 alpha_2^vee> = m1 d1 + m2 d2`.
pub fn pairing<T: Scalar>(mu: &Weight<T>, co: &CorootVector<T>) -> T {
    mu.m1.clone() * co.d1.clone() + mu.m2.clone() * co.d2.clone()
}

/// Regression probe: `<-r_1 lambda, alpha_2^vee>` computed through the
/// reflection, checked against the closed form `1 - a2`.
pub fn check_minus_r1_lambda_pairing<T: Scalar>(cm: &CartanMatrix) -> T {
    let r1_lambda = cm.reflect(SimpleIndex::One, &Weight::<T>::lambda());
    let value = pairing(&-r1_lambda, &CorootVector::simple(SimpleIndex::Two));
    let closed_form = T::from_int(1 - cm.a2() as i64);
    assert_eq!(value, closed_form, "pairing disagrees with 1 - a2");
    value
}
