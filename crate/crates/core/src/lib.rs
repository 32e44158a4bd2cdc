//! Lakshmibai-Seshadri path crystals for rank-2 Kac-Moody algebras.
//!
//! Everything is exact: weights and roots are integer pairs, cut points are
//! reduced fractions. The core types are generic over the integer [`Scalar`];
//! the `Big*` aliases below fix it to [`num_bigint::BigInt`], which is what the
//! command-line tool uses. `i64` works too as long as coordinates stay small.
//!
//! Layering, bottom up:
//! - [`cartan`]: Cartan matrix, weights, roots, coroots, simple reflections.
//! - [`weyl`]: canonical Weyl words, real roots, orbits.
//! - [`order`]: the reflection order on an orbit, distances, sigma-chains.
//! - [`pl`] and [`path`]: piecewise-linear paths, LS paths and root operators.
//! - [`crystal`]: the crystal contract, tensor products, Weyl action, extremality.
//! - [`similarity`]: dilation, concatenation, splitting, `Sigma_m`.
//! - [`explorer`], [`export`], [`verify`]: graph exploration, serialization and
//!   the verification suites.

pub mod cartan;
pub mod crystal;
pub mod error;
pub mod explorer;
pub mod export;
pub mod order;
pub mod path;
pub mod pl;
pub mod scalar;
pub mod similarity;
pub mod verify;
pub mod weyl;

use num_bigint::BigInt;

pub use cartan::{pairing, CartanKind, CartanMatrix, CorootVector, RootVector, SimpleIndex, Weight};
pub use crystal::{is_extremal_bounded, CrystalElem, TensorElem, TensorPair};
pub use error::{Error, Result};
pub use explorer::{explore, CrystalGraph, Edge};
pub use order::{OrbitOrder, OrderConfig};
pub use path::LsPath;
pub use scalar::{Frac, Scalar};
pub use similarity::{check_diagram, check_similarity, dilate, sigma_m, split, Concatenation};
pub use weyl::{RealRoot, WeylGroup, WeylWord};

pub type Rational = Frac<BigInt>;
pub type BigWeight = Weight<BigInt>;
pub type BigRoot = RootVector<BigInt>;
pub type BigCoroot = CorootVector<BigInt>;
pub type BigRealRoot = RealRoot<BigInt>;
pub type BigPath = LsPath<BigInt>;
pub type BigOrder = OrbitOrder<BigInt>;
pub type BigGraph = CrystalGraph<BigInt>;

pub type Weight64 = Weight<i64>;
pub type Path64 = LsPath<i64>;
