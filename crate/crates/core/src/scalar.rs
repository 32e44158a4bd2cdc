//! The integer scalar every coordinate is built from.
//!
//! Weights, roots and cut points are exact. The library is generic over the
//! integer type so callers can trade range for speed: [`num_bigint::BigInt`]
//! never overflows, while `i64` and `i128` are faster but overflow once
//! hyperbolic Weyl words get long (coordinates grow geometrically with length).

use std::fmt;
use std::hash::Hash;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Exact signed integer usable as a coordinate.
pub trait Scalar:
    Integer
    + Signed
    + Clone
    + Hash
    + fmt::Debug
    + fmt::Display
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("i64 fits every scalar type")
    }

    fn parse_decimal(s: &str) -> Option<Self> {
        Self::from_str_radix(s.trim(), 10).ok()
    }
}

impl<T> Scalar for T where
    T: Integer
        + Signed
        + Clone
        + Hash
        + fmt::Debug
        + fmt::Display
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

/// Exact fraction over a scalar, always reduced with positive denominator.
pub type Frac<T> = Ratio<T>;

#[cfg(test)]
pub(crate) fn frac<T: Scalar>(n: i64, d: i64) -> Frac<T> {
    Ratio::new(T::from_int(n), T::from_int(d))
}

/// Prints `p/q`, or just `p` for integers.
pub(crate) fn fmt_frac<T: Scalar>(q: &Frac<T>) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub(crate) fn parse_frac<T: Scalar>(s: &str) -> Option<Frac<T>> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n = T::parse_decimal(n)?;
            let d = T::parse_decimal(d)?;
            if d.is_zero() {
                None
            } else {
                Some(Ratio::new(n, d))
            }
        }
        None => Some(Ratio::from_integer(T::parse_decimal(s)?)),
    }
}
