//! Exact rational helpers shared by every module.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

/// Arbitrary-precision rational number.
pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Formats a rational as `p/q`, always with an explicit denominator.
pub fn fmt_q(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses the `p/q` form written by [`fmt_q`]. A bare integer is also accepted.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Q::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

pub fn is_integer(x: &Q) -> bool {
    x.denom().is_one()
}

/// Binomial coefficient; zero when `r > n`.
pub fn binomial(n: u64, r: u64) -> u64 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    (0..r).fold(1u64, |acc, t| acc * (n - t) / (t + 1))
}

/// An element of Q/Z, stored as its representative in `[0, 1)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModOne(Q);

impl ModOne {
    pub fn new(x: Q) -> Self {
        let floor = x.floor();
        ModOne(x - floor)
    }

    pub fn zero() -> Self {
        ModOne(Q::zero())
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::new(q(n, d))
    }

    pub fn value(&self) -> &Q {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// True when the class is 1/2 + Z.
    pub fn is_half(&self) -> bool {
        self.0 == q(1, 2)
    }
}

impl std::ops::Add for ModOne {
    type Output = ModOne;
    fn add(self, rhs: ModOne) -> ModOne {
        ModOne::new(self.0 + rhs.0)
    }
}

impl std::ops::Sub for ModOne {
    type Output = ModOne;
    fn sub(self, rhs: ModOne) -> ModOne {
        ModOne::new(self.0 - rhs.0)
    }
}

impl std::ops::Neg for ModOne {
    type Output = ModOne;
    fn neg(self) -> ModOne {
        ModOne::new(-self.0)
    }
}

impl fmt::Debug for ModOne {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod 1", fmt_q(&self.0))
    }
}

impl fmt::Display for ModOne {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_q(&self.0))
    }
}

/// Integer square root when `n` is a perfect square.
pub fn exact_sqrt(n: u64) -> Option<u64> {
    let r = num_integer::Roots::sqrt(&n);
    (r * r == n).then_some(r)
}

/// Reduces `x` into `0..m`.
pub fn modulo(x: i64, m: u32) -> u32 {
    x.mod_floor(&(m as i64)) as u32
}

/// Serde adapter writing a [`Q`] as a `p/q` string.
pub mod q_string {
    use super::{fmt_q, parse_q, Q};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_q(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        parse_q(&s).ok_or_else(|| serde::de::Error::custom(format!("bad rational {s:?}")))
    }
}

impl serde::Serialize for ModOne {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_q(&self.0))
    }
}

impl<'de> serde::Deserialize<'de> for ModOne {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let x = q_string::deserialize(d)?;
        Ok(ModOne::new(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mod_one_normalizes_negatives() {
        assert_eq!(ModOne::from_ratio(-1, 3), ModOne::from_ratio(2, 3));
        assert!(ModOne::from_ratio(-8, 4).is_zero());
        assert!(ModOne::from_ratio(3, 2).is_half());
    }

    #[test]
    fn rational_strings_round_trip() {
        for x in [q(1, 1), q(-5, 4), q(0, 1), q(16, 7)] {
            assert_eq!(parse_q(&fmt_q(&x)), Some(x));
        }
        assert_eq!(fmt_q(&qi(1)), "1/1");
        assert_eq!(parse_q("3"), Some(qi(3)));
        assert_eq!(parse_q("1/0"), None);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(8, 0), 1);
    }

    #[test]
    fn sqrt_detects_squares() {
        assert_eq!(exact_sqrt(16), Some(4));
        assert_eq!(exact_sqrt(2), None);
        assert_eq!(exact_sqrt(1), Some(1));
    }
}
