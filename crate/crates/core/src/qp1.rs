//! The additive monoid structure on the rational projective line.
//!
//! `[p:q] + [r:s] = [pr : ps + qr]`, with `[1:0]` as the zero element and `[0:1]`
//! absorbing (`[0:1] + [0:1] = [0:1]`, and `[0:1] + x = [0:1]` for every `x`).

use std::fmt;
use std::ops::{Add, Neg};
use std::str::FromStr;

use num::{BigInt, Integer, One, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::Rat;

/// A point `[p:q]` of QP¹, stored canonically: `gcd(|p|,|q|) = 1`, `p ≥ 0`, and `q = 1`
/// whenever `p = 0`. Structural equality is projective equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjectiveRational {
    p: BigInt,
    q: BigInt,
}

impl ProjectiveRational {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (mut p, mut q) = (p.into(), q.into());
        if p.is_zero() && q.is_zero() {
            return Err(Error::ZeroProjective);
        }
        let g = p.gcd(&q);
        p /= &g;
        q /= &g;
        if p.is_negative() || (p.is_zero() && q.is_negative()) {
            p = -p;
            q = -q;
        }
        Ok(ProjectiveRational { p, q })
    }

    /// Canonical point through a nonzero rational pair.
    pub fn from_rationals(p: &Rat, q: &Rat) -> Result<Self> {
        let l = p.denom().lcm(q.denom());
        let pi = p.numer() * (&l / p.denom());
        let qi = q.numer() * (&l / q.denom());
        Self::new(pi, qi)
    }

    /// `[1:0]`, the zero element.
    pub fn zero() -> Self {
        ProjectiveRational { p: BigInt::one(), q: BigInt::zero() }
    }

    /// `[0:1]`, the absorbing element.
    pub fn infinity() -> Self {
        ProjectiveRational { p: BigInt::zero(), q: BigInt::one() }
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn is_zero(&self) -> bool {
        self.q.is_zero()
    }

    pub fn is_infinity(&self) -> bool {
        self.p.is_zero()
    }

    /// The affine value `q/p`, undefined at `[0:1]`.
    pub fn ratio(&self) -> Option<Rat> {
        (!self.p.is_zero()).then(|| Rat::new(self.q.clone(), self.p.clone()))
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_infinity() && other.is_infinity() {
            return Self::infinity();
        }
        let p = &self.p * &other.p;
        let q = &self.p * &other.q + &self.q * &other.p;
        Self::new(p, q).expect("sum of points with one p nonzero is nonzero")
    }

    pub fn neg(&self) -> Self {
        Self::new(self.p.clone(), -&self.q).expect("nonzero")
    }

    /// `k·x` by the closed forms `k[p:q] = [p:kq]` (p ≠ 0), `k[0:1] = [0:1]` (k ≠ 0),
    /// `0·x = [1:0]`.
    pub fn scalar_mul(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        if self.is_infinity() {
            return Self::infinity();
        }
        Self::new(self.p.clone(), &self.q * k).expect("p nonzero")
    }

    /// Sign of the product `pq`.
    pub fn sign(&self) -> i64 {
        match (&self.p * &self.q).sign() {
            num::bigint::Sign::Plus => 1,
            num::bigint::Sign::Minus => -1,
            num::bigint::Sign::NoSign => 0,
        }
    }
}

impl Add for &ProjectiveRational {
    type Output = ProjectiveRational;
    fn add(self, rhs: &ProjectiveRational) -> ProjectiveRational {
        ProjectiveRational::add(self, rhs)
    }
}

impl Neg for &ProjectiveRational {
    type Output = ProjectiveRational;
    fn neg(self) -> ProjectiveRational {
        ProjectiveRational::neg(self)
    }
}

impl std::iter::Sum for ProjectiveRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc.add(&x))
    }
}

impl fmt::Display for ProjectiveRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}]", self.p, self.q)
    }
}

impl fmt::Debug for ProjectiveRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `p:q`, `[p:q]` or `p/q` (homogeneous coordinates in every form).
impl FromStr for ProjectiveRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('[').trim_end_matches(']');
        let Some((a, b)) = t.split_once(':').or_else(|| t.split_once('/')) else {
            return Err(Error::Parse { position: 0, message: format!("expected p:q, got `{s}`") });
        };
        let parse = |x: &str, position| {
            x.trim().parse::<BigInt>().map_err(|_| Error::Parse {
                position,
                message: format!("invalid integer `{}`", x.trim()),
            })
        };
        Self::new(parse(a, 0)?, parse(b, a.len() + 1)?)
    }
}

/// JSON form: a two-element integer array `[p, q]`.
impl Serialize for ProjectiveRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let p = self.p.to_i64().ok_or_else(|| serde::ser::Error::custom("p exceeds i64"))?;
        let q = self.q.to_i64().ok_or_else(|| serde::ser::Error::custom("q exceeds i64"))?;
        [p, q].serialize(s)
    }
}

impl<'de> Deserialize<'de> for ProjectiveRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [p, q] = <[i64; 2]>::deserialize(d)?;
        Self::new(p, q).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pr(p: i64, q: i64) -> ProjectiveRational {
        ProjectiveRational::new(p, q).unwrap()
    }

    #[test]
    fn canonical_form() {
        assert_eq!(pr(-4, 6), pr(2, -3));
        assert_eq!(pr(2, -3).p(), &BigInt::from(2));
        assert_eq!(pr(0, -7), ProjectiveRational::infinity());
        assert_eq!(pr(5, 0), ProjectiveRational::zero());
        assert!(matches!(ProjectiveRational::new(0, 0), Err(Error::ZeroProjective)));
    }

    #[test]
    fn addition_examples() {
        let x = pr(3, -7);
        assert_eq!(&ProjectiveRational::zero() + &x, x);
        assert_eq!(&pr(2, 3) + &pr(5, 7), pr(10, 29));
        let inf = ProjectiveRational::infinity();
        assert_eq!(&inf + &inf, inf);
        assert_eq!(&inf + &x, inf);
    }

    #[test]
    fn scalar_and_negation() {
        assert_eq!(pr(1, 2).scalar_mul(3), pr(1, 6));
        assert_eq!(pr(2, 5).scalar_mul(-1), pr(2, -5));
        assert_eq!(pr(2, 5).neg(), pr(2, -5));
        assert_eq!(pr(9, 4).scalar_mul(0), ProjectiveRational::zero());
        assert_eq!(ProjectiveRational::infinity().scalar_mul(-4), ProjectiveRational::infinity());
    }

    #[test]
    fn sign_examples() {
        assert_eq!(ProjectiveRational::zero().sign(), 0);
        assert_eq!(ProjectiveRational::infinity().sign(), 0);
        assert_eq!(pr(3, 2).sign(), 1);
        assert_eq!(pr(2, -5).sign(), -1);
    }

    #[test]
    fn parse_and_json() {
        assert_eq!("[3:-1]".parse::<ProjectiveRational>().unwrap(), pr(3, -1));
        assert_eq!("0/1".parse::<ProjectiveRational>().unwrap(), ProjectiveRational::infinity());
        assert!("3".parse::<ProjectiveRational>().is_err());
        assert_eq!(serde_json::to_string(&pr(-6, 2)).unwrap(), "[3,-1]");
        let back: ProjectiveRational = serde_json::from_str("[4,-2]").unwrap();
        assert_eq!(back, pr(2, -1));
    }

    #[test]
    fn from_rationals_clears_denominators() {
        let p = crate::linalg::ratio(1, 2);
        let q = crate::linalg::ratio(-1, 3);
        assert_eq!(ProjectiveRational::from_rationals(&p, &q).unwrap(), pr(3, -2));
    }
}
