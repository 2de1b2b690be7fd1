//! Exact arithmetic over the dyadic rationals `Z[1/2]`.
//!
//! A [`Dyadic`] is stored as `numerator / 2^exponent` and is always kept in
//! canonical form: either the exponent is zero or the numerator is odd. Two
//! canonical values are equal exactly when their fields are equal, so the
//! derived `Eq` and `Hash` are value equality.
//!
//! Text form is `n/2^k`; integers are written bare (`7`). Parsing accepts
//! non-canonical input such as `4/2^3` and normalizes it.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: BigInt,
    exp: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("not a dyadic rational: {0:?}")]
pub struct ParseDyadicError(pub String);

impl Dyadic {
    /// Canonical form of `n / 2^k`.
    pub fn new(n: impl Into<BigInt>, k: u64) -> Dyadic {
        let mut num = n.into();
        if num.is_zero() {
            return Dyadic::zero();
        }
        let tz = num.trailing_zeros().unwrap_or(0).min(k);
        if tz > 0 {
            num >>= tz;
        }
        Dyadic { num, exp: k - tz }
    }

    pub fn zero() -> Dyadic {
        Dyadic {
            num: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn one() -> Dyadic {
        Dyadic::from(1)
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn exponent(&self) -> u64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.exp == 0
    }

    pub fn is_positive(&self) -> bool {
        self.num.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    pub fn abs(&self) -> Dyadic {
        Dyadic {
            num: self.num.abs(),
            exp: self.exp,
        }
    }

    /// Multiply by `2^e`; `e` may be negative.
    pub fn mul_pow2(&self, e: i64) -> Dyadic {
        if e >= 0 {
            let e = e as u64;
            if self.exp >= e {
                Dyadic {
                    num: self.num.clone(),
                    exp: self.exp - e,
                }
            } else {
                Dyadic {
                    num: &self.num << (e - self.exp),
                    exp: 0,
                }
            }
        } else {
            Dyadic::new(self.num.clone(), self.exp + e.unsigned_abs())
        }
    }

    /// Greatest integer `<= self`.
    pub fn floor(&self) -> BigInt {
        if self.exp == 0 {
            self.num.clone()
        } else {
            self.num.div_floor(&(BigInt::one() << self.exp))
        }
    }

    /// Least integer `>= self`.
    pub fn ceil(&self) -> BigInt {
        -(-self).floor()
    }

    /// Midpoint of `self` and `other`.
    pub fn midpoint(&self, other: &Dyadic) -> Dyadic {
        (self + other).mul_pow2(-1)
    }

    /// If `self / other` is a power of two `2^e`, returns `e`.
    ///
    /// Both operands must be strictly positive; otherwise `None`.
    pub fn pow2_ratio(&self, other: &Dyadic) -> Option<i64> {
        if !self.is_positive() || !other.is_positive() {
            return None;
        }
        let (odd_a, tz_a) = split_odd(&self.num);
        let (odd_b, tz_b) = split_odd(&other.num);
        if odd_a != odd_b {
            return None;
        }
        Some(tz_a as i64 - self.exp as i64 - tz_b as i64 + other.exp as i64)
    }

    fn aligned(&self, other: &Dyadic) -> (BigInt, BigInt, u64) {
        let e = self.exp.max(other.exp);
        (&self.num << (e - self.exp), &other.num << (e - other.exp), e)
    }
}

fn split_odd(n: &BigInt) -> (BigInt, u64) {
    let tz = n.trailing_zeros().unwrap_or(0);
    (n >> tz, tz)
}

impl From<i64> for Dyadic {
    fn from(n: i64) -> Dyadic {
        Dyadic {
            num: BigInt::from(n),
            exp: 0,
        }
    }
}

impl From<BigInt> for Dyadic {
    fn from(num: BigInt) -> Dyadic {
        Dyadic { num, exp: 0 }
    }
}

impl Default for Dyadic {
    fn default() -> Dyadic {
        Dyadic::zero()
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Dyadic) -> Ordering {
        if self.exp == other.exp {
            return self.num.cmp(&other.num);
        }
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Dyadic) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        let (a, b, e) = self.aligned(rhs);
        Dyadic::new(a + b, e)
    }
}

impl<'a> Sub<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        let (a, b, e) = self.aligned(rhs);
        Dyadic::new(a - b, e)
    }
}

impl<'a> Mul<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        Dyadic::new(&self.num * &rhs.num, self.exp + rhs.exp)
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            num: -&self.num,
            exp: self.exp,
        }
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            num: -self.num,
            exp: self.exp,
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Dyadic> for Dyadic {
            type Output = Dyadic;
            fn $m(self, rhs: Dyadic) -> Dyadic { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Dyadic> for Dyadic {
            type Output = Dyadic;
            fn $m(self, rhs: &Dyadic) -> Dyadic { (&self).$m(rhs) }
        }
        impl<'a> $tr<Dyadic> for &'a Dyadic {
            type Output = Dyadic;
            fn $m(self, rhs: Dyadic) -> Dyadic { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/2^{}", self.num, self.exp)
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Dyadic {
    type Err = ParseDyadicError;

    fn from_str(s: &str) -> Result<Dyadic, ParseDyadicError> {
        let err = || ParseDyadicError(s.to_string());
        let t = s.trim();
        let (n, k) = match t.split_once('/') {
            None => (t, "0"),
            Some((n, rest)) => (n, rest.strip_prefix("2^").ok_or_else(err)?),
        };
        if n.is_empty() || !valid_int(n) || k.is_empty() || !k.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let n: BigInt = n.parse().map_err(|_| err())?;
        let k: u64 = k.parse().map_err(|_| err())?;
        Ok(Dyadic::new(n, k))
    }
}

fn valid_int(s: &str) -> bool {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
}

impl Serialize for Dyadic {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Dyadic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Dyadic, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
