//! Exact scalars and small vector helpers.
//!
//! Every quantity in the library is either an arbitrary-precision integer or an
//! arbitrary-precision rational. There is no floating point anywhere.

use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub type Integer = BigInt;
pub type Rational = BigRational;

pub fn int(n: i64) -> Integer {
    Integer::from(n)
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(Integer::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(Integer::from(n), Integer::from(d))
}

pub fn rat_vec(v: &[i64]) -> Vec<Rational> {
    v.iter().copied().map(rat).collect()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn is_integral_vec(v: &[Rational]) -> bool {
    v.iter().all(|x| x.is_integer())
}

/// Converts an integral rational vector to integers. Panics on fractional input.
pub fn to_integers(v: &[Rational]) -> Vec<Integer> {
    v.iter()
        .map(|x| {
            assert!(x.is_integer(), "expected an integer, found {x}");
            x.to_integer()
        })
        .collect()
}

pub fn from_integers(v: &[Integer]) -> Vec<Rational> {
    v.iter().cloned().map(Rational::from_integer).collect()
}

/// Formats a rational as `n` or `p/q`.
pub fn format_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn format_vec(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(format_rational).collect();
    format!("({})", parts.join(","))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not an exact number: {0:?}")]
pub struct ParseRationalError(pub String);

/// Parses `"n"`, `"-n"` or `"p/q"` with `q != 0`.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let bad = || ParseRationalError(s.to_string());
    let t = s.trim();
    match t.split_once('/') {
        Some((p, q)) => {
            let p = Integer::from_str(p.trim()).map_err(|_| bad())?;
            let q = Integer::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Integer::from_str(t).map(Rational::from_integer).map_err(|_| bad()),
    }
}

/// Serde wrapper for an exact rational: JSON integers or `"p/q"` strings.
/// Floats are rejected.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exact(pub Rational);

impl From<Rational> for Exact {
    fn from(r: Rational) -> Self {
        Exact(r)
    }
}

impl From<i64> for Exact {
    fn from(n: i64) -> Self {
        Exact(rat(n))
    }
}

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.0))
    }
}

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if self.0.is_integer() {
            let n = self.0.numer();
            if let Ok(small) = i64::try_from(n) {
                return serializer.serialize_i64(small);
            }
        }
        serializer.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for Exact {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct ExactVisitor;

        impl Visitor<'_> for ExactVisitor {
            type Value = Exact;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a \"p/q\" string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Exact, E> {
                Ok(Exact(rat(v)))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Exact, E> {
                Ok(Exact(Rational::from_integer(Integer::from(v))))
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> Result<Exact, E> {
                Err(E::custom(format!(
                    "floating-point value {v} is not allowed; write integers or \"p/q\""
                )))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Exact, E> {
                parse_rational(v).map(Exact).map_err(E::custom)
            }
        }

        deserializer.deserialize_any(ExactVisitor)
    }
}

pub fn to_exact(v: &[Rational]) -> Vec<Exact> {
    v.iter().cloned().map(Exact).collect()
}

pub fn from_exact(v: &[Exact]) -> Vec<Rational> {
    v.iter().map(|e| e.0.clone()).collect()
}

/// Greatest common divisor of a list of integers (0 for an all-zero list).
pub fn gcd_all(v: &[Integer]) -> Integer {
    use num::Integer as _;
    v.iter().fold(Integer::zero(), |acc, x| acc.gcd(x))
}

/// Scales a rational vector by a positive factor so it becomes a primitive
/// integer vector. The zero vector maps to itself.
pub fn primitive_integer_direction(v: &[Rational]) -> Vec<Integer> {
    use num::Integer as _;
    let lcm = v
        .iter()
        .fold(Integer::one(), |acc, x| acc.lcm(x.denom()));
    let scaled: Vec<Integer> = v
        .iter()
        .map(|x| (x * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = gcd_all(&scaled);
    if g.is_zero() {
        return scaled;
    }
    scaled.into_iter().map(|x| x / &g).collect()
}

pub fn sign(x: &Rational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}
