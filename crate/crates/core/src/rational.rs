//! Arbitrary-precision rationals and their text/JSON encodings.
//!
//! A coefficient on the wire is a JSON integer, a JSON float (read through
//! its shortest decimal form), a decimal string such as `"0.25"`, or a
//! `"p/q"` string. Encoding emits integers as JSON numbers when they fit in
//! an `i64`, and everything else as a `"p/q"` string.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Parses an integer, a decimal literal (`-1.25`), or a `p/q` literal exactly.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = || Error::Number(text.to_string());
    if let Some((p, q)) = t.split_once('/') {
        let p = parse_decimal(p.trim()).ok_or_else(bad)?;
        let q = parse_decimal(q.trim()).ok_or_else(bad)?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(p / q);
    }
    parse_decimal(t).ok_or_else(bad)
}

/// Exact conversion of `[+-]digits[.digits]` (at least one digit overall).
pub(crate) fn parse_decimal(t: &str) -> Option<Rational> {
    let (negative, body) = match t.as_bytes().first()? {
        b'-' => (true, &t[1..]),
        b'+' => (false, &t[1..]),
        _ => (false, t),
    };
    let (whole, frac) = match body.split_once('.') {
        Some((w, f)) => (w, f),
        None => (body, ""),
    };
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole.bytes().all(|b| b.is_ascii_digit()) || !frac.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{whole}{frac}");
    let numer: BigInt = digits.parse().ok()?;
    let denom = num_traits::pow(BigInt::from(10u32), frac.len());
    let value = Rational::new(numer, denom);
    Some(if negative { -value } else { value })
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Serde adapter for a single exact coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coeff(pub Rational);

impl Serialize for Coeff {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if self.0.denom().is_one() {
            if let Some(v) = self.0.numer().to_i64() {
                return serializer.serialize_i64(v);
            }
        }
        serializer.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for Coeff {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct CoeffVisitor;

        impl Visitor<'_> for CoeffVisitor {
            type Value = Coeff;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer, a decimal string or a \"p/q\" string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Coeff, E> {
                Ok(Coeff(int(v)))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Coeff, E> {
                Ok(Coeff(Rational::from_integer(BigInt::from(v))))
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<Coeff, E> {
                if !v.is_finite() {
                    return Err(E::custom("non-finite coefficient"));
                }
                // Display gives the shortest decimal that round-trips.
                parse_decimal(&format!("{v}"))
                    .map(Coeff)
                    .ok_or_else(|| E::custom(format!("unrepresentable coefficient {v}")))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Coeff, E> {
                parse_rational(v).map(Coeff).map_err(E::custom)
            }
        }

        deserializer.deserialize_any(CoeffVisitor)
    }
}

pub(crate) fn coeffs_to_wire(values: &[Rational]) -> Vec<Coeff> {
    values.iter().cloned().map(Coeff).collect()
}

pub(crate) fn coeffs_from_wire(values: Vec<Coeff>) -> Vec<Rational> {
    values.into_iter().map(|c| c.0).collect()
}
