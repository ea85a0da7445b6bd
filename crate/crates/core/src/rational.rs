//! Exact rational scalars and their canonical text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer, Visitor};
use std::fmt;

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p`, `-p` or `p/q` (q > 0). Surrounding whitespace is ignored.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::InvalidRational(text.to_string());
    let s = text.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        t.parse::<BigInt>().map_err(|_| bad())
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let d = parse_int(d)?;
            if !d.is_positive() {
                return Err(bad());
            }
            Ok(Rational::new(parse_int(n)?, d))
        }
    }
}

/// Canonical text: `p` for integers, `p/q` in lowest terms otherwise.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Parses a comma separated list such as `"1,1/2,3"`.
pub fn parse_rational_list(text: &str) -> Result<Vec<Rational>> {
    text.split(',').map(parse_rational).collect()
}

/// Serde helper: accepts `"p/q"` strings as well as JSON integers.
pub(crate) fn deserialize_rational<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
    struct RationalVisitor;
    impl Visitor<'_> for RationalVisitor {
        type Value = Rational;
        fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
            f.write_str("a rational as \"p/q\" string or an integer")
        }
        fn visit_str<E: de::Error>(self, v: &str) -> Result<Rational, E> {
            parse_rational(v).map_err(E::custom)
        }
        fn visit_i64<E: de::Error>(self, v: i64) -> Result<Rational, E> {
            Ok(int(v))
        }
        fn visit_u64<E: de::Error>(self, v: u64) -> Result<Rational, E> {
            Ok(Rational::from_integer(BigInt::from(v)))
        }
    }
    d.deserialize_any(RationalVisitor)
}

#[derive(serde::Deserialize)]
#[serde(transparent)]
pub(crate) struct RationalRepr(#[serde(deserialize_with = "deserialize_rational")] pub Rational);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_formats_canonically() {
        assert_eq!(parse_rational("4/6").unwrap(), frac(2, 3));
        assert_eq!(format_rational(&parse_rational("4/6").unwrap()), "2/3");
        assert_eq!(format_rational(&parse_rational("-8/4").unwrap()), "-2");
        assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
    }

    #[test]
    fn rejects_malformed() {
        for s in ["", "1/0", "1/-2", "a", "1.5", "1/", "/2", "--1"] {
            assert!(parse_rational(s).is_err(), "{s}");
        }
    }
}
