//! Exact rationals.
//!
//! The coefficient field is `BigRational`: lowest terms, positive denominator,
//! arbitrary precision. Serialization is `"p/q"`, or `"p"` when `q = 1`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::str::FromStr;

use crate::error::Error;

pub type Q = num_rational::BigRational;

/// The rational `n`.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// The rational `n / d`. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Q {
    Q::zero()
}

pub fn one() -> Q {
    Q::one()
}

/// Canonical text form: `"p/q"`, or `"p"` for integers.
pub fn format_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `"p"`, `"p/q"` or `"-p/q"`. Zero denominators are rejected.
pub fn parse_q(s: &str) -> Result<Q, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        None => BigInt::from_str(s).map(Q::from_integer).map_err(|_| bad()),
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
    }
}

/// `n!` as a rational.
pub fn factorial(n: usize) -> Q {
    (1..=n).fold(one(), |acc, k| acc * q(k as i64))
}

/// serde adapter writing rationals as canonical strings.
pub mod serde_q {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_q(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Int(i64),
        }
        match Raw::deserialize(d)? {
            Raw::Text(t) => parse_q(&t).map_err(serde::de::Error::custom),
            Raw::Int(i) => Ok(q(i)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_round_trips() {
        for (x, s) in [(frac(1, 2), "1/2"), (q(3), "3"), (frac(-4, 6), "-2/3"), (zero(), "0")] {
            assert_eq!(format_q(&x), s);
            assert_eq!(parse_q(s).unwrap(), x);
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
        assert!(parse_q("").is_err());
    }

    #[test]
    fn lowest_terms() {
        let x = frac(6, -4);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
    }
}
