//! Exact rational values.
//!
//! Every utility, welfare, and ratio in the crate is a [`Fraction`]:
//! an arbitrary-precision rational kept in lowest terms with a positive
//! denominator, so equality and ordering are exact. Serialized form is
//! always the string `"p/q"`.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::ToPrimitive;
use num::Zero;

use crate::error::Error;

/// Exact rational number; always reduced, denominator always positive.
pub type Fraction = BigRational;

/// Shorthand constructor from machine integers. Panics on a zero
/// denominator, like `BigRational::new`.
pub fn frac(numerator: i64, denominator: i64) -> Fraction {
    BigRational::new(BigInt::from(numerator), BigInt::from(denominator))
}

/// Whole-number fraction `n/1`.
pub fn frac_int(n: i64) -> Fraction {
    BigRational::from_integer(BigInt::from(n))
}

/// Canonical display form `p/q` (integers render as `p/1`).
pub fn format_frac(f: &Fraction) -> String {
    format!("{}/{}", f.numer(), f.denom())
}

/// Parses `"p/q"` or a bare integer `"p"`.
pub fn parse_frac(s: &str) -> Result<Fraction, Error> {
    let bad = || Error::BadFraction(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// Six-decimal convenience rendering; display-only, never used in
/// comparisons.
pub fn approx_decimal(f: &Fraction) -> String {
    let n = f.numer().to_f64().unwrap_or(f64::NAN);
    let d = f.denom().to_f64().unwrap_or(f64::NAN);
    format!("{:.6}", n / d)
}

/// Serde adapter serializing a [`Fraction`] as the string `"p/q"`.
pub mod serde_frac {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::{format_frac, parse_frac, Fraction};

    pub fn serialize<S: Serializer>(f: &Fraction, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_frac(f))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Fraction, D::Error> {
        let s = String::deserialize(d)?;
        parse_frac(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for `Option<Fraction>`: `"p/q"` when present, the literal
/// string `"undefined"` when absent.
pub mod serde_frac_opt {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::{format_frac, parse_frac, Fraction};

    pub fn serialize<S: Serializer>(f: &Option<Fraction>, s: S) -> Result<S::Ok, S::Error> {
        match f {
            Some(f) => s.serialize_str(&format_frac(f)),
            None => s.serialize_str("undefined"),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Fraction>, D::Error> {
        let s = String::deserialize(d)?;
        if s == "undefined" {
            Ok(None)
        } else {
            parse_frac(&s).map(Some).map_err(serde::de::Error::custom)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fractions_reduce_and_compare_exactly() {
        assert_eq!(frac(34, 100), frac(17, 50));
        assert!(frac(34, 100) > frac(1, 3));
        assert!(frac(35, 101) < frac(49, 100));
        assert_eq!(frac(1, 2) + frac(1, 2), frac_int(1));
    }

    #[test]
    fn format_and_parse_round_trip() {
        for f in [frac(3, 2), frac(-7, 3), frac_int(0), frac(57, 5)] {
            assert_eq!(parse_frac(&format_frac(&f)).unwrap(), f);
        }
        assert_eq!(parse_frac("4").unwrap(), frac_int(4));
        assert!(parse_frac("1/0").is_err());
        assert!(parse_frac("x/2").is_err());
    }

    #[test]
    fn decimal_rendering_is_six_places() {
        assert_eq!(approx_decimal(&frac(1, 3)), "0.333333");
        assert_eq!(approx_decimal(&frac(3, 2)), "1.500000");
    }
}
