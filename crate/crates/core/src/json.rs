//! Number encodings shared by every JSON output.
//!
//! Integers of any size are written as bare JSON numbers, rationals as
//! `{"num": .., "den": ..}` and reals with 17 significant digits.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::polynomial::Rational;

/// Arbitrary-precision integer written as a JSON number without rounding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let number = serde_json::Number::from_str(&self.0.to_string())
            .map_err(serde::ser::Error::custom)?;
        number.serialize(serializer)
    }
}

/// A rational as `{num, den}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JsonRational {
    pub num: JsonInt,
    pub den: JsonInt,
}

impl From<&Rational> for JsonRational {
    fn from(r: &Rational) -> Self {
        JsonRational {
            num: JsonInt(r.numer().clone()),
            den: JsonInt(r.denom().clone()),
        }
    }
}

/// A double written with 17 significant digits; non-finite values become `null`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JsonReal(pub f64);

impl Serialize for JsonReal {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return serializer.serialize_none();
        }
        let number = serde_json::Number::from_str(&format_real(self.0))
            .map_err(serde::ser::Error::custom)?;
        number.serialize(serializer)
    }
}

/// `x` in scientific notation with 17 significant digits, e.g. `1.4142135623730951e0`.
pub fn format_real(x: f64) -> String {
    format!("{x:.16e}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::ratio;

    #[test]
    fn rational_record() {
        let r = ratio(-6, 8);
        let s = serde_json::to_string(&JsonRational::from(&r)).unwrap();
        assert_eq!(s, r#"{"num":-3,"den":4}"#);
    }

    #[test]
    fn real_has_seventeen_significant_digits() {
        let s = serde_json::to_string(&JsonReal(2f64.sqrt())).unwrap();
        assert_eq!(s, "1.4142135623730951e+0");
        let back: f64 = s.parse().unwrap();
        assert_eq!(back, 2f64.sqrt());
        assert_eq!(serde_json::to_string(&JsonReal(f64::NAN)).unwrap(), "null");
    }
}
