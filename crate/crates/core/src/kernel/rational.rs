//! Exact rationals and their text form.
//!
//! The backing type is `num_rational::BigRational`, which keeps values in
//! lowest terms with a positive denominator. Text form is `n` or `p/q` with
//! an optional leading minus and no whitespace.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::ParseError;

pub type Rational = BigRational;

/// Builds `num/den`. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

fn parse_digits(s: &str, whole: &str) -> Result<BigInt, ParseError> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::Rational(whole.to_string()));
    }
    s.parse::<BigInt>().map_err(|_| ParseError::Rational(whole.to_string()))
}

/// Parses the strict text form: `n`, `-n`, `p/q`, `-p/q`.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let (neg, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let value = match body.split_once('/') {
        Some((p, q)) => {
            let p = parse_digits(p, text)?;
            let q = parse_digits(q, text)?;
            if q.is_zero() {
                return Err(ParseError::Rational(text.to_string()));
            }
            BigRational::new(p, q)
        }
        None => BigRational::from_integer(parse_digits(body, text)?),
    };
    Ok(if neg { -value } else { value })
}

pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Nearest `f64`, used only for SVG coordinates.
pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

pub fn sign_of(q: &Rational) -> std::cmp::Ordering {
    if q.is_positive() {
        std::cmp::Ordering::Greater
    } else if q.is_negative() {
        std::cmp::Ordering::Less
    } else {
        std::cmp::Ordering::Equal
    }
}

/// Sets `base^exp` for non-negative exponents.
pub fn pow(base: &Rational, exp: u32) -> Rational {
    let mut acc = one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

pub mod serde_rational {
    //! Serde adapter storing rationals in their text form.
    use super::{format_rational, parse_rational, Rational};
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_text_forms() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-1/2").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("4/8").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("0/5").unwrap(), zero());
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "-", "1/0", "+1", " 1", "1 /2", "1/-2", "a", "1.5", "1//2", "--1"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    fn formats_lowest_terms() {
        assert_eq!(format_rational(&rat(6, -4)), "-3/2");
        assert_eq!(format_rational(&int(-7)), "-7");
        assert_eq!(format_rational(&zero()), "0");
    }

    #[test]
    fn float_conversion_is_close() {
        assert_eq!(to_f64(&rat(1, 2)), 0.5);
        assert!((to_f64(&rat(-1, 3)) + 1.0 / 3.0).abs() < 1e-15);
        assert!((to_f64(&rat(77, 256)) - 0.30078125).abs() < 1e-15);
        assert_eq!(to_f64(&zero()), 0.0);
    }
}
