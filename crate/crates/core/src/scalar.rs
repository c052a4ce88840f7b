//! Exact rational scalars.
//!
//! Every coordinate in the engine is a [`Scalar`], an arbitrary-precision
//! rational kept in lowest terms with a positive denominator.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical `p/q` text, always carrying the denominator (`"3/1"`, `"-7/5"`).
pub fn to_canonical(s: &Scalar) -> String {
    format!("{}/{}", s.numer(), s.denom())
}

pub fn to_f64(s: &Scalar) -> f64 {
    s.to_f64().unwrap_or_else(|| {
        // Ratios whose parts overflow f64 individually.
        let n = s.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = s.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseScalarError(pub String);

impl fmt::Display for ParseScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational literal {:?}", self.0)
    }
}

impl std::error::Error for ParseScalarError {}

/// Parses `p`, `p/q` or `-p/q` with decimal integers and a nonzero `q`.
pub fn parse(text: &str) -> Result<Scalar, ParseScalarError> {
    let err = || ParseScalarError(text.to_string());
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let valid_int = |s: &str| {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid_int(num) {
        return Err(err());
    }
    let n = BigInt::from_str(num).map_err(|_| err())?;
    let d = match den {
        Some(d) if !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()) => {
            BigInt::from_str(d).map_err(|_| err())?
        }
        Some(_) => return Err(err()),
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(err());
    }
    Ok(Scalar::new(n, d))
}

pub fn abs_max<'a>(values: impl IntoIterator<Item = &'a Scalar>) -> Scalar {
    values
        .into_iter()
        .map(|v| v.abs())
        .fold(Scalar::zero(), |acc, v| if v > acc { v } else { acc })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_text_keeps_denominator() {
        assert_eq!(to_canonical(&int(3)), "3/1");
        assert_eq!(to_canonical(&ratio(14, -10)), "-7/5");
        assert_eq!(to_canonical(&Scalar::zero()), "0/1");
    }

    #[test]
    fn parses_literals() {
        assert_eq!(parse("-3/2").unwrap(), ratio(-3, 2));
        assert_eq!(parse("4").unwrap(), int(4));
        assert_eq!(parse(" 10/4 ").unwrap(), ratio(5, 2));
        for bad in ["", "/", "1/0", "zebra", "1.5", "--1", "1/2/3", "6/-4"] {
            assert!(parse(bad).is_err(), "{bad}");
        }
    }
}
