//! Exact rational parsing.
//!
//! Frequency bounds enter the library as strings so that no binary rounding
//! happens before the integer floor/ceiling computations. Two forms are
//! accepted: plain decimals (`"0.13"`, `"1"`, `".5"`) and fractions of
//! integers (`"1/3"`).

use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use num_rational::BigRational;

/// Error produced by [`parse_rational`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseRationalError {
    /// The input was empty or contained no digits.
    Empty,
    /// A character outside `0-9`, `.`, `/`, `-`, `+` was found.
    InvalidCharacter(char),
    /// More than one `.` or `/`, or both at once.
    MalformedNumber(String),
    /// Fraction form with a zero denominator.
    ZeroDenominator,
}

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseRationalError::Empty => write!(f, "empty rational literal"),
            ParseRationalError::InvalidCharacter(c) => {
                write!(f, "invalid character {c:?} in rational literal")
            }
            ParseRationalError::MalformedNumber(s) => {
                write!(f, "malformed rational literal {s:?}")
            }
            ParseRationalError::ZeroDenominator => write!(f, "zero denominator"),
        }
    }
}

impl core::error::Error for ParseRationalError {}

fn parse_digits(s: &str) -> Result<BigInt, ParseRationalError> {
    let mut value = BigInt::zero();
    for c in s.chars() {
        let d = c
            .to_digit(10)
            .ok_or(ParseRationalError::InvalidCharacter(c))?;
        value = value * 10 + d;
    }
    Ok(value)
}

/// Parses a decimal (`"0.34"`) or fraction (`"17/50"`) string into an exact
/// rational, with an optional leading sign.
pub fn parse_rational(input: &str) -> Result<BigRational, ParseRationalError> {
    let s = input.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let (negative, body) = match s.as_bytes()[0] {
        b'-' => (true, &s[1..]),
        b'+' => (false, &s[1..]),
        _ => (false, s),
    };
    if body.is_empty() {
        return Err(ParseRationalError::Empty);
    }

    let value = if let Some((num, den)) = body.split_once('/') {
        if num.contains('.') || den.contains('.') || num.is_empty() || den.is_empty() {
            return Err(ParseRationalError::MalformedNumber(String::from(input)));
        }
        let den = parse_digits(den)?;
        if den.is_zero() {
            return Err(ParseRationalError::ZeroDenominator);
        }
        BigRational::new(parse_digits(num)?, den)
    } else {
        match body.split_once('.') {
            None => BigRational::from_integer(parse_digits(body)?),
            Some((int_part, frac_part)) => {
                if frac_part.contains('.') || (int_part.is_empty() && frac_part.is_empty()) {
                    return Err(ParseRationalError::MalformedNumber(String::from(input)));
                }
                let int_val = if int_part.is_empty() {
                    BigInt::zero()
                } else {
                    parse_digits(int_part)?
                };
                let frac_val = if frac_part.is_empty() {
                    BigInt::zero()
                } else {
                    parse_digits(frac_part)?
                };
                let mut den = BigInt::one();
                for _ in 0..frac_part.len() {
                    den *= 10;
                }
                BigRational::new(int_val * &den + frac_val, den)
            }
        }
    };

    Ok(if negative { -value } else { value })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn decimals() {
        assert_eq!(parse_rational("0.13").unwrap(), ratio(13, 100));
        assert_eq!(parse_rational("0.34").unwrap(), ratio(17, 50));
        assert_eq!(parse_rational("1").unwrap(), ratio(1, 1));
        assert_eq!(parse_rational("0").unwrap(), ratio(0, 1));
        assert_eq!(parse_rational(".5").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("2.").unwrap(), ratio(2, 1));
        assert_eq!(parse_rational("0.300").unwrap(), ratio(3, 10));
    }

    #[test]
    fn fractions() {
        assert_eq!(parse_rational("1/3").unwrap(), ratio(1, 3));
        assert_eq!(parse_rational("7/12").unwrap(), ratio(7, 12));
        assert_eq!(parse_rational("-1/2").unwrap(), ratio(-1, 2));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("-").is_err());
        assert!(parse_rational("1.2.3").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("0x1").is_err());
        assert!(parse_rational("1.5/2").is_err());
        assert!(parse_rational(".").is_err());
    }

    #[test]
    fn no_float_roundoff() {
        // 0.3 * 10 must be exactly 3, not 2.9999999999999996.
        let p = parse_rational("0.3").unwrap();
        let scaled = p * BigRational::from_integer(BigInt::from(10));
        assert_eq!(scaled.ceil().to_integer().to_i64().unwrap(), 3);
        assert_eq!(scaled.floor().to_integer().to_i64().unwrap(), 3);
    }
}
