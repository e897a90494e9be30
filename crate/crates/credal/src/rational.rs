//! Exact rational scalars. Every numeric value in the crate is a reduced
//! fraction; nothing downstream ever touches floating point.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{CredalError, Result};

/// Arbitrary-precision rational, always stored reduced with a positive
/// denominator.
pub type Rational = BigRational;

/// Shorthand for small fractions in literals and tests.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for small integers.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `12`, `-3/4` or a finite decimal such as `0.24` into the exact
/// fraction it denotes (`0.24` becomes `6/25`).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    if s.is_empty() {
        return Err(CredalError::InvalidValue("empty numeric token".into()));
    }
    let bad = || CredalError::InvalidValue(format!("malformed number `{s}`"));
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.parse().map_err(|_| bad())?;
        let d: BigInt = den.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(CredalError::InvalidValue(format!(
                "zero denominator in `{s}`"
            )));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let sign = if whole.starts_with('-') { -1 } else { 1 };
        let whole_part: BigInt = if whole.is_empty() || whole == "-" || whole == "+" {
            BigInt::zero()
        } else {
            whole.parse().map_err(|_| bad())?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let frac_digits: BigInt = frac.parse().map_err(|_| bad())?;
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let numer = whole_part.abs() * &scale + frac_digits;
        return Ok(Rational::new(numer * BigInt::from(sign), scale));
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(n))
}

/// Canonical text form: plain integer when the denominator is one,
/// `num/den` otherwise.
pub fn render_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_strings_parse_exactly() {
        assert_eq!(parse_rational("0.24").unwrap(), rat(6, 25));
        assert_eq!(parse_rational("0.1").unwrap(), rat(1, 10));
        assert_eq!(parse_rational("-0.5").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("2/15").unwrap(), rat(2, 15));
        assert_eq!(parse_rational("-3/4").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert_eq!(parse_rational(".5").unwrap(), rat(1, 2));
    }

    #[test]
    fn malformed_numbers_are_rejected() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1.2.3").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1e3").is_err());
    }

    #[test]
    fn render_is_reduced_and_plain() {
        assert_eq!(render_rational(&parse_rational("0.24").unwrap()), "6/25");
        assert_eq!(render_rational(&rat(4, 2)), "2");
        assert_eq!(render_rational(&rat(-6, 8)), "-3/4");
        assert_eq!(render_rational(&int(0)), "0");
    }
}
