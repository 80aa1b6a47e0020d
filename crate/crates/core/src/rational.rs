//! Arbitrary-precision rational scalars.
//!
//! All exact-lane arithmetic runs over `num_rational::BigRational`, which
//! keeps every value in lowest terms with the sign on the numerator. The
//! helpers here cover construction from machine integers and the `"p/q"`
//! interchange format used by the JSON/CSV encoders.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Canonical reduced fraction with a `BigInt` numerator and denominator.
pub type Rational = BigRational;

/// Rational from an integer numerator/denominator pair.
///
/// Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Rational from an integer.
pub fn rint(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Renders `x` as `"p/q"`, or just `"p"` when the denominator is 1.
pub fn render_rational(x: &Rational) -> String {
    x.to_string()
}

/// Parses the `"p/q"` / `"p"` format produced by [`render_rational`].
///
/// Unlike `BigRational::from_str` this rejects a zero denominator instead of
/// panicking. Non-canonical inputs such as `"2/4"` or `"3/-4"` are accepted
/// and reduced.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::ParseRational(s.to_string());
    let parse_int = |t: &str| t.parse::<BigInt>().map_err(|_| bad());
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let numer = parse_int(p)?;
            let denom = parse_int(q)?;
            if denom.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(numer, denom))
        }
    }
}

/// Nearest `f64`, used when handing exact matrices to the spectral lane.
pub fn to_f64(x: &Rational) -> f64 {
    num_traits::ToPrimitive::to_f64(x).unwrap_or_else(|| {
        // Fall back to a quotient of roundings for magnitudes outside f64
        // range; good enough for diagnostics, never hit by the wheel checks.
        let n = num_traits::ToPrimitive::to_f64(x.numer()).unwrap_or(f64::MAX);
        let d = num_traits::ToPrimitive::to_f64(x.denom()).unwrap_or(f64::MAX);
        n / d
    })
}

/// Absolute value.
pub fn abs(x: &Rational) -> Rational {
    x.abs()
}
