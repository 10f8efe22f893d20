use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact arbitrary-precision rational, the value type of every capacity.
pub type Rational = num_rational::BigRational;

/// Shorthand for small literals: `rat(1, 3)` is 1/3.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Parses `"p/q"` or an integer literal, rejecting zero denominators.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::BadRational(s.to_string());
    let t = s.trim();
    match t.split_once('/') {
        Some((p, q)) => {
            let numer: BigInt = p.trim().parse().map_err(|_| bad())?;
            let denom: BigInt = q.trim().parse().map_err(|_| bad())?;
            if denom.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(numer, denom))
        }
        None => {
            let numer: BigInt = t.parse().map_err(|_| bad())?;
            Ok(Rational::from(numer))
        }
    }
}

/// Renders a rational as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True when `r` is negative.
pub fn is_negative(r: &Rational) -> bool {
    r.is_negative()
}
