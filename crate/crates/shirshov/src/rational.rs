//! Exact rational coefficients. No floating point anywhere in the crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Coefficient field: arbitrary-precision rationals.
pub type Coefficient = BigRational;

pub fn rat(n: i64) -> Coefficient {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Coefficient {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `-1`, `3/2`, `+7` style rationals.
pub fn parse_rational(s: &str) -> Result<Coefficient> {
    let t = s.trim();
    let parse_int = |p: &str| -> Result<BigInt> {
        p.parse::<BigInt>()
            .map_err(|_| Error::parse(0, format!("invalid rational `{s}`")))
    };
    match t.split_once('/') {
        Some((n, d)) => {
            let num = parse_int(n.trim())?;
            let den = parse_int(d.trim())?;
            if den.is_zero() {
                return Err(Error::parse(0, format!("zero denominator in `{s}`")));
            }
            Ok(BigRational::new(num, den))
        }
        None => Ok(BigRational::from_integer(parse_int(t)?)),
    }
}

/// Canonical text: integers print bare, everything else as `n/d`.
pub fn format_rational(c: &Coefficient) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn is_negative(c: &Coefficient) -> bool {
    c.is_negative()
}
