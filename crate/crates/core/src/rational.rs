//! Exact rational scalars and their text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Lowest terms with the sign on the numerator; integers print without a
/// denominator.
pub fn format(q: &Rational) -> String {
    // BigRational keeps itself reduced with a positive denominator
    q.to_string()
}

pub fn parse(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = || Error::Parse(format!("not a rational number: {text:?}"));
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}
