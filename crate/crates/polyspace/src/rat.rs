//! Exact rational scalars and their string forms.
//!
//! All arithmetic in this crate runs over [`Rat`], an arbitrary-precision
//! rational. Rationals print and parse as `p/q` (or a bare integer when the
//! denominator is one), which is also the JSON wire format.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exact rational scalar.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `p/q`.
pub fn ratio(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `p/q` or a bare integer. Whitespace around tokens is accepted.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let mk_err = || Error::InvalidInput(format!("cannot parse rational from {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), Some(q.trim())),
        None => (s, None),
    };
    let p: BigInt = num.parse().map_err(|_| mk_err())?;
    let q: BigInt = match den {
        Some(q) => q.parse().map_err(|_| mk_err())?,
        None => BigInt::one(),
    };
    if q.is_zero() {
        return Err(Error::InvalidInput(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(p, q))
}

/// Parses a comma-separated list of rationals, e.g. `1,1,2,2,3` or `1/2,3,5/4`.
pub fn parse_rat_list(s: &str) -> Result<Vec<Rat>> {
    s.split(',').map(parse_rat).collect()
}

/// Canonical string form: `p/q`, or `p` when the denominator is one.
pub fn rat_to_string(r: &Rat) -> String {
    r.to_string()
}

/// Scales a rational vector to the smallest integer vector with the same
/// ratios. The input must be strictly positive.
pub fn integerize(values: &[Rat]) -> Vec<BigInt> {
    use num_integer::Integer;
    debug_assert!(values.iter().all(|v| v.is_positive()));
    let mut lcm = BigInt::one();
    for v in values {
        lcm = lcm.lcm(v.denom());
    }
    let scaled: Vec<BigInt> = values
        .iter()
        .map(|v| v.numer() * (&lcm / v.denom()))
        .collect();
    let mut gcd = BigInt::zero();
    for s in &scaled {
        gcd = gcd.gcd(s);
    }
    scaled.into_iter().map(|s| s / &gcd).collect()
}
