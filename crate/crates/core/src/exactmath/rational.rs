//! Parsing, formatting, and integer scaling of exact rationals.
//!
//! Rationals serialize as `"p/q"` or `"p"` strings everywhere (JSON included);
//! `num::BigRational` keeps them in lowest terms with a positive denominator.

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{ArrError, Result};

/// Parse `"p"` or `"p/q"` with optional sign. Rejects zero denominators
/// instead of panicking like `BigRational::new` would.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = |msg: &str| ArrError::Validation(format!("malformed rational {s:?}: {msg}"));
    if s.is_empty() {
        return Err(bad("empty"));
    }
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer: BigInt = num_str
        .parse()
        .map_err(|_| bad("numerator is not an integer"))?;
    let denom: BigInt = match den_str {
        Some(d) => d.parse().map_err(|_| bad("denominator is not an integer"))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(BigRational::new(numer, denom))
}

/// Format as `"p"` when integral, `"p/q"` otherwise.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Scale a rational vector to the unique primitive integer vector with the
/// same direction and the same sign of the first nonzero entry. Used for
/// display of hyperplane normals and edge keys.
pub fn primitive_integer_vector(v: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = num::integer::lcm(lcm, x.denom().clone());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut gcd = BigInt::zero();
    for x in &ints {
        gcd = num::integer::gcd(gcd, x.clone());
    }
    if gcd.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &gcd).collect()
}

/// Scale a rational vector so its first nonzero coordinate is 1.
/// This is the internal canonical form for hyperplane normals.
pub(crate) fn monic_vector(v: &[BigRational]) -> Option<Vec<BigRational>> {
    let lead = v.iter().find(|x| !x.is_zero())?;
    let lead = lead.clone();
    Some(v.iter().map(|x| x / &lead).collect())
}

/// Sign of a `BigInt` as -1, 0, 1 for canonicalization decisions.
pub(crate) fn int_sign(x: &BigInt) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}
