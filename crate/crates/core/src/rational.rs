//! Helpers around [`num_rational::BigRational`]: text forms, decimal
//! rendering, factorials.
//!
//! Decimal strings are for display only; every comparison in this crate is
//! done on exact values.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use num_rational::BigRational as Rational;

/// `"num/den"`, or just `"num"` when the denominator is 1.
pub fn to_fraction_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"num/den"` or an integer.
pub fn parse_fraction(s: &str) -> Result<BigRational> {
    let bad = |reason: String| Error::Parse {
        input: s.to_string(),
        reason,
    };
    let (n, d) = match s.trim().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|e| bad(format!("numerator: {e}")))?;
    let d: BigInt = d.parse().map_err(|e| bad(format!("denominator: {e}")))?;
    if d.is_zero() {
        return Err(bad("zero denominator".into()));
    }
    Ok(BigRational::new(n, d))
}

/// Fixed-point rendering rounded half away from zero to `places` digits.
pub fn to_decimal_string(r: &BigRational, places: usize) -> String {
    let scale = BigInt::from(10u32).pow(places as u32);
    let scaled = r.abs() * BigRational::from_integer(scale);
    let rounded = (scaled + BigRational::new(BigInt::one(), BigInt::from(2))).floor();
    let digits = rounded.to_integer().to_string();
    let sign = if r.is_negative() && !rounded.is_zero() {
        "-"
    } else {
        ""
    };
    if places == 0 {
        return format!("{sign}{digits}");
    }
    let padded = format!("{digits:0>width$}", width = places + 1);
    let (int, frac) = padded.split_at(padded.len() - places);
    format!("{sign}{int}.{frac}")
}

/// Scientific rendering with `sig` significant digits, e.g. `1.60388e-9`.
pub fn to_scientific_string(r: &BigRational, sig: usize) -> String {
    let sig = sig.max(1);
    if r.is_zero() {
        return "0".into();
    }
    let mag = r.abs();
    // exponent e with 10^e <= mag < 10^(e+1)
    let mut e: i64 = mag.numer().to_string().len() as i64 - mag.denom().to_string().len() as i64;
    let pow10 = |e: i64| {
        if e >= 0 {
            BigRational::from_integer(BigInt::from(10u32).pow(e as u32))
        } else {
            BigRational::new(BigInt::one(), BigInt::from(10u32).pow((-e) as u32))
        }
    };
    while pow10(e) > mag {
        e -= 1;
    }
    while pow10(e + 1) <= mag {
        e += 1;
    }
    let scaled = &mag / pow10(e - (sig as i64 - 1));
    let mut mantissa = (scaled + BigRational::new(BigInt::one(), BigInt::from(2)))
        .floor()
        .to_integer();
    if mantissa >= BigInt::from(10u32).pow(sig as u32) {
        mantissa /= 10;
        e += 1;
    }
    let digits = mantissa.to_string();
    let (head, tail) = digits.split_at(1);
    let sign = if r.is_negative() { "-" } else { "" };
    if tail.is_empty() {
        format!("{sign}{head}e{e}")
    } else {
        format!("{sign}{head}.{tail}e{e}")
    }
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// `p (p-1) ... (p-q+1)`; the empty product for `q = 0`.
pub fn falling_factorial(p: u64, q: u64) -> BigUint {
    assert!(q <= p, "falling factorial needs q <= p");
    (p - q + 1..=p).map(BigUint::from).product()
}

pub fn ratio(num: &BigUint, den: &BigUint) -> BigRational {
    BigRational::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
}

pub fn from_uint(n: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(n.clone()))
}

/// `1 / n`.
pub fn reciprocal(n: &BigUint) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(n.clone()))
}

pub fn is_reduced(r: &BigRational) -> bool {
    r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
}
