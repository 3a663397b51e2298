//! Exact rational scalar used by every representation-theoretic formula.
//!
//! `Rational` is `num`'s arbitrary-precision `BigRational` (always reduced,
//! denominator positive). This module adds the small constructors the rest
//! of the crate uses, plus the wire format: a rational serializes as the
//! two-element string array `["num", "den"]`, never as a float.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

pub type Rational = BigRational;

/// `n/d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Exact integer power with possibly negative exponent.
/// Panics when the base is zero and the exponent negative.
pub fn pow_i32(base: &Rational, exp: i32) -> Rational {
    if exp == 0 {
        return Rational::one();
    }
    let mut acc = Rational::one();
    let positive = base.clone();
    let b = if exp < 0 { positive.recip() } else { positive };
    for _ in 0..exp.unsigned_abs() {
        acc *= &b;
    }
    acc
}

/// Wire format `["num","den"]`.
pub fn to_string_pair(x: &Rational) -> [String; 2] {
    [x.numer().to_string(), x.denom().to_string()]
}

/// Parse the wire format back. Accepts any integer strings; reduces.
pub fn from_string_pair(num: &str, den: &str) -> Option<Rational> {
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = den.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

/// True when `x` is an integer.
pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

/// Nearest `f64` (for numeric consumers; the exact path never calls this).
pub fn to_f64(x: &Rational) -> f64 {
    let n = x.numer();
    let d = x.denom();
    // Falls back to string parsing only for values outside f64 range,
    // which we do not produce in practice.
    match (n.to_string().parse::<f64>(), d.to_string().parse::<f64>()) {
        (Ok(a), Ok(b)) => a / b,
        _ => f64::NAN,
    }
}

/// Exact conversion of a finite `f64` (every finite float is rational).
pub fn from_f64_exact(x: f64) -> Option<Rational> {
    BigRational::from_float(x)
}

/// `|x|`.
pub fn abs(x: &Rational) -> Rational {
    x.abs()
}
