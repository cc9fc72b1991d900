//! Arbitrary-precision rational scalars.
//!
//! `Rat` is `num_rational::BigRational`, which maintains exactly the
//! invariants we need: always reduced, denominator positive, zero is 0/1.
//! The helpers here cover construction, parsing of "p/q" strings, and the
//! coefficient-height measure used for pivot tie-breaking.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rat = num_rational::BigRational;

/// Rational from a machine integer.
pub fn rat_i(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational p/q from machine integers. Panics if `q == 0`.
pub fn rat_frac(p: i64, q: i64) -> Rat {
    assert!(q != 0, "zero denominator");
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn rat_zero() -> Rat {
    Rat::zero()
}

pub fn rat_one() -> Rat {
    Rat::one()
}

/// Height of a rational: max(|numerator|, denominator). Used only for
/// deterministic tie-breaking, never for correctness.
pub fn height(r: &Rat) -> BigInt {
    let n = r.numer().abs();
    let d = r.denom().abs();
    if n > d {
        n
    } else {
        d
    }
}

/// Canonical string form: "p" for integers, "p/q" otherwise.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse "p" or "p/q" with optional sign.
pub fn rat_from_str(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().ok()?;
        let d: BigInt = den.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rat::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(Rat::from_integer(n))
    }
}
