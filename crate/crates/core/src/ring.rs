//! Ring and field abstractions.
//!
//! Everything downstream (polynomials, rational functions, the bihyperbolic
//! algebra) is generic over a commutative [`Ring`]. Arithmetic is by value:
//! the element types here are arbitrary-precision, so operands are cloned
//! explicitly at call sites rather than hidden behind reference impls.

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A commutative ring with identity and exact equality.
pub trait Ring:
    Clone
    + Eq
    + Debug
    + Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_int(n: i64) -> Self;

    /// Repeated-squaring power with the convention `r.pow(0) == one`.
    fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base.clone();
            }
            exp >>= 1;
            if exp > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    /// Multiplicative inverse; `Err(DivisionByZero)` on zero.
    fn inv(&self) -> Result<Self>;

    fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.clone() * other.inv()?)
    }

    /// Signed power: negative exponents invert first.
    fn pow_i(&self, exp: i64) -> Result<Self> {
        if exp >= 0 {
            Ok(self.pow(exp as u64))
        } else {
            Ok(self.inv()?.pow(exp.unsigned_abs()))
        }
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_one(&self) -> bool {
        One::is_one(self)
    }

    fn from_int(n: i64) -> Self {
        BigInt::from(n)
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_one(&self) -> bool {
        One::is_one(self)
    }

    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

impl Field for BigRational {
    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
}

/// Parses an exact rational from `p`, `-p/q`, or `p/q` notation.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::InvalidParams(format!("`{s}` is not an exact rational")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::InvalidParams(format!("`{s}` is not an exact rational")))?;
    if Zero::is_zero(&den) {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(num, den))
}

/// Renders a rational as `p` or `p/q` without spaces, matching [`parse_rational`].
pub fn format_rational(r: &BigRational) -> String {
    if One::is_one(r.denom()) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Greatest common divisor with the convention `gcd(0, 0) == 0`, result non-negative.
pub fn gcd_bigint(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !Zero::is_zero(&b) {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pow_matches_repeated_multiplication() {
        let three = BigInt::from(3);
        assert_eq!(three.pow(0), BigInt::from(1));
        assert_eq!(three.pow(1), BigInt::from(3));
        assert_eq!(three.pow(5), BigInt::from(243));
    }

    #[test]
    fn rational_inverse() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(half.inv().unwrap(), BigRational::from_integer(BigInt::from(2)));
        assert_eq!(
            <BigRational as Ring>::zero().inv(),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn signed_power_inverts() {
        let two = BigRational::from_integer(BigInt::from(2));
        assert_eq!(
            two.pow_i(-3).unwrap(),
            BigRational::new(BigInt::from(1), BigInt::from(8))
        );
    }

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "5", "-7", "3/4", "-22/7"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
        // Non-canonical input normalizes.
        assert_eq!(format_rational(&parse_rational("4/2").unwrap()), "2");
        assert_eq!(format_rational(&parse_rational("1/-2").unwrap()), "-1/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn gcd_conventions() {
        assert_eq!(gcd_bigint(&BigInt::from(12), &BigInt::from(-18)), BigInt::from(6));
        assert_eq!(gcd_bigint(&BigInt::from(0), &BigInt::from(0)), BigInt::from(0));
        assert_eq!(gcd_bigint(&BigInt::from(0), &BigInt::from(-5)), BigInt::from(5));
    }
}
