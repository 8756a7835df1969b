//! Exact arithmetic in the field Q(ω), where ω is a primitive cube root of
//! unity: ω² = −ω − 1, hence ω³ = 1.
//!
//! Elements are stored on the basis {1, ω}. The two roots of λ² + λ + 1 = 0
//! are ω₁ = ω and ω₂ = ω² = −1 − ω; they satisfy ω₁ + ω₂ = −1, ω₁ω₂ = 1, and
//! (ω₁ − ω₂)² = −3.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::ring::{format_rational, Field, Ring};

/// An element a + bω of Q(ω). Component rationals are kept in lowest terms
/// with positive denominator (num-rational normalizes eagerly), so structural
/// equality is field equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EisensteinRational {
    /// Coefficient of 1.
    pub re: BigRational,
    /// Coefficient of ω.
    pub om: BigRational,
}

impl EisensteinRational {
    pub fn new(re: BigRational, om: BigRational) -> Self {
        Self { re, om }
    }

    pub fn from_rational(re: BigRational) -> Self {
        Self::new(re, BigRational::zero())
    }

    /// Convenience constructor a + bω from integer parts.
    pub fn from_ints(a: i64, b: i64) -> Self {
        Self::new(
            BigRational::from_integer(BigInt::from(a)),
            BigRational::from_integer(BigInt::from(b)),
        )
    }

    /// ω₁ = ω.
    pub fn omega1() -> Self {
        Self::from_ints(0, 1)
    }

    /// ω₂ = ω² = −1 − ω.
    pub fn omega2() -> Self {
        Self::from_ints(-1, -1)
    }

    /// ω₁ − ω₂ = 2ω + 1, the root difference dividing every Binet-style term.
    pub fn root_diff() -> Self {
        Self::from_ints(1, 2)
    }

    /// ω₁ⁿ for any integer n; period 3, with ω⁻¹ = ω².
    pub fn omega1_pow(n: i64) -> Self {
        match n.rem_euclid(3) {
            0 => Self::one(),
            1 => Self::omega1(),
            _ => Self::omega2(),
        }
    }

    /// ω₂ⁿ = ω^(2n) = ω^(−n).
    pub fn omega2_pow(n: i64) -> Self {
        Self::omega1_pow(-n)
    }

    /// Field conjugation ω ↦ ω²: a + bω ↦ (a − b) − bω.
    pub fn conj(&self) -> Self {
        Self::new(self.re.clone() - self.om.clone(), -self.om.clone())
    }

    /// Norm a² − ab + b², a nonnegative rational, zero only at zero.
    pub fn norm(&self) -> BigRational {
        let a = &self.re;
        let b = &self.om;
        a * a - a * b + b * b
    }

    /// True when the ω-part vanishes.
    pub fn is_rational(&self) -> bool {
        self.om.is_zero()
    }

    /// The rational value of an element with zero ω-part.
    pub fn rational_part(&self) -> Result<BigRational> {
        if self.is_rational() {
            Ok(self.re.clone())
        } else {
            Err(Error::Inconsistency(format!(
                "expected rational value, got nonzero ω-part in {self}"
            )))
        }
    }

    /// Two-element array of rational strings, `["p/q", "r/s"]` ≙ p/q + (r/s)ω.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!([format_rational(&self.re), format_rational(&self.om)])
    }
}

impl Add for EisensteinRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.re + rhs.re, self.om + rhs.om)
    }
}

impl Sub for EisensteinRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.re - rhs.re, self.om - rhs.om)
    }
}

impl Neg for EisensteinRational {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.om)
    }
}

impl Mul for EisensteinRational {
    type Output = Self;
    /// (a + bω)(c + dω) = (ac − bd) + (ad + bc − bd)ω, using ω² = −ω − 1.
    fn mul(self, rhs: Self) -> Self {
        let bd = &self.om * &rhs.om;
        let re = &self.re * &rhs.re - &bd;
        let om = &self.re * &rhs.om + &self.om * &rhs.re - bd;
        Self::new(re, om)
    }
}

impl Ring for EisensteinRational {
    fn zero() -> Self {
        Self::from_ints(0, 0)
    }

    fn one() -> Self {
        Self::from_ints(1, 0)
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.om.is_zero()
    }

    fn from_int(n: i64) -> Self {
        Self::from_ints(n, 0)
    }
}

impl Field for EisensteinRational {
    /// Inverse via the conjugate: u⁻¹ = conj(u)/norm(u).
    fn inv(&self) -> Result<Self> {
        if Ring::is_zero(self) {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        let c = self.conj();
        Ok(Self::new(c.re / n.clone(), c.om / n))
    }
}

impl fmt::Display for EisensteinRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.om.is_zero() {
            return write!(f, "{}", format_rational(&self.re));
        }
        let omega = if self.om.abs() == BigRational::one() {
            "ω".to_string()
        } else {
            format!("{}ω", format_rational(&self.om.abs()))
        };
        if self.re.is_zero() {
            let sign = if self.om.is_negative() { "-" } else { "" };
            write!(f, "{sign}{omega}")
        } else {
            let sign = if self.om.is_negative() { "-" } else { "+" };
            write!(f, "{} {sign} {omega}", format_rational(&self.re))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eis(a: i64, b: i64) -> EisensteinRational {
        EisensteinRational::from_ints(a, b)
    }

    #[test]
    fn multiplication_by_one_is_identity() {
        let u = eis(7, -3);
        assert_eq!(EisensteinRational::one() * u.clone(), u);
    }

    #[test]
    fn defining_relation() {
        // ω² = −1 − ω
        assert_eq!(
            EisensteinRational::omega1() * EisensteinRational::omega1(),
            eis(-1, -1)
        );
    }

    #[test]
    fn root_diff_squares_to_minus_three() {
        // (2ω + 1)² = 4ω² + 4ω + 1 = −3
        let d = EisensteinRational::root_diff();
        assert_eq!(d.clone() * d, eis(-3, 0));
    }

    #[test]
    fn root_relations() {
        let w1 = EisensteinRational::omega1();
        let w2 = EisensteinRational::omega2();
        assert_eq!(w1.clone() + w2.clone(), eis(-1, 0));
        assert_eq!(w1.clone() * w2.clone(), EisensteinRational::one());
        assert_eq!(w1 - w2, EisensteinRational::root_diff());
    }

    #[test]
    fn inverses() {
        assert_eq!(
            EisensteinRational::one().inv().unwrap(),
            EisensteinRational::one()
        );
        // ω · ω² = ω³ = 1
        assert_eq!(
            EisensteinRational::omega1().inv().unwrap(),
            EisensteinRational::omega2()
        );
        // (2ω + 1)⁻¹ = −(2ω + 1)/3, since (2ω + 1)² = −3
        let d = EisensteinRational::root_diff();
        let third = BigRational::new(BigInt::from(-1), BigInt::from(3));
        assert_eq!(
            d.inv().unwrap(),
            EisensteinRational::new(third.clone(), BigRational::from_integer(BigInt::from(2)) * third)
        );
        assert_eq!(EisensteinRational::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn omega_powers() {
        assert_eq!(EisensteinRational::omega1_pow(0), EisensteinRational::one());
        assert_eq!(EisensteinRational::omega1_pow(3), EisensteinRational::one());
        assert_eq!(EisensteinRational::omega1_pow(-1), eis(-1, -1));
        for n in -30..=30 {
            assert_eq!(
                EisensteinRational::omega1_pow(n),
                EisensteinRational::omega1_pow(n.rem_euclid(3)),
                "ω₁ⁿ should have period 3 at n = {n}"
            );
            assert_eq!(
                EisensteinRational::omega2_pow(n),
                EisensteinRational::omega2().pow_i(n).unwrap(),
                "ω₂ⁿ lookup should match generic powering at n = {n}"
            );
        }
    }

    #[test]
    fn conjugation_and_norm() {
        let u = eis(3, 5);
        assert_eq!(u.conj(), eis(-2, -5));
        assert_eq!(u.norm(), BigRational::from_integer(BigInt::from(19)));
        // norm is multiplicative
        let v = eis(-2, 7);
        assert_eq!((u.clone() * v.clone()).norm(), u.norm() * v.norm());
    }

    #[test]
    fn rational_part_extraction() {
        assert_eq!(
            eis(4, 0).rational_part().unwrap(),
            BigRational::from_integer(BigInt::from(4))
        );
        assert!(eis(4, 1).rational_part().is_err());
    }

    #[test]
    fn json_encoding() {
        let u = EisensteinRational::new(
            BigRational::new(BigInt::from(1), BigInt::from(2)),
            BigRational::from_integer(BigInt::from(-3)),
        );
        assert_eq!(u.to_json(), serde_json::json!(["1/2", "-3"]));
    }

    #[test]
    fn display_forms() {
        assert_eq!(eis(0, 0).to_string(), "0");
        assert_eq!(eis(0, 1).to_string(), "ω");
        assert_eq!(eis(-1, -1).to_string(), "-1 - ω");
        assert_eq!(eis(1, 2).to_string(), "1 + 2ω");
        assert_eq!(eis(0, -2).to_string(), "-2ω");
    }
}
