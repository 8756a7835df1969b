//! The four-dimensional commutative algebra H₂ with basis {1, j₁, j₂, j₃},
//! where j₁² = j₂² = j₃² = 1 and j₁j₂ = j₃, j₁j₃ = j₂, j₂j₃ = j₁.
//!
//! The algebra is generic over its scalar ring: the same multiplication is
//! used with integer, polynomial, rational-function, and Eisenstein-rational
//! scalars. H₂ is commutative but has zero divisors — (1 + j₁)(1 − j₁) = 0 —
//! so no division is defined.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::polyring::ToJson;
use crate::ring::Ring;

/// Element w + x₁j₁ + x₂j₂ + x₃j₃ of H₂ over the scalar ring `R`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Bihyperbolic<R: Ring> {
    pub w: R,
    pub x1: R,
    pub x2: R,
    pub x3: R,
}

impl<R: Ring> Bihyperbolic<R> {
    pub fn new(w: R, x1: R, x2: R, x3: R) -> Self {
        Self { w, x1, x2, x3 }
    }

    /// Embeds a scalar as s·1.
    pub fn from_scalar(s: R) -> Self {
        Self::new(s, R::zero(), R::zero(), R::zero())
    }

    pub fn j1() -> Self {
        Self::new(R::zero(), R::one(), R::zero(), R::zero())
    }

    pub fn j2() -> Self {
        Self::new(R::zero(), R::zero(), R::one(), R::zero())
    }

    pub fn j3() -> Self {
        Self::new(R::zero(), R::zero(), R::zero(), R::one())
    }

    pub fn components(&self) -> [&R; 4] {
        [&self.w, &self.x1, &self.x2, &self.x3]
    }

    /// Componentwise scalar multiple; equals multiplication by s·1.
    pub fn scale(&self, s: &R) -> Self {
        Self::new(
            self.w.clone() * s.clone(),
            self.x1.clone() * s.clone(),
            self.x2.clone() * s.clone(),
            self.x3.clone() * s.clone(),
        )
    }

    /// Applies `f` to every component (scalar-ring embedding).
    pub fn map<S: Ring>(&self, mut f: impl FnMut(&R) -> S) -> Bihyperbolic<S> {
        Bihyperbolic::new(f(&self.w), f(&self.x1), f(&self.x2), f(&self.x3))
    }
}

impl<R: Ring + ToJson> ToJson for Bihyperbolic<R> {
    /// Four-element array [w, x1, x2, x3] in the scalar ring's encoding.
    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.components().iter().map(|c| c.to_json()).collect())
    }
}

impl<R: Ring> Add for Bihyperbolic<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(
            self.w + rhs.w,
            self.x1 + rhs.x1,
            self.x2 + rhs.x2,
            self.x3 + rhs.x3,
        )
    }
}

impl<R: Ring> Sub for Bihyperbolic<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(
            self.w - rhs.w,
            self.x1 - rhs.x1,
            self.x2 - rhs.x2,
            self.x3 - rhs.x3,
        )
    }
}

impl<R: Ring> Neg for Bihyperbolic<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.w, -self.x1, -self.x2, -self.x3)
    }
}

impl<R: Ring> Mul for Bihyperbolic<R> {
    type Output = Self;
    /// Expansion of the basis table: each jᵢjₖ lands on the basis element
    /// indicated by j₁j₂ = j₃ and its cyclic relatives, with jᵢ² = 1.
    fn mul(self, rhs: Self) -> Self {
        let u = self;
        let v = rhs;
        let w = u.w.clone() * v.w.clone()
            + u.x1.clone() * v.x1.clone()
            + u.x2.clone() * v.x2.clone()
            + u.x3.clone() * v.x3.clone();
        let x1 = u.w.clone() * v.x1.clone()
            + u.x1.clone() * v.w.clone()
            + u.x2.clone() * v.x3.clone()
            + u.x3.clone() * v.x2.clone();
        let x2 = u.w.clone() * v.x2.clone()
            + u.x2.clone() * v.w.clone()
            + u.x1.clone() * v.x3.clone()
            + u.x3.clone() * v.x1.clone();
        let x3 = u.w * v.x3.clone() + u.x3 * v.w + u.x1 * v.x2 + u.x2 * v.x1;
        Self::new(w, x1, x2, x3)
    }
}

impl<R: Ring> Ring for Bihyperbolic<R> {
    fn zero() -> Self {
        Self::from_scalar(R::zero())
    }

    fn one() -> Self {
        Self::from_scalar(R::one())
    }

    fn is_zero(&self) -> bool {
        self.components().iter().all(|c| c.is_zero())
    }

    fn from_int(n: i64) -> Self {
        Self::from_scalar(R::from_int(n))
    }
}

impl<R: Ring> fmt::Display for Bihyperbolic<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) + ({})j₁ + ({})j₂ + ({})j₃",
            self.w, self.x1, self.x2, self.x3
        )
    }
}
