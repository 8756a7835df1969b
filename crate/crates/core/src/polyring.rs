//! Dense univariate polynomials in x and reduced rational functions over a
//! generic commutative coefficient ring.
//!
//! Polynomials are coefficient vectors in ascending degree with no trailing
//! zero (the zero polynomial is the empty vector), so structural equality is
//! ring equality. Rational functions are kept fully reduced: over a field the
//! denominator is monic; over the integers the fraction is normalized so that
//! the integer contents of numerator and denominator are coprime, their
//! primitive parts are coprime, and the denominator has positive leading
//! coefficient. Under either normal form, equality of reduced pairs is
//! equality in the fraction field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;

use crate::eisenstein::EisensteinRational;
use crate::error::{Error, Result};
use crate::ring::{gcd_bigint, Field, Ring};

/// Scalar types that know their own JSON encoding. Coefficients can be
/// arbitrarily large, so integers and rationals are encoded as strings.
pub trait ToJson {
    fn to_json(&self) -> serde_json::Value;
}

impl ToJson for BigInt {
    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::String(self.to_string())
    }
}

impl ToJson for BigRational {
    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::String(crate::ring::format_rational(self))
    }
}

impl ToJson for EisensteinRational {
    fn to_json(&self) -> serde_json::Value {
        EisensteinRational::to_json(self)
    }
}

/// A dense univariate polynomial over `R`, coefficients in ascending degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> Polynomial<R> {
    /// Builds a polynomial, trimming trailing zeros to canonical form.
    pub fn new(coeffs: Vec<R>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Ring::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate x.
    pub fn x() -> Self {
        Self::new(vec![R::zero(), R::one()])
    }

    /// c·xᵏ.
    pub fn monomial(c: R, k: usize) -> Self {
        if c.is_zero() {
            return Self::new(Vec::new());
        }
        let mut coeffs = vec![R::zero(); k + 1];
        coeffs[k] = c;
        Self { coeffs }
    }

    /// Convenience constructor from small integer coefficients (ascending).
    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| R::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Coefficient of xᵏ (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    /// Horner evaluation at a point of the coefficient ring.
    pub fn eval(&self, x0: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x0.clone() + c.clone();
        }
        acc
    }

    /// Applies `f` to every coefficient (ring embedding, evaluation prep, …).
    pub fn map<S: Ring>(&self, mut f: impl FnMut(&R) -> S) -> Polynomial<S> {
        Polynomial::new(self.coeffs.iter().map(|c| f(c)).collect())
    }

    /// Scalar multiple s·p.
    pub fn scale(&self, s: &R) -> Self {
        if s.is_zero() {
            return Self::new(Vec::new());
        }
        Self::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    /// Shift by xᵏ.
    pub fn mul_xpow(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }
}

impl<R: Ring + ToJson> ToJson for Polynomial<R> {
    /// Ascending coefficient array.
    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.coeffs.iter().map(ToJson::to_json).collect())
    }
}

impl<R: Ring> Add for Polynomial<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.coeffs, rhs.coeffs)
        } else {
            (rhs.coeffs, self.coeffs)
        };
        for (acc, c) in long.iter_mut().zip(short) {
            *acc = acc.clone() + c;
        }
        Self::new(long)
    }
}

impl<R: Ring> Sub for Polynomial<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<R: Ring> Neg for Polynomial<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            coeffs: self.coeffs.into_iter().map(Neg::neg).collect(),
        }
    }
}

impl<R: Ring> Mul for Polynomial<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::new(Vec::new());
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }
}

impl<R: Ring> Ring for Polynomial<R> {
    fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    fn one() -> Self {
        Self::constant(R::one())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn from_int(n: i64) -> Self {
        Self::constant(R::from_int(n))
    }
}

impl<F: Field> Polynomial<F> {
    /// Euclidean division over a field: returns (quotient, remainder).
    pub fn divrem(&self, div: &Self) -> Result<(Self, Self)> {
        let d = div.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = div.leading().unwrap().inv()?;
        let mut rem = self.clone();
        let mut quot = vec![F::zero(); self.coeffs.len().saturating_sub(d)];
        while let Some(r) = rem.degree() {
            if r < d {
                break;
            }
            let q = rem.leading().unwrap().clone() * lc_inv.clone();
            rem = rem - div.mul_xpow(r - d).scale(&q);
            quot[r - d] = q;
        }
        Ok((Self::new(quot), rem))
    }

    /// Monic gcd via the Euclidean algorithm; zero when both inputs are zero.
    pub fn gcd_monic(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !Ring::is_zero(&b) {
            let r = a.divrem(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        match a.leading() {
            None => a,
            Some(lc) => {
                let inv = lc.inv().expect("nonzero leading coefficient");
                a.scale(&inv)
            }
        }
    }
}

impl Polynomial<BigInt> {
    /// Positive gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = gcd_bigint(&g, c);
            if g == BigInt::from(1) {
                break;
            }
        }
        g
    }

    /// self / content (sign-preserving); zero stays zero.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c == BigInt::from(1) {
            return self.clone();
        }
        Self {
            coeffs: this_div(&self.coeffs, &c),
        }
    }

    /// Exact division; errors if `div` does not divide `self` in Z[x].
    pub fn div_exact(&self, div: &Self) -> Result<Self> {
        let d = div.degree().ok_or(Error::DivisionByZero)?;
        let lc = div.leading().unwrap();
        let mut rem = self.clone();
        let mut quot = vec![BigInt::zero(); self.coeffs.len().saturating_sub(d)];
        while let Some(r) = rem.degree() {
            if r < d {
                break;
            }
            let (q, s) = rem.leading().unwrap().div_rem(lc);
            if !s.is_zero() {
                return Err(Error::Inconsistency(
                    "inexact polynomial division over the integers".into(),
                ));
            }
            rem = rem - div.mul_xpow(r - d).scale(&q);
            quot[r - d] = q;
        }
        if Ring::is_zero(&rem) {
            Ok(Self::new(quot))
        } else {
            Err(Error::Inconsistency(
                "inexact polynomial division over the integers".into(),
            ))
        }
    }

    /// Pseudo-remainder: repeatedly scales by the divisor's leading
    /// coefficient so the division stays inside Z[x].
    fn pseudo_rem(&self, div: &Self) -> Self {
        let d = div.degree().expect("nonzero divisor");
        let lc = div.leading().unwrap().clone();
        let mut rem = self.clone();
        while let Some(r) = rem.degree() {
            if r < d {
                break;
            }
            let top = rem.leading().unwrap().clone();
            rem = rem.scale(&lc) - div.mul_xpow(r - d).scale(&top);
        }
        rem
    }

    /// Primitive positive-leading gcd via the primitive pseudo-remainder
    /// sequence; zero when both inputs are zero.
    pub fn gcd_primitive(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        // A nonzero primitive constant is a unit, so the gcd is 1.
        if a.degree() == Some(0) || b.degree() == Some(0) {
            return Self::one();
        }
        while !Ring::is_zero(&b) {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        if a.leading().is_some_and(Signed::is_negative) {
            a = -a;
        }
        a
    }
}

/// Divides every coefficient exactly by `d` (callers guarantee divisibility).
fn this_div(coeffs: &[BigInt], d: &BigInt) -> Vec<BigInt> {
    coeffs.iter().map(|c| c / d).collect()
}

/// Coefficient rings over which reduced rational functions are defined. Each
/// ring supplies its own canonical form for a numerator/denominator pair.
pub trait FractionDomain: Ring {
    /// Reduces `num/den` to canonical form. Errors only on a zero denominator.
    fn normalize(num: Polynomial<Self>, den: Polynomial<Self>)
        -> Result<(Polynomial<Self>, Polynomial<Self>)>;
}

impl FractionDomain for BigInt {
    fn normalize(
        num: Polynomial<Self>,
        den: Polynomial<Self>,
    ) -> Result<(Polynomial<Self>, Polynomial<Self>)> {
        if Ring::is_zero(&den) {
            return Err(Error::DivisionByZero);
        }
        if Ring::is_zero(&num) {
            return Ok((Polynomial::zero(), Polynomial::one()));
        }
        // Constant denominator: only integer contents need reducing.
        if den.degree() == Some(0) {
            let mut d = den.coeff(0);
            let mut num = num;
            if d.is_negative() {
                d = -d;
                num = -num;
            }
            let s = gcd_bigint(&num.content(), &d);
            if s != BigInt::from(1) {
                num = Polynomial::new(this_div(num.coeffs(), &s));
                d /= s;
            }
            return Ok((num, Polynomial::constant(d)));
        }
        let c_num = num.content();
        let c_den = den.content();
        let mut pp_num = num.primitive_part();
        let mut pp_den = den.primitive_part();
        let g = pp_num.gcd_primitive(&pp_den);
        if !Ring::is_one(&g) {
            pp_num = pp_num.div_exact(&g)?;
            pp_den = pp_den.div_exact(&g)?;
        }
        let s = gcd_bigint(&c_num, &c_den);
        let (c_num, c_den) = (c_num / &s, c_den / &s);
        if pp_den.leading().is_some_and(Signed::is_negative) {
            pp_num = -pp_num;
            pp_den = -pp_den;
        }
        Ok((pp_num.scale(&c_num), pp_den.scale(&c_den)))
    }
}

/// Shared canonicalization for field coefficients: cancel the monic gcd and
/// rescale so the denominator is monic.
fn normalize_over_field<F: Field>(
    num: Polynomial<F>,
    den: Polynomial<F>,
) -> Result<(Polynomial<F>, Polynomial<F>)> {
    if Ring::is_zero(&den) {
        return Err(Error::DivisionByZero);
    }
    if Ring::is_zero(&num) {
        return Ok((Polynomial::zero(), Polynomial::one()));
    }
    let (mut num, mut den) = (num, den);
    if den.degree() > Some(0) {
        let g = num.gcd_monic(&den);
        if g.degree() > Some(0) {
            num = num.divrem(&g)?.0;
            den = den.divrem(&g)?.0;
        }
    }
    let lc = den.leading().unwrap();
    if !lc.is_one() {
        let inv = lc.inv()?;
        num = num.scale(&inv);
        den = den.scale(&inv);
    }
    Ok((num, den))
}

impl FractionDomain for BigRational {
    fn normalize(
        num: Polynomial<Self>,
        den: Polynomial<Self>,
    ) -> Result<(Polynomial<Self>, Polynomial<Self>)> {
        normalize_over_field(num, den)
    }
}

impl FractionDomain for EisensteinRational {
    fn normalize(
        num: Polynomial<Self>,
        den: Polynomial<Self>,
    ) -> Result<(Polynomial<Self>, Polynomial<Self>)> {
        normalize_over_field(num, den)
    }
}

/// A reduced fraction of polynomials over `R`, canonical by construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunction<R: FractionDomain> {
    num: Polynomial<R>,
    den: Polynomial<R>,
}

impl<R: FractionDomain> RationalFunction<R> {
    pub fn new(num: Polynomial<R>, den: Polynomial<R>) -> Result<Self> {
        let (num, den) = R::normalize(num, den)?;
        Ok(Self { num, den })
    }

    fn new_nonzero_den(num: Polynomial<R>, den: Polynomial<R>) -> Self {
        Self::new(num, den).expect("denominator is a product of nonzero polynomials")
    }

    pub fn from_poly(p: Polynomial<R>) -> Self {
        Self {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn num(&self) -> &Polynomial<R> {
        &self.num
    }

    pub fn den(&self) -> &Polynomial<R> {
        &self.den
    }

    /// Some(num) when the canonical denominator is literally 1.
    pub fn as_polynomial(&self) -> Option<&Polynomial<R>> {
        Ring::is_one(&self.den).then_some(&self.num)
    }

    /// xᵏ for any integer k; negative k puts the power in the denominator.
    pub fn x_pow(k: i64) -> Self {
        let p = Polynomial::monomial(R::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            Self::from_poly(p)
        } else {
            Self {
                num: Polynomial::one(),
                den: p,
            }
        }
    }

    /// Evaluates at a field point through a coefficient embedding; errors if
    /// the denominator vanishes there.
    pub fn map_eval<F: Field>(&self, x0: &F, mut embed: impl FnMut(&R) -> F) -> Result<F> {
        let d = self.den.map(&mut embed).eval(x0);
        if Ring::is_zero(&d) {
            return Err(Error::Domain(format!(
                "denominator {} vanishes at the evaluation point",
                self.den
            )));
        }
        let n = self.num.map(&mut embed).eval(x0);
        n.div(&d)
    }
}

impl<R: FractionDomain + ToJson> ToJson for RationalFunction<R> {
    fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "num": self.num.to_json(), "den": self.den.to_json() })
    }
}

impl<R: FractionDomain> Add for RationalFunction<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if self.den == rhs.den {
            return Self::new_nonzero_den(self.num + rhs.num, self.den);
        }
        Self::new_nonzero_den(
            self.num * rhs.den.clone() + rhs.num * self.den.clone(),
            self.den * rhs.den,
        )
    }
}

impl<R: FractionDomain> Sub for RationalFunction<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<R: FractionDomain> Neg for RationalFunction<R> {
    type Output = Self;
    fn neg(self) -> Self {
        // Negation preserves every canonical-form condition.
        Self {
            num: -self.num,
            den: self.den,
        }
    }
}

impl<R: FractionDomain> Mul for RationalFunction<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new_nonzero_den(self.num * rhs.num, self.den * rhs.den)
    }
}

impl<R: FractionDomain> Ring for RationalFunction<R> {
    fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }

    fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    fn is_zero(&self) -> bool {
        Ring::is_zero(&self.num)
    }

    fn from_int(n: i64) -> Self {
        Self::from_poly(Polynomial::from_int(n))
    }
}

impl<R: FractionDomain> Field for RationalFunction<R> {
    fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }
}

impl<R: Ring> fmt::Display for Polynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            // Treat a lone leading '-' on a simple coefficient as a sign;
            // wrap compound coefficients (sums, fractions) in parentheses.
            let compound = cs.contains([' ', '+', '/']);
            let (neg, mag) = if !compound && cs.starts_with('-') {
                (true, cs[1..].to_string())
            } else if compound {
                (false, format!("({cs})"))
            } else {
                (false, cs)
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let xpart = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            if xpart.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{xpart}")?;
            } else {
                write!(f, "{mag}{xpart}")?;
            }
        }
        Ok(())
    }
}

impl<R: FractionDomain> fmt::Display for RationalFunction<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Ring::is_one(&self.den) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
