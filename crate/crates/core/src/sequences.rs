//! Generation of the sequence objects: scalar third-order Jacobsthal
//! polynomials Jₙ(x), their bihyperbolic lift BJₙ^(a,b,c)(x), the auxiliary
//! Zₙ(x), Aₙ, Bₙ(p), Tₙ, and the Binet constants Θ, Φ₁, Φ₂.
//!
//! The scalar sequence is defined by J₀ = 0, J₁ = 1, J₂ = x − 1 and
//! Jₙ₊₃ = (x−1)Jₙ₊₂ + (x−1)Jₙ₊₁ + xJₙ; running the recurrence backwards
//! extends it to negative indices as rational functions with denominator a
//! power of x. The characteristic roots are x and the primitive cube roots
//! of unity ω₁, ω₂, which is where the Q(ω) arithmetic enters.
//!
//! Several values are computed by two independent routes and asserted equal
//! (Binet form vs. recurrence, and both closed forms of Zₙ); a mismatch is an
//! internal-inconsistency error, never a recoverable condition.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use crate::bihyperbolic::Bihyperbolic;
use crate::eisenstein::EisensteinRational;
use crate::error::{Error, Result};
use crate::polyring::{Polynomial, RationalFunction};
use crate::ring::{Field, Ring};

pub type IntPoly = Polynomial<BigInt>;
pub type IntRatFunc = RationalFunction<BigInt>;
pub type EisPoly = Polynomial<EisensteinRational>;
pub type EisRatFunc = RationalFunction<EisensteinRational>;
pub type BhPoly = Bihyperbolic<IntPoly>;
pub type BhRatFunc = Bihyperbolic<IntRatFunc>;

/// x² + x + 1 = (x − ω₁)(x − ω₂): the product of the two non-x roots of the
/// characteristic polynomial λ³ − (x−1)λ² − (x−1)λ − x of the recurrence.
pub fn cyclotomic3() -> IntPoly {
    IntPoly::from_int_coeffs(&[1, 1, 1])
}

/// Embeds polynomial components into the rational-function field.
pub fn bh_poly_to_rf(b: &BhPoly) -> BhRatFunc {
    b.map(|p| IntRatFunc::from_poly(p.clone()))
}

/// The shift triple (a, b, c) selecting which J-values ride on j₁, j₂, j₃.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SeqParams {
    a: i64,
    b: i64,
    c: i64,
}

impl SeqParams {
    /// All three shifts must be ≥ 1.
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self> {
        if a < 1 || b < 1 || c < 1 {
            return Err(Error::InvalidParams(format!(
                "shifts must satisfy a, b, c ≥ 1; got ({a}, {b}, {c})"
            )));
        }
        Ok(Self { a, b, c })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn triple(&self) -> (i64, i64, i64) {
        (self.a, self.b, self.c)
    }
}

impl fmt::Display for SeqParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

/// The constants of the Binet closed form
/// BJₙ = xⁿ⁺¹Θ/(x²+x+1) − ω₁ⁿ⁺¹Φ₁/((x−ω₁)(ω₁−ω₂)) + ω₂ⁿ⁺¹Φ₂/((x−ω₂)(ω₁−ω₂)).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinetConstants {
    /// Θ = 1 + xᵃj₁ + xᵇj₂ + xᶜj₃.
    pub theta: BhPoly,
    /// Φ₁ = 1 + ω₁ᵃj₁ + ω₁ᵇj₂ + ω₁ᶜj₃.
    pub phi1: Bihyperbolic<EisensteinRational>,
    /// Φ₂ = Φ₁ with ω₁ replaced by ω₂ (componentwise conjugation).
    pub phi2: Bihyperbolic<EisensteinRational>,
}

impl BinetConstants {
    pub fn new(params: SeqParams) -> Self {
        let one = BigInt::from(1);
        let theta = Bihyperbolic::new(
            IntPoly::one(),
            IntPoly::monomial(one.clone(), params.a as usize),
            IntPoly::monomial(one.clone(), params.b as usize),
            IntPoly::monomial(one, params.c as usize),
        );
        let phi = |root_pow: fn(i64) -> EisensteinRational| {
            Bihyperbolic::new(
                EisensteinRational::one(),
                root_pow(params.a),
                root_pow(params.b),
                root_pow(params.c),
            )
        };
        Self {
            theta,
            phi1: phi(EisensteinRational::omega1_pow),
            phi2: phi(EisensteinRational::omega2_pow),
        }
    }
}

/// Aₙ = (ω₁ⁿ − ω₂ⁿ)/(ω₁ − ω₂): the period-3 sign sequence 0, 1, −1 with
/// A₋ₙ = −Aₙ.
pub fn cal_a(n: i64) -> i64 {
    [0, 1, -1][n.rem_euclid(3) as usize]
}

/// Memoizing generator for one fixed shift triple. Construction is cheap;
/// all sequence values are produced on demand and cached.
///
/// Caches use interior mutability and are not synchronized: an engine is
/// confined to one thread. Returned values are plain immutable data.
pub struct SequenceEngine {
    params: SeqParams,
    consts: BinetConstants,
    /// J₀, J₁, J₂, … as polynomials.
    j_fwd: RefCell<Vec<IntPoly>>,
    /// J₋₁, J₋₂, … via the backward recurrence, denominators powers of x.
    j_bwd: RefCell<Vec<IntRatFunc>>,
    /// BJ values produced purely by the third-order vector recurrence.
    bj_rec: RefCell<Vec<BhPoly>>,
    /// Zₙ values, verified against both closed forms on first computation.
    z_cache: RefCell<HashMap<i64, BhRatFunc>>,
    /// Products BJᵢ·BJⱼ keyed by the unordered index pair.
    prod_cache: RefCell<HashMap<(i64, i64), BhRatFunc>>,
    phi_prod: RefCell<Option<BhRatFunc>>,
}

impl SequenceEngine {
    pub fn new(params: SeqParams) -> Self {
        Self {
            params,
            consts: BinetConstants::new(params),
            j_fwd: RefCell::new(vec![
                IntPoly::zero(),
                IntPoly::one(),
                IntPoly::from_int_coeffs(&[-1, 1]),
            ]),
            j_bwd: RefCell::new(Vec::new()),
            bj_rec: RefCell::new(Vec::new()),
            z_cache: RefCell::new(HashMap::new()),
            prod_cache: RefCell::new(HashMap::new()),
            phi_prod: RefCell::new(None),
        }
    }

    pub fn params(&self) -> SeqParams {
        self.params
    }

    pub fn binet_constants(&self) -> &BinetConstants {
        &self.consts
    }

    /// Jₙ for n ≥ 0, by the forward recurrence.
    pub fn jacobsthal_poly(&self, n: u64) -> IntPoly {
        let mut cache = self.j_fwd.borrow_mut();
        let xm1 = IntPoly::from_int_coeffs(&[-1, 1]);
        while cache.len() <= n as usize {
            let k = cache.len();
            let next = (cache[k - 1].clone() + cache[k - 2].clone()) * xm1.clone()
                + cache[k - 3].clone() * IntPoly::x();
            cache.push(next);
        }
        cache[n as usize].clone()
    }

    /// Jₙ for any integer n. Negative indices come from the backward
    /// recurrence Jₙ = (Jₙ₊₃ − (x−1)Jₙ₊₂ − (x−1)Jₙ₊₁)/x.
    pub fn jacobsthal_ext(&self, n: i64) -> IntRatFunc {
        if n >= 0 {
            return IntRatFunc::from_poly(self.jacobsthal_poly(n as u64));
        }
        {
            let bwd = self.j_bwd.borrow();
            if let Some(v) = bwd.get((-n - 1) as usize) {
                return v.clone();
            }
        }
        let xm1 = IntRatFunc::from_poly(IntPoly::from_int_coeffs(&[-1, 1]));
        let inv_x = IntRatFunc::x_pow(-1);
        let mut bwd = self.j_bwd.borrow_mut();
        while bwd.len() < (-n) as usize {
            let m = -1 - bwd.len() as i64;
            let at = |idx: i64, bwd: &Vec<IntRatFunc>| {
                if idx >= 0 {
                    IntRatFunc::from_poly(self.jacobsthal_poly(idx as u64))
                } else {
                    bwd[(-idx - 1) as usize].clone()
                }
            };
            let val = (at(m + 3, &bwd) - xm1.clone() * (at(m + 2, &bwd) + at(m + 1, &bwd)))
                * inv_x.clone();
            bwd.push(val);
        }
        bwd[(-n - 1) as usize].clone()
    }

    /// BJₙ = Jₙ + Jₙ₊ₐj₁ + Jₙ₊ᵦj₂ + Jₙ₊꜀j₃ straight from the definition,
    /// for any integer n.
    pub fn bj(&self, n: i64) -> BhRatFunc {
        Bihyperbolic::new(
            self.jacobsthal_ext(n),
            self.jacobsthal_ext(n + self.params.a),
            self.jacobsthal_ext(n + self.params.b),
            self.jacobsthal_ext(n + self.params.c),
        )
    }

    /// BJₙ with polynomial components (n ≥ 0), from the definition.
    pub fn bj_poly(&self, n: u64) -> BhPoly {
        Bihyperbolic::new(
            self.jacobsthal_poly(n),
            self.jacobsthal_poly(n + self.params.a as u64),
            self.jacobsthal_poly(n + self.params.b as u64),
            self.jacobsthal_poly(n + self.params.c as u64),
        )
    }

    /// BJₙ computed purely by the vector recurrence
    /// BJₙ = (x−1)BJₙ₋₁ + (x−1)BJₙ₋₂ + xBJₙ₋₃ seeded with BJ₀, BJ₁, BJ₂ —
    /// an independent route that must agree with `bj`.
    pub fn bj_rec(&self, n: u64) -> BhPoly {
        let mut cache = self.bj_rec.borrow_mut();
        if cache.is_empty() {
            cache.extend((0..=2).map(|k| self.bj_poly(k)));
        }
        let xm1 = IntPoly::from_int_coeffs(&[-1, 1]);
        while cache.len() <= n as usize {
            let k = cache.len();
            let next = (cache[k - 1].clone() + cache[k - 2].clone()).scale(&xm1)
                + cache[k - 3].clone().scale(&IntPoly::x());
            cache.push(next);
        }
        cache[n as usize].clone()
    }

    /// BJₙ from the Binet closed form, evaluated in H₂ over Q(ω)-rational
    /// functions; the ω-parts must cancel exactly, leaving rational
    /// components.
    pub fn bj_binet(&self, n: i64) -> Result<BhRatFunc> {
        let inv_diff = EisensteinRational::root_diff().inv()?;
        let cyc = EisRatFunc::from_poly(EisPoly::from_int_coeffs(&[1, 1, 1]));

        // xⁿ⁺¹Θ/(x²+x+1)
        let s_theta = EisRatFunc::x_pow(n + 1).div(&cyc)?;
        let theta = self
            .consts
            .theta
            .map(|p| EisRatFunc::from_poly(p.map(|c| EisensteinRational::from_rational(
                BigRational::from_integer(c.clone()),
            ))));
        let mut acc = theta.scale(&s_theta);

        // ∓ωᵣⁿ⁺¹Φᵣ/((x−ωᵣ)(ω₁−ω₂))
        let root_term = |phi: &Bihyperbolic<EisensteinRational>,
                         root_pow: fn(i64) -> EisensteinRational,
                         root: EisensteinRational|
         -> Result<Bihyperbolic<EisRatFunc>> {
            let lin = EisRatFunc::from_poly(EisPoly::new(vec![-root, EisensteinRational::one()]));
            let scalar = EisRatFunc::from_poly(EisPoly::constant(
                root_pow(n + 1) * inv_diff.clone(),
            ))
            .div(&lin)?;
            Ok(phi.map(|e| EisRatFunc::from_poly(EisPoly::constant(e.clone()))).scale(&scalar))
        };
        acc = acc
            - root_term(
                &self.consts.phi1,
                EisensteinRational::omega1_pow,
                EisensteinRational::omega1(),
            )?;
        acc = acc
            + root_term(
                &self.consts.phi2,
                EisensteinRational::omega2_pow,
                EisensteinRational::omega2(),
            )?;

        bh_eis_rf_to_int(&acc)
    }

    /// Zₙ = ((ω₁x−1)ω₁ⁿΦ₁ − (ω₂x−1)ω₂ⁿΦ₂)/(ω₁−ω₂): the root contribution to
    /// the Binet form, always of degree ≤ 1 in x with rational components.
    /// Computed both from that expression and from the rearrangement
    /// Zₙ = xⁿ⁺¹Θ − (x²+x+1)BJₙ, and asserted equal.
    pub fn z_seq(&self, n: i64) -> Result<BhRatFunc> {
        if let Some(v) = self.z_cache.borrow().get(&n) {
            return Ok(v.clone());
        }
        let inv_diff = EisensteinRational::root_diff().inv()?;

        // Route 1: direct Q(ω) arithmetic on degree-1 polynomials.
        let lin_term = |root: EisensteinRational, root_pow: fn(i64) -> EisensteinRational| {
            // (ωx − 1)·ωⁿ/(ω₁ − ω₂) as a degree-1 polynomial over Q(ω)
            let s = root_pow(n) * inv_diff.clone();
            EisPoly::new(vec![-s.clone(), root * s])
        };
        let t1 = self
            .consts
            .phi1
            .map(|e| EisPoly::constant(e.clone()))
            .scale(&lin_term(
                EisensteinRational::omega1(),
                EisensteinRational::omega1_pow,
            ));
        let t2 = self
            .consts
            .phi2
            .map(|e| EisPoly::constant(e.clone()))
            .scale(&lin_term(
                EisensteinRational::omega2(),
                EisensteinRational::omega2_pow,
            ));
        let direct = bh_eis_poly_to_int(&(t1 - t2))?;

        // Route 2: xⁿ⁺¹Θ − (x²+x+1)BJₙ over integer-coefficient fractions.
        let cyc = IntRatFunc::from_poly(cyclotomic3());
        let rearranged =
            self.theta_xpow(n + 1) - self.bj(n).scale(&cyc);

        if direct != rearranged {
            return Err(Error::Inconsistency(format!(
                "the two closed forms of Z_{n} disagree for shifts {}",
                self.params
            )));
        }
        self.z_cache.borrow_mut().insert(n, direct.clone());
        Ok(direct)
    }

    /// Bₙ(p) = Zₙ₊ₚ − xᵖZₙ.
    pub fn cal_b(&self, n: i64, p: i64) -> Result<BhRatFunc> {
        Ok(self.z_seq(n + p)? - self.z_seq(n)?.scale(&IntRatFunc::x_pow(p)))
    }

    /// Tₙ = BJₙ − (x−1)BJₙ₋₁, defined for n ≥ 1.
    pub fn cal_t(&self, n: u64) -> Result<BhPoly> {
        if n < 1 {
            return Err(Error::InvalidParams(
                "T is defined for indices n ≥ 1".into(),
            ));
        }
        let xm1 = IntPoly::from_int_coeffs(&[-1, 1]);
        Ok(self.bj_poly(n) - self.bj_poly(n - 1).scale(&xm1))
    }

    /// Φ₁Φ₂ in H₂: by conjugate symmetry its components are plain rationals
    /// (asserted), returned as constant rational functions.
    pub fn phi_product(&self) -> Result<BhRatFunc> {
        if let Some(v) = self.phi_prod.borrow().as_ref() {
            return Ok(v.clone());
        }
        let prod = self.consts.phi1.clone() * self.consts.phi2.clone();
        let mut comps = Vec::with_capacity(4);
        for c in prod.components() {
            let r = c.rational_part()?;
            comps.push(IntRatFunc::new(
                IntPoly::constant(r.numer().clone()),
                IntPoly::constant(r.denom().clone()),
            )?);
        }
        let [w, x1, x2, x3]: [IntRatFunc; 4] = comps.try_into().unwrap();
        let v = Bihyperbolic::new(w, x1, x2, x3);
        *self.phi_prod.borrow_mut() = Some(v.clone());
        Ok(v)
    }

    /// xᵏΘ as a bihyperbolic rational function (k may be negative).
    pub fn theta_xpow(&self, k: i64) -> BhRatFunc {
        self.consts
            .theta
            .map(|p| IntRatFunc::from_poly(p.clone()))
            .scale(&IntRatFunc::x_pow(k))
    }

    /// BJᵢ·BJⱼ with memoization on the unordered index pair; identity
    /// checkers touch the same products many times.
    pub fn bj_product(&self, i: i64, j: i64) -> BhRatFunc {
        let key = (i.min(j), i.max(j));
        if let Some(v) = self.prod_cache.borrow().get(&key) {
            return v.clone();
        }
        let v = if key.0 >= 0 {
            // Polynomial components: multiply without fraction bookkeeping.
            (self.bj_poly(key.0 as u64) * self.bj_poly(key.1 as u64))
                .map(|p| IntRatFunc::from_poly(p.clone()))
        } else {
            self.bj(key.0) * self.bj(key.1)
        };
        self.prod_cache.borrow_mut().insert(key, v.clone());
        v
    }

    /// Σ_{s=0}^{n} J_s.
    pub fn j_prefix_sum(&self, n: u64) -> IntPoly {
        (0..=n)
            .map(|s| self.jacobsthal_poly(s))
            .fold(IntPoly::zero(), |acc, p| acc + p)
    }

    /// Σ_{s=0}^{n} BJ_s.
    pub fn bj_prefix_sum(&self, n: u64) -> BhPoly {
        (0..=n)
            .map(|s| self.bj_poly(s))
            .fold(BhPoly::zero(), |acc, p| acc + p)
    }
}

/// Converts a Q(ω)-coefficient polynomial whose ω-parts all vanish into a
/// rational-coefficient polynomial.
fn eis_poly_to_rat(p: &EisPoly) -> Result<Polynomial<BigRational>> {
    let mut coeffs = Vec::with_capacity(p.coeffs().len());
    for c in p.coeffs() {
        coeffs.push(c.rational_part()?);
    }
    Ok(Polynomial::new(coeffs))
}

/// Clears denominators: returns (q, d) with p = q/d, d > 0.
fn rat_poly_clear_denoms(p: &Polynomial<BigRational>) -> (IntPoly, BigInt) {
    let mut d = BigInt::from(1);
    for c in p.coeffs() {
        d = d.lcm(c.denom());
    }
    let q = p.map(|c| c.numer() * (&d / c.denom()));
    let q = IntPoly::new(q.coeffs().to_vec());
    (q, d)
}

fn eis_poly_to_int_rf(p: &EisPoly) -> Result<IntRatFunc> {
    let (q, d) = rat_poly_clear_denoms(&eis_poly_to_rat(p)?);
    IntRatFunc::new(q, IntPoly::constant(d))
}

fn eis_rf_to_int(f: &EisRatFunc) -> Result<IntRatFunc> {
    let (nq, nd) = rat_poly_clear_denoms(&eis_poly_to_rat(f.num())?);
    let (dq, dd) = rat_poly_clear_denoms(&eis_poly_to_rat(f.den())?);
    IntRatFunc::new(nq.scale(&dd), dq.scale(&nd))
}

fn bh_eis_poly_to_int(b: &Bihyperbolic<EisPoly>) -> Result<BhRatFunc> {
    Ok(Bihyperbolic::new(
        eis_poly_to_int_rf(&b.w)?,
        eis_poly_to_int_rf(&b.x1)?,
        eis_poly_to_int_rf(&b.x2)?,
        eis_poly_to_int_rf(&b.x3)?,
    ))
}

fn bh_eis_rf_to_int(b: &Bihyperbolic<EisRatFunc>) -> Result<BhRatFunc> {
    Ok(Bihyperbolic::new(
        eis_rf_to_int(&b.w)?,
        eis_rf_to_int(&b.x1)?,
        eis_rf_to_int(&b.x2)?,
        eis_rf_to_int(&b.x3)?,
    ))
}
