//! Formal power-series side of the sequences. The ordinary generating
//! function Σ BJₙ tⁿ is a ratio of polynomials in t with coefficients in H₂
//! over Z[x]; expanding it term by term and comparing against the recurrence
//! gives an independent check of the closed form.
//!
//! Two denominators are provided. [`DenominatorForm::Corrected`] is the one
//! implied by the recurrence, 1 − (x−1)t − (x−1)t² − xt³, and reproduces
//! every coefficient. [`DenominatorForm::Printed`] is a transcription-slip
//! variant that repeats the t³ slot where t² was meant
//! (1 − (x−1)t − (x−1)t³ − xt³); it agrees with the sequence only through t¹
//! and first deviates at t², where it yields BJ₂ − (x−1)BJ₀ instead of BJ₂.
//! Keeping the slip reproducible makes the deviation itself checkable.

use crate::bihyperbolic::Bihyperbolic;
use crate::error::{Error, Result};
use crate::identities::{IdentityKind, IdentityReport, ParamSet};
use crate::polyring::{Polynomial, ToJson};
use crate::ring::Ring;
use crate::sequences::{bh_poly_to_rf, BhPoly, IntPoly, SequenceEngine};

/// Polynomial in the series variable t whose coefficients live in H₂ over
/// Z[x]. (The outer variable is t; x only appears inside the coefficients.)
pub type SeriesPoly = Polynomial<BhPoly>;

/// Truncated power series: coefficients of t⁰ … t^order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerSeries<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> PowerSeries<R> {
    /// Highest exponent carried by the truncation.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of t^k; zero beyond the truncation order.
    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }
}

impl<R: Ring + ToJson> ToJson for PowerSeries<R> {
    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.coeffs.iter().map(|c| c.to_json()).collect())
    }
}

/// Expands num/den as a power series in t up to `order`, by the division
/// recurrence c_k = num_k − Σ_{i≥1} den_i c_{k−i}. The denominator must have
/// constant term 1 so no coefficient inversion is ever needed.
pub fn series_expand<R: Ring>(
    num: &Polynomial<R>,
    den: &Polynomial<R>,
    order: u64,
) -> Result<PowerSeries<R>> {
    if !den.coeff(0).is_one() {
        return Err(Error::NonUnitConstantTerm);
    }
    let mut coeffs: Vec<R> = Vec::with_capacity(order as usize + 1);
    for k in 0..=order as usize {
        let mut c = num.coeff(k);
        for i in 1..=k.min(den.degree().unwrap_or(0)) {
            let d = den.coeff(i);
            if !d.is_zero() {
                c = c - d * coeffs[k - i].clone();
            }
        }
        coeffs.push(c);
    }
    Ok(PowerSeries { coeffs })
}

/// Which t-denominator to expand against.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DenominatorForm {
    /// 1 − (x−1)t − (x−1)t² − xt³, matching the recurrence.
    Corrected,
    /// 1 − (x−1)t − (x−1)t³ − xt³, the slip variant (t² term displaced
    /// onto t³).
    Printed,
}

/// Numerator and denominator of the generating function, in t.
///
/// The numerator is fixed by the three seeds:
/// BJ₀ + (BJ₁ − (x−1)BJ₀)t + (BJ₂ − (x−1)BJ₁ − (x−1)BJ₀)t².
pub fn genfunc_components(
    engine: &SequenceEngine,
    form: DenominatorForm,
) -> (SeriesPoly, SeriesPoly) {
    let xm1 = IntPoly::from_int_coeffs(&[-1, 1]);
    let bj0 = engine.bj_poly(0);
    let bj1 = engine.bj_poly(1);
    let bj2 = engine.bj_poly(2);
    let num = Polynomial::new(vec![
        bj0.clone(),
        bj1.clone() - bj0.clone().scale(&xm1),
        bj2 - bj1.scale(&xm1) - bj0.scale(&xm1),
    ]);

    let scalar = |p: IntPoly| Bihyperbolic::from_scalar(p);
    let den = match form {
        DenominatorForm::Corrected => Polynomial::new(vec![
            scalar(IntPoly::one()),
            scalar(-xm1.clone()),
            scalar(-xm1),
            scalar(-IntPoly::x()),
        ]),
        DenominatorForm::Printed => Polynomial::new(vec![
            scalar(IntPoly::one()),
            scalar(-xm1.clone()),
            scalar(IntPoly::zero()),
            scalar(-xm1 - IntPoly::x()),
        ]),
    };
    (num, den)
}

/// Expands the generating function with the given denominator and compares
/// each series coefficient against the recurrence. The report carries the
/// first differing coefficient pair (with its index in `n`), or the final
/// coefficient pair when everything matches.
pub fn check_genfunc_with(
    engine: &SequenceEngine,
    form: DenominatorForm,
    order: u64,
) -> Result<IdentityReport> {
    let (num, den) = genfunc_components(engine, form);
    let series = series_expand(&num, &den, order)?;
    let k = (0..=order)
        .find(|&k| series.coeff(k as usize) != engine.bj_rec(k))
        .unwrap_or(order);
    Ok(IdentityReport::new(
        IdentityKind::GeneratingFunction,
        ParamSet::new().with_n(k as i64).with_abc(engine.params()),
        bh_poly_to_rf(&series.coeff(k as usize)),
        bh_poly_to_rf(&engine.bj_rec(k)),
    ))
}

/// [`check_genfunc_with`] against the recurrence-matching denominator.
pub fn check_genfunc(engine: &SequenceEngine, order: u64) -> Result<IdentityReport> {
    check_genfunc_with(engine, DenominatorForm::Corrected, order)
}
