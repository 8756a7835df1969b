//! Companion-matrix view of the recurrence. The 3×3 matrix
//!
//!   Q = ⎡x−1  x−1  x⎤
//!       ⎢ 1    0   0⎥
//!       ⎣ 0    1   0⎦
//!
//! advances a window of three consecutive terms, has determinant x, and its
//! characteristic polynomial λ³ − (x−1)λ² − (x−1)λ − x is the recurrence
//! polynomial itself. Powers of Q therefore encode shifted windows: with
//! Tₖ = BJₖ − (x−1)BJₖ₋₁, the window matrix
//!
//!   Mₙ = ⎡BJₙ₊₃  Tₙ₊₄  xBJₙ₊₂⎤
//!        ⎢BJₙ₊₂  Tₙ₊₃  xBJₙ₊₁⎥
//!        ⎣BJₙ₊₁  Tₙ₊₂  xBJₙ  ⎦
//!
//! satisfies Mₙ = M₀·Qⁿ.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::bihyperbolic::Bihyperbolic;
use crate::error::{Error, Result};
use crate::identities::{IdentityKind, IdentityReport, ParamSet};
use crate::polyring::{Polynomial, ToJson};
use crate::ring::Ring;
use crate::sequences::{bh_poly_to_rf, BhPoly, IntPoly, SequenceEngine};

/// Row-major 3×3 matrix over any ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat3<R: Ring> {
    e: [[R; 3]; 3],
}

impl<R: Ring> Mat3<R> {
    pub fn new(e: [[R; 3]; 3]) -> Self {
        Self { e }
    }

    pub fn zero() -> Self {
        Self::new(std::array::from_fn(|_| std::array::from_fn(|_| R::zero())))
    }

    pub fn identity() -> Self {
        Self::new(std::array::from_fn(|i| {
            std::array::from_fn(|j| if i == j { R::one() } else { R::zero() })
        }))
    }

    /// c·I.
    pub fn scalar(c: R) -> Self {
        Self::new(std::array::from_fn(|i| {
            std::array::from_fn(|j| if i == j { c.clone() } else { R::zero() })
        }))
    }

    pub fn entry(&self, row: usize, col: usize) -> &R {
        &self.e[row][col]
    }

    pub fn map<S: Ring>(&self, mut f: impl FnMut(&R) -> S) -> Mat3<S> {
        Mat3::new(std::array::from_fn(|i| {
            std::array::from_fn(|j| f(&self.e[i][j]))
        }))
    }

    pub fn mul_vec(&self, v: &[R; 3]) -> [R; 3] {
        std::array::from_fn(|i| {
            (0..3).fold(R::zero(), |acc, j| {
                acc + self.e[i][j].clone() * v[j].clone()
            })
        })
    }

    /// Repeated squaring; the zeroth power is the identity.
    pub fn pow(&self, mut n: u64) -> Self {
        let mut result = Self::identity();
        let mut base = self.clone();
        loop {
            if n & 1 == 1 {
                result = result * base.clone();
            }
            n >>= 1;
            if n == 0 {
                return result;
            }
            base = base.clone() * base;
        }
    }

    /// Cofactor expansion along the first row.
    pub fn det(&self) -> R {
        let m = &self.e;
        // 2×2 minor of rows 1, 2 at the given column pair.
        let minor = |c1: usize, c2: usize| {
            m[1][c1].clone() * m[2][c2].clone() - m[1][c2].clone() * m[2][c1].clone()
        };
        m[0][0].clone() * minor(1, 2) - m[0][1].clone() * minor(0, 2)
            + m[0][2].clone() * minor(0, 1)
    }

    /// det(λI − M): monic cubic in λ over the entry ring.
    pub fn char_poly(&self) -> Polynomial<R> {
        let lambda = Polynomial::<R>::x();
        let lifted: Mat3<Polynomial<R>> = Mat3::new(std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let entry = Polynomial::constant(self.e[i][j].clone());
                if i == j {
                    lambda.clone() - entry
                } else {
                    -entry
                }
            })
        }));
        lifted.det()
    }
}

impl<R: Ring> Add for Mat3<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(std::array::from_fn(|i| {
            std::array::from_fn(|j| self.e[i][j].clone() + rhs.e[i][j].clone())
        }))
    }
}

impl<R: Ring> Sub for Mat3<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(std::array::from_fn(|i| {
            std::array::from_fn(|j| self.e[i][j].clone() - rhs.e[i][j].clone())
        }))
    }
}

impl<R: Ring> Mul for Mat3<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                (0..3).fold(R::zero(), |acc, k| {
                    acc + self.e[i][k].clone() * rhs.e[k][j].clone()
                })
            })
        }))
    }
}

impl<R: Ring + ToJson> ToJson for Mat3<R> {
    /// Array of three row arrays.
    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.e
                .iter()
                .map(|row| serde_json::Value::Array(row.iter().map(|c| c.to_json()).collect()))
                .collect(),
        )
    }
}

impl<R: Ring> fmt::Display for Mat3<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.e.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[{}, {}, {}]", row[0], row[1], row[2])?;
        }
        Ok(())
    }
}

/// Horner evaluation of a polynomial at a matrix argument (constant term
/// becomes a scalar matrix).
pub fn eval_at_matrix<R: Ring>(poly: &Polynomial<R>, m: &Mat3<R>) -> Mat3<R> {
    let mut acc = Mat3::zero();
    for k in (0..poly.coeffs().len()).rev() {
        acc = acc * m.clone() + Mat3::scalar(poly.coeff(k));
    }
    acc
}

/// The companion matrix of the recurrence over Z[x].
pub fn qj_matrix() -> Mat3<IntPoly> {
    let xm1 = IntPoly::from_int_coeffs(&[-1, 1]);
    Mat3::new([
        [xm1.clone(), xm1, IntPoly::x()],
        [IntPoly::one(), IntPoly::zero(), IntPoly::zero()],
        [IntPoly::zero(), IntPoly::one(), IntPoly::zero()],
    ])
}

fn report_from_entries(
    kind: IdentityKind,
    params: ParamSet,
    lhs: &[BhPoly],
    rhs: &[BhPoly],
) -> IdentityReport {
    debug_assert_eq!(lhs.len(), rhs.len());
    let idx = (0..lhs.len()).find(|&i| lhs[i] != rhs[i]).unwrap_or(0);
    IdentityReport::new(kind, params, bh_poly_to_rf(&lhs[idx]), bh_poly_to_rf(&rhs[idx]))
}

/// Q maps the window (BJₙ₊₁, BJₙ, BJₙ₋₁) to (BJₙ₊₂, BJₙ₊₁, BJₙ); requires
/// n ≥ 1 so the window stays at non-negative indices. The report carries the
/// first differing window entry (the top entry when all three agree).
pub fn check_column_relation(engine: &SequenceEngine, n: u64) -> Result<IdentityReport> {
    if n == 0 {
        return Err(Error::InvalidParams(
            "column relation needs n ≥ 1 (the window reaches down to n − 1)".into(),
        ));
    }
    let q = qj_matrix().map(|p| Bihyperbolic::from_scalar(p.clone()));
    let window = [
        engine.bj_poly(n + 1),
        engine.bj_poly(n),
        engine.bj_poly(n - 1),
    ];
    let advanced = q.mul_vec(&window);
    let observed = [
        engine.bj_poly(n + 2),
        engine.bj_poly(n + 1),
        engine.bj_poly(n),
    ];
    Ok(report_from_entries(
        IdentityKind::MatrixColumn,
        ParamSet::new().with_n(n as i64).with_abc(engine.params()),
        &observed,
        &advanced,
    ))
}

/// Window matrix Mₙ (see the module header); needs the mixed column
/// Tₖ = BJₖ − (x−1)BJₖ₋₁, defined for k ≥ 1.
fn window_matrix(engine: &SequenceEngine, n: u64) -> Result<Mat3<BhPoly>> {
    let x = IntPoly::x();
    let row = |base: u64| -> Result<[BhPoly; 3]> {
        Ok([
            engine.bj_poly(base + 1),
            engine.cal_t(base + 2)?,
            engine.bj_poly(base).scale(&x),
        ])
    };
    Ok(Mat3::new([row(n + 2)?, row(n + 1)?, row(n)?]))
}

/// Mₙ = M₀·Qⁿ as 3×3 matrices over H₂(Z[x]). The report carries the first
/// differing entry in row-major order (the top-left entry when all agree).
pub fn check_matrix_identity(engine: &SequenceEngine, n: u64) -> Result<IdentityReport> {
    let observed = window_matrix(engine, n)?;
    let qn = qj_matrix().pow(n).map(|p| Bihyperbolic::from_scalar(p.clone()));
    let advanced = window_matrix(engine, 0)? * qn;
    let flatten = |m: &Mat3<BhPoly>| -> Vec<BhPoly> {
        (0..9).map(|k| m.e[k / 3][k % 3].clone()).collect()
    };
    Ok(report_from_entries(
        IdentityKind::MatrixPower,
        ParamSet::new().with_n(n as i64).with_abc(engine.params()),
        &flatten(&observed),
        &flatten(&advanced),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::SeqParams;
    use num_bigint::BigInt;

    fn engine(a: i64, b: i64, c: i64) -> SequenceEngine {
        SequenceEngine::new(SeqParams::new(a, b, c).unwrap())
    }

    fn int_mat(rows: [[i64; 3]; 3]) -> Mat3<BigInt> {
        Mat3::new(rows.map(|r| r.map(BigInt::from)))
    }

    #[test]
    fn companion_matrix_at_two() {
        let q = qj_matrix().map(|p| p.eval(&BigInt::from(2)));
        assert_eq!(q, int_mat([[1, 1, 2], [1, 0, 0], [0, 1, 0]]));
        assert_eq!(q.det(), BigInt::from(2));
    }

    #[test]
    fn determinant_is_x_and_multiplicative() {
        let q = qj_matrix();
        assert_eq!(q.det(), IntPoly::x());
        for n in 0..=10u64 {
            assert_eq!(q.pow(n).det(), IntPoly::x().pow(n), "det(Qⁿ) at n = {n}");
        }
    }

    #[test]
    fn characteristic_polynomial_is_the_recurrence() {
        // λ³ − (x−1)λ² − (x−1)λ − x, coefficients in Z[x], ascending in λ.
        let cp = qj_matrix().char_poly();
        let xm1 = IntPoly::from_int_coeffs(&[-1, 1]);
        let expected = Polynomial::new(vec![-IntPoly::x(), -xm1.clone(), -xm1, IntPoly::one()]);
        assert_eq!(cp, expected);
    }

    #[test]
    fn cayley_hamilton() {
        let q = qj_matrix();
        let cp = q.char_poly();
        assert_eq!(eval_at_matrix(&cp, &q), Mat3::zero());
    }

    #[test]
    fn pow_matches_naive_products() {
        let q = qj_matrix();
        let mut naive = Mat3::<IntPoly>::identity();
        for n in 0..=8u64 {
            assert_eq!(q.pow(n), naive, "power at n = {n}");
            naive = naive * q.clone();
        }
    }

    #[test]
    fn scalar_and_identity_constructors() {
        let five = Mat3::<BigInt>::scalar(BigInt::from(5));
        assert_eq!(five, int_mat([[5, 0, 0], [0, 5, 0], [0, 0, 5]]));
        let v = [BigInt::from(1), BigInt::from(2), BigInt::from(3)];
        assert_eq!(Mat3::<BigInt>::identity().mul_vec(&v), v);
        assert_eq!(
            int_mat([[1, 1, 0], [0, 1, 1], [1, 0, 1]]).mul_vec(&v),
            [BigInt::from(3), BigInt::from(5), BigInt::from(4)]
        );
    }

    #[test]
    fn column_relation_small_cases() {
        let e = engine(1, 2, 3);
        for n in 1..=6u64 {
            let r = check_column_relation(&e, n).unwrap();
            assert!(r.equal, "window advance at n = {n}");
        }
        assert!(check_column_relation(&e, 0).is_err());
        assert!(check_column_relation(&engine(2, 1, 3), 4).unwrap().equal);
    }

    #[test]
    fn window_power_identity_small_cases() {
        let e = engine(1, 2, 3);
        for n in 0..=6u64 {
            let r = check_matrix_identity(&e, n).unwrap();
            assert!(r.equal, "window power identity at n = {n}");
        }
        assert!(check_matrix_identity(&engine(2, 1, 3), 8).unwrap().equal);
    }

    #[test]
    fn matrix_json_is_rows_of_entries() {
        let json = qj_matrix().to_json();
        let rows = json.as_array().unwrap();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[0][2], serde_json::json!(["0", "1"]));
        assert_eq!(rows[1][0], serde_json::json!(["1"]));
    }
}
