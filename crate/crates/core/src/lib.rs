//! Exact arithmetic and identity verification for generalized bihyperbolic
//! third-order Jacobsthal polynomials.
//!
//! The objects of study are the third-order Jacobsthal polynomials
//! Jₙ(x) (J₀ = 0, J₁ = 1, J₂ = x − 1, Jₙ₊₃ = (x−1)Jₙ₊₂ + (x−1)Jₙ₊₁ + xJₙ)
//! and their bihyperbolic lift BJₙ^(a,b,c)(x) = Jₙ + Jₙ₊ₐj₁ + Jₙ₊ᵦj₂ + Jₙ₊꜀j₃
//! in the commutative algebra H₂. Everything is computed exactly: polynomial
//! and rational-function arithmetic over arbitrary-precision integers, with
//! the cube roots of unity handled in Q(ω). The `identities` module turns
//! each closed-form law satisfied by these sequences (Binet form, Vajda and
//! its Catalan/Cassini/d'Ocagne specializations, partial sums, generating
//! function, companion-matrix relations) into a mechanical check that both
//! sides agree as canonical rational functions.

pub mod bihyperbolic;
pub mod eisenstein;
pub mod error;
pub mod genfunc;
pub mod identities;
pub mod matrixgen;
pub mod polyring;
pub mod ring;
pub mod sequences;

pub use bihyperbolic::Bihyperbolic;
pub use eisenstein::EisensteinRational;
pub use error::{Error, Result};
pub use genfunc::{DenominatorForm, PowerSeries};
pub use identities::{
    run_suite, IdentityKind, IdentityReport, ParamSet, SuiteGrid, SuiteSummary,
};
pub use matrixgen::Mat3;
pub use polyring::{FractionDomain, Polynomial, RationalFunction, ToJson};
pub use ring::{Field, Ring};
pub use sequences::{
    BhPoly, BhRatFunc, BinetConstants, EisPoly, EisRatFunc, IntPoly, IntRatFunc, SeqParams,
    SequenceEngine,
};
