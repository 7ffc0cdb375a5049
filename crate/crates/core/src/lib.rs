//! Exact commutative-algebra toolkit.
//!
//! Everything here is exact: sparse multivariate polynomials over the
//! rationals, a deterministic Buchberger engine with the usual ideal-theoretic
//! toolbox (membership, equality, colon, saturation, elimination, dimension,
//! localized membership), truncated x-adic series with endpiece
//! decompositions, and the reduction criterion for integral dependence of an
//! element on an ideal.
//!
//! On top of the kernel, [`construction`] builds a d-dimensional example
//! family — seeded generic series `α_i`, elements `f_i = (y_i − α_i)^h` with
//! `h = d − 1`, the product element `ξ = Π(y_i − α_i)`, and the ideal
//! `P = (f_1, …, f_h)` — and machine-checks, at finite x-adic precision, that
//! `ξ` is integral over `P` (reduction witness with exponent exactly `h`)
//! while lying outside the extension of `P` in every truncation of the
//! completed local ring. Each run emits a deterministic certificate carrying
//! the Gröbner bases, witnesses, and decompositions behind every verdict.

pub mod certificate;
pub mod closure;
pub mod construction;
pub mod error;
pub mod groebner;
pub mod order;
pub mod poly;
pub mod series;
pub mod varset;

pub use certificate::{CheckRecord, Verdict, VerificationCertificate};
pub use closure::{ideal_power, ideal_product, is_integral_over, is_reduction, ReductionWitness};
pub use construction::{ExampleInstance, SuiteOptions};
pub use error::{Error, Result};
pub use groebner::{local_membership, local_membership_witness, Ideal};
pub use order::MonomialOrder;
pub use poly::{Monomial, Polynomial, Rational};
pub use series::{EndpieceDecomposition, GenericSeries, TruncatedElement};
pub use varset::VarSet;
