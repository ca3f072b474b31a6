//! Exact verification laboratory for arithmetic statistics of abelian
//! varieties over prime fields.
//!
//! The crate is organised around the pipeline
//! `weil` (which characteristic polynomials occur) →
//! `symplectic` (matrix counts over residue rings) →
//! `local` (local densities and Euler products) →
//! `sato_tate` / `curves` (archimedean measures and ground truth),
//! with `algebra` supplying the exact polynomial arithmetic underneath
//! and `averaging` the box-average harness used to compare products of
//! periodic local factors with products of averages.
//!
//! Everything that can be exact is exact: counts are integers, local
//! factors are `BigRational`s, and floating point only enters for the
//! archimedean quantities.

pub mod algebra;
pub mod averaging;
pub mod curves;
pub mod error;
pub mod local;
pub mod sato_tate;
pub mod symplectic;
pub mod util;
pub mod weil;

pub use error::{Error, Result};

/// Exact rational scalar used for all non-archimedean local factors.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integer re-export used across the public API.
pub type Integer = num_bigint::BigInt;
