//! Sequency analysis of ±1 matrices.
//!
//! The sequency of a sign vector is its number of adjacent sign changes, the
//! Walsh-domain analogue of frequency. This crate provides:
//!
//! * packed sign vectors and square sign matrices with sequency profiles
//!   ([`SignVector`], [`SignMatrix`], [`SequencyProfile`]);
//! * classification of matrices as sequency-complete (column sequencies form
//!   a permutation of 0..n) or sequency-ordered (column j has sequency j);
//! * constructors for parametric complete/ordered families and for
//!   Walsh-Hadamard matrices in natural and sequency order;
//! * Kronecker products with closed-form sequency prediction for product
//!   columns, avoiding materialization;
//! * exact big-integer counts of vectors and matrices by sequency, each
//!   validated by an independent brute-force oracle;
//! * the `sgn-v1` plain-text matrix format.

pub mod classify;
pub mod counting;
pub mod error;
pub mod generators;
mod matrix;
pub mod sgn;
pub mod tensor;
mod vector;

pub use classify::{classify, classify_real, Classification};
pub use counting::{CountReport, GridIdentityReport};
pub use error::SequencyError;
pub use generators::GeneratorKind;
pub use matrix::{SequencyProfile, SignMatrix};
pub use tensor::{FactorSummary, MixedRadixIndex};
pub use vector::SignVector;
