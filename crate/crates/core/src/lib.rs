//! Exact irreducible characters and bitrace of the q-rook monoid algebra.
//!
//! The character values `chi^lambda_mu(q)` are computed by several
//! independent routes (power-sum inner products, an iterative vertical-strip
//! recursion, a Murnaghan-Nakayama rule over generalized border strips,
//! compact hook/two-row formulas, and traces of explicit seminormal
//! matrices) so that each can be checked against the others.

pub mod arith;
pub mod bitrace;
pub mod characters;
mod error;
pub mod identities;
pub mod par;
pub mod seminormal;
pub mod shapes;
pub mod symfunc;

pub use arith::{LaurentPoly, Rational, RationalFunction, Var};
pub use error::{Error, Mismatch, Result};
pub use shapes::{Composition, Partition, SkewShape};

/// Default cap on the weight `n` accepted by the table builders.
pub const DEFAULT_MAX_WEIGHT: usize = 12;

/// Cap on `n`, read from `ROOKQ_MAX_WEIGHT` when set.
pub fn max_weight() -> usize {
    std::env::var("ROOKQ_MAX_WEIGHT")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_WEIGHT)
}
