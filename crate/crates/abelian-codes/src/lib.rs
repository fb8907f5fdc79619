//! Abelian (multivariate cyclic) codes over finite fields: apparent distance,
//! minimum apparent distance, BCH-style bounds and constructions, plus
//! brute-force oracles for desk-scale verification.

pub mod algebra;
pub mod codes;
pub mod hypermatrix;
pub mod json;
pub mod mad;
pub mod oracle;

mod bits;

pub use bits::Bits;

use thiserror::Error;

/// Unified error type for the whole crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("defining set is not closed under multiplication by q^t: index {0:?} is missing")]
    NotOrbitClosed(Vec<u32>),
    #[error("hypercolumn ({k},{b}) is zero; omega is undefined on zero hypercolumns")]
    ZeroHypercolumn { k: usize, b: u32 },
    #[error("budget exceeded: {needed} candidates exceed budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
