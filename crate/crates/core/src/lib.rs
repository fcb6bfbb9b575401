//! Exact evaluation of Tornheim double sums.
//!
//! The Tornheim sum `T(m,k,n)` is the double series
//!
//! ```text
//! T(m,k,n) = sum_{r,s >= 1} 1 / (r^m s^k (r+s)^n)
//! ```
//!
//! of weight `N = m + k + n`. This crate reduces any convergent sum with
//! nonnegative integer parameters to an exact rational linear combination of
//! zeta values `zeta(N)`, products `zeta(j)zeta(N-j)`, and (for even weight
//! `N >= 8`) the basis sums `T(N-2r,0,2r)`, `r = 1..floor((N-2)/6)`.
//!
//! The pieces:
//! - [`rational`]: exact Bernoulli numbers, binomials, and small helpers over
//!   arbitrary-precision rationals
//! - [`symbol`]: the atoms of the symbolic algebra ([`ZetaSymbol`])
//! - [`combo`]: finite rational linear combinations of atoms ([`SymbolicCombo`])
//! - [`linsys`]: fraction-free Gaussian elimination over the rationals
//! - [`catalog`]: catalogued closed forms and relation generators
//!   (Huard expansion, Euler and Granville relations, odd-weight forms)
//! - [`reduce`]: the per-weight reduction pipeline, generating sets, and
//!   the rewriting of basis sums in terms of `Ystar` integrals

pub mod catalog;
pub mod combo;
pub mod linsys;
pub mod rational;
pub mod reduce;
pub mod symbol;

pub use catalog::{
    euler_relation, granville_relation, huard_expand, is_admissible, known_closed_form, Relation,
    TornheimIndex,
};
pub use combo::SymbolicCombo;
pub use linsys::{solve_exact, LinearSystem, Solution};
pub use rational::{bernoulli_number, big_binomial, BigRational};
pub use reduce::{
    basis_count, basis_in_ystar, generating_set, reduce, substitute_basis, weight_table,
    GeneratingSet, ReductionResult,
};
pub use symbol::ZetaSymbol;

use thiserror::Error;

/// Errors reported by the exact layer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoreError {
    /// The triple does not satisfy the convergence conditions
    /// `m+n >= 2`, `k+n >= 2`, `m+k+n >= 3`.
    #[error("inadmissible triple T({0},{1},{2}): the series diverges")]
    Inadmissible(u32, u32, u32),
    /// A symbol with out-of-range indices was constructed.
    #[error("malformed symbol: {0}")]
    MalformedSymbol(String),
    /// Argument outside the domain of the identity.
    #[error("out of range: {0}")]
    OutOfRange(String),
    /// The linear system has a row `0 = c` with `c != 0`. The relation
    /// families used here are consistent, so this signals a bug.
    #[error("inconsistent linear system (implementation bug)")]
    InconsistentSystem,
    /// Elimination left free unknowns other than the expected basis sums.
    #[error("basis mismatch at weight {weight}: free unknowns {found:?}, expected {expected:?}")]
    BasisMismatch {
        weight: u32,
        found: Vec<u32>,
        expected: Vec<u32>,
    },
}
