//! Oracle, verification pipeline and CLI plumbing for Tornheim double sums.
//!
//! - [`direct`]: certified direct summation of the defining series (the
//!   oracle; independent of every formula path)
//! - [`formula`]: the closed Hurwitz-zeta expression for `T(a,0,c)` at real
//!   non-integer parameters
//! - [`verify`]: reduce, substitute `Ystar`, evaluate, compare with the
//!   oracle
//! - [`json`]: the wire format for reductions and tables

pub mod direct;
pub mod formula;
pub mod json;
pub mod verify;

pub use direct::{default_tolerance, tornheim_direct, DirectError, DirectSum};
pub use formula::t_a0c_formula;
pub use json::{reduction_from_json, reduction_to_json, table_to_json};
pub use verify::{evaluate, verify, VerifyError, VerifyReport};
