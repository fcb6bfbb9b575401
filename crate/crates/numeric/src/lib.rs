//! Numeric side of the Tornheim-sum evaluator: arbitrary-precision special
//! functions, double-exponential quadrature, the integral families
//! `X`, `Y*`, `U`, `U*`, `V`, `W` and the basic integrals, and the
//! basic-integral route to `T(m,0,n)`.

pub mod ctx;
pub mod eval;
pub mod families;
pub mod quad;
pub mod real;
pub mod specfun;

pub use ctx::Ctx;
pub use eval::eval_combo;
pub use quad::{quad01, Endpoints, QuadResult};
pub use real::Real;

use thiserror::Error;

/// Errors from the numeric layer.
#[derive(Debug, Error)]
pub enum NumericError {
    #[error("argument out of domain: {0}")]
    OutOfDomain(String),
    #[error("series did not converge: {0}")]
    NonConvergent(String),
    #[error("quadrature did not reach tolerance (best error {})", .best.error_estimate)]
    QuadratureFailure { best: Box<QuadResult> },
    #[error("cannot evaluate symbol numerically: {0}")]
    Unevaluable(String),
}
