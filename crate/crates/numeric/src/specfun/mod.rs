//! Arbitrary-precision special functions: Bernoulli numbers and polynomials,
//! Riemann and Hurwitz zeta (with the `s`-derivative), log-gamma, Clausen
//! functions, the Bernoulli functions `A_k`, the kernels `K_n`, and small
//! helpers.

mod clausen;
mod gamma;
mod kernels;
mod zeta;

pub use clausen::{clausen, clausen_two_pi_frac};
pub use gamma::{beta_fn, lambda_fn, log_gamma};
pub use kernels::{bernoulli_fn_a, bernoulli_poly, four_parity, kernel_k, kernel_k_at_one};
pub use zeta::{
    hurwitz_zeta, hurwitz_zeta_sderiv, zeta_int, zeta_prime_neg_even, zeta_real,
};

/// Exact Bernoulli number `B_k` (re-exported from the exact layer).
pub use tornheim_core::rational::bernoulli_number;
