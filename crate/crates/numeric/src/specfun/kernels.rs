//! Bernoulli polynomials at real arguments, the Bernoulli functions
//! `A_k(q) = k zeta'(1-k, q)`, the iterated log-sine kernels `K_n(q)`, and
//! small helpers.

use crate::ctx::Ctx;
use crate::real::Real;
use crate::specfun::gamma::log_gamma;
use crate::specfun::zeta::{hurwitz_zeta_sderiv, zeta_int};
use crate::specfun::clausen::clausen_two_pi_frac;
use crate::NumericError;

/// 4-parity `p_k = (-1)^{floor(k/2)}`.
pub fn four_parity(k: u32) -> i32 {
    if k % 4 <= 1 {
        1
    } else {
        -1
    }
}

/// Bernoulli polynomial `B_k(q)` at working precision (Horner form over
/// exact coefficients).
pub fn bernoulli_poly(k: u32, q: &Real, ctx: &Ctx) -> Real {
    let coeffs = ctx.bernoulli_poly_coeffs(k);
    let mut acc = coeffs[0].clone();
    for c in &coeffs[1..] {
        acc = &acc * q + c;
    }
    acc
}

/// Bernoulli function `A_k(q)`: `A_1(q) = log Gamma(q) - log sqrt(2 pi)`,
/// `A_k(q) = k zeta'(1-k, q)` for `k >= 2`. Defined on `(0, 1]` (and any
/// `q > 0`); `A_1` diverges logarithmically at `q = 0+`.
pub fn bernoulli_fn_a(k: u32, q: &Real, ctx: &Ctx) -> Result<Real, NumericError> {
    assert!(k >= 1, "A_0 is undefined");
    if q.is_zero() || q.is_negative() {
        return Err(NumericError::OutOfDomain(format!("A_{k} needs q > 0, got {q}")));
    }
    if k == 1 {
        let half = ctx.int(1) / ctx.int(2);
        Ok(log_gamma(q, ctx)? - ctx.log_two_pi() * &half)
    } else {
        let s = ctx.int(1 - k as i64);
        Ok(ctx.int(k as i64) * hurwitz_zeta_sderiv(&s, q, ctx)?)
    }
}

/// Kernel `K_n(q)`: `K_0(q) = -log sin(pi q)` and `K_n` its iterated
/// primitives normalized by `K_n(0) = 0`, via the Fourier form
///
/// ```text
/// K_n(q) = q^n log 2
///          + n! sum_{k=1}^{floor(n/2)} (-1)^{k+1} zeta(2k+1)
///                q^{n-2k} / ((2pi)^{2k} (n-2k)!)
///          + p_n n!/(2pi)^n Cl_{n+1}(2 pi q)
/// ```
pub fn kernel_k(n: u32, q: &Real, one_minus_q: &Real, ctx: &Ctx) -> Result<Real, NumericError> {
    if n == 0 {
        if q.is_zero() || one_minus_q.is_zero() {
            return Err(NumericError::OutOfDomain("K_0 is singular at the endpoints".into()));
        }
        let small = if q < one_minus_q { q } else { one_minus_q };
        return Ok(-((ctx.pi() * small).sin().ln()));
    }
    let mut acc = q.powi(n as i64) * ctx.ln2();
    let mut fact_ratio = ctx.int(1); // n! / (n-2k)! accumulated
    let two_pi_sq = ctx.two_pi().powi(2);
    let mut tp_pow = ctx.int(1);
    for k in 1..=n / 2 {
        fact_ratio = &fact_ratio
            * &ctx.int((n as i64) - 2 * (k as i64) + 2)
            * &ctx.int((n as i64) - 2 * (k as i64) + 1);
        tp_pow = &tp_pow * &two_pi_sq;
        let z = zeta_int((2 * k + 1) as i64, ctx)?;
        let mut term = &fact_ratio * &z * &q.powi((n - 2 * k) as i64) / &tp_pow;
        if k % 2 == 0 {
            term = -term;
        }
        acc = &acc + &term;
    }
    let mut nfact = ctx.int(1);
    for i in 2..=n as i64 {
        nfact = nfact * ctx.int(i);
    }
    let cl = clausen_two_pi_frac(n + 1, q, one_minus_q, ctx)?;
    let mut tail = &nfact * &cl / &ctx.two_pi().powi(n as i64);
    if four_parity(n) < 0 {
        tail = -tail;
    }
    Ok(&acc + &tail)
}

/// Boundary value `K_n(1)`:
/// `log 2 + n! sum_{k=1}^{floor((n-1)/2)} (-1)^{k+1} zeta(2k+1) /
/// ((2pi)^{2k} (n-2k)!)`.
pub fn kernel_k_at_one(n: u32, ctx: &Ctx) -> Result<Real, NumericError> {
    assert!(n >= 1);
    let mut acc = ctx.ln2();
    let two_pi_sq = ctx.two_pi().powi(2);
    let mut fact_ratio = ctx.int(1);
    let mut tp_pow = ctx.int(1);
    for k in 1..=(n - 1) / 2 {
        fact_ratio = &fact_ratio
            * &ctx.int((n as i64) - 2 * (k as i64) + 2)
            * &ctx.int((n as i64) - 2 * (k as i64) + 1);
        tp_pow = &tp_pow * &two_pi_sq;
        let z = zeta_int((2 * k + 1) as i64, ctx)?;
        let mut term = &fact_ratio * &z / &tp_pow;
        if k % 2 == 0 {
            term = -term;
        }
        acc = &acc + &term;
    }
    Ok(acc)
}
