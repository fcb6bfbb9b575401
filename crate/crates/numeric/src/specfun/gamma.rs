//! Log-gamma by Stirling's series with argument shift, and the helpers
//! `lambda(z) = Gamma(1-z)/(2 pi)^{1-z}` and the Beta function.

use crate::ctx::Ctx;
use crate::real::Real;
use crate::NumericError;
use tornheim_core::rational::{bernoulli_number, BigRational};

/// `log Gamma(q)` for `q > 0`.
///
/// The argument is shifted up until Stirling's asymptotic series reaches the
/// context tolerance, then `log Gamma(q) = log Gamma(q+n) - sum log(q+i)`.
pub fn log_gamma(q: &Real, ctx: &Ctx) -> Result<Real, NumericError> {
    if q.is_zero() || q.is_negative() {
        return Err(NumericError::OutOfDomain(format!("log_gamma needs q > 0, got {q}")));
    }
    let dd = ctx.digits() + ctx.guard();
    let wp = ctx.bits() + 32;
    let z0 = 0.4 * dd as f64 + 4.0;
    let qf = q.to_f64();
    let shift = if qf < z0 { (z0 - qf).ceil() as i64 } else { 0 };
    let q = q.with_prec(wp);
    let mut log_prod = Real::zero(wp);
    for i in 0..shift {
        log_prod = &log_prod + &(&q + &Real::int(i, wp)).ln();
    }
    let z = &q + &Real::int(shift, wp);
    let lz = z.ln();
    let half = Real::int(1, wp) / Real::int(2, wp);
    // (z - 1/2) ln z - z + ln sqrt(2 pi)
    let mut acc = (&z - &half) * &lz - &z + ctx.log_two_pi().with_prec(wp) * &half;
    // + sum_r B_{2r} / ((2r)(2r-1) z^{2r-1})
    let z_inv = z.recip();
    let z_inv2 = &z_inv * &z_inv;
    let mut zpow = z_inv.clone();
    let tol = Real::int(10, wp).powi(-(dd as i64) - 4);
    let mut r = 1u32;
    loop {
        let c = bernoulli_number(2 * r)
            / BigRational::from_integer((2 * r * (2 * r - 1)).into());
        let term = Real::from_rational(&c, wp) * &zpow;
        acc = &acc + &term;
        if term.abs() < tol {
            break;
        }
        zpow = &zpow * &z_inv2;
        r += 1;
        if r > 4 * dd as u32 {
            return Err(NumericError::NonConvergent("Stirling series stalled".into()));
        }
    }
    Ok((&acc - &log_prod).with_prec(ctx.bits()))
}

/// `lambda(z) = Gamma(1-z)/(2 pi)^{1-z}`, for real `z` not a positive
/// integer. For `z > 1` the reflection form
/// `pi / ((2 pi)^{1-z} Gamma(z) sin(pi z))` avoids Gamma at negative
/// arguments.
pub fn lambda_fn(z: &Real, ctx: &Ctx) -> Result<Real, NumericError> {
    if z.is_integer() && z.is_positive() {
        return Err(NumericError::OutOfDomain(format!("lambda has a pole at z = {z}")));
    }
    let one = ctx.int(1);
    let log2pi = ctx.log_two_pi();
    if *z < one {
        // Gamma(1-z) directly
        let lg = log_gamma(&(&one - z), ctx)?;
        Ok((&lg - &(&(&one - z) * &log2pi)).exp())
    } else {
        let lg = log_gamma(z, ctx)?;
        let sin_piz = (ctx.pi() * z).sin();
        let scale = (-(&(&one - z) * &log2pi) - &lg).exp();
        Ok(ctx.pi() * &scale / &sin_piz)
    }
}

/// Euler Beta `B(a, c) = Gamma(a) Gamma(c) / Gamma(a+c)` for `a, c > 0`.
pub fn beta_fn(a: &Real, c: &Real, ctx: &Ctx) -> Result<Real, NumericError> {
    let l = log_gamma(a, ctx)? + log_gamma(c, ctx)? - log_gamma(&(a + c), ctx)?;
    Ok(l.exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &Real, b: &Real, tol: f64) -> bool {
        (a - b).abs().to_f64() < tol
    }

    #[test]
    fn log_gamma_special_points() {
        let ctx = Ctx::new(30);
        assert!(log_gamma(&ctx.int(1), &ctx).unwrap().abs().to_f64() < 1e-32);
        assert!(log_gamma(&ctx.int(2), &ctx).unwrap().abs().to_f64() < 1e-32);
        // Gamma(1/2) = sqrt(pi)
        let half = ctx.int(1) / ctx.int(2);
        let lg = log_gamma(&half, &ctx).unwrap();
        let expected = ctx.pi().ln() / ctx.int(2);
        assert!(close(&lg, &expected, 1e-32));
        assert!(log_gamma(&ctx.int(0), &ctx).is_err());
    }

    #[test]
    fn gamma_reflection() {
        let ctx = Ctx::new(25);
        // log Gamma(q) + log Gamma(1-q) = log(pi / sin(pi q))
        for qv in [0.2, 0.5, 0.9] {
            let q = ctx.from_f64(qv);
            let lhs = log_gamma(&q, &ctx).unwrap() + log_gamma(&(&ctx.int(1) - &q), &ctx).unwrap();
            let rhs = (ctx.pi() / (ctx.pi() * &q).sin()).ln();
            assert!(close(&lhs, &rhs, 1e-24), "q = {qv}");
        }
    }

    #[test]
    fn lambda_values() {
        let ctx = Ctx::new(25);
        // lambda(0) = 1/(2 pi)
        let l0 = lambda_fn(&ctx.int(0), &ctx).unwrap();
        assert!(close(&l0, &ctx.two_pi().recip(), 1e-25));
        // lambda(1/2) = 1/sqrt(2)
        let half = ctx.int(1) / ctx.int(2);
        let lh = lambda_fn(&half, &ctx).unwrap();
        assert!(close(&lh, &ctx.int(2).sqrt().recip(), 1e-24));
        // both defining forms agree at z = 2.5: direct Gamma(1-z) via
        // reflection is the implementation; compare to the sin form rearranged
        let z = ctx.from_f64(2.5);
        let viaref = lambda_fn(&z, &ctx).unwrap();
        // Gamma(1-z) = pi / (Gamma(z) sin(pi z)) evaluated independently
        let gamma_1mz = ctx.pi() / ((ctx.pi() * &z).sin() * log_gamma(&z, &ctx).unwrap().exp());
        let log2pi = ctx.log_two_pi();
        let direct = &gamma_1mz * &(-(&(&ctx.int(1) - &z) * &log2pi)).exp();
        assert!(close(&viaref, &direct, 1e-23));
        assert!(lambda_fn(&ctx.int(3), &ctx).is_err());
    }

    #[test]
    fn beta_small_integers() {
        let ctx = Ctx::new(25);
        // B(2,3) = 1/12
        let b = beta_fn(&ctx.int(2), &ctx.int(3), &ctx).unwrap();
        assert!(close(&b, &(ctx.int(1) / ctx.int(12)), 1e-24));
    }
}
