//! The closed Hurwitz-zeta formula for `T(a,0,c)` at real non-integer
//! `a, c > 2`:
//!
//! ```text
//! T(a,0,c) = 4 lambda(a) lambda(c) sin(pi c/2) [
//!     sin(pi a/2) { zeta(1-a) zeta(1-c)
//!                   - zeta(1-a-c) B(a,c) / (1 - tan(pi a/2) tan(pi c/2)) }
//!     - (1/2) cos(pi a/2)
//!         int_0^1 [zeta(1-a,q) - zeta(1-a,1-q)] zeta(1-c,q) cot(pi q) dq ]
//! ```
//!
//! Everything here runs through the Hurwitz-zeta machinery, which is exactly
//! what makes agreement with the direct-summation oracle a meaningful check.

use tornheim_numeric::specfun::{beta_fn, hurwitz_zeta, lambda_fn, zeta_real};
use tornheim_numeric::{quad01, Ctx, Endpoints, NumericError, Real};

/// Evaluate `T(a,0,c)` for real non-integer `a, c > 2`.
pub fn t_a0c_formula(a: &Real, c: &Real, ctx: &Ctx) -> Result<Real, NumericError> {
    let two = ctx.int(2);
    if !(a > &two) || !(c > &two) || a.is_integer() || c.is_integer() {
        return Err(NumericError::OutOfDomain(
            "the closed formula needs real non-integer a, c > 2".into(),
        ));
    }
    let one = ctx.int(1);
    let half = &one / &two;
    let half_pi = ctx.pi() * &half;

    let lam = lambda_fn(a, ctx)? * lambda_fn(c, ctx)?;
    let sin_a = (&half_pi * a).sin();
    let sin_c = (&half_pi * c).sin();
    let cos_a = (&half_pi * a).cos();
    let tan_a = (&half_pi * a).tan();
    let tan_c = (&half_pi * c).tan();

    let z1a = zeta_real(&(&one - a), ctx)?;
    let z1c = zeta_real(&(&one - c), ctx)?;
    let beta = beta_fn(a, c, ctx)?;
    let sum_ac = a + c;
    let second = if sum_ac.is_integer() && (sum_ac.to_f64() as i64) % 2 == 1 {
        // removable singularity: at odd integer a+c both zeta(1-a-c) and
        // 1 - tan(pi a/2) tan(pi c/2) vanish; the limit of their ratio is
        // zeta'(1-a-c) sin(pi a) / pi
        let half_weight = (sum_ac.to_f64() as u32 - 1) / 2;
        let zp = tornheim_numeric::specfun::zeta_prime_neg_even(half_weight, ctx)?;
        &zp * &(ctx.pi() * a).sin() * &beta / ctx.pi()
    } else {
        let z1ac = zeta_real(&(&one - &sum_ac), ctx)?;
        &z1ac * &beta / (&one - &tan_a * &tan_c)
    };
    let bracket_zeta = &z1a * &z1c - &second;

    let s1a = &one - a;
    let s1c = &one - c;
    let integral = quad01(
        |q, omq| {
            let za_q = hurwitz_zeta(&s1a, q, ctx).expect("interior point");
            let za_1mq = hurwitz_zeta(&s1a, omq, ctx).expect("interior point");
            let zc_q = hurwitz_zeta(&s1c, q, ctx).expect("interior point");
            // cot(pi q) via the smaller of q, 1-q for a stable sine
            let cot = if q < omq {
                (ctx.pi() * q).cos() / (ctx.pi() * q).sin()
            } else {
                -((ctx.pi() * omq).cos()) / (ctx.pi() * omq).sin()
            };
            (&za_q - &za_1mq) * &zc_q * &cot
        },
        ctx,
        Endpoints::both(),
    )?;

    let inner = &sin_a * &bracket_zeta - &half * &cos_a * &integral.value;
    Ok(ctx.int(4) * &lam * &sin_c * &inner)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_integer_or_small_parameters() {
        let ctx = Ctx::new(16);
        assert!(t_a0c_formula(&ctx.int(3), &ctx.from_f64(3.5), &ctx).is_err());
        assert!(t_a0c_formula(&ctx.from_f64(1.5), &ctx.from_f64(3.5), &ctx).is_err());
    }

    #[test]
    fn matches_reference_value() {
        let ctx = Ctx::new(20);
        // frozen from an independent high-precision direct summation
        let v = t_a0c_formula(&ctx.from_f64(2.5), &ctx.from_f64(3.5), &ctx).unwrap();
        assert!(
            (v.to_f64() - 0.1350751294647886501).abs() < 1e-13,
            "got {}",
            v.to_f64()
        );
    }
}
