//! Riemann and Hurwitz zeta functions by Euler-Maclaurin summation, with the
//! partial derivative in the first argument.
//!
//! One evaluation scheme covers all real `s != 1`:
//!
//! ```text
//! zeta(s,q) = sum_{j<M} (j+q)^-s + X^{1-s}/(s-1) + X^-s/2
//!             + sum_r B_{2r}/(2r)! (s)_{2r-1} X^{1-s-2r},     X = M+q
//! ```
//!
//! with adaptive `M` and the correction series truncated at the tolerance.
//! The `s`-derivative differentiates every piece, tracking Pochhammer values
//! and their derivatives incrementally so zeros of `(s)_{2r-1}` at negative
//! integer `s` are harmless.

use crate::ctx::Ctx;
use crate::real::Real;
use crate::NumericError;
use tornheim_core::rational::{bernoulli_number, zeta_neg};

/// `zeta(n)` for integer `n != 1`: even positive via the Bernoulli closed
/// form, odd positive via Euler-Maclaurin, nonpositive via `zeta(1-k)`.
pub fn zeta_int(n: i64, ctx: &Ctx) -> Result<Real, NumericError> {
    if n == 1 {
        return Err(NumericError::OutOfDomain("zeta(1) is a pole".into()));
    }
    if n <= 0 {
        // zeta(1-k) = (-1)^{k+1} B_k / k with k = 1-n
        return Ok(ctx.from_rational(&zeta_neg((1 - n) as u32)));
    }
    let n = n as u32;
    Ok(ctx.zeta_cached(n, || {
        if n % 2 == 0 {
            // zeta(2k) = (-1)^{k+1} (2pi)^{2k} B_{2k} / (2 (2k)!)
            let k = n / 2;
            let mut c = bernoulli_number(n);
            if k % 2 == 0 {
                c = -c;
            }
            let mut fact = tornheim_core::rational::BigRational::from_integer(1.into());
            for i in 1..=n {
                fact *= tornheim_core::rational::BigRational::from_integer(i.into());
            }
            let two = tornheim_core::rational::BigRational::from_integer(2.into());
            let rational_part = c / (two * fact);
            crate::real::scale_rational(&ctx.two_pi().powi(n as i64), &rational_part)
        } else {
            let (v, _) = hurwitz_em(&ctx.int(n as i64), &ctx.int(1), ctx, false)
                .expect("integer zeta converges");
            v
        }
    }))
}

/// `zeta(s)` for real `s != 1`.
pub fn zeta_real(s: &Real, ctx: &Ctx) -> Result<Real, NumericError> {
    if s.is_integer() {
        return zeta_int(s.to_f64() as i64, ctx);
    }
    let (v, _) = hurwitz_em(s, &ctx.int(1), ctx, false)?;
    Ok(v)
}

/// `zeta'(-2k) = (-1)^k (2k)! zeta(2k+1) / (2 (2pi)^{2k})` for `k >= 1`.
pub fn zeta_prime_neg_even(k: u32, ctx: &Ctx) -> Result<Real, NumericError> {
    assert!(k >= 1);
    let mut acc = zeta_int((2 * k + 1) as i64, ctx)?;
    for i in 1..=2 * k {
        acc = acc * ctx.int(i as i64);
    }
    acc = acc / (ctx.int(2) * ctx.two_pi().powi(2 * k as i64));
    if k % 2 == 1 {
        acc = -acc;
    }
    Ok(acc)
}

/// Hurwitz zeta `zeta(s, q)` for real `s != 1`, `q > 0`.
///
/// `q > 1` is shifted down by `zeta(s,q) = zeta(s,q-1) - (q-1)^-s`.
pub fn hurwitz_zeta(s: &Real, q: &Real, ctx: &Ctx) -> Result<Real, NumericError> {
    let (v, _) = hurwitz_shifted(s, q, ctx, false)?;
    Ok(v)
}

/// `d/ds zeta(s, q)`, same domain as [`hurwitz_zeta`]; meaningful to about
/// two digits less than the context target.
pub fn hurwitz_zeta_sderiv(s: &Real, q: &Real, ctx: &Ctx) -> Result<Real, NumericError> {
    let (_, d) = hurwitz_shifted(s, q, ctx, true)?;
    Ok(d.expect("derivative requested"))
}

fn hurwitz_shifted(
    s: &Real,
    q: &Real,
    ctx: &Ctx,
    want_deriv: bool,
) -> Result<(Real, Option<Real>), NumericError> {
    if q.is_zero() || q.is_negative() {
        return Err(NumericError::OutOfDomain(format!("hurwitz zeta needs q > 0, got {q}")));
    }
    if s.is_integer() && s.to_f64() == 1.0 {
        return Err(NumericError::OutOfDomain("hurwitz zeta pole at s = 1".into()));
    }
    let one = ctx.int(1);
    if q > &one {
        // walk q into (0, 1]
        let mut q = q.clone();
        let mut head = Real::zero(ctx.bits());
        let mut head_d = Real::zero(ctx.bits());
        while q > one {
            q = &q - &one;
            let (pw, lg) = pow_neg_s(&q, s, want_deriv, ctx.bits());
            head = &head - &pw;
            if want_deriv {
                head_d = &head_d + &(lg.expect("log computed") * &pw);
            }
        }
        let (v, d) = hurwitz_em(s, &q, ctx, want_deriv)?;
        let dv = if want_deriv { Some(&head_d + &d.expect("deriv")) } else { None };
        return Ok((&head + &v, dv));
    }
    hurwitz_em(s, q, ctx, want_deriv)
}

/// `(x^-s, Some(ln x))` with the log only when the derivative is needed.
fn pow_neg_s(x: &Real, s: &Real, want_log: bool, p: usize) -> (Real, Option<Real>) {
    if s.is_integer() {
        let e = s.to_f64() as i64;
        let pw = x.powi(-e);
        let lg = if want_log { Some(x.with_prec(p).ln()) } else { None };
        (pw, lg)
    } else {
        let lg = x.with_prec(p).ln();
        let pw = (-(s * &lg)).exp();
        (pw, if want_log { Some(lg) } else { None })
    }
}

/// Euler-Maclaurin evaluation on `0 < q <= 1`. Returns `(value, derivative)`.
pub(crate) fn hurwitz_em(
    s: &Real,
    q: &Real,
    ctx: &Ctx,
    want_deriv: bool,
) -> Result<(Real, Option<Real>), NumericError> {
    let dd = ctx.digits() + ctx.guard();
    let s_f = s.to_f64();
    let mut m = (0.39 * dd as f64 + 0.31 * s_f.abs() + 8.0).ceil() as usize;
    // extra working bits against the cancellation between the power sum and
    // the integral term when s < 0 (both grow like (M+q)^{|s|+1})
    for _attempt in 0..4 {
        let grow = if s_f < 1.0 { (1.0 - s_f + 2.0) * ((m + 1) as f64).log2() } else { 0.0 };
        let wp = ctx.bits() + grow.ceil() as usize + 32;
        let tol = Real::int(10, wp).powi(-(dd as i64) - 6);
        let s = s.with_prec(wp);
        let q = q.with_prec(wp);
        let one = Real::int(1, wp);

        let mut value = Real::zero(wp);
        let mut deriv = Real::zero(wp);
        for j in 0..m {
            let base = Real::int(j as i64, wp) + &q;
            let (pw, lg) = pow_neg_s(&base, &s, want_deriv, wp);
            value = &value + &pw;
            if want_deriv {
                deriv = &deriv - &(lg.expect("log") * &pw);
            }
        }
        let x = Real::int(m as i64, wp) + &q;
        let lx = x.ln();
        let sm1 = &s - &one;
        // X^{1-s}/(s-1)
        let x_pow_1ms = ((&one - &s) * &lx).exp();
        value = &value + &(&x_pow_1ms / &sm1);
        if want_deriv {
            // d/ds [X^{1-s}/(s-1)] = -X^{1-s} [ln X/(s-1) + 1/(s-1)^2]
            deriv = &deriv - &(&x_pow_1ms * (&lx / &sm1 + (&sm1 * &sm1).recip()));
        }
        // X^{-s}/2
        let x_pow_ms = (-(&s * &lx)).exp();
        let half = Real::int(1, wp) / Real::int(2, wp);
        value = &value + &(&x_pow_ms * &half);
        if want_deriv {
            deriv = &deriv - &(&lx * &x_pow_ms * &half);
        }

        // correction series
        let x_inv2 = (&x * &x).recip();
        let mut xpow = &x_pow_ms / &x; // X^{-s-1}
        let mut poch = s.clone(); // (s)_1 = s
        let mut poch_d = Real::int(1, wp); // d/ds (s)_1
        let mut converged = false;
        let mut prev_mag = f64::INFINITY;
        let mut r = 1usize;
        loop {
            // built at full working precision: these coefficients multiply
            // terms that can tower above the final value
            let b2r = Real::from_rational(
                &{
                    let mut f = bernoulli_number(2 * r as u32);
                    for i in 1..=2 * r as u64 {
                        f /= tornheim_core::rational::BigRational::from_integer(i.into());
                    }
                    f
                },
                wp,
            );
            let term = &b2r * &poch * &xpow;
            value = &value + &term;
            let mut mag = term.abs().to_f64();
            if want_deriv {
                let dterm = &b2r * &xpow * (&poch_d - &(&poch * &lx));
                deriv = &deriv + &dterm;
                // at negative integer s the value terms vanish identically
                // while the derivative terms do not
                mag = mag.max(dterm.abs().to_f64());
            }
            // absolute tolerance: the final value can be far smaller than
            // the partial sums when the head and the integral term cancel
            // (zeta near its trivial zeros), and relative-to-partial-sum
            // truncation would silently surrender those digits
            if mag < tol.to_f64() {
                converged = true;
                break;
            }
            if mag > prev_mag * 4.0 || r > 4 * m + 40 {
                break; // diverging tail: retry with larger M
            }
            prev_mag = mag;
            // advance Pochhammer by the two factors (s+2r-1)(s+2r)
            for step in [2 * r - 1, 2 * r] {
                let f = &s + &Real::int(step as i64, wp);
                poch_d = &poch_d * &f + &poch;
                poch = &poch * &f;
            }
            xpow = &xpow * &x_inv2;
            r += 1;
        }
        if converged {
            let v = value.with_prec(ctx.bits());
            let d = want_deriv.then(|| deriv.with_prec(ctx.bits()));
            return Ok((v, d));
        }
        m *= 2;
    }
    Err(NumericError::NonConvergent("hurwitz zeta Euler-Maclaurin did not converge".into()))
}
