//! Clausen functions `Cl_l(x)`: sine series for even `l`, cosine series for
//! odd `l`.
//!
//! `Cl_1` uses the closed form `-log(2 sin(x/2))`. For `l >= 2` the values
//! come from the polylogarithm expansion of `Li_l(e^{i theta})` around
//! `theta = 0`, which converges like `(theta/2pi)^k`; the argument is folded
//! into `[0, pi]` first, so at most `~3.3` terms per requested digit are
//! needed. Zeta values at nonpositive integers enter as exact rationals.

use crate::ctx::Ctx;
use crate::real::Real;
use crate::specfun::zeta::zeta_int;
use crate::NumericError;
use tornheim_core::rational::zeta_neg;

/// `Cl_l(x)` for `l >= 1`. For `l = 1`, `x` must not be a multiple of
/// `2 pi` (logarithmic singularity).
pub fn clausen(l: u32, x: &Real, ctx: &Ctx) -> Result<Real, NumericError> {
    let two_pi = ctx.two_pi();
    let q = x / &two_pi;
    let frac = &q - &q.floor();
    let one_minus = &ctx.int(1) - &frac;
    clausen_two_pi_frac(l, &frac, &one_minus, ctx)
}

/// `Cl_l(2 pi q)` with both `q` and `1-q` supplied for endpoint accuracy,
/// `0 <= q <= 1`.
pub fn clausen_two_pi_frac(
    l: u32,
    q: &Real,
    one_minus_q: &Real,
    ctx: &Ctx,
) -> Result<Real, NumericError> {
    assert!(l >= 1, "Clausen order must be >= 1");
    if q.is_zero() || one_minus_q.is_zero() {
        return if l == 1 {
            Err(NumericError::OutOfDomain("Cl_1 is singular at multiples of 2 pi".into()))
        } else if l % 2 == 0 {
            Ok(Real::zero(ctx.bits()))
        } else {
            zeta_int(l as i64, ctx)
        };
    }
    if l == 1 {
        // -log(2 sin(pi q)), evaluated on the small side of the symmetry
        let small = if q < one_minus_q { q } else { one_minus_q };
        let s = (ctx.pi() * small).sin();
        return Ok(-((ctx.int(2) * &s).ln()));
    }
    // fold into theta <= pi: Cl_even(2pi - t) = -Cl_even(t),
    // Cl_odd(2pi - t) = Cl_odd(t)
    let half = ctx.int(1) / ctx.int(2);
    let (frac, sign) = if *q > half {
        (one_minus_q.clone(), if l % 2 == 0 { -1i32 } else { 1 })
    } else {
        (q.clone(), 1)
    };
    let theta = ctx.two_pi() * &frac;
    let v = clausen_series(l, &theta, ctx)?;
    Ok(if sign < 0 { -v } else { v })
}

/// Expansion of `Li_l(e^{i theta})` for `0 < theta <= pi`; returns the real
/// part for odd `l`, the imaginary part for even `l`.
fn clausen_series(l: u32, theta: &Real, ctx: &Ctx) -> Result<Real, NumericError> {
    let wp = ctx.bits() + 16;
    let tol = ctx.series_tol_f64() * 1e-2;
    let theta = theta.with_prec(wp);
    // complex accumulators: (re, im)
    let mut sum_re = Real::zero(wp);
    let mut sum_im = Real::zero(wp);
    // term t_k = (i theta)^k / k!
    let mut t_re = Real::int(1, wp);
    let mut t_im = Real::zero(wp);
    let mut consecutive_small = 0;
    let mut k: u32 = 0;
    loop {
        if k == l - 1 {
            // (i theta)^{l-1}/(l-1)! * (H_{l-1} - ln theta + i pi/2)
            let mut h = Real::zero(wp);
            for j in 1..l {
                h = &h + &Real::int(j as i64, wp).recip();
            }
            let a = &h - &theta.ln();
            let b = ctx.pi().with_prec(wp) / Real::int(2, wp);
            sum_re = &sum_re + &(&t_re * &a - &t_im * &b);
            sum_im = &sum_im + &(&t_re * &b + &t_im * &a);
        } else {
            let z = l as i64 - k as i64;
            let coeff = if z >= 2 {
                Some(zeta_int(z, ctx)?.with_prec(wp))
            } else {
                // z <= 0: exact rational zeta(1-j), zero at negative even z
                let j = (1 - z) as u32;
                let r = zeta_neg(j);
                if num_traits::Zero::is_zero(&r) {
                    None
                } else {
                    Some(Real::from_rational(&r, wp))
                }
            };
            if let Some(c) = coeff {
                sum_re = &sum_re + &(&c * &t_re);
                sum_im = &sum_im + &(&c * &t_im);
                let mag = (c.abs().to_f64()) * t_re.abs().to_f64().max(t_im.abs().to_f64());
                if k > l + 3 && mag < tol {
                    consecutive_small += 1;
                    if consecutive_small >= 3 {
                        break;
                    }
                } else {
                    consecutive_small = 0;
                }
            }
        }
        // t_{k+1} = t_k * i theta / (k+1)
        let d = Real::int(k as i64 + 1, wp);
        let nr = -(&t_im * &theta) / &d;
        let ni = (&t_re * &theta) / &d;
        t_re = nr;
        t_im = ni;
        k += 1;
        if k > 64 + 8 * (ctx.digits() as u32) {
            return Err(NumericError::NonConvergent("Clausen series stalled".into()));
        }
    }
    Ok(if l % 2 == 0 { sum_im } else { sum_re }.with_prec(ctx.bits()))
}
