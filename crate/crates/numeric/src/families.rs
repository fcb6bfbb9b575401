//! The integral families behind even-weight Tornheim sums.
//!
//! - `X_{k,l}`: normalized `log Gamma * Bernoulli * Clausen` integrals, the
//!   irreducible numeric objects
//! - `Ystar(m,n)`: the alternating binomial combination of `X` integrals plus
//!   a `zeta(N-1) log 2pi` correction
//! - `W_{m,n} = int B_m K_n`, `V_{k,m,n} = int B_k B_m K_n`: closed forms and
//!   quadrature cross-checks
//! - `U_{k,l} = int log Gamma B_k K_l` and `U*_{k,l} = int A_1 B_k K_l`
//! - the basic integrals `I_BB`, `I_AB`, `I_AA`, `J_AA` over the log-sine
//!   kernel, and the parity-case assembly of `T(m,0,n)` from them

use crate::ctx::Ctx;
use crate::quad::{quad01, Endpoints, QuadResult};
use crate::real::{scale_rational, Real};
use crate::specfun::{
    bernoulli_fn_a, bernoulli_poly, clausen_two_pi_frac, four_parity, kernel_k, kernel_k_at_one,
    log_gamma, zeta_int, zeta_prime_neg_even,
};
use crate::NumericError;
use rayon::prelude::*;
use tornheim_core::rational::{
    bernoulli_number, bernoulli_product_expansion, big_binomial, big_factorial, ratio,
    zeta_neg, BigRational,
};

/// `X_{k,l} = (-1)^{floor(l/2)} l!/(2pi)^l
///            int_0^1 log Gamma(q) B_k(q) Cl_{l+1}(2 pi q) dq`.
pub fn x_integral(k: u32, l: u32, ctx: &Ctx) -> Result<Real, NumericError> {
    if let Some(v) = ctx.x_cached(k, l) {
        return Ok(v);
    }
    let r = x_integral_quad(k, l, ctx)?;
    ctx.x_store(k, l, r.value.clone());
    Ok(r.value)
}

/// As [`x_integral`], exposing the quadrature diagnostics.
pub fn x_integral_quad(k: u32, l: u32, ctx: &Ctx) -> Result<QuadResult, NumericError> {
    let ends = if l == 0 { Endpoints::both() } else { Endpoints::left() };
    let mut r = quad01(
        |q, omq| {
            let lg = log_gamma(q, ctx).expect("q in (0,1)");
            let b = bernoulli_poly(k, q, ctx);
            let cl = clausen_two_pi_frac(l + 1, q, omq, ctx).expect("interior point");
            lg * b * cl
        },
        ctx,
        ends,
    )?;
    let mut pref = scale_rational(
        &ctx.two_pi().powi(l as i64).recip(),
        &BigRational::from_integer(big_factorial(l)),
    );
    if four_parity(l) < 0 {
        pref = -pref;
    }
    r.value = &r.value * &pref;
    r.error_estimate = &r.error_estimate * &pref.abs();
    Ok(r)
}

/// `Ystar(m, n)` for even weight `N = m+n`, `m >= 1`:
///
/// ```text
/// Ystar(m,n) = 2 (2pi)^{N-2} / (m! (N-m-2)!)
///                sum_{j=0}^{m} (-1)^j C(m,j) X_{j, N-2-j}
///              + (-1)^{N/2-1} C(N-2, m-1) zeta(N-1) log 2pi
/// ```
///
/// The `X` evaluations are independent and run in parallel; results combine
/// in index order.
pub fn y_star(m: u32, n: u32, ctx: &Ctx) -> Result<Real, NumericError> {
    let weight = m + n;
    if weight % 2 != 0 || m < 1 || n < 2 {
        return Err(NumericError::OutOfDomain(format!(
            "Ystar({m},{n}) needs even weight and m >= 1, n >= 2"
        )));
    }
    let xs: Vec<Result<Real, NumericError>> = (0..=m)
        .into_par_iter()
        .map(|j| x_integral(j, weight - 2 - j, ctx))
        .collect();
    let mut alternating = Real::zero(ctx.bits());
    for (j, x) in xs.into_iter().enumerate() {
        let x = x?;
        let mut c = BigRational::from_integer(big_binomial(m, j as u32));
        if j % 2 == 1 {
            c = -c;
        }
        alternating = &alternating + &scale_rational(&x, &c);
    }
    let pref = scale_rational(
        &ctx.two_pi().powi(weight as i64 - 2),
        &(ratio(2, 1)
            / BigRational::from_integer(big_factorial(m) * big_factorial(weight - m - 2))),
    );
    let mut out = &pref * &alternating;
    let mut corr = BigRational::from_integer(big_binomial(weight - 2, m - 1));
    if (weight / 2) % 2 == 0 {
        corr = -corr;
    }
    let zl = zeta_int(weight as i64 - 1, ctx)? * ctx.log_two_pi();
    out = &out + &scale_rational(&zl, &corr);
    Ok(out)
}

/// `Y(m,n) = Ystar(m,n)` without the `zeta(N-1) log 2pi` part.
pub fn y_plain(m: u32, n: u32, ctx: &Ctx) -> Result<Real, NumericError> {
    let weight = m + n;
    let mut corr = BigRational::from_integer(big_binomial(weight - 2, m - 1));
    if (weight / 2) % 2 == 0 {
        corr = -corr;
    }
    let zl = zeta_int(weight as i64 - 1, ctx)? * ctx.log_two_pi();
    Ok(y_star(m, n, ctx)? - scale_rational(&zl, &corr))
}

/// `W_{m,n} = int_0^1 B_m(q) K_n(q) dq` by quadrature.
pub fn w_integral(m: u32, n: u32, ctx: &Ctx) -> Result<Real, NumericError> {
    let ends = if n == 0 { Endpoints::both() } else { Endpoints::none() };
    let r = quad01(
        |q, omq| {
            let b = bernoulli_poly(m, q, ctx);
            let k = kernel_k(n, q, omq, ctx).expect("interior point");
            b * k
        },
        ctx,
        ends,
    )?;
    Ok(r.value)
}

/// Exact `W_{r,0}`: `log 2` for `r = 0`, `0` for odd `r`,
/// `(-1)^{r/2+1} r! zeta(r+1)/(2pi)^r` for even `r > 0` (signs checked
/// against direct quadrature at r = 2, 4, 6: +, -, +).
pub fn w_closed_base(r: u32, ctx: &Ctx) -> Result<Real, NumericError> {
    if r == 0 {
        return Ok(ctx.ln2());
    }
    if r % 2 == 1 {
        return Ok(Real::zero(ctx.bits()));
    }
    let mut c = BigRational::from_integer(big_factorial(r));
    if (r / 2) % 2 == 0 {
        c = -c;
    }
    let v = zeta_int(r as i64 + 1, ctx)? / ctx.two_pi().powi(r as i64);
    Ok(scale_rational(&v, &c))
}

/// Exact `W_{m,n}` by the boundary-value recursion
///
/// ```text
/// W_{m,n} = sum_{k=1}^{n} (-1)^{k+1}/(m+1)_k B_{m+k}(1) K_{n-k+1}(1)
///           + (-1)^n/(m+1)_n W_{m+n,0}
/// ```
pub fn w_closed(m: u32, n: u32, ctx: &Ctx) -> Result<Real, NumericError> {
    if n == 0 {
        return w_closed_base(m, ctx);
    }
    let mut acc = Real::zero(ctx.bits());
    let mut poch = BigRational::from_integer(1.into());
    for k in 1..=n {
        poch *= BigRational::from_integer((m + k).into());
        let mut b = bernoulli_number(m + k);
        if m + k == 1 {
            b = -b; // B_1(1) = +1/2
        }
        if num_traits::Zero::is_zero(&b) {
            continue;
        }
        let mut c = b / poch.clone();
        if k % 2 == 0 {
            c = -c;
        }
        let kb = kernel_k_at_one(n - k + 1, ctx)?;
        acc = &acc + &scale_rational(&kb, &c);
    }
    let mut c = poch.recip();
    if n % 2 == 1 {
        c = -c;
    }
    let base = w_closed_base(m + n, ctx)?;
    Ok(&acc + &scale_rational(&base, &c))
}

/// `V_{k,m,n} = int_0^1 B_k(q) B_m(q) K_n(q) dq` by quadrature.
pub fn v_integral(k: u32, m: u32, n: u32, ctx: &Ctx) -> Result<Real, NumericError> {
    let ends = if n == 0 { Endpoints::both() } else { Endpoints::none() };
    let r = quad01(
        |q, omq| {
            let b1 = bernoulli_poly(k, q, ctx);
            let b2 = bernoulli_poly(m, q, ctx);
            let kn = kernel_k(n, q, omq, ctx).expect("interior point");
            b1 * b2 * kn
        },
        ctx,
        ends,
    )?;
    Ok(r.value)
}

/// Exact `V_{k,m,n}` via the product-of-Bernoulli-polynomials expansion into
/// `W` integrals.
pub fn v_closed(k: u32, m: u32, n: u32, ctx: &Ctx) -> Result<Real, NumericError> {
    if k == 0 {
        return w_closed(m, n, ctx);
    }
    if m == 0 {
        return w_closed(k, n, ctx);
    }
    let (terms, constant) = bernoulli_product_expansion(k, m);
    let mut acc = scale_rational(&w_closed(0, n, ctx)?, &constant);
    for (j, c) in terms {
        acc = &acc + &scale_rational(&w_closed(j, n, ctx)?, &c);
    }
    Ok(acc)
}

/// `U_{k,l} = int_0^1 log Gamma(q) B_k(q) K_l(q) dq`.
pub fn u_integral(k: u32, l: u32, ctx: &Ctx) -> Result<Real, NumericError> {
    let ends = if l == 0 { Endpoints::both() } else { Endpoints::left() };
    let r = quad01(
        |q, omq| {
            let lg = log_gamma(q, ctx).expect("q in (0,1)");
            let b = bernoulli_poly(k, q, ctx);
            let kn = kernel_k(l, q, omq, ctx).expect("interior point");
            lg * b * kn
        },
        ctx,
        ends,
    )?;
    Ok(r.value)
}

/// `U*_{k,l} = int_0^1 A_1(q) B_k(q) K_l(q) dq`.
pub fn u_star_integral(k: u32, l: u32, ctx: &Ctx) -> Result<Real, NumericError> {
    let ends = if l == 0 { Endpoints::both() } else { Endpoints::left() };
    let r = quad01(
        |q, omq| {
            let a1 = bernoulli_fn_a(1, q, ctx).expect("q in (0,1)");
            let b = bernoulli_poly(k, q, ctx);
            let kn = kernel_k(l, q, omq, ctx).expect("interior point");
            a1 * b * kn
        },
        ctx,
        ends,
    )?;
    Ok(r.value)
}

/// The four basic integrals over the log-sine kernel `K(q) = log sin(pi q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasicFamily {
    /// `int B_k B_l K`
    Ibb,
    /// `(1/pi) int A_k B_l K`
    Iab,
    /// `(1/pi^2) int A_k A_l K`
    Iaa,
    /// `(1/pi^2) int A_k(q) A_l(1-q) K(q)`
    Jaa,
}

/// Evaluate a basic integral. Indices that select an `A` factor must be
/// `>= 1`.
pub fn basic_integral(
    family: BasicFamily,
    k: u32,
    l: u32,
    ctx: &Ctx,
) -> Result<Real, NumericError> {
    use BasicFamily::*;
    if matches!(family, Iab | Iaa | Jaa) && k == 0 || matches!(family, Iaa | Jaa) && l == 0 {
        return Err(NumericError::OutOfDomain("A_0 is undefined".into()));
    }
    let log_sin = |q: &Real, omq: &Real| {
        let small = if q < omq { q } else { omq };
        (ctx.pi() * small).sin().ln()
    };
    let r = quad01(
        |q, omq| {
            let ks = log_sin(q, omq);
            match family {
                Ibb => bernoulli_poly(k, q, ctx) * bernoulli_poly(l, q, ctx) * ks,
                Iab => {
                    bernoulli_fn_a(k, q, ctx).expect("interior")
                        * bernoulli_poly(l, q, ctx)
                        * ks
                }
                Iaa => {
                    bernoulli_fn_a(k, q, ctx).expect("interior")
                        * bernoulli_fn_a(l, q, ctx).expect("interior")
                        * ks
                }
                Jaa => {
                    bernoulli_fn_a(k, q, ctx).expect("interior")
                        * bernoulli_fn_a(l, omq, ctx).expect("interior")
                        * ks
                }
            }
        },
        ctx,
        Endpoints::both(),
    )?;
    Ok(match family {
        Ibb => r.value,
        Iab => r.value / ctx.pi(),
        Iaa | Jaa => r.value / ctx.pi().powi(2),
    })
}

/// Closed zeta part of the basic-integral evaluation of `T(m,0,n)`:
/// `zeta(m) zeta(n) - zeta(m+n)/2`.
pub fn tornheim_zeta_part(m: u32, n: u32, ctx: &Ctx) -> Result<Real, NumericError> {
    let half = ctx.int(1) / ctx.int(2);
    Ok(zeta_int(m as i64, ctx)? * zeta_int(n as i64, ctx)?
        - zeta_int((m + n) as i64, ctx)? * half)
}

/// The same quantity from the four parity-case limit formulas (exact zeta
/// values at nonpositive integers and `zeta'` at negative even integers);
/// used as a cross-check of [`tornheim_zeta_part`].
pub fn zeta_part_parity_form(m: u32, n: u32, ctx: &Ctx) -> Result<Real, NumericError> {
    assert!(m >= 2 && n >= 2);
    let beta = BigRational::from_integer(big_factorial(m - 1) * big_factorial(n - 1))
        / BigRational::from_integer(big_factorial(m + n - 1));
    let beta = ctx.from_rational(&beta);
    let gammas = BigRational::from_integer(big_factorial(m - 1) * big_factorial(n - 1));
    let p = ctx.from_f64((four_parity(m) * four_parity(n)) as f64);
    let zneg = |j: u32| ctx.from_rational(&zeta_neg(j));
    let zprime = |j: u32| zeta_prime_neg_even(j / 2, ctx);
    let core = match (m % 2, n % 2) {
        (0, 0) => {
            let bracket = zneg(m) * zneg(n) - &beta * zneg(m + n);
            scale_rational(
                &(ctx.two_pi().powi((m + n) as i64) * bracket),
                &(ratio(1, 4) / gammas),
            )
        }
        (0, 1) => {
            let bracket = zneg(m) * zprime(n - 1)? - &beta * zprime(m + n - 1)?;
            scale_rational(
                &(ctx.two_pi().powi((m + n) as i64 - 1) * bracket),
                &gammas.recip(),
            )
        }
        (1, 0) => {
            let bracket = zprime(m - 1)? * zneg(n) - &beta * zprime(m + n - 1)?;
            scale_rational(
                &(ctx.two_pi().powi((m + n) as i64 - 1) * bracket),
                &gammas.recip(),
            )
        }
        _ => {
            let four_over_pi2 = ctx.int(4) / ctx.pi().powi(2);
            let bracket =
                four_over_pi2 * zprime(m - 1)? * zprime(n - 1)? + &beta * zneg(m + n);
            scale_rational(
                &(ctx.two_pi().powi((m + n) as i64) * bracket),
                &(ratio(1, 4) / gammas),
            )
        }
    };
    Ok(core * p)
}

/// `T(m,0,n)` for integers `m, n >= 2` through the basic integrals:
///
/// ```text
/// T(m,0,n) = zeta(m) zeta(n) - zeta(m+n)/2
///            + p_{m+n} (2pi)^{m+n-1}/(m! n!) * ell2(m,n)
/// ```
///
/// with `ell2` selected by the parity of `(m, n)`.
pub fn tornheim_via_basic_integrals(m: u32, n: u32, ctx: &Ctx) -> Result<Real, NumericError> {
    if m < 2 || n < 2 {
        return Err(NumericError::OutOfDomain(format!(
            "basic-integral route needs m, n >= 2, got ({m},{n})"
        )));
    }
    use BasicFamily::*;
    let mf = ctx.int(m as i64);
    let nf = ctx.int(n as i64);
    let ell2 = match (m % 2, n % 2) {
        (0, 0) => {
            &mf * &basic_integral(Iab, m - 1, n, ctx)?
                + &nf * &basic_integral(Iab, m, n - 1, ctx)?
        }
        (1, 1) => {
            &mf * &basic_integral(Iab, n, m - 1, ctx)?
                + &nf * &basic_integral(Iab, n - 1, m, ctx)?
        }
        (1, 0) => {
            (&mf * &basic_integral(Ibb, m - 1, n, ctx)?
                + &nf * &basic_integral(Ibb, m, n - 1, ctx)?)
                / ctx.int(2)
        }
        _ => {
            -(&mf * &basic_integral(Iaa, m - 1, n, ctx)?)
                - &nf * &basic_integral(Iaa, m, n - 1, ctx)?
                - &mf * &basic_integral(Jaa, m - 1, n, ctx)?
                + &nf * &basic_integral(Jaa, m, n - 1, ctx)?
        }
    };
    let scale = BigRational::from_integer(big_factorial(m) * big_factorial(n)).recip();
    let mut tail = scale_rational(&(ctx.two_pi().powi((m + n) as i64 - 1) * ell2), &scale);
    if four_parity(m + n) < 0 {
        tail = -tail;
    }
    Ok(tornheim_zeta_part(m, n, ctx)? + tail)
}
