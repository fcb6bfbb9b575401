//! Double-exponential (tanh-sinh) quadrature on `(0, 1)`.
//!
//! The substitution `q = (1 + tanh((pi/2) sinh t))/2` clusters nodes
//! double-exponentially at both endpoints, which absorbs the logarithmic
//! endpoint singularities of every integrand in this crate. Levels halve the
//! step; convergence is declared when successive levels agree to tolerance.
//!
//! Integrands receive `(q, 1-q)` with both values computed to full relative
//! accuracy, so factors like `log Gamma(q)` near 0 and `Cl(2 pi q)` near 1
//! lose nothing to cancellation.

use crate::ctx::Ctx;
use crate::real::Real;
use crate::NumericError;

/// Endpoint singularity flags (at worst logarithmic).
#[derive(Debug, Clone, Copy, Default)]
pub struct Endpoints {
    pub left_singular: bool,
    pub right_singular: bool,
}

impl Endpoints {
    pub fn both() -> Self {
        Self { left_singular: true, right_singular: true }
    }

    pub fn left() -> Self {
        Self { left_singular: true, right_singular: false }
    }

    pub fn none() -> Self {
        Self::default()
    }
}

/// Quadrature outcome.
#[derive(Debug, Clone)]
pub struct QuadResult {
    pub value: Real,
    pub error_estimate: Real,
    pub evaluations: usize,
    pub converged: bool,
}

struct Node {
    q: Real,
    one_minus_q: Real,
    weight: Real,
}

/// Nodes at `t = j h` for odd `j` (level > 0) or all `j >= 0` (level 0),
/// mirrored onto both half-axes.
fn level_nodes(level: usize, t_max: f64, ctx: &Ctx) -> Vec<Node> {
    let wp = ctx.bits() + 16;
    let h = 0.5f64.powi(level as i32);
    let mut nodes = Vec::new();
    let half_pi = ctx.pi().with_prec(wp) / Real::int(2, wp);
    let mut j = if level == 0 { 0u64 } else { 1 };
    loop {
        let t = j as f64 * h;
        if t > t_max {
            break;
        }
        let tf = Real::from_f64(t, wp);
        // u = (pi/2) sinh t; q = 1/(1 + e^{-2u}), 1-q = 1/(1 + e^{2u})
        let u = &half_pi * &tf.sinh();
        let e2u = (&u + &u).exp();
        let e2u_inv = e2u.recip();
        let q = (&Real::int(1, wp) + &e2u_inv).recip();
        let one_minus_q = (&Real::int(1, wp) + &e2u).recip();
        // dq/dt = (pi/2) cosh t * 2 E/(1+E)^2 with E = e^{2u};
        // E/(1+E)^2 = q * (1-q)
        let w = &half_pi * &tf.cosh() * Real::int(2, wp) * &q * &one_minus_q;
        if j == 0 {
            nodes.push(Node { q, one_minus_q, weight: w });
        } else {
            nodes.push(Node {
                q: one_minus_q.clone(),
                one_minus_q: q.clone(),
                weight: w.clone(),
            });
            nodes.push(Node { q, one_minus_q, weight: w });
        }
        j += if level == 0 { 1 } else { 2 };
    }
    nodes
}

/// Integrate `f(q, 1-q)` over `(0, 1)` to the context tolerance.
///
/// On non-convergence after the level cap, the best estimate comes back
/// inside [`NumericError::QuadratureFailure`].
pub fn quad01<F>(f: F, ctx: &Ctx, _ends: Endpoints) -> Result<QuadResult, NumericError>
where
    F: Fn(&Real, &Real) -> Real,
{
    let tol = ctx.series_tol();
    let dd = (ctx.digits() + ctx.guard()) as f64;
    // truncation point: weights decay like exp(-pi/2 e^t); log factors in the
    // integrand are dominated by a small margin on the digit count
    let t_max = ((2.0 * dd * std::f64::consts::LN_10 + 20.0) / std::f64::consts::PI).asinh();
    let max_level = ctx.max_quad_level();

    let mut evaluations = 0usize;
    let mut sum = Real::zero(ctx.bits());
    let mut previous: Option<Real> = None;
    let mut best_err = Real::int(1, ctx.bits());

    for level in 0..=max_level {
        let h = Real::from_f64(0.5f64.powi(level as i32), ctx.bits());
        let mut new_part = Real::zero(ctx.bits());
        for node in level_nodes(level, t_max, ctx) {
            let fq = f(&node.q, &node.one_minus_q);
            debug_assert!(
                !fq.as_bigfloat().is_nan(),
                "integrand returned NaN at q = {}",
                node.q
            );
            new_part = &new_part + &(&node.weight * &fq);
            evaluations += 1;
        }
        sum = &sum + &new_part;
        let estimate = &h * &sum;
        if let Some(prev) = &previous {
            let err = (&estimate - prev).abs();
            best_err = err.clone();
            let scale = ctx.int(1) + estimate.abs();
            if level >= 3 && err < &tol * &scale {
                return Ok(QuadResult {
                    value: estimate,
                    error_estimate: err,
                    evaluations,
                    converged: true,
                });
            }
        }
        previous = Some(estimate);
    }
    Err(NumericError::QuadratureFailure {
        best: Box::new(QuadResult {
            value: previous.expect("at least one level ran"),
            error_estimate: best_err,
            evaluations,
            converged: false,
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::log_gamma;

    #[test]
    fn polynomial_integral() {
        let ctx = Ctx::new(25);
        let r = quad01(|q, _| q.clone(), &ctx, Endpoints::none()).unwrap();
        assert!((r.value.to_f64() - 0.5).abs() < 1e-24);
        assert!(r.converged);
    }

    #[test]
    fn log_sine_integral() {
        let ctx = Ctx::new(25);
        // int_0^1 log sin(pi q) dq = -log 2
        let r = quad01(
            |q, omq| {
                let small = if q < omq { q } else { omq };
                (ctx.pi() * small).sin().ln()
            },
            &ctx,
            Endpoints::both(),
        )
        .unwrap();
        let expected = -ctx.ln2();
        assert!((&r.value - &expected).abs().to_f64() < 1e-24);
    }

    #[test]
    fn log_gamma_integral() {
        let ctx = Ctx::new(25);
        // int_0^1 log Gamma(q) dq = log sqrt(2 pi)
        let r = quad01(|q, _| log_gamma(q, &ctx).unwrap(), &ctx, Endpoints::left()).unwrap();
        let expected = ctx.log_two_pi() / ctx.int(2);
        assert!((&r.value - &expected).abs().to_f64() < 1e-24);
    }

    #[test]
    fn tolerance_halving_consistency() {
        // doubling requested digits only changes the result below the old
        // tolerance
        let lo = Ctx::new(12);
        let hi = Ctx::new(24);
        let f = |q: &Real, _: &Real| (q * q + q.clone()).sqrt();
        let a = quad01(|q, o| f(q, o), &lo, Endpoints::none()).unwrap();
        let b = quad01(|q, o| f(q, o), &hi, Endpoints::none()).unwrap();
        assert!((a.value.to_f64() - b.value.to_f64()).abs() < 1e-12);
    }
}
