//! Certified direct summation of the defining double series
//! `T(a,b,c) = sum_{r,s>=1} r^-a s^-b (r+s)^-c`.
//!
//! This is the oracle every formula-based path is checked against, so it
//! never consults the Hurwitz-zeta or quadrature code. Three summation
//! strategies, all with explicit error accounting:
//!
//! - `b = 0` (any real `a`, `c`): single sum over `r` of `r^-a tau_c(r)`,
//!   with the power tail `tau_c(r) = sum_{t>r} t^-c` walked downward from a
//!   certified Euler-Maclaurin seed; the outer tail reduces to shifted power
//!   tails.
//! - integer `a, b >= 1` (real `c`): diagonal summation. Partial fractions
//!   turn the inner sum into harmonic numbers updated incrementally; the
//!   `t`-tail reduces to power tails.
//! - anything else (real `b != 0`): a rectangular head with integral
//!   brackets for the side tails and a split-exponent bound for the corner.
//!   This fallback reaches moderate accuracy only and reports what it
//!   achieved.
//!
//! Sums run in `f64` (Neumaier-compensated) when the requested tolerance
//! permits, otherwise in arbitrary precision. Real and integer parameters
//! take the same paths.

use num_traits::ToPrimitive;
use thiserror::Error;
use tornheim_core::rational::bernoulli_number;
use tornheim_numeric::{Ctx, Real};

#[derive(Debug, Error)]
pub enum DirectError {
    #[error("series diverges: needs a+c > 1, b+c > 1, a+b+c > 2")]
    Divergent,
    #[error("tolerance {requested:e} unreachable by direct summation (achieved about {achieved:e})")]
    TolUnreachable { requested: f64, achieved: f64 },
}

/// Result of a direct summation: the value and a rigorous absolute error
/// bound.
#[derive(Debug, Clone)]
pub struct DirectSum {
    pub value: Real,
    pub error_bound: f64,
    pub terms: u64,
}

/// Scalar abstraction so one summation engine serves both `f64` and
/// arbitrary-precision runs.
pub trait Scalar: Clone {
    fn of_u64(v: u64, prec: usize) -> Self;
    fn of_f64(v: f64, prec: usize) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn recip(&self) -> Self;
    fn pow_u(&self, e: u64) -> Self;
    /// `self^x` for positive `self`.
    fn pow_real(&self, x: &Self) -> Self;
    fn to_f64(&self) -> f64;
    fn into_real(self, bits: usize) -> Real;
}

impl Scalar for f64 {
    fn of_u64(v: u64, _: usize) -> Self {
        v as f64
    }
    fn of_f64(v: f64, _: usize) -> Self {
        v
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn recip(&self) -> Self {
        1.0 / self
    }
    fn pow_u(&self, e: u64) -> Self {
        self.powi(e as i32)
    }
    fn pow_real(&self, x: &Self) -> Self {
        self.powf(*x)
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn into_real(self, bits: usize) -> Real {
        Real::from_f64(self, bits)
    }
}

impl Scalar for Real {
    fn of_u64(v: u64, prec: usize) -> Self {
        Real::int(v as i64, prec)
    }
    fn of_f64(v: f64, prec: usize) -> Self {
        Real::from_f64(v, prec)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn recip(&self) -> Self {
        Real::recip(self)
    }
    fn pow_u(&self, e: u64) -> Self {
        self.powi(e as i64)
    }
    fn pow_real(&self, x: &Self) -> Self {
        if x.is_integer() {
            self.powi(x.to_f64() as i64)
        } else {
            (x * self.ln()).exp()
        }
    }
    fn to_f64(&self) -> f64 {
        Real::to_f64(self)
    }
    fn into_real(self, bits: usize) -> Real {
        self.with_prec(bits)
    }
}

/// Neumaier-compensated accumulator; the compensation is exact for `f64`
/// and a no-op for `Real`.
struct Acc<S: Scalar> {
    sum: S,
    comp: S,
    abs_mass: f64,
}

impl<S: Scalar> Acc<S> {
    fn new(prec: usize) -> Self {
        Self { sum: S::of_u64(0, prec), comp: S::of_u64(0, prec), abs_mass: 0.0 }
    }

    fn push(&mut self, term: &S) {
        let t = self.sum.add(term);
        let delta = if self.sum.to_f64().abs() >= term.to_f64().abs() {
            self.sum.sub(&t).add(term)
        } else {
            term.sub(&t).add(&self.sum)
        };
        self.comp = self.comp.add(&delta);
        self.sum = t;
        self.abs_mass += term.to_f64().abs();
    }

    fn total(&self) -> S {
        self.sum.add(&self.comp)
    }

    fn roundoff(&self, unit: f64) -> f64 {
        4.0 * unit * self.abs_mass
    }
}

/// Negative power `x^-p`, by integer powering when `p` is a small
/// nonnegative integer.
struct Exponent<S: Scalar> {
    value: S,
    int: Option<u64>,
}

impl<S: Scalar> Exponent<S> {
    fn new(value: S) -> Self {
        let f = value.to_f64();
        let int = (f.fract() == 0.0 && (0.0..1e9).contains(&f)).then_some(f as u64);
        Self { value, int }
    }

    fn apply_minus(&self, x: &S) -> S {
        match self.int {
            Some(0) => x.recip().pow_u(0),
            Some(e) => x.pow_u(e).recip(),
            None => x.pow_real(&self.value).recip(),
        }
    }
}

const EM_J: usize = 8;
const EM_REM_COEFF: f64 = 4.0 * 54.9711779448 / 6.402373705728e15; // 4 |B_18|/18!

/// Certified power tail `sum_{s >= m} s^-p` by Euler-Maclaurin with `J = 8`
/// correction terms; returns the value and a rigorous remainder bound.
/// Needs `p > 1`.
fn power_tail<S: Scalar>(p: &S, m: u64, prec: usize) -> (S, f64) {
    let mf = S::of_u64(m, prec);
    let one = S::of_u64(1, prec);
    let p_f = p.to_f64();
    let exp = Exponent::new(p.clone());
    let m_neg_p = exp.apply_minus(&mf);
    let m_inv = mf.recip();
    let mut acc = m_neg_p.mul(&mf).div(&p.sub(&one));
    acc = acc.add(&m_neg_p.div(&S::of_u64(2, prec)));
    let mut poch = p.clone();
    let mut poch_f = p_f;
    let mut mpow = m_neg_p.mul(&m_inv);
    let m_inv2 = m_inv.mul(&m_inv);
    for j in 1..=EM_J {
        let coeff = bern_over_fact::<S>(j, prec);
        acc = acc.add(&coeff.mul(&poch).mul(&mpow));
        poch = poch.mul(&p.add(&S::of_u64(2 * j as u64 - 1, prec)));
        poch = poch.mul(&p.add(&S::of_u64(2 * j as u64, prec)));
        poch_f *= (p_f + 2.0 * j as f64 - 1.0) * (p_f + 2.0 * j as f64);
        mpow = mpow.mul(&m_inv2);
    }
    let rem =
        EM_REM_COEFF * poch_f.abs() * (m as f64).powf(1.0 - p_f - 2.0 * EM_J as f64 - 2.0);
    (acc, rem.abs())
}

/// `B_{2j}/(2j)!` as a scalar; exact small rationals.
fn bern_over_fact<S: Scalar>(j: usize, prec: usize) -> S {
    let b = bernoulli_number(2 * j as u32);
    let num = b.numer().to_i64().expect("Bernoulli numerator fits i64 for j <= 8");
    let den = b.denom().to_i64().expect("Bernoulli denominator fits i64");
    let mut fact = 1.0f64;
    for i in 2..=2 * j {
        fact *= i as f64;
    }
    S::of_f64(num as f64, prec)
        .div(&S::of_f64(den as f64, prec))
        .div(&S::of_f64(fact, prec))
}

/// The Euler-Maclaurin shape of `power_tail(p, m)` as pairs
/// `(gamma_q, e_q)` meaning `sum_q gamma_q m^{-e_q}`, with `J = 6` orders,
/// plus the f64 data needed to bound the dropped remainder.
fn tail_shape<S: Scalar>(p: &S, prec: usize) -> (Vec<(S, S)>, f64) {
    let one = S::of_u64(1, prec);
    let p_f = p.to_f64();
    let mut pieces: Vec<(S, S)> = vec![
        (p.sub(&one).recip(), p.sub(&one)),
        (S::of_u64(2, prec).recip(), p.clone()),
    ];
    let mut poch = p.clone();
    for j in 1..=6usize {
        let coeff = bern_over_fact::<S>(j, prec);
        pieces.push((coeff.mul(&poch), p.add(&S::of_u64(2 * j as u64 - 1, prec))));
        poch = poch.mul(&p.add(&S::of_u64(2 * j as u64 - 1, prec)));
        poch = poch.mul(&p.add(&S::of_u64(2 * j as u64, prec)));
    }
    let mut poch_f = p_f;
    for i in 1..=13 {
        poch_f *= p_f + i as f64;
    }
    let b14_over = 4.0 * (7.0 / 6.0) / 87_178_291_200.0; // 4 |B_14|/14!
    (pieces, b14_over * poch_f.abs())
}

/// `sum_{r > r0} r^-alpha (r+1)^-e` by binomial expansion in `1/r`;
/// certified power tails throughout.
fn shifted_outer_tail<S: Scalar>(alpha: &S, e: &S, r0: u64, prec: usize) -> (S, f64) {
    let mut total = S::of_u64(0, prec);
    let mut err = 0.0f64;
    let mut bc = S::of_u64(1, prec); // C(-e, w) (-1)^w ... folded sign
    let mut bc_f = 1.0f64;
    let mut w = 0u64;
    loop {
        let p = alpha.add(e).add(&S::of_u64(w, prec));
        let (pt, pt_err) = power_tail(&p, r0 + 1, prec);
        let term = bc.mul(&pt);
        total = total.add(&term);
        err += pt_err * bc_f.abs();
        let tmag = term.to_f64().abs();
        if w > 2 && tmag < 1e-42 * (1.0 + total.to_f64().abs()) {
            break;
        }
        if w > 60 {
            err += 2.0 * tmag;
            break;
        }
        let num = e.add(&S::of_u64(w, prec));
        bc = S::of_u64(0, prec).sub(&bc.mul(&num).div(&S::of_u64(w + 1, prec)));
        bc_f *= (e.to_f64() + w as f64) / (w as f64 + 1.0);
        w += 1;
    }
    (total, err)
}

/// Path for `b = 0`: `T(alpha, 0, c)` with real `alpha`, `c`.
fn path_b_zero<S: Scalar>(
    alpha: &S,
    c: &S,
    tol: f64,
    prec: usize,
    unit: f64,
) -> Result<DirectSum, DirectError> {
    let head = 8192u64;
    let alpha_exp = Exponent::new(alpha.clone());
    let c_exp = Exponent::new(c.clone());

    let (mut tau, tau_err) = power_tail(c, head + 1, prec);
    let mut acc = Acc::new(prec);
    let mut weight_mass = 0.0f64;
    for ri in (1..=head).rev() {
        let rf = S::of_u64(ri, prec);
        let rpow = alpha_exp.apply_minus(&rf);
        acc.push(&rpow.mul(&tau));
        weight_mass += rpow.to_f64().abs();
        tau = tau.add(&c_exp.apply_minus(&rf));
    }

    // outer tail sum_{r > head} r^-alpha tau_c(r)
    let (pieces, rem_coeff) = tail_shape(c, prec);
    let mut outer = S::of_u64(0, prec);
    let mut outer_err = 0.0f64;
    for (gamma, e) in &pieces {
        let (t, te) = shifted_outer_tail(alpha, e, head, prec);
        outer = outer.add(&gamma.mul(&t));
        outer_err += te * gamma.to_f64().abs();
    }
    // dropped remainder of the tau expansion, summed over r > head
    let rem_p = S::of_f64(alpha.to_f64() + c.to_f64() + 13.0, prec);
    let (rem_tail, _) = power_tail(&rem_p, head + 1, prec);
    outer_err += rem_coeff * rem_tail.to_f64().abs();

    let value = acc.total().add(&outer);
    let error = tau_err * weight_mass + outer_err + acc.roundoff(unit);
    if error > tol {
        return Err(DirectError::TolUnreachable { requested: tol, achieved: error });
    }
    Ok(DirectSum { value: value.into_real(512.max(prec)), error_bound: error, terms: head })
}

/// `sum_{t > t0} t^-p H^{(i)}_{t-1}` given `H^{(i)}_{t0}`.
fn harmonic_tail<S: Scalar>(i: u32, p: &S, t0: u64, h_at_t0: &S, prec: usize) -> (S, f64) {
    let (pt, pt_err) = power_tail(p, t0 + 1, prec);
    let mut total = h_at_t0.mul(&pt);
    let mut err = pt_err * h_at_t0.to_f64().abs();
    let ii = S::of_u64(i as u64, prec);
    let (pieces, rem_coeff) = tail_shape(p, prec);
    for (gamma, e) in &pieces {
        let (t, te) = shifted_outer_tail(&ii, e, t0, prec);
        total = total.add(&gamma.mul(&t));
        err += te * gamma.to_f64().abs();
    }
    let rem_p = S::of_f64(i as f64 + p.to_f64() + 13.0, prec);
    let (rem_tail, _) = power_tail(&rem_p, t0 + 1, prec);
    err += rem_coeff * rem_tail.to_f64().abs();
    (total, err)
}

/// Path for integer `a, b >= 1` and real `c`: diagonal summation.
fn path_diagonal<S: Scalar>(
    a: u32,
    b: u32,
    c: &S,
    tol: f64,
    prec: usize,
    unit: f64,
) -> Result<DirectSum, DirectError> {
    let t0 = 65_536u64;
    let c_exp = Exponent::new(c.clone());
    let maxab = a.max(b) as usize;
    let binom = |n: i64, k: i64| -> f64 {
        if k < 0 || k > n {
            return 0.0;
        }
        let mut v = 1.0;
        for i in 0..k {
            v = v * (n - i) as f64 / (i + 1) as f64;
        }
        v
    };
    // 1/(x^a (1-x)^b) = sum_i alpha_i x^-i + sum_j beta_j (1-x)^-j
    let alpha: Vec<f64> = (1..=a).map(|i| binom((a + b - i - 1) as i64, (b - 1) as i64)).collect();
    let beta: Vec<f64> = (1..=b).map(|j| binom((a + b - j - 1) as i64, (a - 1) as i64)).collect();

    let mut h: Vec<S> = vec![S::of_u64(1, prec); maxab + 1];
    let mut acc = Acc::new(prec);
    let mut tinv_pows: Vec<S> = vec![S::of_u64(1, prec); (a + b) as usize + 1];
    for t in 2..=t0 {
        let tf = S::of_u64(t, prec);
        let tinv = tf.recip();
        for k in 1..=(a + b) as usize {
            tinv_pows[k] = tinv_pows[k - 1].mul(&tinv);
        }
        let mut s_t = S::of_u64(0, prec);
        for (idx, coef) in alpha.iter().enumerate() {
            let i = idx + 1;
            s_t = s_t
                .add(&S::of_f64(*coef, prec).mul(&tinv_pows[(a + b) as usize - i]).mul(&h[i]));
        }
        for (idx, coef) in beta.iter().enumerate() {
            let j = idx + 1;
            s_t = s_t
                .add(&S::of_f64(*coef, prec).mul(&tinv_pows[(a + b) as usize - j]).mul(&h[j]));
        }
        acc.push(&c_exp.apply_minus(&tf).mul(&s_t));
        for i in 1..=maxab {
            h[i] = h[i].add(&tinv_pows[i]);
        }
    }

    let mut total = acc.total();
    let mut err = acc.roundoff(unit);
    let add_tail = |i: u32, coef: f64, total: &mut S, err: &mut f64, h: &S| {
        let p = c.add(&S::of_u64((a + b - i) as u64, prec));
        let (ts, te) = harmonic_tail(i, &p, t0, h, prec);
        *total = total.add(&S::of_f64(coef, prec).mul(&ts));
        *err += te * coef.abs();
    };
    for (idx, coef) in alpha.iter().enumerate() {
        let i = (idx + 1) as u32;
        add_tail(i, *coef, &mut total, &mut err, &h[i as usize]);
    }
    for (idx, coef) in beta.iter().enumerate() {
        let j = (idx + 1) as u32;
        add_tail(j, *coef, &mut total, &mut err, &h[j as usize]);
    }
    if err > tol {
        return Err(DirectError::TolUnreachable { requested: tol, achieved: err });
    }
    Ok(DirectSum { value: total.into_real(512.max(prec)), error_bound: err, terms: t0 })
}

/// Crude upper bound for `sum_{s >= m} s^-p`, `p > 1`.
fn crude_tail(p: f64, m: f64) -> f64 {
    m.powf(-p) + m.powf(1.0 - p) / (p - 1.0)
}

/// Fallback for real `b != 0`: rectangular head plus bracketed tails. The
/// corner bound uses a split exponent `(r+s)^-c <= r^{-c t} s^{-c(1-t)}`.
fn path_rectangular<S: Scalar>(
    a: &S,
    b: &S,
    c: &S,
    tol: f64,
    prec: usize,
    unit: f64,
) -> Result<DirectSum, DirectError> {
    let (a_f, b_f, c_f) = (a.to_f64(), b.to_f64(), c.to_f64());
    let r_head = 1500u64;
    let s_head = 6000u64;
    let a_exp = Exponent::new(a.clone());
    let b_exp = Exponent::new(b.clone());
    let c_exp = Exponent::new(c.clone());
    let mut acc = Acc::new(prec);
    let mut err = 0.0f64;
    for r in 1..=r_head {
        let rf = S::of_u64(r, prec);
        let ra = a_exp.apply_minus(&rf);
        let mut inner = Acc::new(prec);
        for s in 1..=s_head {
            let sf = S::of_u64(s, prec);
            inner.push(&b_exp.apply_minus(&sf).mul(&c_exp.apply_minus(&rf.add(&sf))));
        }
        // s-tail bracket between integrals from s_head and s_head+1
        let x_hi = s_head as f64;
        let x_lo = s_head as f64 + 1.0;
        let upper = x_hi.powf(1.0 - b_f - c_f) / (b_f + c_f - 1.0);
        let lower = x_lo.powf(1.0 - b_f - c_f) / (b_f + c_f - 1.0)
            * (1.0 + r as f64 / x_lo).powf(-c_f);
        inner.push(&S::of_f64(0.5 * (upper + lower), prec));
        err += ra.to_f64().abs() * 0.5 * (upper - lower).abs();
        err += inner.roundoff(unit) * ra.to_f64().abs();
        acc.push(&ra.mul(&inner.total()));
    }
    // corner {r > r_head, all s}: split the exponent,
    // (r+s)^-c <= r^{-ct} s^{-c(1-t)} for t in [0,1], choosing t so both
    // directions converge; a workable t exists whenever a+c and b+c clear 1
    // with margin
    let t_lo = ((1.02 - a_f) / c_f).max(0.0);
    let t_hi = ((b_f + c_f - 1.02) / c_f).min(1.0);
    if t_lo >= t_hi {
        return Err(DirectError::TolUnreachable { requested: tol, achieved: f64::INFINITY });
    }
    let t = 0.5 * (t_lo + t_hi);
    let corner = crude_tail(a_f + c_f * t, r_head as f64) * (1.0 + crude_tail(b_f + c_f * (1.0 - t), 1.0));
    err += corner;
    let value = acc.total();
    err += acc.roundoff(unit);
    if err > tol {
        return Err(DirectError::TolUnreachable { requested: tol, achieved: err });
    }
    Ok(DirectSum {
        value: value.into_real(512.max(prec)),
        error_bound: err,
        terms: r_head * s_head,
    })
}

fn convergent(a: f64, b: f64, c: f64) -> bool {
    a + c > 1.0 && b + c > 1.0 && a + b + c > 2.0
}

/// Direct evaluation of `T(a,b,c)` to absolute accuracy `tol`.
pub fn tornheim_direct(
    a: &Real,
    b: &Real,
    c: &Real,
    tol: f64,
    ctx: &Ctx,
) -> Result<DirectSum, DirectError> {
    let (a_f, b_f, c_f) = (a.to_f64(), b.to_f64(), c.to_f64());
    if !convergent(a_f, b_f, c_f) {
        return Err(DirectError::Divergent);
    }
    if b_f != 0.0 && a_f == 0.0 {
        // T is symmetric in (a, b); keep the zero in position b
        return tornheim_direct(b, a, c, tol, ctx);
    }
    let is_small_posint = |x: f64| x.fract() == 0.0 && (1.0..1e6).contains(&x);
    let result = if tol >= 1e-13 {
        let unit = f64::EPSILON;
        if b_f == 0.0 {
            path_b_zero::<f64>(&a_f, &c_f, tol, 0, unit)
        } else if is_small_posint(a_f) && is_small_posint(b_f) {
            path_diagonal::<f64>(a_f as u32, b_f as u32, &c_f, tol, 0, unit)
        } else {
            path_rectangular::<f64>(&a_f, &b_f, &c_f, tol, 0, unit)
        }
    } else {
        let prec = ctx.bits() + 32;
        let unit = 2f64.powi(-(prec as i32) + 2);
        let (ap, bp, cp) = (a.with_prec(prec), b.with_prec(prec), c.with_prec(prec));
        if b_f == 0.0 {
            path_b_zero::<Real>(&ap, &cp, tol, prec, unit)
        } else if is_small_posint(a_f) && is_small_posint(b_f) {
            path_diagonal::<Real>(a_f as u32, b_f as u32, &cp, tol, prec, unit)
        } else {
            path_rectangular::<Real>(&ap, &bp, &cp, tol, prec, unit)
        }
    }?;
    Ok(DirectSum { value: result.value.with_prec(ctx.bits()), ..result })
}

/// Default oracle tolerance: `1e-12` for weight `>= 4`, `1e-8` at weight 3
/// where convergence is slowest.
pub fn default_tolerance(weight: f64) -> f64 {
    if weight >= 4.0 {
        1e-12
    } else {
        1e-8
    }
}
