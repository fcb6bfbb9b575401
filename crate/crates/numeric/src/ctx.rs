//! Numeric evaluation context: target precision, guard digits, cached
//! constants, and shared value caches.

use crate::real::Real;
use num_rational::BigRational;
use std::collections::HashMap;
use std::sync::Mutex;

/// Immutable evaluation context.
///
/// `digits` is the number of decimal digits results are meaningful to;
/// `guard >= 10` extra digits are carried internally. The series truncation
/// tolerance is `10^-(digits + guard/2)`.
pub struct Ctx {
    digits: usize,
    guard: usize,
    bits: usize,
    pi: Real,
    ln2: Real,
    log_two_pi: Real,
    euler_gamma: Real,
    /// `A = log(2 pi) + gamma`.
    a_const: Real,
    /// `delta = 2 log sqrt(2 pi) + gamma = A`. Kept separate for clarity at
    /// call sites that use the log-gamma moment form.
    delta_const: Real,
    series_tol: Real,
    max_quad_level: usize,
    zeta_cache: Mutex<HashMap<u32, Real>>,
    bpoly_cache: Mutex<HashMap<u32, Vec<Real>>>,
    x_cache: Mutex<HashMap<(u32, u32), Real>>,
}

impl Ctx {
    /// Context with the default guard of 10 digits.
    pub fn new(digits: usize) -> Self {
        Self::with_guard(digits, 10)
    }

    pub fn with_guard(digits: usize, guard: usize) -> Self {
        let digits = digits.max(6);
        let guard = guard.max(10);
        let bits = (((digits + guard) as f64) * std::f64::consts::LOG2_10).ceil() as usize + 8;
        let pi = Real::new(
            crate::real::with_consts_pub(|cc| cc.pi(bits, astro_float::RoundingMode::ToEven)),
            bits,
        );
        let ln2 = Real::new(
            crate::real::with_consts_pub(|cc| cc.ln_2(bits, astro_float::RoundingMode::ToEven)),
            bits,
        );
        let log_two_pi = (&pi + &pi).ln();
        let euler_gamma = brent_mcmillan_gamma(bits, digits + guard);
        let a_const = &log_two_pi + &euler_gamma;
        let delta_const = a_const.clone();
        let tol_exp = -((digits + guard / 2) as i64);
        let series_tol = Real::int(10, bits).powi(tol_exp);
        let max_quad_level = std::env::var("TORNHEIM_MAX_QUAD_LEVEL")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or_else(|| ((digits as f64).log2().ceil() as usize) + 4);
        Self {
            digits,
            guard,
            bits,
            pi,
            ln2,
            log_two_pi,
            euler_gamma,
            a_const,
            delta_const,
            series_tol,
            max_quad_level,
            zeta_cache: Mutex::new(HashMap::new()),
            bpoly_cache: Mutex::new(HashMap::new()),
            x_cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn digits(&self) -> usize {
        self.digits
    }

    pub fn guard(&self) -> usize {
        self.guard
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    pub fn pi(&self) -> Real {
        self.pi.clone()
    }

    pub fn two_pi(&self) -> Real {
        &self.pi + &self.pi
    }

    pub fn ln2(&self) -> Real {
        self.ln2.clone()
    }

    pub fn log_two_pi(&self) -> Real {
        self.log_two_pi.clone()
    }

    pub fn euler_gamma(&self) -> Real {
        self.euler_gamma.clone()
    }

    pub fn a_const(&self) -> Real {
        self.a_const.clone()
    }

    pub fn delta_const(&self) -> Real {
        self.delta_const.clone()
    }

    /// Series truncation tolerance `10^-(digits + guard/2)`.
    pub fn series_tol(&self) -> Real {
        self.series_tol.clone()
    }

    pub fn series_tol_f64(&self) -> f64 {
        10f64.powi(-((self.digits + self.guard / 2) as i32))
    }

    pub fn max_quad_level(&self) -> usize {
        self.max_quad_level
    }

    pub fn int(&self, v: i64) -> Real {
        Real::int(v, self.bits)
    }

    pub fn from_f64(&self, v: f64) -> Real {
        Real::from_f64(v, self.bits)
    }

    pub fn from_rational(&self, v: &BigRational) -> Real {
        Real::from_rational(v, self.bits)
    }

    /// Cached `zeta(n)` for integer `n >= 2` (filled by `specfun::zeta_int`).
    pub(crate) fn zeta_cached(&self, n: u32, compute: impl FnOnce() -> Real) -> Real {
        if let Some(v) = self.zeta_cache.lock().expect("zeta cache").get(&n) {
            return v.clone();
        }
        let v = compute();
        self.zeta_cache
            .lock()
            .expect("zeta cache")
            .entry(n)
            .or_insert(v)
            .clone()
    }

    /// Cached `X_{k,l}` integral value, if already computed in this context.
    pub(crate) fn x_cached(&self, k: u32, l: u32) -> Option<Real> {
        self.x_cache.lock().expect("x cache").get(&(k, l)).cloned()
    }

    pub(crate) fn x_store(&self, k: u32, l: u32, v: Real) {
        self.x_cache.lock().expect("x cache").entry((k, l)).or_insert(v);
    }

    /// Cached numeric coefficients of the Bernoulli polynomial `B_k`.
    pub(crate) fn bernoulli_poly_coeffs(&self, k: u32) -> Vec<Real> {
        if let Some(v) = self.bpoly_cache.lock().expect("bpoly cache").get(&k) {
            return v.clone();
        }
        let coeffs: Vec<Real> = tornheim_core::rational::bernoulli_poly_coeffs(k)
            .iter()
            .map(|c| self.from_rational(c))
            .collect();
        self.bpoly_cache
            .lock()
            .expect("bpoly cache")
            .entry(k)
            .or_insert(coeffs)
            .clone()
    }
}

/// Euler's constant by the Brent-McMillan AGM-free scheme
/// (`U/V` of the Bessel-sum recurrences at `n`, error `O(e^{-4n})`).
fn brent_mcmillan_gamma(bits: usize, decimal_digits: usize) -> Real {
    let wp = bits + 32;
    let n = ((decimal_digits as f64) * std::f64::consts::LN_10 / 4.0).ceil() as i64 + 2;
    let nf = Real::int(n, wp);
    let n2 = &nf * &nf;
    let ln_n = nf.ln();
    let mut a = -ln_n.clone();
    let mut b = Real::int(1, wp);
    let mut u = a.clone();
    let mut v = Real::int(1, wp);
    let tol = Real::int(10, wp).powi(-(decimal_digits as i64) - 5);
    let mut k: i64 = 1;
    loop {
        let kf = Real::int(k, wp);
        b = &b * &n2 / (&kf * &kf);
        a = (&a * &n2 / &kf + &b) / &kf;
        u = &u + &a;
        v = &v + &b;
        if a.abs() < tol && b.abs() < tol {
            break;
        }
        k += 1;
        assert!(k < 100_000, "gamma iteration runaway");
    }
    (&u / &v).with_prec(bits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_matches_reference_digits() {
        let ctx = Ctx::with_guard(30, 10);
        // reference value of Euler's constant
        let reference = Real::parse("0.57721566490153286060651209008240243", ctx.bits());
        let diff = (&ctx.euler_gamma() - &reference).abs();
        assert!(diff < Real::parse("1e-33", ctx.bits()), "gamma = {}", ctx.euler_gamma());
    }

    #[test]
    fn log_two_pi_value() {
        let ctx = Ctx::new(30);
        let reference = Real::parse("1.8378770664093454835606594728112353", ctx.bits());
        assert!((&ctx.log_two_pi() - &reference).abs() < Real::parse("1e-33", ctx.bits()));
    }

    #[test]
    fn tolerance_scales_with_digits() {
        let a = Ctx::new(15);
        let b = Ctx::new(30);
        assert!(b.series_tol() < a.series_tol());
        assert!(a.series_tol_f64() > 0.0);
    }
}
