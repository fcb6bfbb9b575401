//! Arbitrary-precision reals.
//!
//! [`Real`] wraps `astro_float::BigFloat` with an explicit working precision
//! in bits, rounding to even, and a thread-local constants cache for the
//! transcendental functions. Binary operations work at the larger precision
//! of the two operands.

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// Access the thread-local constants cache (for `pi`, `ln 2`, string parsing).
pub fn with_consts_pub<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    with_consts(f)
}

/// A real number with explicit working precision (bits).
#[derive(Clone, Debug)]
pub struct Real {
    x: BigFloat,
    p: usize,
}

impl Real {
    pub fn new(x: BigFloat, p: usize) -> Self {
        debug_assert!(!x.is_nan(), "NaN entered Real");
        Self { x, p }
    }

    pub fn prec(&self) -> usize {
        self.p
    }

    pub fn as_bigfloat(&self) -> &BigFloat {
        &self.x
    }

    pub fn zero(p: usize) -> Self {
        Self::new(BigFloat::from_i64(0, p), p)
    }

    pub fn int(v: i64, p: usize) -> Self {
        Self::new(BigFloat::from_i64(v, p), p)
    }

    pub fn from_f64(v: f64, p: usize) -> Self {
        Self::new(BigFloat::from_f64(v, p), p)
    }

    pub fn from_bigint(v: &BigInt, p: usize) -> Self {
        let (sign, digits) = v.to_u64_digits();
        let mut acc = BigFloat::from_i64(0, p + 64);
        let scale = BigFloat::from_u128(1u128 << 64, p + 64);
        for d in digits.iter().rev() {
            acc = acc.mul(&scale, p + 64, RM);
            acc = acc.add(&BigFloat::from_u64(*d, p + 64), p + 64, RM);
        }
        if sign == num_bigint::Sign::Minus {
            acc.inv_sign();
        }
        let mut out = acc;
        out.set_precision(p, RM).expect("precision");
        Self::new(out, p)
    }

    pub fn from_rational(v: &BigRational, p: usize) -> Self {
        let num = Self::from_bigint(v.numer(), p + 32);
        let den = Self::from_bigint(v.denom(), p + 32);
        let mut q = num.x.div(&den.x, p, RM);
        q.set_precision(p, RM).expect("precision");
        Self::new(q, p)
    }

    /// Parse a decimal literal at precision `p`.
    pub fn parse(s: &str, p: usize) -> Self {
        let x = with_consts(|cc| BigFloat::parse(s, Radix::Dec, p, RM, cc));
        Self::new(x, p)
    }

    /// Round (or extend) to precision `p`.
    pub fn with_prec(&self, p: usize) -> Self {
        let mut x = self.x.clone();
        x.set_precision(p, RM).expect("precision");
        Self::new(x, p)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.x.is_negative() && !self.x.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.x.is_positive() && !self.x.is_zero()
    }

    pub fn abs(&self) -> Self {
        Self::new(self.x.abs(), self.p)
    }

    pub fn recip(&self) -> Self {
        Self::new(self.x.reciprocal(self.p, RM), self.p)
    }

    pub fn sqrt(&self) -> Self {
        Self::new(self.x.sqrt(self.p, RM), self.p)
    }

    pub fn exp(&self) -> Self {
        Self::new(with_consts(|cc| self.x.exp(self.p, RM, cc)), self.p)
    }

    pub fn ln(&self) -> Self {
        Self::new(with_consts(|cc| self.x.ln(self.p, RM, cc)), self.p)
    }

    pub fn sin(&self) -> Self {
        Self::new(with_consts(|cc| self.x.sin(self.p, RM, cc)), self.p)
    }

    pub fn cos(&self) -> Self {
        Self::new(with_consts(|cc| self.x.cos(self.p, RM, cc)), self.p)
    }

    pub fn tan(&self) -> Self {
        Self::new(with_consts(|cc| self.x.tan(self.p, RM, cc)), self.p)
    }

    pub fn sinh(&self) -> Self {
        Self::new(with_consts(|cc| self.x.sinh(self.p, RM, cc)), self.p)
    }

    pub fn cosh(&self) -> Self {
        Self::new(with_consts(|cc| self.x.cosh(self.p, RM, cc)), self.p)
    }

    /// `self^e` for a machine integer exponent, by binary powering.
    pub fn powi(&self, e: i64) -> Self {
        if e == 0 {
            return Self::int(1, self.p);
        }
        let wp = self.p + 64;
        let mut base = self.with_prec(wp).x;
        if e < 0 {
            base = base.reciprocal(wp, RM);
        }
        let mut n = e.unsigned_abs();
        let mut acc = BigFloat::from_i64(1, wp);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base, wp, RM);
            }
            base = base.mul(&base, wp, RM);
            n >>= 1;
        }
        let mut out = acc;
        out.set_precision(self.p, RM).expect("precision");
        Self::new(out, self.p)
    }

    /// `self^e` for a real exponent (`self > 0`).
    pub fn pow(&self, e: &Real) -> Self {
        let p = self.p.max(e.p);
        Self::new(with_consts(|cc| self.x.pow(&e.x, p, RM, cc)), p)
    }

    /// Euclidean-style pieces.
    pub fn floor(&self) -> Self {
        Self::new(self.x.floor(), self.p)
    }

    pub fn is_integer(&self) -> bool {
        self.x.is_int()
    }

    /// Nearest `f64` (double rounding; used for diagnostics and budgets).
    pub fn to_f64(&self) -> f64 {
        if self.x.is_zero() {
            return 0.0;
        }
        let Some((words, _len, sign, e, _inexact)) = self.x.as_raw_parts() else {
            return f64::NAN;
        };
        let nw = words.len();
        let hi = words[nw - 1] as f64;
        let lo = if nw >= 2 { words[nw - 2] as f64 } else { 0.0 };
        let mag = hi * (e as f64 - 64.0).exp2() + lo * (e as f64 - 128.0).exp2();
        if sign == Sign::Neg {
            -mag
        } else {
            mag
        }
    }

    /// Decimal rendering with `digits` significant digits, scientific form.
    pub fn to_decimal(&self, digits: usize) -> String {
        if self.x.is_zero() {
            return "0".into();
        }
        let s = format!("{}", self.x);
        round_decimal_string(&s, digits)
    }

    pub fn cmp_real(&self, other: &Real) -> Ordering {
        match self.x.cmp(&other.x) {
            Some(o) => match o {
                d if d < 0 => Ordering::Less,
                0 => Ordering::Equal,
                _ => Ordering::Greater,
            },
            None => Ordering::Equal,
        }
    }
}

/// Round the scientific rendering ("d.ddd...e+X") to `digits` significant
/// digits, with decimal carry.
fn round_decimal_string(s: &str, digits: usize) -> String {
    let digits = digits.max(1);
    let (mant, exp) = match s.split_once('e') {
        Some((m, e)) => (m, e.parse::<i64>().unwrap_or(0)),
        None => (s, 0),
    };
    let neg = mant.starts_with('-');
    let int_digits = mant
        .trim_start_matches('-')
        .find('.')
        .unwrap_or_else(|| mant.trim_start_matches('-').len());
    // value = +- 0.d1 d2 ... * 10^e10
    let mut ds: Vec<u8> =
        mant.chars().filter(|c| c.is_ascii_digit()).map(|c| c as u8 - b'0').collect();
    let mut e10 = int_digits as i64 + exp;
    if ds.len() > digits {
        let carry = ds[digits] >= 5;
        ds.truncate(digits);
        if carry {
            let mut i = digits;
            loop {
                if i == 0 {
                    ds.insert(0, 1);
                    ds.truncate(digits);
                    e10 += 1;
                    break;
                }
                i -= 1;
                if ds[i] == 9 {
                    ds[i] = 0;
                } else {
                    ds[i] += 1;
                    break;
                }
            }
        }
    }
    while ds.len() < digits {
        ds.push(0);
    }
    let body: String = ds.iter().map(|d| (d + b'0') as char).collect();
    let sign = if neg { "-" } else { "" };
    let (head, tail) = body.split_at(1);
    if tail.is_empty() {
        format!("{sign}{head}e{:+}", e10 - 1)
    } else {
        format!("{sign}{head}.{tail}e{:+}", e10 - 1)
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.x)
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_real(other) == Ordering::Equal
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_real(other))
    }
}

macro_rules! bin_op {
    ($trait:ident, $method:ident, $bf:ident) => {
        impl std::ops::$trait<&Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                let p = self.p.max(rhs.p);
                Real::new(self.x.$bf(&rhs.x, p, RM), p)
            }
        }
        impl std::ops::$trait<Real> for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                (&self).$method(&rhs)
            }
        }
        impl std::ops::$trait<&Real> for Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                (&self).$method(rhs)
            }
        }
        impl std::ops::$trait<Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                self.$method(&rhs)
            }
        }
    };
}

bin_op!(Add, add, add);
bin_op!(Sub, sub, sub);
bin_op!(Mul, mul, mul);
bin_op!(Div, div, div);

impl std::ops::Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        let mut x = self.x.clone();
        x.inv_sign();
        Real::new(x, self.p)
    }
}

impl std::ops::Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        -&self
    }
}

/// Convert a `BigRational` scaling factor and apply it: `c * x`.
pub fn scale_rational(x: &Real, c: &BigRational) -> Real {
    if c.is_zero() {
        return Real::zero(x.prec());
    }
    if c.is_integer() {
        if let Some(i) = c.numer().to_i64() {
            return x * Real::int(i, x.prec());
        }
    }
    x * Real::from_rational(c, x.prec())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_conversions() {
        let p = 192;
        let a = Real::int(10, p);
        let b = Real::int(3, p);
        let q = &a / &b;
        assert!((q.to_f64() - 10.0 / 3.0).abs() < 1e-15);
        assert!((&q * &b - &a).abs().to_f64().abs() < 1e-50);
        assert_eq!(Real::int(2, p).powi(10).to_f64(), 1024.0);
        assert!((Real::int(2, p).powi(-2).to_f64() - 0.25).abs() < 1e-16);
        let r = BigRational::new(BigInt::from(-691), BigInt::from(2730));
        let x = Real::from_rational(&r, p);
        assert!((x.to_f64() + 691.0 / 2730.0).abs() < 1e-15);
    }

    #[test]
    fn parse_and_to_decimal() {
        let p = 240;
        let x = Real::parse("0.645324784017496594071783081476", p);
        let shown = x.to_decimal(30);
        assert_eq!(shown, "6.45324784017496594071783081476e-1");
        let y = Real::parse("-2.5", p);
        assert_eq!(y.to_decimal(2), "-2.5e+0");
        assert!((Real::parse("1e-3", p).to_f64() - 1e-3).abs() < 1e-18);
    }

    #[test]
    fn rounding_carries() {
        let p = 120;
        let x = Real::parse("9.99999", p);
        assert_eq!(x.to_decimal(3), "1.00e+1");
        let x = Real::parse("1.2349", p);
        assert_eq!(x.to_decimal(4), "1.235e+0");
    }

    #[test]
    fn big_integer_round_trip() {
        let p = 256;
        let v = BigInt::parse_bytes(b"123456789012345678901234567890", 10).unwrap();
        let x = Real::from_bigint(&v, p);
        let s = x.to_decimal(30);
        assert_eq!(s, "1.23456789012345678901234567890e+29");
    }
}
