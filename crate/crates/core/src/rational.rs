//! Exact rational helpers: Bernoulli numbers, binomial coefficients,
//! factorials.
//!
//! Everything here is over `num` big integers and rationals; these are the
//! coefficient field for the whole symbolic layer.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::sync::Mutex;

pub use num_rational::BigRational;

/// `n!` as a big integer.
pub fn big_factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n as u64 {
        acc *= i;
    }
    acc
}

/// Binomial coefficient `C(n, k)` as a big integer; zero for `k > n`.
pub fn big_binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Rational from an integer pair, reduced.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn int(num: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(num))
}

static BERNOULLI_CACHE: Mutex<Vec<BigRational>> = Mutex::new(Vec::new());

/// Exact Bernoulli number `B_k`, with the convention `B_1 = -1/2`
/// (the value `B_k(0)` of the Bernoulli polynomial).
///
/// Computed by the defining recurrence `sum_{j=0}^{k} C(k+1, j) B_j = 0`
/// and cached.
pub fn bernoulli_number(k: u32) -> BigRational {
    let mut cache = BERNOULLI_CACHE.lock().expect("bernoulli cache poisoned");
    if cache.is_empty() {
        cache.push(BigRational::one());
    }
    while cache.len() <= k as usize {
        let m = cache.len() as u32;
        if m > 2 && m % 2 == 1 {
            cache.push(BigRational::zero());
            continue;
        }
        let mut acc = BigRational::zero();
        for (j, bj) in cache.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            acc += BigRational::from_integer(big_binomial(m + 1, j as u32)) * bj;
        }
        acc /= BigRational::from_integer(BigInt::from(m + 1));
        cache.push(-acc);
    }
    cache[k as usize].clone()
}

/// Exact value of `zeta(1-k)` for `k >= 1`: `(-1)^{k+1} B_k / k`.
pub fn zeta_neg(k: u32) -> BigRational {
    debug_assert!(k >= 1);
    let sign = if k % 2 == 1 { BigInt::one() } else { -BigInt::one() };
    bernoulli_number(k) * BigRational::new(sign, BigInt::from(k))
}

/// Exact ratio `zeta(2a) zeta(2b) / zeta(2a+2b)` for `a, b >= 1`:
/// `-C(2a+2b, 2a) B_{2a} B_{2b} / (2 B_{2a+2b})`.
///
/// This is what lets the canonical form fold a product of two even zeta
/// values into a single one.
pub fn even_zeta_product_ratio(a: u32, b: u32) -> BigRational {
    debug_assert!(a >= 1 && b >= 1);
    let num = bernoulli_number(2 * a) * bernoulli_number(2 * b);
    let den = bernoulli_number(2 * a + 2 * b) * int(2);
    -BigRational::from_integer(big_binomial(2 * a + 2 * b, 2 * a)) * num / den
}

/// Bernoulli polynomial `B_k(q)` coefficients in descending powers of `q`:
/// `B_k(q) = sum_j C(k,j) B_j q^{k-j}`, returned as `[c_0, ..., c_k]` with
/// `c_j` the coefficient of `q^{k-j}`.
pub fn bernoulli_poly_coeffs(k: u32) -> Vec<BigRational> {
    (0..=k)
        .map(|j| BigRational::from_integer(big_binomial(k, j)) * bernoulli_number(j))
        .collect()
}

/// Expand a product of Bernoulli polynomials into single ones:
/// `B_a(q) B_b(q) = sum_m coeff_m B_m(q) + constant`, returned as
/// (list of `(m, coeff_m)`, constant). Requires `a, b >= 1`.
pub fn bernoulli_product_expansion(a: u32, b: u32) -> (Vec<(u32, BigRational)>, BigRational) {
    assert!(a >= 1 && b >= 1, "bernoulli_product_expansion needs a,b >= 1");
    let kmax = (a / 2).max(b / 2);
    let mut terms = Vec::new();
    for k in 0..=kmax {
        let b2k = bernoulli_number(2 * k);
        if b2k.is_zero() {
            continue;
        }
        let w = BigRational::from_integer(
            BigInt::from(a) * big_binomial(b, 2 * k) + BigInt::from(b) * big_binomial(a, 2 * k),
        );
        if w.is_zero() {
            continue;
        }
        let m = a + b - 2 * k;
        let coeff = w * b2k / int(m as i64);
        terms.push((m, coeff));
    }
    let sign = if a % 2 == 0 { -BigRational::one() } else { BigRational::one() };
    let constant = sign
        * BigRational::new(
            big_factorial(a) * big_factorial(b),
            big_factorial(a + b),
        )
        * bernoulli_number(a + b);
    (terms, constant)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_small_values() {
        assert_eq!(bernoulli_number(0), int(1));
        assert_eq!(bernoulli_number(1), ratio(-1, 2));
        assert_eq!(bernoulli_number(2), ratio(1, 6));
        assert_eq!(bernoulli_number(3), int(0));
        assert_eq!(bernoulli_number(4), ratio(-1, 30));
    }

    #[test]
    fn bernoulli_b12_against_akiyama_tanigawa() {
        // Independent route: the Akiyama-Tanigawa algorithm produces the
        // sequence B_n(1), which differs from B_n only at n = 1.
        let n = 14usize;
        let mut row: Vec<BigRational> =
            (0..=n).map(|m| BigRational::new(BigInt::one(), BigInt::from(m as u32 + 1))).collect();
        let mut at = vec![row[0].clone()];
        for i in 1..=n {
            for j in 0..=(n - i) {
                let d = row[j].clone() - row[j + 1].clone();
                row[j] = BigRational::from_integer(BigInt::from(j as u32 + 1)) * d;
            }
            at.push(row[0].clone());
        }
        assert_eq!(at[12], bernoulli_number(12));
        assert_eq!(bernoulli_number(12), ratio(-691, 2730));
        assert_eq!(at[8], bernoulli_number(8));
    }

    #[test]
    fn even_product_ratios_match_reference_values() {
        // zeta(2)zeta(4) = 7/4 zeta(6), zeta(2)^2 = 5/2 zeta(4)
        assert_eq!(even_zeta_product_ratio(1, 2), ratio(7, 4));
        assert_eq!(even_zeta_product_ratio(1, 1), ratio(5, 2));
        // zeta(2)zeta(6) = 54/35... check against zeta(4)^2 = 7/6 zeta(8)
        assert_eq!(even_zeta_product_ratio(2, 2), ratio(7, 6));
        assert_eq!(even_zeta_product_ratio(1, 3), ratio(5, 3));
    }

    #[test]
    fn zeta_neg_values() {
        assert_eq!(zeta_neg(1), ratio(-1, 2)); // zeta(0)
        assert_eq!(zeta_neg(2), ratio(-1, 12)); // zeta(-1)
        assert_eq!(zeta_neg(4), ratio(1, 120)); // zeta(-3)
        assert_eq!(zeta_neg(3), int(0)); // zeta(-2)
    }

    #[test]
    fn bernoulli_product_square_of_b1() {
        // B_1(q)^2 = B_2(q) + 1/12
        let (terms, c) = bernoulli_product_expansion(1, 1);
        assert_eq!(terms, vec![(2, int(1))]);
        assert_eq!(c, ratio(1, 12));
    }
}
