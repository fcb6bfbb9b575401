//! Catalogued closed forms and relation generators for Tornheim sums.
//!
//! Closed forms handled here (`N` is the weight of the left-hand side):
//! - `T(m,k,0) = zeta(m) zeta(k)`
//! - `T(m,k,1)` via the alternating double-zeta formula
//! - `T(1,1,n) = (n+1) zeta(n+2) - sum_{i=2}^{n} zeta(i) zeta(n+2-i)`
//! - `T(0,0,n) = zeta(n-1) - zeta(n)`
//! - `T(1,0,n) = (n zeta(n+1) - sum_{i=2}^{n-1} zeta(i) zeta(n+1-i)) / 2`
//! - `T(m,0,m) = (zeta(m)^2 - zeta(2m)) / 2`
//! - odd weight: `T(m,0,n)` as an integer combination of `zeta(2j) zeta(N-2j)`
//!   with `zeta(0) = -1/2` substituted
//!
//! Relation generators: the Huard expansion of `T(m,k,n)` over
//! `T(i,0,N-i)`, Euler's symmetric relation, and Granville's depth-2 sum.

use crate::combo::SymbolicCombo;
use crate::rational::{big_binomial, int, ratio, BigRational};
use crate::symbol::ZetaSymbol;
use crate::CoreError;
use num_traits::One;

/// A convergent integer triple `(m,k,n)` with its weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TornheimIndex {
    pub m: u32,
    pub k: u32,
    pub n: u32,
}

impl TornheimIndex {
    /// Build an index, rejecting divergent triples.
    pub fn new(m: u32, k: u32, n: u32) -> Result<Self, CoreError> {
        if is_admissible(m, k, n) {
            Ok(Self { m, k, n })
        } else {
            Err(CoreError::Inadmissible(m, k, n))
        }
    }

    pub fn weight(&self) -> u32 {
        self.m + self.k + self.n
    }
}

/// Convergence test for nonnegative integer parameters:
/// `m+n >= 2`, `k+n >= 2` and `m+k+n >= 3`.
pub fn is_admissible(m: u32, k: u32, n: u32) -> bool {
    m + n >= 2 && k + n >= 2 && m + k + n >= 3
}

/// A weight-homogeneous relation `sum_i coeff_i T(i,0,N-i) = rhs`.
#[derive(Debug, Clone)]
pub struct Relation {
    pub weight: u32,
    /// Pairs `(i, coefficient)` for the unknowns `T(i,0,N-i)`.
    pub lhs: Vec<(u32, BigRational)>,
    pub rhs: SymbolicCombo,
}

/// `zeta(a) * zeta(b)` as a canonical combo (`a, b >= 2`).
pub fn zeta_product(a: u32, b: u32) -> SymbolicCombo {
    SymbolicCombo::from_term(ZetaSymbol::ZetaProd(a.min(b), a.max(b)), int(1))
        .expect("indices >= 2")
}

fn zeta(n: u32) -> SymbolicCombo {
    SymbolicCombo::from_term(ZetaSymbol::Zeta(n), int(1)).expect("index >= 2")
}

/// `sum_{i=2}^{N-2} zeta(i) zeta(N-i)`, the full product window at weight `N`.
fn zeta_product_window(weight: u32) -> SymbolicCombo {
    let mut acc = SymbolicCombo::zero();
    for i in 2..=weight.saturating_sub(2) {
        acc = acc.add(&zeta_product(i, weight - i));
    }
    acc
}

/// Huard's expansion of `T(m,k,n)` as an integer combination of the
/// depth-reduced sums `T(i,0,N-i)`:
/// coefficients `C(m+k-i-1, m-i)` for `i = 1..m` plus `C(m+k-i-1, k-i)` for
/// `i = 1..k`, merged by `i`. For `k = 0` the expansion is the identity.
pub fn huard_expand(m: u32, k: u32, n: u32) -> Result<Vec<(u32, BigRational)>, CoreError> {
    if !is_admissible(m, k, n) {
        return Err(CoreError::Inadmissible(m, k, n));
    }
    // the expansion is symmetric in (m, k); with m >= k every binomial index
    // is nonnegative
    let (m, k) = (m.max(k), m.min(k));
    if k == 0 {
        return Ok(vec![(m, BigRational::one())]);
    }
    let mut coeffs: Vec<(u32, BigRational)> = Vec::new();
    let mut add = |i: u32, c: BigRational| {
        if let Some(entry) = coeffs.iter_mut().find(|(j, _)| *j == i) {
            entry.1 += c;
        } else {
            coeffs.push((i, c));
        }
    };
    for i in 1..=m {
        add(i, BigRational::from_integer(big_binomial(m + k - i - 1, m - i)));
    }
    for i in 1..=k {
        add(i, BigRational::from_integer(big_binomial(m + k - i - 1, k - i)));
    }
    coeffs.sort_by_key(|(i, _)| *i);
    coeffs.retain(|(_, c)| !num_traits::Zero::is_zero(c));
    Ok(coeffs)
}

/// Odd-weight closed form for `T(m,0,n)`, `m >= 1`, `n >= 2`, `m+n` odd:
/// two binomial sums over `zeta(2j) zeta(N-2j)` minus `zeta(N)/2`, with
/// `zeta(0) = -1/2` substituted for the `j = 0` terms.
fn odd_weight_form(m: u32, n: u32) -> SymbolicCombo {
    let weight = m + n;
    debug_assert!(weight % 2 == 1 && m >= 1 && n >= 2);
    let sign = if m % 2 == 0 { int(1) } else { int(-1) };
    let mut acc = SymbolicCombo::zero();
    let mut add_product = |j: u32, binom: BigRational| {
        let c = &sign * binom;
        if j == 0 {
            // zeta(0) zeta(N) = -zeta(N)/2
            acc.add_scaled(&zeta(weight), &(c * ratio(-1, 2)));
        } else {
            acc.add_scaled(&zeta_product(2 * j, weight - 2 * j), &c);
        }
    };
    for j in 0..=(n - 1) / 2 {
        add_product(j, BigRational::from_integer(big_binomial(weight - 2 * j - 1, m - 1)));
    }
    for j in 0..=m / 2 {
        add_product(j, BigRational::from_integer(big_binomial(weight - 2 * j - 1, n - 1)));
    }
    acc.add_scaled(&zeta(weight), &ratio(-1, 2));
    acc
}

/// `T(m,k,1)` for `m, k >= 1` with weight `N = m+k+1`.
fn third_entry_one(m: u32, k: u32) -> SymbolicCombo {
    let weight = m + k + 1;
    let sign = if m % 2 == 0 { int(1) } else { int(-1) };
    let mut acc = SymbolicCombo::zero();
    for i in 2..=m {
        let s = if i % 2 == 0 { int(1) } else { int(-1) };
        acc.add_scaled(&zeta_product(i, weight - i), &s);
    }
    acc.add_scaled(&zeta_product_window(weight), &ratio(1, 2));
    acc.add_scaled(&zeta(weight), &(ratio(-1, 2) * int((weight + 1) as i64)));
    acc.scale(&sign)
}

/// `T(m,1,1)` for `m >= 1`, catalogued redundantly as a consistency check:
/// `((N+1) zeta(N) - sum_{i=2}^{N-2} zeta(i) zeta(N-i)) / 2` with `N = m+2`.
pub fn t_m11(m: u32) -> SymbolicCombo {
    let weight = m + 2;
    let mut acc = zeta(weight).scale(&int((weight + 1) as i64));
    acc = acc.sub(&zeta_product_window(weight));
    acc.scale(&ratio(1, 2))
}

/// Catalogued exact evaluation of `T(m,k,n)`, if any.
///
/// Symmetry `T(m,k,n) = T(k,m,n)` is applied first; the match order is
/// `n=0`, `n=1`, `(1,1,n)`, `(0,0,n)`, `(1,0,n)`, `(n,0,n)`, then the
/// odd-weight form for `k = 0`. Overlapping patterns agree, so first match
/// wins. Returns `Ok(None)` when no pattern applies (even weight,
/// `k = 0`, `2 <= m != n`).
pub fn known_closed_form(m: u32, k: u32, n: u32) -> Result<Option<SymbolicCombo>, CoreError> {
    if !is_admissible(m, k, n) {
        return Err(CoreError::Inadmissible(m, k, n));
    }
    let (m, k) = (m.max(k), m.min(k));
    let weight = m + k + n;
    let combo = if n == 0 {
        // T(m,k,0) = zeta(m) zeta(k); admissibility forces m, k >= 2
        Some(zeta_product(m, k))
    } else if n == 1 {
        Some(third_entry_one(m, k))
    } else if m == 1 && k == 1 {
        // T(1,1,n) = (n+1) zeta(n+2) - sum_{i=2}^{n} zeta(i) zeta(n+2-i)
        let mut acc = zeta(weight).scale(&int((n + 1) as i64));
        for i in 2..=n {
            acc.add_scaled(&zeta_product(i, n + 2 - i), &int(-1));
        }
        Some(acc)
    } else if m == 0 && k == 0 {
        // T(0,0,n) = zeta(n-1) - zeta(n)
        Some(zeta(n - 1).sub(&zeta(n)))
    } else if m == 1 && k == 0 {
        // T(1,0,n) = (n zeta(n+1) - sum_{i=2}^{n-1} zeta(i) zeta(n+1-i)) / 2
        let mut acc = zeta(weight).scale(&int(n as i64));
        for i in 2..=n.saturating_sub(1) {
            acc.add_scaled(&zeta_product(i, n + 1 - i), &int(-1));
        }
        Some(acc.scale(&ratio(1, 2)))
    } else if k == 0 && m == n {
        // T(m,0,m) = zeta(m)^2 / 2 - zeta(2m) / 2
        let mut acc = zeta_product(m, m).scale(&ratio(1, 2));
        acc.add_scaled(&zeta(2 * m), &ratio(-1, 2));
        Some(acc)
    } else if k == 0 && weight % 2 == 1 {
        Some(odd_weight_form(m, n))
    } else {
        None
    };
    Ok(combo)
}

/// Euler's symmetric relation for `m, n >= 2`:
/// `T(m,0,n) + T(n,0,m) = zeta(m) zeta(n) - zeta(m+n)`.
pub fn euler_relation(m: u32, n: u32) -> Result<Relation, CoreError> {
    if m < 2 || n < 2 {
        return Err(CoreError::OutOfRange(format!(
            "euler relation needs m, n >= 2, got ({m},{n})"
        )));
    }
    let rhs = zeta_product(m, n).sub(&zeta(m + n));
    let lhs = if m == n {
        vec![(m, int(2))]
    } else {
        vec![(m.min(n), int(1)), (m.max(n), int(1))]
    };
    Ok(Relation { weight: m + n, lhs, rhs })
}

/// Granville's depth-2 relation at weight `N >= 3`:
/// `sum_{i=1}^{N-2} T(i,0,N-i) = zeta(N)`.
pub fn granville_relation(weight: u32) -> Result<Relation, CoreError> {
    if weight < 3 {
        return Err(CoreError::OutOfRange(format!(
            "granville relation needs weight >= 3, got {weight}"
        )));
    }
    let lhs = (1..=weight - 2).map(|i| (i, int(1))).collect();
    Ok(Relation { weight, lhs, rhs: zeta(weight) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn combo(pairs: &[(ZetaSymbol, BigRational)]) -> SymbolicCombo {
        let mut c = SymbolicCombo::zero();
        for (s, q) in pairs {
            c.add_term(*s, q.clone()).unwrap();
        }
        c
    }

    #[test]
    fn admissibility() {
        assert!(is_admissible(2, 0, 2));
        assert!(!is_admissible(3, 0, 1)); // T(m,0,1) diverges
        assert!(is_admissible(0, 0, 3));
        assert!(!is_admissible(2, 1, 0));
        assert!(is_admissible(1, 1, 1));
    }

    #[test]
    fn huard_examples() {
        let as_i64 = |v: Vec<(u32, BigRational)>| -> Vec<(u32, i64)> {
            v.into_iter()
                .map(|(i, c)| {
                    assert!(c.is_integer());
                    (i, i64::try_from(c.to_integer()).unwrap())
                })
                .collect()
        };
        assert_eq!(
            as_i64(huard_expand(5, 2, 1).unwrap()),
            vec![(1, 10), (2, 5), (3, 3), (4, 2), (5, 1)]
        );
        assert_eq!(as_i64(huard_expand(1, 1, 4).unwrap()), vec![(1, 2)]);
        assert_eq!(
            as_i64(huard_expand(4, 4, 0).unwrap()),
            vec![(1, 40), (2, 20), (3, 8), (4, 2)]
        );
        assert!(huard_expand(3, 2, 0).is_ok());
        assert!(huard_expand(0, 2, 1).is_err());
    }

    #[test]
    fn huard_is_symmetric_with_nonnegative_integers() {
        for m in 0..=6u32 {
            for k in 0..=6u32 {
                for n in 0..=4u32 {
                    if !is_admissible(m, k, n) || k == 0 || m == 0 {
                        continue;
                    }
                    let a = huard_expand(m, k, n).unwrap();
                    let b = huard_expand(k, m, n).unwrap();
                    assert_eq!(a, b, "asymmetric at ({m},{k},{n})");
                    for (_, c) in &a {
                        assert!(c.is_integer() && *c >= int(0));
                    }
                }
            }
        }
    }

    #[test]
    fn closed_forms_match_reference_values() {
        // T(1,0,3) = 1/4 zeta(4)
        assert_eq!(
            known_closed_form(1, 0, 3).unwrap().unwrap(),
            combo(&[(ZetaSymbol::Zeta(4), ratio(1, 4))])
        );
        // T(2,0,3) = -11/2 zeta(5) + 3 zeta(2)zeta(3)
        assert_eq!(
            known_closed_form(2, 0, 3).unwrap().unwrap(),
            combo(&[
                (ZetaSymbol::Zeta(5), ratio(-11, 2)),
                (ZetaSymbol::ZetaProd(2, 3), int(3)),
            ])
        );
        // T(4,0,4) = 1/12 zeta(8)
        assert_eq!(
            known_closed_form(4, 0, 4).unwrap().unwrap(),
            combo(&[(ZetaSymbol::Zeta(8), ratio(1, 12))])
        );
        // T(1,1,1) = 2 zeta(3)
        assert_eq!(
            known_closed_form(1, 1, 1).unwrap().unwrap(),
            combo(&[(ZetaSymbol::Zeta(3), int(2))])
        );
        // T(0,0,3) = zeta(2) - zeta(3)
        assert_eq!(
            known_closed_form(0, 0, 3).unwrap().unwrap(),
            combo(&[(ZetaSymbol::Zeta(2), int(1)), (ZetaSymbol::Zeta(3), int(-1))])
        );
        // no pattern for even-weight T(2,0,6)
        assert!(known_closed_form(2, 0, 6).unwrap().is_none());
    }

    #[test]
    fn t_m11_agrees_with_third_entry_one_route() {
        for m in 1..=9u32 {
            assert_eq!(
                t_m11(m),
                known_closed_form(m, 1, 1).unwrap().unwrap(),
                "mismatch at T({m},1,1)"
            );
        }
    }

    #[test]
    fn closed_form_symmetry() {
        for m in 0..=6u32 {
            for k in 0..=6u32 {
                for n in 0..=6u32 {
                    if !is_admissible(m, k, n) {
                        continue;
                    }
                    let a = known_closed_form(m, k, n).unwrap();
                    let b = known_closed_form(k, m, n).unwrap();
                    assert_eq!(a, b, "asymmetric closed form at ({m},{k},{n})");
                }
            }
        }
    }

    #[test]
    fn euler_relation_examples() {
        // (2,4): rhs = zeta(2)zeta(4) - zeta(6) = 3/4 zeta(6)
        let r = euler_relation(2, 4).unwrap();
        assert_eq!(r.rhs, combo(&[(ZetaSymbol::Zeta(6), ratio(3, 4))]));
        assert_eq!(r.lhs, vec![(2, int(1)), (4, int(1))]);
        // (3,5): rhs = zeta(3)zeta(5) - zeta(8)
        let r = euler_relation(3, 5).unwrap();
        assert_eq!(
            r.rhs,
            combo(&[(ZetaSymbol::ZetaProd(3, 5), int(1)), (ZetaSymbol::Zeta(8), int(-1))])
        );
        // (2,6): rhs = 2/3 zeta(8)
        let r = euler_relation(2, 6).unwrap();
        assert_eq!(r.rhs, combo(&[(ZetaSymbol::Zeta(8), ratio(2, 3))]));
        assert!(euler_relation(1, 5).is_err());
    }

    #[test]
    fn euler_consistency_with_odd_weight_forms() {
        // for m,n >= 2 with m+n odd both sides are fully closed-form
        for m in 2..=11u32 {
            for n in 2..=11u32 {
                if (m + n) % 2 == 0 {
                    continue;
                }
                let lhs = known_closed_form(m, 0, n)
                    .unwrap()
                    .unwrap()
                    .add(&known_closed_form(n, 0, m).unwrap().unwrap());
                let rhs = euler_relation(m, n).unwrap().rhs;
                assert_eq!(lhs, rhs, "euler mismatch at ({m},{n})");
            }
        }
    }

    #[test]
    fn granville_weight_four_check() {
        // T(1,0,3) + T(2,0,2) = zeta(4): 1/4 + 3/4 = 1
        let r = granville_relation(4).unwrap();
        assert_eq!(r.lhs.len(), 2);
        let total = known_closed_form(1, 0, 3)
            .unwrap()
            .unwrap()
            .add(&known_closed_form(2, 0, 2).unwrap().unwrap());
        assert_eq!(total, r.rhs);
        assert!(granville_relation(2).is_err());
    }

    #[test]
    fn odd_weight_huard_product_consistency() {
        // huard_expand(m,k,0) with closed forms substituted must reproduce
        // zeta(m) zeta(k) for odd weight
        for m in 2..=9u32 {
            for k in 2..=9u32 {
                if (m + k) % 2 == 0 {
                    continue;
                }
                let weight = m + k;
                let mut acc = SymbolicCombo::zero();
                for (i, c) in huard_expand(m, k, 0).unwrap() {
                    let t = known_closed_form(i, 0, weight - i).unwrap().unwrap();
                    acc.add_scaled(&t, &c);
                }
                assert_eq!(acc, zeta_product(m, k), "mismatch at T({m},{k},0)");
            }
        }
    }
}
