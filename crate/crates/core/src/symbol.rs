//! Atoms of the symbolic algebra.
//!
//! A [`ZetaSymbol`] is one of: the constant `1`, a zeta value `zeta(n)`, a
//! product of two zeta values `zeta(a)*zeta(b)` with `a <= b`, the mixed atom
//! `zeta(n)*log2pi`, a basis Tornheim sum `T(m,0,n)`, or an `Ystar(m,n)`
//! integral. The derived total order (variant order, then lexicographic on
//! indices) fixes the serialization of every combination, so table output is
//! deterministic.

use crate::CoreError;
use std::fmt;
use std::str::FromStr;

/// An atom of the zeta-expression algebra.
///
/// Products of two *even* zeta values are not admitted as atoms: they
/// canonicalize to a rational multiple of a single zeta value (see
/// [`crate::combo::SymbolicCombo::add_term`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ZetaSymbol {
    /// The rational unit.
    One,
    /// `zeta(n)`, `n >= 2`.
    Zeta(u32),
    /// `zeta(a) * zeta(b)`, `2 <= a <= b`, not both even.
    ZetaProd(u32, u32),
    /// `zeta(n) * log(2 pi)`, `n >= 2`.
    ZetaLog(u32),
    /// Basis sum `T(m,0,n)` with `m >= n >= 2`, `n` even, `m+n` even.
    TBasis(u32, u32),
    /// `Ystar(m,n)` with `m` even `>= 2` and `m+n` even.
    YStar(u32, u32),
}

impl ZetaSymbol {
    /// Check the index invariants of the variant.
    pub fn validate(&self) -> Result<(), CoreError> {
        let bad = |s: String| Err(CoreError::MalformedSymbol(s));
        match *self {
            ZetaSymbol::One => Ok(()),
            ZetaSymbol::Zeta(n) | ZetaSymbol::ZetaLog(n) => {
                if n < 2 {
                    bad(format!("zeta index {n} < 2"))
                } else {
                    Ok(())
                }
            }
            ZetaSymbol::ZetaProd(a, b) => {
                if a < 2 || b < 2 {
                    bad(format!("zeta product index ({a},{b}) < 2"))
                } else if a > b {
                    bad(format!("zeta product indices ({a},{b}) not sorted"))
                } else if a % 2 == 0 && b % 2 == 0 {
                    bad(format!("zeta({a})*zeta({b}) with both indices even is not canonical"))
                } else {
                    Ok(())
                }
            }
            ZetaSymbol::TBasis(m, n) => {
                if n < 2 || m < n || n % 2 != 0 || (m + n) % 2 != 0 {
                    bad(format!("T({m},0,{n}) is not a basis sum"))
                } else {
                    Ok(())
                }
            }
            ZetaSymbol::YStar(m, n) => {
                if m < 2 || m % 2 != 0 || (m + n) % 2 != 0 {
                    bad(format!("Ystar({m},{n}) needs even m >= 2 and even weight"))
                } else {
                    Ok(())
                }
            }
        }
    }

    /// Weight of the atom (grading of the algebra); `One` has weight 0.
    pub fn weight(&self) -> u32 {
        match *self {
            ZetaSymbol::One => 0,
            ZetaSymbol::Zeta(n) => n,
            ZetaSymbol::ZetaProd(a, b) => a + b,
            ZetaSymbol::ZetaLog(n) => n,
            ZetaSymbol::TBasis(m, n) | ZetaSymbol::YStar(m, n) => m + n,
        }
    }
}

impl fmt::Display for ZetaSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ZetaSymbol::One => write!(f, "1"),
            ZetaSymbol::Zeta(n) => write!(f, "zeta({n})"),
            ZetaSymbol::ZetaProd(a, b) => write!(f, "zeta({a})*zeta({b})"),
            ZetaSymbol::ZetaLog(n) => write!(f, "zeta({n})*log2pi"),
            ZetaSymbol::TBasis(m, n) => write!(f, "T({m},0,{n})"),
            ZetaSymbol::YStar(m, n) => write!(f, "Ystar({m},{n})"),
        }
    }
}

impl FromStr for ZetaSymbol {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CoreError::MalformedSymbol(format!("cannot parse symbol {s:?}"));
        let s = s.trim();
        if s == "1" {
            return Ok(ZetaSymbol::One);
        }
        fn args(body: &str) -> Option<Vec<u32>> {
            body.split(',').map(|t| t.trim().parse().ok()).collect()
        }
        fn inside<'a>(s: &'a str, head: &str) -> Option<&'a str> {
            s.strip_prefix(head)?.strip_prefix('(')?.strip_suffix(')')
        }
        let sym = if let Some(rest) = s.strip_suffix("*log2pi") {
            let a = args(inside(rest, "zeta").ok_or_else(bad)?).ok_or_else(bad)?;
            match a[..] {
                [n] => ZetaSymbol::ZetaLog(n),
                _ => return Err(bad()),
            }
        } else if s.contains("*zeta(") {
            let (l, r) = s.split_once('*').ok_or_else(bad)?;
            let la = args(inside(l, "zeta").ok_or_else(bad)?).ok_or_else(bad)?;
            let ra = args(inside(r, "zeta").ok_or_else(bad)?).ok_or_else(bad)?;
            match (&la[..], &ra[..]) {
                ([a], [b]) => ZetaSymbol::ZetaProd(*a.min(b), *a.max(b)),
                _ => return Err(bad()),
            }
        } else if let Some(body) = inside(s, "zeta") {
            let a = args(body).ok_or_else(bad)?;
            match a[..] {
                [n] => ZetaSymbol::Zeta(n),
                _ => return Err(bad()),
            }
        } else if let Some(body) = inside(s, "T") {
            let a = args(body).ok_or_else(bad)?;
            match a[..] {
                [m, 0, n] => ZetaSymbol::TBasis(m, n),
                _ => return Err(bad()),
            }
        } else if let Some(body) = inside(s, "Ystar") {
            let a = args(body).ok_or_else(bad)?;
            match a[..] {
                [m, n] => ZetaSymbol::YStar(m, n),
                _ => return Err(bad()),
            }
        } else {
            return Err(bad());
        };
        sym.validate()?;
        Ok(sym)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbol_order_is_variant_then_lexicographic() {
        use ZetaSymbol::*;
        let mut v = vec![
            YStar(2, 6),
            TBasis(6, 2),
            ZetaLog(7),
            ZetaProd(3, 5),
            Zeta(8),
            One,
            Zeta(3),
            TBasis(10, 4),
            TBasis(12, 2),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                One,
                Zeta(3),
                Zeta(8),
                ZetaProd(3, 5),
                ZetaLog(7),
                TBasis(6, 2),
                TBasis(10, 4),
                TBasis(12, 2),
                YStar(2, 6),
            ]
        );
    }

    #[test]
    fn display_round_trips_through_parse() {
        use ZetaSymbol::*;
        for sym in [One, Zeta(8), ZetaProd(3, 5), ZetaLog(7), TBasis(6, 2), YStar(2, 6)] {
            let shown = sym.to_string();
            assert_eq!(shown.parse::<ZetaSymbol>().unwrap(), sym, "{shown}");
        }
    }

    #[test]
    fn validation_rejects_bad_indices() {
        assert!(ZetaSymbol::Zeta(1).validate().is_err());
        assert!(ZetaSymbol::ZetaProd(2, 4).validate().is_err());
        assert!(ZetaSymbol::ZetaProd(5, 3).validate().is_err());
        assert!(ZetaSymbol::TBasis(5, 3).validate().is_err());
        assert!(ZetaSymbol::TBasis(2, 6).validate().is_err());
        assert!(ZetaSymbol::YStar(3, 5).validate().is_err());
        assert!(ZetaSymbol::ZetaProd(3, 5).validate().is_ok());
        assert!(ZetaSymbol::TBasis(6, 2).validate().is_ok());
    }
}
