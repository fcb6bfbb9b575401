//! Rational linear combinations of [`ZetaSymbol`] atoms.
//!
//! A [`SymbolicCombo`] is the canonical exact value of a Tornheim sum: a
//! finite map from atoms to nonzero rational coefficients. Insertion
//! canonicalizes: `zeta(2a)*zeta(2b)` folds into `zeta(2a+2b)` with the
//! exact Bernoulli-number ratio, and zero coefficients are dropped.

use crate::rational::{even_zeta_product_ratio, BigRational};
use crate::symbol::ZetaSymbol;
use crate::CoreError;
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A finite map `ZetaSymbol -> BigRational` in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymbolicCombo {
    terms: BTreeMap<ZetaSymbol, BigRational>,
}

impl SymbolicCombo {
    /// The zero combination.
    pub fn zero() -> Self {
        Self::default()
    }

    /// Canonicalize a single weighted atom.
    ///
    /// `zeta(2a)*zeta(2b)` rewrites to `zeta(2a+2b)` times the exact rational
    /// `zeta(2a)zeta(2b)/zeta(2a+2b)`; all other symbols pass through (with
    /// product indices assumed sorted by the caller or the constructor).
    pub fn from_term(sym: ZetaSymbol, coeff: BigRational) -> Result<Self, CoreError> {
        let mut combo = Self::zero();
        combo.add_term(sym, coeff)?;
        Ok(combo)
    }

    /// Add `coeff * sym` in place, canonicalizing.
    pub fn add_term(&mut self, sym: ZetaSymbol, coeff: BigRational) -> Result<(), CoreError> {
        if coeff.is_zero() {
            sym.validate().or_else(|e| match sym {
                // An even-even product with zero coefficient is still fine to drop.
                ZetaSymbol::ZetaProd(_, _) => Ok(()),
                _ => Err(e),
            })?;
            return Ok(());
        }
        let (sym, coeff) = match sym {
            ZetaSymbol::ZetaProd(a, b) => {
                let (a, b) = (a.min(b), a.max(b));
                if a < 2 {
                    return Err(CoreError::MalformedSymbol(format!(
                        "zeta product index ({a},{b}) < 2"
                    )));
                }
                if a % 2 == 0 && b % 2 == 0 {
                    (
                        ZetaSymbol::Zeta(a + b),
                        coeff * even_zeta_product_ratio(a / 2, b / 2),
                    )
                } else {
                    (ZetaSymbol::ZetaProd(a, b), coeff)
                }
            }
            other => {
                other.validate()?;
                (other, coeff)
            }
        };
        let entry = self.terms.entry(sym).or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&sym);
        }
        Ok(())
    }

    /// Termwise sum.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (sym, c) in &other.terms {
            out.add_term(*sym, c.clone()).expect("canonical inputs");
        }
        out
    }

    /// Termwise difference.
    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (sym, c) in &other.terms {
            out.add_term(*sym, -c.clone()).expect("canonical inputs");
        }
        out
    }

    /// `self += factor * other`.
    pub fn add_scaled(&mut self, other: &Self, factor: &BigRational) {
        if factor.is_zero() {
            return;
        }
        for (sym, c) in &other.terms {
            self.add_term(*sym, c * factor).expect("canonical inputs");
        }
    }

    /// Multiply every coefficient by `factor`.
    pub fn scale(&self, factor: &BigRational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(s, c)| (*s, c * factor))
                .collect(),
        }
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(s, c)| (*s, -c.clone())).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of a symbol (zero if absent).
    pub fn coeff(&self, sym: &ZetaSymbol) -> BigRational {
        self.terms.get(sym).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Iterate terms in the canonical symbol order.
    pub fn iter(&self) -> impl Iterator<Item = (&ZetaSymbol, &BigRational)> {
        self.terms.iter()
    }

    /// True if any term is a `TBasis` or `YStar` atom.
    pub fn has_unreduced_sums(&self) -> bool {
        self.terms
            .keys()
            .any(|s| matches!(s, ZetaSymbol::TBasis(_, _) | ZetaSymbol::YStar(_, _)))
    }
}

impl fmt::Display for SymbolicCombo {
    /// Canonical text rendering: terms in symbol order, each `c*sym` with a
    /// reduced fraction, e.g. `2/3*zeta(8) - 1*T(6,0,2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (sym, c)) in self.terms.iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}*{}", c.abs(), sym)?;
        }
        Ok(())
    }
}
