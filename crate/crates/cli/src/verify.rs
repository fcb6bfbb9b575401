//! The end-to-end verification pipeline: reduce symbolically, substitute
//! basis sums by `Ystar` integrals, evaluate numerically, and compare with
//! the independent direct-summation oracle.

use crate::direct::{default_tolerance, tornheim_direct, DirectError};
use thiserror::Error;
use tornheim_core::{reduce, substitute_basis, CoreError, SymbolicCombo, TornheimIndex};
use tornheim_numeric::{eval_combo, Ctx, NumericError, Real};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error(transparent)]
    Direct(#[from] DirectError),
}

/// Outcome of one verification.
#[derive(Debug)]
pub struct VerifyReport {
    pub index: TornheimIndex,
    /// Canonical reduction over the generating set.
    pub symbolic: SymbolicCombo,
    /// The reduction with basis sums rewritten through `Ystar`.
    pub substituted: SymbolicCombo,
    pub numeric_from_symbolic: Real,
    pub numeric_from_oracle: Real,
    pub abs_diff: Real,
    pub tolerance: f64,
    pub oracle_error_bound: f64,
    pub pass: bool,
}

/// Verify `T(m,k,n)` at tolerance `tol` (defaulted per weight when `None`).
pub fn verify(
    m: u32,
    k: u32,
    n: u32,
    ctx: &Ctx,
    tol: Option<f64>,
) -> Result<VerifyReport, VerifyError> {
    let reduced = reduce(m, k, n)?;
    let substituted = substitute_basis(&reduced.combo)?;
    let numeric = eval_combo(&substituted, ctx)?;
    let weight = (m + k + n) as f64;
    let tol = tol.unwrap_or_else(|| default_tolerance(weight));
    let oracle_tol = (tol * 0.1).min(1e-8);
    let oracle = tornheim_direct(
        &ctx.int(m as i64),
        &ctx.int(k as i64),
        &ctx.int(n as i64),
        oracle_tol,
        ctx,
    )?;
    let abs_diff = (&numeric - &oracle.value).abs();
    let pass = abs_diff.to_f64() <= tol;
    Ok(VerifyReport {
        index: reduced.index,
        symbolic: reduced.combo,
        substituted,
        numeric_from_symbolic: numeric,
        numeric_from_oracle: oracle.value,
        abs_diff,
        tolerance: tol,
        oracle_error_bound: oracle.error_bound,
        pass,
    })
}

/// Symbolic reduction plus numeric value (the `eval` pipeline).
pub struct Evaluation {
    pub symbolic: SymbolicCombo,
    pub substituted: SymbolicCombo,
    pub value: Real,
}

pub fn evaluate(m: u32, k: u32, n: u32, ctx: &Ctx) -> Result<Evaluation, VerifyError> {
    let reduced = reduce(m, k, n)?;
    let substituted = substitute_basis(&reduced.combo)?;
    let value = eval_combo(&substituted, ctx)?;
    Ok(Evaluation { symbolic: reduced.combo, substituted, value })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_three_verifies() {
        let ctx = Ctx::new(15);
        let r = verify(1, 1, 1, &ctx, Some(1e-8)).unwrap();
        assert!(r.pass, "diff = {}", r.abs_diff.to_f64());
        assert_eq!(r.symbolic.to_string(), "2*zeta(3)");
    }

    #[test]
    fn weight_four_closed_forms_verify() {
        let ctx = Ctx::new(15);
        for (m, k, n) in [(2, 0, 2), (1, 1, 2), (2, 2, 0)] {
            let r = verify(m, k, n, &ctx, Some(1e-10)).unwrap();
            assert!(r.pass, "T({m},{k},{n}) diff = {}", r.abs_diff.to_f64());
        }
    }

    #[test]
    fn inadmissible_is_an_error() {
        let ctx = Ctx::new(15);
        assert!(verify(3, 0, 1, &ctx, None).is_err());
    }
}
