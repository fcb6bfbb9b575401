//! Numeric evaluation of canonical symbolic combinations.

use crate::ctx::Ctx;
use crate::families::y_star;
use crate::real::{scale_rational, Real};
use crate::specfun::zeta_int;
use crate::NumericError;
use tornheim_core::{SymbolicCombo, ZetaSymbol};

/// Evaluate a combo numerically. `TBasis` atoms must have been substituted
/// away first (see `tornheim_core::substitute_basis`); `YStar` atoms are
/// evaluated by quadrature.
pub fn eval_combo(combo: &SymbolicCombo, ctx: &Ctx) -> Result<Real, NumericError> {
    let mut acc = Real::zero(ctx.bits());
    for (sym, c) in combo.iter() {
        let v = match *sym {
            ZetaSymbol::One => ctx.int(1),
            ZetaSymbol::Zeta(n) => zeta_int(n as i64, ctx)?,
            ZetaSymbol::ZetaProd(a, b) => {
                zeta_int(a as i64, ctx)? * zeta_int(b as i64, ctx)?
            }
            ZetaSymbol::ZetaLog(n) => zeta_int(n as i64, ctx)? * ctx.log_two_pi(),
            ZetaSymbol::YStar(m, n) => y_star(m, n, ctx)?,
            ZetaSymbol::TBasis(m, n) => {
                return Err(NumericError::Unevaluable(format!(
                    "basis sum T({m},0,{n}) must be substituted before evaluation"
                )))
            }
        };
        acc = &acc + &scale_rational(&v, c);
    }
    Ok(acc)
}
