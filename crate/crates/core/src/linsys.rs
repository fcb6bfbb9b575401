//! Exact Gaussian elimination over the rationals with symbolic right-hand
//! sides.
//!
//! The rows of a [`LinearSystem`] are relations among abstract unknowns; the
//! right-hand sides live in the combo algebra. Elimination processes columns
//! left to right (callers order the unknowns), so the surviving free unknowns
//! are the latest columns that are linearly dependent on the earlier ones.
//! Pivot rows are chosen by row order.

use crate::combo::SymbolicCombo;
use crate::rational::BigRational;
use crate::CoreError;
use num_traits::Zero;

/// A system of linear relations over `unknowns` with symbolic right sides.
#[derive(Debug, Clone, Default)]
pub struct LinearSystem {
    /// Number of unknowns (columns).
    pub unknowns: usize,
    /// Rows `(coefficients, rhs)`; every coefficient vector has length
    /// `unknowns`.
    pub rows: Vec<(Vec<BigRational>, SymbolicCombo)>,
}

impl LinearSystem {
    pub fn new(unknowns: usize) -> Self {
        Self { unknowns, rows: Vec::new() }
    }

    /// Append a relation. Panics if the coefficient vector has the wrong
    /// length.
    pub fn push_row(&mut self, coeffs: Vec<BigRational>, rhs: SymbolicCombo) {
        assert_eq!(coeffs.len(), self.unknowns, "row length mismatch");
        self.rows.push((coeffs, rhs));
    }
}

/// The value of one determined unknown: a combo plus rational multiples of
/// the free unknowns (given by column index).
#[derive(Debug, Clone)]
pub struct Assignment {
    pub rhs: SymbolicCombo,
    pub free_part: Vec<(usize, BigRational)>,
}

/// Result of [`solve_exact`].
#[derive(Debug, Clone)]
pub struct Solution {
    pub rank: usize,
    /// Column indices of the free unknowns, ascending.
    pub free: Vec<usize>,
    /// One entry per unknown: `None` for free unknowns.
    pub assignments: Vec<Option<Assignment>>,
}

/// Reduced Gaussian elimination over `BigRational`.
///
/// Returns an assignment for every determined unknown, expressed over the
/// free unknowns and the symbolic right-hand sides. A row reducing to
/// `0 = rhs` with `rhs != 0` is an inconsistency and reports
/// [`CoreError::InconsistentSystem`].
pub fn solve_exact(sys: &LinearSystem) -> Result<Solution, CoreError> {
    let n = sys.unknowns;
    let mut rows: Vec<(Vec<BigRational>, SymbolicCombo)> = sys.rows.clone();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; n];
    let mut next_row = 0usize;

    for col in 0..n {
        // first unprocessed row with a nonzero entry in this column
        let Some(r) = (next_row..rows.len()).find(|&r| !rows[r].0[col].is_zero()) else {
            continue;
        };
        rows.swap(next_row, r);
        let inv = rows[next_row].0[col].recip();
        // normalize pivot row
        {
            let (coeffs, rhs) = &mut rows[next_row];
            for c in coeffs.iter_mut() {
                *c *= &inv;
            }
            *rhs = rhs.scale(&inv);
        }
        // eliminate from every other row
        let (pivot_coeffs, pivot_rhs) = rows[next_row].clone();
        for (r, (coeffs, rhs)) in rows.iter_mut().enumerate() {
            if r == next_row || coeffs[col].is_zero() {
                continue;
            }
            let f = coeffs[col].clone();
            for (c, p) in coeffs.iter_mut().zip(pivot_coeffs.iter()) {
                *c -= &f * p;
            }
            rhs.add_scaled(&pivot_rhs, &-f);
        }
        pivot_of_col[col] = Some(next_row);
        next_row += 1;
    }

    // consistency: all remaining rows must be fully zero
    for (coeffs, rhs) in rows.iter().skip(next_row) {
        debug_assert!(coeffs.iter().all(|c| c.is_zero()));
        if !rhs.is_zero() {
            return Err(CoreError::InconsistentSystem);
        }
    }

    let free: Vec<usize> =
        (0..n).filter(|&c| pivot_of_col[c].is_none()).collect();
    let mut assignments: Vec<Option<Assignment>> = vec![None; n];
    for col in 0..n {
        let Some(r) = pivot_of_col[col] else { continue };
        let (coeffs, rhs) = &rows[r];
        let free_part: Vec<(usize, BigRational)> = free
            .iter()
            .filter(|&&fc| !coeffs[fc].is_zero())
            .map(|&fc| (fc, -coeffs[fc].clone()))
            .collect();
        assignments[col] = Some(Assignment { rhs: rhs.clone(), free_part });
    }

    Ok(Solution { rank: next_row, free, assignments })
}
