//! The reduction pipeline: any admissible `T(m,k,n)` to a canonical
//! combination over the weight-`N` generating set.
//!
//! Per weight the steps are:
//! 1. return a catalogued closed form when one exists;
//! 2. otherwise expand over the depth-reduced sums `T(i,0,N-i)` (Huard);
//! 3. assemble the weight-global relation system — Huard expansions of
//!    `T(m',k',0) = zeta(m')zeta(k')`, Euler relations, the Granville sum —
//!    substitute known closed forms, and solve exactly;
//! 4. read every `T(i,0,N-i)` off the solved table, the free unknowns being
//!    exactly the basis sums `T(N-2r,0,2r)`, `r <= floor((N-2)/6)`;
//! 5. expose the rewriting of basis sums in terms of `Ystar` integrals and
//!    odd zeta products ([`basis_in_ystar`]).
//!
//! The solved table is computed once per weight and memoized; concurrent
//! first access may recompute, which is idempotent.

use crate::catalog::{
    euler_relation, granville_relation, huard_expand, is_admissible, known_closed_form,
    zeta_product, TornheimIndex,
};
use crate::combo::SymbolicCombo;
use crate::linsys::{solve_exact, LinearSystem};
use crate::rational::{big_binomial, int, ratio, BigRational};
use crate::symbol::ZetaSymbol;
use crate::CoreError;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// The spanning set for Tornheim sums of one weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratingSet {
    pub weight: u32,
    /// `zeta(N)` and the products `zeta(j)zeta(N-j)` that can appear.
    pub zeta_atoms: Vec<ZetaSymbol>,
    /// `T(N-2r,0,2r)` for `r = 1..floor((N-2)/6)`; empty for odd `N` and
    /// for `N <= 7`.
    pub basis_sums: Vec<ZetaSymbol>,
    /// `zeta(N-1)`, which appears only in the reduction of `T(0,0,N)`.
    pub trailing_zeta: ZetaSymbol,
}

/// Number of basis sums at weight `N`: `floor((N-2)/6)` for even `N >= 8`,
/// zero otherwise.
pub fn basis_count(weight: u32) -> u32 {
    if weight >= 8 && weight % 2 == 0 {
        (weight - 2) / 6
    } else {
        0
    }
}

/// First indices `i` of the expected free basis sums `T(i,0,N-i)`,
/// ascending.
fn expected_basis_indices(weight: u32) -> Vec<u32> {
    (1..=basis_count(weight)).rev().map(|r| weight - 2 * r).collect()
}

/// The generating set at weight `N >= 3`.
pub fn generating_set(weight: u32) -> Result<GeneratingSet, CoreError> {
    if weight < 3 {
        return Err(CoreError::OutOfRange(format!("weight {weight} < 3")));
    }
    let mut zeta_atoms = vec![ZetaSymbol::Zeta(weight)];
    if weight % 2 == 0 {
        let jmax = 2 * ((weight - 1) / 4) + 1;
        for j in (3..=jmax).step_by(2) {
            zeta_atoms.push(ZetaSymbol::ZetaProd(j, weight - j));
        }
    } else {
        for j in 1..=(weight - 2) / 2 {
            let (a, b) = (2 * j, weight - 2 * j);
            zeta_atoms.push(ZetaSymbol::ZetaProd(a.min(b), a.max(b)));
        }
    }
    let basis_sums = (1..=basis_count(weight))
        .map(|r| ZetaSymbol::TBasis(weight - 2 * r, 2 * r))
        .collect();
    Ok(GeneratingSet {
        weight,
        zeta_atoms,
        basis_sums,
        trailing_zeta: ZetaSymbol::Zeta(weight - 1),
    })
}

/// Solved evaluations of every `T(i,0,N-i)`, `1 <= i <= N-2`, at one weight.
#[derive(Debug)]
struct WeightTable {
    /// `by_index[i-1]` is the canonical combo for `T(i,0,N-i)`.
    by_index: Vec<SymbolicCombo>,
}

fn weight_table_cache() -> &'static Mutex<HashMap<u32, Arc<WeightTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<WeightTable>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn solved_weight_table(weight: u32) -> Result<Arc<WeightTable>, CoreError> {
    if let Some(t) = weight_table_cache().lock().expect("table cache").get(&weight) {
        return Ok(t.clone());
    }
    let table = Arc::new(build_weight_table(weight)?);
    weight_table_cache()
        .lock()
        .expect("table cache")
        .entry(weight)
        .or_insert_with(|| table.clone());
    Ok(table)
}

fn build_weight_table(weight: u32) -> Result<WeightTable, CoreError> {
    debug_assert!(weight >= 3);
    let mut by_index: Vec<Option<SymbolicCombo>> = vec![None; (weight - 2) as usize];
    let mut unknowns: Vec<u32> = Vec::new();
    for i in 1..=weight - 2 {
        match known_closed_form(i, 0, weight - i)? {
            Some(c) => by_index[(i - 1) as usize] = Some(c),
            None => unknowns.push(i),
        }
    }

    if !unknowns.is_empty() {
        // relation rows: (a) Huard expansions of T(m',k',0) = zeta(m')zeta(k'),
        // (b) Euler, (c) Granville
        let mut relations = Vec::new();
        for mp in 2..=weight - 2 {
            let kp = weight - mp;
            if mp >= kp && kp >= 2 {
                relations.push(crate::catalog::Relation {
                    weight,
                    lhs: huard_expand(mp, kp, 0)?,
                    rhs: zeta_product(mp, kp),
                });
            }
        }
        for mp in 2..=weight - 2 {
            for np in 2..mp {
                if mp + np == weight {
                    relations.push(euler_relation(mp, np)?);
                }
            }
        }
        relations.push(granville_relation(weight)?);

        // substitute known closed forms, keep unknown columns ascending by i
        let col_of: HashMap<u32, usize> =
            unknowns.iter().enumerate().map(|(c, &i)| (i, c)).collect();
        let mut sys = LinearSystem::new(unknowns.len());
        for rel in relations {
            let mut coeffs = vec![BigRational::from_integer(0.into()); unknowns.len()];
            let mut rhs = rel.rhs.clone();
            for (i, c) in rel.lhs {
                match col_of.get(&i) {
                    Some(&col) => coeffs[col] += c,
                    None => {
                        let known = by_index[(i - 1) as usize]
                            .as_ref()
                            .expect("index without column is known");
                        rhs.add_scaled(known, &-c);
                    }
                }
            }
            sys.push_row(coeffs, rhs);
        }

        let sol = solve_exact(&sys)?;
        let free_indices: Vec<u32> = sol.free.iter().map(|&c| unknowns[c]).collect();
        let expected = expected_basis_indices(weight);
        if free_indices != expected {
            return Err(CoreError::BasisMismatch {
                weight,
                found: free_indices,
                expected,
            });
        }

        for (col, &i) in unknowns.iter().enumerate() {
            let combo = match &sol.assignments[col] {
                None => {
                    // free unknown: it is its own basis sum
                    SymbolicCombo::from_term(ZetaSymbol::TBasis(i, weight - i), int(1))?
                }
                Some(a) => {
                    let mut c = a.rhs.clone();
                    for (fc, q) in &a.free_part {
                        let fi = unknowns[*fc];
                        c.add_term(ZetaSymbol::TBasis(fi, weight - fi), q.clone())?;
                    }
                    c
                }
            };
            by_index[(i - 1) as usize] = Some(combo);
        }
    }

    Ok(WeightTable {
        by_index: by_index.into_iter().map(|c| c.expect("all indices filled")).collect(),
    })
}

/// One reduced Tornheim sum.
#[derive(Debug, Clone)]
pub struct ReductionResult {
    pub index: TornheimIndex,
    pub combo: SymbolicCombo,
    /// Names of the rules applied, outermost first.
    pub provenance: Vec<&'static str>,
}

/// Reduce an admissible `T(m,k,n)` to its canonical combination over the
/// weight-`N` generating set.
pub fn reduce(m: u32, k: u32, n: u32) -> Result<ReductionResult, CoreError> {
    let index = TornheimIndex::new(m, k, n)?;
    if let Some(combo) = known_closed_form(m, k, n)? {
        return Ok(ReductionResult { index, combo, provenance: vec!["closed-form"] });
    }
    let weight = index.weight();
    let expansion = huard_expand(m, k, n)?;
    let table = solved_weight_table(weight)?;
    let mut combo = SymbolicCombo::zero();
    for (i, c) in &expansion {
        combo.add_scaled(&table.by_index[(*i - 1) as usize], c);
    }
    let provenance = if k == 0 {
        vec!["weight-table"]
    } else {
        vec!["huard-expansion", "weight-table"]
    };
    Ok(ReductionResult { index, combo, provenance })
}

/// Rewrite the basis sum `T(N-2r,0,2r)` in terms of zeta atoms, odd zeta
/// products and `Ystar(2r, N-2r)`:
///
/// ```text
/// T(N-2r,0,2r) = zeta(2r)zeta(N-2r) - zeta(N)/2
///                - sum_{k=1}^{N/2-2} C(N-2-2k, 2r-1) zeta(2k+1) zeta(N-1-2k)
///                + (-1)^{N/2-1} Ystar(2r, N-2r)
/// ```
///
/// with the even product canonicalized to a multiple of `zeta(N)`.
pub fn basis_in_ystar(weight: u32, r: u32) -> Result<SymbolicCombo, CoreError> {
    if weight % 2 != 0 || weight < 8 {
        return Err(CoreError::OutOfRange(format!(
            "basis sums exist only at even weight >= 8, got {weight}"
        )));
    }
    if r < 1 || r > basis_count(weight) {
        return Err(CoreError::OutOfRange(format!(
            "basis index r = {r} outside 1..={} at weight {weight}",
            basis_count(weight)
        )));
    }
    let (m, n) = (weight - 2 * r, 2 * r);
    let mut combo = zeta_product(m, n);
    combo.add_term(ZetaSymbol::Zeta(weight), ratio(-1, 2))?;
    for k in 1..=weight / 2 - 2 {
        let binom = big_binomial(weight - 2 - 2 * k, n - 1);
        let (a, b) = (2 * k + 1, weight - 1 - 2 * k);
        combo.add_term(
            ZetaSymbol::ZetaProd(a.min(b), a.max(b)),
            -BigRational::from_integer(binom),
        )?;
    }
    let sign = if (weight / 2) % 2 == 0 { int(-1) } else { int(1) };
    combo.add_term(ZetaSymbol::YStar(n, m), sign)?;
    Ok(combo)
}

/// Replace every `TBasis(m,n)` atom by its `Ystar` rewriting.
pub fn substitute_basis(combo: &SymbolicCombo) -> Result<SymbolicCombo, CoreError> {
    let mut out = SymbolicCombo::zero();
    for (sym, c) in combo.iter() {
        match *sym {
            ZetaSymbol::TBasis(m, n) => {
                let repl = basis_in_ystar(m + n, n / 2)?;
                out.add_scaled(&repl, c);
            }
            other => out.add_term(other, c.clone())?,
        }
    }
    Ok(out)
}

/// The full table at one weight: a [`ReductionResult`] per admissible triple
/// with `m >= k`, ordered lexicographically by `(m, k)`. Mirroring the
/// systematic lists, `T(0,0,N)` rows are included only for `N <= 5` (they
/// are the only rows carrying `zeta(N-1)`).
pub fn weight_table(weight: u32) -> Result<Vec<ReductionResult>, CoreError> {
    if weight < 3 {
        return Err(CoreError::OutOfRange(format!("weight {weight} < 3")));
    }
    let mut rows = Vec::new();
    for m in 0..=weight {
        for k in 0..=m.min(weight - m) {
            let n = weight - m - k;
            if !is_admissible(m, k, n) {
                continue;
            }
            if m == 0 && k == 0 && weight >= 6 {
                continue;
            }
            rows.push(reduce(m, k, n)?);
        }
    }
    Ok(rows)
}
