//! JSON rendering and parsing of reductions.
//!
//! Schema: `{"index":[m,k,n], "weight":N, "terms":[{"symbol":"zeta(8)",
//! "num":2, "den":3}, ...]}` with terms in canonical symbol order and
//! `num/den` in lowest terms. Emission is hand-rolled so the byte layout is
//! a deterministic function of the canonical form; parsing round-trips it.

use num_bigint::BigInt;
use num_traits::Signed;
use std::fmt::Write;
use thiserror::Error;
use tornheim_core::rational::BigRational;
use tornheim_core::{ReductionResult, SymbolicCombo, TornheimIndex, ZetaSymbol};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed reduction JSON: {0}")]
    Malformed(String),
}

/// Render one reduction.
pub fn reduction_to_json(r: &ReductionResult) -> String {
    let mut out = String::new();
    write!(
        out,
        "{{\"index\":[{},{},{}],\"weight\":{},\"terms\":[",
        r.index.m,
        r.index.k,
        r.index.n,
        r.index.weight()
    )
    .unwrap();
    for (i, (sym, c)) in r.combo.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        write!(out, "{{\"symbol\":\"{}\",\"num\":{},\"den\":{}}}", sym, c.numer(), c.denom())
            .unwrap();
    }
    out.push_str("]}");
    out
}

/// Render a whole weight table.
pub fn table_to_json(rows: &[ReductionResult]) -> String {
    let mut out = String::from("[");
    for (i, r) in rows.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&reduction_to_json(r));
    }
    out.push(']');
    out
}

/// Parse a reduction back from JSON (numbers of any size accepted).
pub fn reduction_from_json(s: &str) -> Result<ReductionResult, JsonError> {
    let v: serde_json::Value =
        serde_json::from_str(s).map_err(|e| JsonError::Malformed(e.to_string()))?;
    let idx = v["index"]
        .as_array()
        .ok_or_else(|| JsonError::Malformed("missing index".into()))?;
    if idx.len() != 3 {
        return Err(JsonError::Malformed("index must have three entries".into()));
    }
    let get_u32 = |x: &serde_json::Value| -> Result<u32, JsonError> {
        x.as_u64()
            .and_then(|v| u32::try_from(v).ok())
            .ok_or_else(|| JsonError::Malformed("bad index entry".into()))
    };
    let (m, k, n) = (get_u32(&idx[0])?, get_u32(&idx[1])?, get_u32(&idx[2])?);
    let index = TornheimIndex::new(m, k, n)
        .map_err(|e| JsonError::Malformed(e.to_string()))?;
    let mut combo = SymbolicCombo::zero();
    let terms = v["terms"]
        .as_array()
        .ok_or_else(|| JsonError::Malformed("missing terms".into()))?;
    for t in terms {
        let sym: ZetaSymbol = t["symbol"]
            .as_str()
            .ok_or_else(|| JsonError::Malformed("missing symbol".into()))?
            .parse()
            .map_err(|e: tornheim_core::CoreError| JsonError::Malformed(e.to_string()))?;
        let big = |x: &serde_json::Value, what: &str| -> Result<BigInt, JsonError> {
            let raw = match x {
                serde_json::Value::Number(n) => n.to_string(),
                _ => return Err(JsonError::Malformed(format!("missing {what}"))),
            };
            raw.parse::<BigInt>().map_err(|e| JsonError::Malformed(e.to_string()))
        };
        let num = big(&t["num"], "num")?;
        let den = big(&t["den"], "den")?;
        if den.is_negative() || den == BigInt::from(0) {
            return Err(JsonError::Malformed("denominator must be positive".into()));
        }
        combo
            .add_term(sym, BigRational::new(num, den))
            .map_err(|e| JsonError::Malformed(e.to_string()))?;
    }
    Ok(ReductionResult { index, combo, provenance: vec!["parsed"] })
}
