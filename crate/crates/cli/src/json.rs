//! JSON forms of partitions, expansions and coefficients.

use kgroth::{CoeffPoly, LinComb, Partition};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Serialize)]
struct Term<'a> {
    partition: &'a [usize],
    coeff: String,
}

pub fn partition(la: &Partition) -> Value {
    json!(la.parts())
}

/// `[{"partition": [...], "coeff": "..."}, ...]` in canonical partition order.
pub fn terms(f: &LinComb<Partition>) -> Value {
    let list: Vec<Term> = f
        .iter()
        .map(|(la, c)| Term {
            partition: la.parts(),
            coeff: c.to_string(),
        })
        .collect();
    serde_json::to_value(list).expect("plain data")
}

/// An expansion in a named basis, with the truncation cap when present.
pub fn expansion(basis: &str, f: &LinComb<Partition>, cap: Option<usize>) -> Value {
    let mut out = json!({ "basis": basis, "terms": terms(f) });
    if let Some(cap) = cap {
        out["cap"] = json!(cap);
    }
    out
}

pub fn coeff(c: &CoeffPoly) -> Value {
    json!(c.to_string())
}

/// Compact single-line rendering.
pub fn line(v: &Value) -> String {
    serde_json::to_string(v).expect("plain data")
}
