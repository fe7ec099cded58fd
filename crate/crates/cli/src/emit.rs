use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::sequences::{SequenceSpec, Term};

/// `"<index> <value>\n"` per term.
pub fn emit_bfile(terms: &[Term]) -> String {
    terms
        .iter()
        .map(|t| format!("{} {}\n", t.index, t.value))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("b-file line {line}: {reason}")]
pub struct BfileError {
    pub line: usize,
    pub reason: String,
}

/// Parses b-file text; `#` comment lines and blank lines are skipped.
pub fn parse_bfile(text: &str) -> Result<Vec<Term>, BfileError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |reason: &str| BfileError {
            line: i + 1,
            reason: reason.to_string(),
        };
        let mut fields = line.split_whitespace();
        let (Some(idx), Some(val), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(err("expected two fields"));
        };
        out.push(Term {
            index: idx.parse().map_err(|_| err("bad index"))?,
            value: val.parse::<BigInt>().map_err(|_| err("bad value"))?,
        });
    }
    Ok(out)
}

/// Values separated by single spaces, newline-terminated.
pub fn emit_plain(terms: &[Term]) -> String {
    let body: Vec<String> = terms.iter().map(|t| t.value.to_string()).collect();
    format!("{}\n", body.join(" "))
}

#[derive(Serialize)]
struct JsonSequence<'a> {
    sequence: &'a str,
    q: u64,
    k: Option<u64>,
    offset: u64,
    oeis: Option<&'a str>,
    values: Vec<String>,
}

/// Compact JSON with a fixed key order; `offset` is the index of the first value.
pub fn emit_json(spec: &SequenceSpec, terms: &[Term]) -> String {
    let offset = terms.first().map_or(spec.min_n as u64, |t| t.index);
    let doc = JsonSequence {
        sequence: spec.name.as_str(),
        q: spec.q.q(),
        k: spec.k,
        offset,
        oeis: spec.oeis_id.as_deref(),
        values: terms.iter().map(|t| t.value.to_string()).collect(),
    };
    serde_json::to_string(&doc).expect("plain data serializes") + "\n"
}
