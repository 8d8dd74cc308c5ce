//! JSON automaton files and word literals.
//!
//! ```json
//! {
//!   "alphabet": ["a", "b"],
//!   "states": ["p", "q"],
//!   "initial": ["p"],
//!   "accepting": ["q"],
//!   "transitions": [["p", "a", "q"], ["q", "b", "q"]]
//! }
//! ```

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Deserialize;

use crate::automaton::Automaton;
use crate::error::{Error, Result};
use crate::word::Word;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAutomaton {
    alphabet: Vec<String>,
    states: Vec<String>,
    initial: Vec<String>,
    accepting: Vec<String>,
    transitions: Vec<(String, String, String)>,
}

pub fn parse_automaton(text: &str) -> Result<Automaton> {
    let raw: RawAutomaton = serde_json::from_str(text).map_err(|e| {
        Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column()))
    })?;
    let state_ix: HashMap<&str, usize> = raw
        .states
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_str(), i))
        .collect();
    let sym_ix: HashMap<&str, usize> = raw
        .alphabet
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_str(), i))
        .collect();
    let lookup = |name: &str, field: &str| {
        state_ix
            .get(name)
            .copied()
            .ok_or_else(|| Error::Invalid(format!("{field} references undeclared state {name:?}")))
    };
    let initial = raw
        .initial
        .iter()
        .map(|s| lookup(s, "initial"))
        .collect::<Result<Vec<_>>>()?;
    let accepting = raw
        .accepting
        .iter()
        .map(|s| lookup(s, "accepting"))
        .collect::<Result<Vec<_>>>()?;
    let mut delta = vec![vec![Vec::new(); raw.alphabet.len()]; raw.states.len()];
    for (i, (src, sym, dst)) in raw.transitions.iter().enumerate() {
        let field = format!("transitions[{i}]");
        let p = lookup(src, &field)?;
        let q = lookup(dst, &field)?;
        let a = *sym_ix.get(sym.as_str()).ok_or_else(|| {
            Error::Invalid(format!("{field} uses undeclared symbol {sym:?}"))
        })?;
        delta[p][a].push(q);
    }
    Automaton::from_parts(raw.alphabet, raw.states, initial, accepting, delta)
}

/// Canonical text form: one transition per line, sorted by source, symbol
/// and target index.
pub fn serialize_automaton(a: &Automaton) -> String {
    let list = |items: &mut dyn Iterator<Item = &str>| {
        let quoted: Vec<String> = items.map(quote).collect();
        format!("[{}]", quoted.join(", "))
    };
    let names = a.states();
    let sigma = a.alphabet();
    let mut out = String::from("{\n");
    let _ = writeln!(out, "  \"alphabet\": {},", list(&mut sigma.iter().map(String::as_str)));
    let _ = writeln!(out, "  \"states\": {},", list(&mut names.iter().map(String::as_str)));
    let _ = writeln!(
        out,
        "  \"initial\": {},",
        list(&mut a.initial().iter().map(|&q| names[q].as_str()))
    );
    let _ = writeln!(
        out,
        "  \"accepting\": {},",
        list(&mut a.accepting().map(|q| names[q].as_str()))
    );
    let triples: Vec<String> = a
        .transitions()
        .map(|(p, s, q)| format!("    [{}, {}, {}]", quote(&names[p]), quote(&sigma[s]), quote(&names[q])))
        .collect();
    if triples.is_empty() {
        out.push_str("  \"transitions\": []\n");
    } else {
        let _ = writeln!(out, "  \"transitions\": [\n{}\n  ]", triples.join(",\n"));
    }
    out.push_str("}\n");
    out
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

/// Reads a word written either as a JSON list of tokens or as a bare
/// string.
///
/// A bare string containing whitespace is split on it. Otherwise it is split
/// into characters, which requires every alphabet token to be one character
/// long. The empty string and `ε` denote the empty word.
pub fn parse_word(text: &str, alphabet: &[String]) -> Result<Word> {
    let text = text.trim();
    let tokens: Vec<String> = if text.starts_with('[') {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("word literal: {e}")))?
    } else if text.is_empty() || text == "ε" {
        Vec::new()
    } else if text.contains(char::is_whitespace) {
        text.split_whitespace().map(str::to_string).collect()
    } else if alphabet.iter().all(|t| t.chars().count() == 1) {
        text.chars().map(String::from).collect()
    } else if alphabet.iter().any(|t| t == text) {
        vec![text.to_string()]
    } else {
        return Err(Error::Parse(format!(
            "cannot split {text:?}: alphabet has multi-character tokens, use a JSON list"
        )));
    };
    tokens
        .iter()
        .map(|t| {
            alphabet
                .iter()
                .position(|s| s == t)
                .ok_or_else(|| Error::UnknownSymbol(t.clone()))
        })
        .collect()
}

/// JSON list form of a word.
pub fn word_to_json(w: &Word, alphabet: &[String]) -> serde_json::Value {
    serde_json::Value::Array(
        w.tokens(alphabet)
            .into_iter()
            .map(|t| serde_json::Value::String(t.to_string()))
            .collect(),
    )
}
