//! CNF formulas and their reduction to rpoNFA universality.
//!
//! For a formula over `x1..xn` the automaton accepts every binary word whose
//! length differs from `n`, plus every length-`n` word that falsifies some
//! clause (bit `1` reads as true). It is universal exactly when the formula
//! is unsatisfiable, and every rejected word is a satisfying assignment.

use std::collections::BTreeSet;

use crate::automaton::Automaton;
use crate::error::{Error, Result};
use crate::word::Word;

/// A literal is a nonzero integer: `v` for `x_v`, `-v` for its negation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    variable_count: usize,
    clauses: Vec<BTreeSet<i32>>,
}

impl CnfFormula {
    pub fn new(variable_count: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        if variable_count == 0 {
            return Err(Error::Formula("formula has no variables".into()));
        }
        if clauses.is_empty() {
            return Err(Error::Formula("formula has no clauses".into()));
        }
        let mut out = Vec::with_capacity(clauses.len());
        for (i, clause) in clauses.into_iter().enumerate() {
            let set: BTreeSet<i32> = clause.into_iter().collect();
            for &lit in &set {
                if lit == 0 || lit.unsigned_abs() as usize > variable_count {
                    return Err(Error::Formula(format!(
                        "clause {} has literal {lit} outside 1..={variable_count}",
                        i + 1
                    )));
                }
                if set.contains(&-lit) {
                    return Err(Error::Formula(format!(
                        "clause {} contains both x{1} and -x{1}",
                        i + 1,
                        lit.abs()
                    )));
                }
            }
            out.push(set);
        }
        Ok(CnfFormula {
            variable_count,
            clauses: out,
        })
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn clauses(&self) -> &[BTreeSet<i32>] {
        &self.clauses
    }

    /// `assignment[j]` is the value of `x_{j+1}`.
    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            c.iter().any(|&lit| {
                let v = assignment[lit.unsigned_abs() as usize - 1];
                if lit > 0 {
                    v
                } else {
                    !v
                }
            })
        })
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.variable_count, self.clauses.len());
        for c in &self.clauses {
            for lit in c {
                out.push_str(&lit.to_string());
                out.push(' ');
            }
            out.push_str("0\n");
        }
        out
    }
}

/// Reads DIMACS CNF. Comment lines start with `c`; `%` ends the input.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        let at = |msg: String| Error::Parse(format!("line {}: {msg}", lineno + 1));
        if let Some(rest) = line.strip_prefix('p') {
            if header.is_some() {
                return Err(at("second problem line".into()));
            }
            let fields: Vec<&str> = rest.split_whitespace().collect();
            match fields.as_slice() {
                ["cnf", v, c] => {
                    let v = v.parse().map_err(|_| at(format!("bad variable count {v:?}")))?;
                    let c = c.parse().map_err(|_| at(format!("bad clause count {c:?}")))?;
                    header = Some((v, c));
                }
                _ => return Err(at("expected `p cnf <variables> <clauses>`".into())),
            }
            continue;
        }
        if header.is_none() {
            return Err(at("clause before the problem line".into()));
        }
        for tok in line.split_whitespace() {
            let lit: i32 = tok.parse().map_err(|_| at(format!("bad literal {tok:?}")))?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else {
                current.push(lit);
            }
        }
    }
    if !current.is_empty() {
        clauses.push(current);
    }
    let (vars, declared) = header.ok_or_else(|| Error::Parse("missing problem line".into()))?;
    if declared != clauses.len() {
        log::warn!("header declares {declared} clauses, found {}", clauses.len());
    }
    CnfFormula::new(vars, clauses)
}

pub const MAX_BRUTE_FORCE_VARIABLES: usize = 20;

pub fn sat_brute_force(f: &CnfFormula) -> Result<bool> {
    Ok(satisfying_assignment(f)?.is_some())
}

/// First satisfying assignment in binary counting order (`x1` most
/// significant).
pub fn satisfying_assignment(f: &CnfFormula) -> Result<Option<Vec<bool>>> {
    let n = f.variable_count;
    if n > MAX_BRUTE_FORCE_VARIABLES {
        return Err(Error::Capacity {
            what: "brute-force variables",
            limit: MAX_BRUTE_FORCE_VARIABLES,
        });
    }
    for code in 0u32..(1 << n) {
        let assignment: Vec<bool> = (0..n).map(|j| code >> (n - 1 - j) & 1 == 1).collect();
        if f.satisfied_by(&assignment) {
            return Ok(Some(assignment));
        }
    }
    Ok(None)
}

/// Reads a rejected word back as an assignment.
pub fn decode_assignment(w: &Word) -> Vec<bool> {
    w.iter().map(|&b| b == 1).collect()
}

/// Per-clause pattern: `Some(0)`, `Some(1)` or `None` for "either bit".
pub fn clause_pattern(f: &CnfFormula, clause: usize) -> Vec<Option<usize>> {
    let c = &f.clauses[clause];
    (1..=f.variable_count as i32)
        .map(|v| {
            if c.contains(&v) {
                Some(0)
            } else if c.contains(&-v) {
                Some(1)
            } else {
                None
            }
        })
        .collect()
}

pub fn cnf_to_rponfa(f: &CnfFormula) -> Result<Automaton> {
    let n = f.variable_count;
    let m = f.clauses.len();
    let mut names = vec!["0".to_string()];
    let mut accepting = vec![0];
    let mut delta: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); 2]];
    let mut fresh = |name: String, delta: &mut Vec<Vec<Vec<usize>>>| {
        names.push(name);
        delta.push(vec![Vec::new(); 2]);
        delta.len() - 1
    };
    for i in 0..m {
        let mut prev = 0;
        for (l, bit) in clause_pattern(f, i).into_iter().enumerate() {
            let q = fresh(format!("q{},{}", i + 1, l + 1), &mut delta);
            match bit {
                Some(b) => delta[prev][b].push(q),
                None => {
                    delta[prev][0].push(q);
                    delta[prev][1].push(q);
                }
            }
            prev = q;
        }
        accepting.push(prev);
    }
    let mut prev = 0;
    for l in 1..=n + 1 {
        let q = fresh(format!("alpha{l}"), &mut delta);
        delta[prev][0].push(q);
        delta[prev][1].push(q);
        if l != n {
            accepting.push(q);
        }
        prev = q;
    }
    delta[prev][0].push(prev);
    delta[prev][1].push(prev);
    Automaton::from_parts(vec!["0".into(), "1".into()], names, vec![0], accepting, delta)
}
