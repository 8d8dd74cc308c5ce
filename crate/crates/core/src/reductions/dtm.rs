//! Space-bounded deterministic Turing machines and their reduction to
//! binary poNFA universality.
//!
//! A run is written `# c0 # c1 # ... # cm #` where each configuration is a
//! block of `S` cells over `Δ = T × (Q ∪ {ε})`. Every symbol of `Δ ∪ {#}`
//! becomes the binary word `0 0 1 b1 1 b2 1 ... bK 1`, so a well-formed
//! encoding has `00` only at block starts. The automaton accepts every
//! binary word except the encoding of an accepting run, and so is universal
//! iff the machine rejects its input.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::Deserialize;

use super::net::{Bits, Net};
use crate::automaton::Automaton;
use crate::error::{Error, Result};
use crate::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Deserialize)]
pub enum Move {
    L,
    R,
    S,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dtm {
    pub states: Vec<String>,
    pub tape_alphabet: Vec<String>,
    /// Indices into `tape_alphabet`.
    pub input_alphabet: Vec<usize>,
    pub blank: usize,
    pub initial: usize,
    pub accepting: usize,
    /// `(state, tape symbol) -> (state, tape symbol, move)`, defined for
    /// every non-accepting state.
    pub transitions: HashMap<(usize, usize), (usize, usize, Move)>,
    pub space_bound: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDtm {
    states: Vec<String>,
    tape_alphabet: Vec<String>,
    input_alphabet: Vec<String>,
    blank: String,
    initial: String,
    accepting: String,
    transitions: Vec<(String, String, String, String, Move)>,
    space_bound: usize,
}

fn find(list: &[String], x: &str, what: &str) -> Result<usize> {
    list.iter()
        .position(|s| s == x)
        .ok_or_else(|| Error::Machine(format!("unknown {what} {x:?}")))
}

impl Dtm {
    pub fn parse(text: &str) -> Result<Dtm> {
        let raw: RawDtm = serde_json::from_str(text).map_err(|e| {
            Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column()))
        })?;
        let mut transitions = HashMap::new();
        for (q, t, q2, t2, mv) in &raw.transitions {
            let key = (find(&raw.states, q, "state")?, find(&raw.tape_alphabet, t, "tape symbol")?);
            let val = (
                find(&raw.states, q2, "state")?,
                find(&raw.tape_alphabet, t2, "tape symbol")?,
                *mv,
            );
            if transitions.insert(key, val).is_some() {
                return Err(Error::Machine(format!("two transitions for ({q}, {t})")));
            }
        }
        let m = Dtm {
            input_alphabet: raw
                .input_alphabet
                .iter()
                .map(|s| find(&raw.tape_alphabet, s, "input symbol"))
                .collect::<Result<_>>()?,
            blank: find(&raw.tape_alphabet, &raw.blank, "blank")?,
            initial: find(&raw.states, &raw.initial, "state")?,
            accepting: find(&raw.states, &raw.accepting, "state")?,
            states: raw.states,
            tape_alphabet: raw.tape_alphabet,
            transitions,
            space_bound: raw.space_bound,
        };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Machine(msg));
        if self.space_bound == 0 {
            return bad("space bound must be positive".into());
        }
        if self.initial == self.accepting {
            return bad("initial and accepting state coincide".into());
        }
        if self.input_alphabet.contains(&self.blank) {
            return bad("blank is an input symbol".into());
        }
        let mut seen = HashSet::new();
        for s in &self.tape_alphabet {
            if !seen.insert(s) {
                return bad(format!("duplicate tape symbol {s:?}"));
            }
        }
        for q in 0..self.states.len() {
            for t in 0..self.tape_alphabet.len() {
                let has = self.transitions.contains_key(&(q, t));
                if q == self.accepting && has {
                    return bad(format!("accepting state {} has a transition", self.states[q]));
                }
                if q != self.accepting && !has {
                    return bad(format!(
                        "no transition for ({}, {})",
                        self.states[q], self.tape_alphabet[t]
                    ));
                }
            }
        }
        Ok(())
    }

    /// Reads an input word: tokens separated by whitespace, or single
    /// characters when every tape symbol is one character long.
    pub fn parse_input(&self, text: &str) -> Result<Vec<usize>> {
        let input: Vec<String> = self.input_alphabet.iter().map(|&t| self.tape_alphabet[t].clone()).collect();
        let w = crate::format::parse_word(text, &input)?;
        Ok(w.iter().map(|&i| self.input_alphabet[i]).collect())
    }

    fn check_input(&self, x: &[usize]) -> Result<()> {
        if x.len() > self.space_bound {
            return Err(Error::Machine(format!(
                "input of length {} exceeds the space bound {}",
                x.len(),
                self.space_bound
            )));
        }
        if let Some(&t) = x.iter().find(|t| !self.input_alphabet.contains(t)) {
            return Err(Error::Machine(format!("{t} is not an input symbol")));
        }
        Ok(())
    }
}

/// Symbols of `Δ ∪ {#}`, in code order: tape symbols without head, then
/// `(t, q)` grouped by state, then `#`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cell {
    Tape(usize),
    Head(usize, usize),
    Hash,
}

pub struct Encoding {
    tapes: usize,
    states: usize,
    pub symbol_count: usize,
    pub k: usize,
    pub block: usize,
}

impl Encoding {
    pub fn new(m: &Dtm) -> Self {
        let tapes = m.tape_alphabet.len();
        let states = m.states.len();
        let symbol_count = tapes * (states + 1) + 1;
        let k = (usize::BITS - (symbol_count - 1).leading_zeros()) as usize;
        Encoding {
            tapes,
            states,
            symbol_count,
            k: k.max(1),
            block: 2 * k.max(1) + 3,
        }
    }

    pub fn index(&self, c: Cell) -> usize {
        match c {
            Cell::Tape(t) => t,
            Cell::Head(t, q) => self.tapes + q * self.tapes + t,
            Cell::Hash => self.tapes * (self.states + 1),
        }
    }

    pub fn cells(&self) -> Vec<Cell> {
        let mut out: Vec<Cell> = (0..self.tapes).map(Cell::Tape).collect();
        for q in 0..self.states {
            out.extend((0..self.tapes).map(|t| Cell::Head(t, q)));
        }
        out.push(Cell::Hash);
        out
    }

    pub fn enc(&self, c: Cell) -> Bits {
        let code = self.index(c);
        let mut bits = vec![0, 0, 1];
        for i in (0..self.k).rev() {
            bits.push(code >> i & 1);
            bits.push(1);
        }
        bits
    }

    pub fn enc_word(&self, cells: &[Cell]) -> Bits {
        cells.iter().flat_map(|&c| self.enc(c)).collect()
    }
}

pub type Config = Vec<Cell>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RunOutcome {
    Accepted(Vec<Config>),
    Rejected,
}

pub fn initial_config(m: &Dtm, x: &[usize]) -> Config {
    (0..m.space_bound)
        .map(|i| {
            let t = x.get(i).copied().unwrap_or(m.blank);
            if i == 0 {
                Cell::Head(t, m.initial)
            } else {
                Cell::Tape(t)
            }
        })
        .collect()
}

/// Runs the machine within its space bound. A repeated configuration means
/// the machine loops and rejects.
pub fn simulate(m: &Dtm, x: &[usize]) -> Result<RunOutcome> {
    m.check_input(x)?;
    let s = m.space_bound;
    let budget = (m.tape_alphabet.len() as u128 * (m.states.len() as u128 + 1))
        .checked_pow(s as u32)
        .and_then(|v| v.checked_mul(s as u128 * m.states.len() as u128))
        .unwrap_or(u128::MAX);
    let mut tape: Vec<usize> = (0..s).map(|i| x.get(i).copied().unwrap_or(m.blank)).collect();
    let (mut q, mut head) = (m.initial, 0usize);
    let mut seen = HashSet::new();
    let config = |tape: &[usize], q: usize, head: usize| -> Config {
        tape.iter()
            .enumerate()
            .map(|(i, &t)| if i == head { Cell::Head(t, q) } else { Cell::Tape(t) })
            .collect()
    };
    let mut run = vec![config(&tape, q, head)];
    let mut steps: u128 = 0;
    loop {
        if q == m.accepting {
            return Ok(RunOutcome::Accepted(run));
        }
        if !seen.insert((tape.clone(), q, head)) {
            return Ok(RunOutcome::Rejected);
        }
        steps += 1;
        if steps > budget {
            return Err(Error::StepBudget { budget });
        }
        let &(q2, t2, mv) = m
            .transitions
            .get(&(q, tape[head]))
            .ok_or_else(|| Error::Machine("missing transition".into()))?;
        tape[head] = t2;
        q = q2;
        head = match mv {
            Move::S => head,
            Move::L => head.checked_sub(1).ok_or(Error::HeadOutOfBounds { step: run.len() })?,
            Move::R if head + 1 < s => head + 1,
            Move::R => return Err(Error::HeadOutOfBounds { step: run.len() }),
        };
        run.push(config(&tape, q, head));
    }
}

/// Binary encoding of the accepting run, or `None` when the machine
/// rejects.
pub fn encode_run(m: &Dtm, x: &[usize]) -> Result<Option<Word>> {
    let run = match simulate(m, x)? {
        RunOutcome::Accepted(run) => run,
        RunOutcome::Rejected => return Ok(None),
    };
    let enc = Encoding::new(m);
    let mut cells = vec![Cell::Hash];
    for c in &run {
        cells.extend_from_slice(c);
        cells.push(Cell::Hash);
    }
    Ok(Some(Word::new(enc.enc_word(&cells))))
}

/// The cell required below `mid` in the next configuration, or `None` when
/// no symbol is allowed there (the run should have stopped).
pub fn successor(m: &Dtm, left: Cell, mid: Cell, right: Cell) -> Option<Cell> {
    let moving_in = |c: Cell, dir: Move| match c {
        Cell::Head(t, q) if q != m.accepting => {
            let &(q2, _, mv) = m.transitions.get(&(q, t))?;
            (mv == dir).then_some(q2)
        }
        _ => None,
    };
    match mid {
        Cell::Hash => Some(Cell::Hash),
        Cell::Head(_, q) if q == m.accepting => None,
        Cell::Head(t, q) => {
            let &(q2, t2, mv) = m.transitions.get(&(q, t))?;
            Some(if mv == Move::S { Cell::Head(t2, q2) } else { Cell::Tape(t2) })
        }
        Cell::Tape(t) => match moving_in(left, Move::R).or_else(|| moving_in(right, Move::L)) {
            Some(q2) => Some(Cell::Head(t, q2)),
            None => Some(Cell::Tape(t)),
        },
    }
}

/// Binary poNFA accepting every word except the encoding of an accepting
/// run of `m` on `x`.
pub fn dtm_to_ponfa(m: &Dtm, x: &[usize]) -> Result<Automaton> {
    m.check_input(x)?;
    // leaving the tape has no encoding; reject such inputs up front
    simulate(m, x)?;
    let enc = Encoding::new(m);
    let s = m.space_bound;
    let l = enc.block;
    let cells = enc.cells();
    let codes: Vec<Bits> = cells.iter().map(|&c| enc.enc(c)).collect();

    let mut net = Net::new();
    let g = net.state("g", false);
    let a0 = net.state("a", true);
    net.any(g, g);
    net.initial(g);
    net.initial(a0);
    let u = net.universal("u");

    // malformed encodings: 1Σ*, 01Σ*, Σ*0, Σ*Ē Σ*, Σ*E(1+01)Σ*, Σ*00Σ^(1..L-3)
    net.edge(a0, 1, u);
    let z = net.state("m", false);
    net.edge(a0, 0, z);
    net.edge(z, 1, u);
    let last_zero = net.state("m", true);
    net.edge(g, 0, last_zero);
    let tails: Vec<Bits> = codes.iter().map(|c| c[2..].to_vec()).collect();
    let dz = net.path("m", g, &[0, 0], None);
    net.complement_within("m", dz, &tails, l - 2, u);
    let after_code = net.state("m", false);
    let all_codes: Vec<(Bits, usize)> = codes.iter().map(|c| (c.clone(), after_code)).collect();
    net.trie("m", g, &all_codes);
    net.edge(after_code, 1, u);
    let after_zero = net.state("m", false);
    net.edge(after_code, 0, after_zero);
    net.edge(after_zero, 1, u);
    let dz2 = net.path("m", g, &[0, 0], None);
    let short = net.chain("m", dz2, l - 3);
    for &q in &short[1..] {
        net.accept(q);
    }

    // wrong start: every word shorter than the initial block, or a wrong
    // symbol at one of its positions
    let mut start = vec![Cell::Hash];
    start.extend(initial_config(m, x));
    start.push(Cell::Hash);
    let prefix = net.chain("b", a0, l * (s + 2) - 1);
    for &q in &prefix {
        net.accept(q);
    }
    for (j, &c) in start.iter().enumerate() {
        net.complement_within("b", prefix[j * l], &[enc.enc(c)], l, u);
    }

    // wrong transitions: a triple followed, one block later, by a symbol
    // other than its successor
    let mut wrong_after: BTreeMap<Option<Cell>, usize> = BTreeMap::new();
    let mut triples = Vec::new();
    for &left in &cells {
        for &mid in &cells {
            for &right in &cells {
                let f = successor(m, left, mid, right);
                let entry = match wrong_after.get(&f) {
                    Some(&q) => q,
                    None => {
                        let p = net.state("t", false);
                        let gap = net.chain("t", p, l * (s - 1));
                        let wrong: Vec<(Bits, usize)> = cells
                            .iter()
                            .filter(|&&c| Some(c) != f)
                            .map(|&c| (enc.enc(c), u))
                            .collect();
                        net.trie("t", *gap.last().unwrap(), &wrong);
                        wrong_after.insert(f, p);
                        p
                    }
                };
                triples.push((enc.enc_word(&[left, mid, right]), entry));
            }
        }
    }
    net.trie("t", g, &triples);

    // premature or non-accepting end
    let hash = enc.enc(Cell::Hash);
    let after_hash = net.path("e", g, &hash, None);
    let incomplete = net.chain("e", after_hash, l * s);
    for j in 1..=s {
        net.accept(incomplete[j * l]);
    }
    let not_final = net.state("e", false);
    let heads: Vec<(Bits, usize)> = cells
        .iter()
        .filter(|c| matches!(c, Cell::Head(_, q) if *q != m.accepting))
        .map(|&c| (enc.enc(c), not_final))
        .collect();
    net.trie("e", g, &heads);
    let rest = net.chain("e", not_final, l * (s - 1));
    let closing = net.state("e", true);
    for j in 0..s {
        net.path("e", rest[j * l], &hash, Some(closing));
    }

    let a = net.build()?;
    if !a.is_partially_ordered() {
        return Err(Error::Invalid("reduction produced a cycle".into()));
    }
    Ok(a)
}
