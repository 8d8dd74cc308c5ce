//! Incremental construction of acyclic binary NFAs with self-loops only on
//! designated states. Fragments grow forward from a frontier of states, so
//! the result stays partially ordered by construction.

use std::collections::HashMap;

use crate::automaton::{Automaton, StateId};
use crate::error::Result;

pub(crate) type Bits = Vec<usize>;

pub(crate) struct Net {
    names: Vec<String>,
    accepting: Vec<bool>,
    delta: Vec<[Vec<StateId>; 2]>,
    initial: Vec<StateId>,
}

impl Net {
    pub fn new() -> Self {
        Net {
            names: Vec::new(),
            accepting: Vec::new(),
            delta: Vec::new(),
            initial: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn state(&mut self, tag: &str, accepting: bool) -> StateId {
        let id = self.names.len();
        self.names.push(format!("{tag}{id}"));
        self.accepting.push(accepting);
        self.delta.push([Vec::new(), Vec::new()]);
        id
    }

    pub fn initial(&mut self, q: StateId) {
        self.initial.push(q);
    }

    pub fn accept(&mut self, q: StateId) {
        self.accepting[q] = true;
    }

    pub fn edge(&mut self, p: StateId, bit: usize, q: StateId) {
        if !self.delta[p][bit].contains(&q) {
            self.delta[p][bit].push(q);
        }
    }

    pub fn any(&mut self, p: StateId, q: StateId) {
        self.edge(p, 0, q);
        self.edge(p, 1, q);
    }

    /// Accepting state looping on both bits.
    pub fn universal(&mut self, tag: &str) -> StateId {
        let u = self.state(tag, true);
        self.any(u, u);
        u
    }

    /// `from -Σ-> c1 -Σ-> ... -Σ-> c_len`; returns `[from, c1, .., c_len]`.
    pub fn chain(&mut self, tag: &str, from: StateId, len: usize) -> Vec<StateId> {
        let mut out = vec![from];
        for _ in 0..len {
            let q = self.state(tag, false);
            self.any(*out.last().unwrap(), q);
            out.push(q);
        }
        out
    }

    /// Fresh path spelling `bits`; the last edge goes to `end` when given.
    pub fn path(&mut self, tag: &str, from: StateId, bits: &[usize], end: Option<StateId>) -> StateId {
        let mut cur = from;
        for (i, &b) in bits.iter().enumerate() {
            let q = match end {
                Some(e) if i + 1 == bits.len() => e,
                _ => self.state(tag, false),
            };
            self.edge(cur, b, q);
            cur = q;
        }
        cur
    }

    /// Trie over words of equal length; each word's last edge goes to its
    /// own target.
    pub fn trie(&mut self, tag: &str, from: StateId, words: &[(Bits, StateId)]) {
        let mut nodes: HashMap<Bits, StateId> = HashMap::new();
        for (w, target) in words {
            let mut cur = from;
            for (i, &b) in w.iter().enumerate() {
                if i + 1 == w.len() {
                    self.edge(cur, b, *target);
                    break;
                }
                let prefix = &w[..=i];
                cur = match nodes.get(prefix) {
                    Some(&q) => q,
                    None => {
                        let q = self.state(tag, false);
                        self.edge(cur, b, q);
                        nodes.insert(prefix.to_vec(), q);
                        q
                    }
                };
            }
        }
    }

    /// Words of length `len` outside `set`, all ending in `target`.
    pub fn complement_within(&mut self, tag: &str, from: StateId, set: &[Bits], len: usize, target: StateId) {
        // free[r]: any r more bits lead to target
        let mut free = vec![target];
        for _ in 1..len {
            let q = self.state(tag, false);
            self.any(q, *free.last().unwrap());
            free.push(q);
        }
        let mut level: Vec<(StateId, Vec<&Bits>)> = vec![(from, set.iter().collect())];
        for depth in 0..len {
            let mut next = Vec::new();
            for (node, members) in level {
                for b in 0..2 {
                    let sub: Vec<&Bits> = members.iter().copied().filter(|w| w[depth] == b).collect();
                    let rest = len - depth - 1;
                    if sub.is_empty() {
                        self.edge(node, b, free[rest]);
                    } else if rest > 0 {
                        let q = self.state(tag, false);
                        self.edge(node, b, q);
                        next.push((q, sub));
                    }
                }
            }
            level = next;
        }
    }

    pub fn build(self) -> Result<Automaton> {
        let accepting = (0..self.len()).filter(|&q| self.accepting[q]).collect();
        let delta = self
            .delta
            .into_iter()
            .map(|[z, o]| vec![z, o])
            .collect();
        Automaton::from_parts(
            vec!["0".into(), "1".into()],
            self.names,
            self.initial,
            accepting,
            delta,
        )
    }
}
