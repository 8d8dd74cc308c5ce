//! The automaton data model and the structural queries on it.
//!
//! An [`Automaton`] is a possibly nondeterministic acceptor over an indexed
//! alphabet. States and symbols are addressed by index; their string tokens
//! are kept only for serialization and diagnostics. The transition map is
//! total in the sense that every `(state, symbol)` pair has an entry, which
//! may be the empty set.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph;
use crate::word::{Symbol, Word};

pub type StateId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automaton {
    alphabet: Vec<String>,
    states: Vec<String>,
    initial: Vec<StateId>,
    accepting: Vec<bool>,
    // delta[state][symbol] is sorted and duplicate free
    delta: Vec<Vec<Vec<StateId>>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ClassTag {
    PoDfa,
    Dfa,
    RpoNfa,
    PoNfa,
    Nfa,
}

impl ClassTag {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassTag::PoDfa => "PO_DFA",
            ClassTag::Dfa => "DFA",
            ClassTag::RpoNfa => "RPO_NFA",
            ClassTag::PoNfa => "PO_NFA",
            ClassTag::Nfa => "NFA",
        }
    }
}

/// Structural classification of an automaton.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AutomatonClass {
    pub class: ClassTag,
    pub is_complete: bool,
    pub is_deterministic: bool,
    pub is_partially_ordered: bool,
    pub is_self_loop_deterministic: bool,
}

impl AutomatonClass {
    /// Partially ordered with deterministic self-loops (PO_DFA counts too).
    pub fn is_rpo(&self) -> bool {
        self.is_partially_ordered && self.is_self_loop_deterministic
    }

    pub fn is_complete_dfa(&self) -> bool {
        self.is_deterministic && self.is_complete
    }
}

/// Result of a yes/no language question, with a counterexample when one
/// exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub holds: bool,
    pub witness: Option<Word>,
}

impl Decision {
    pub fn yes() -> Self {
        Decision {
            holds: true,
            witness: None,
        }
    }

    pub fn no(witness: Word) -> Self {
        Decision {
            holds: false,
            witness: Some(witness),
        }
    }
}

impl Automaton {
    /// Assembles an automaton from index-based parts, checking every
    /// structural invariant.
    pub fn from_parts(
        alphabet: Vec<String>,
        states: Vec<String>,
        initial: Vec<StateId>,
        accepting: Vec<StateId>,
        mut delta: Vec<Vec<Vec<StateId>>>,
    ) -> Result<Self> {
        if alphabet.is_empty() {
            return Err(Error::Invalid("alphabet is empty".into()));
        }
        if states.is_empty() {
            return Err(Error::Invalid("state set is empty".into()));
        }
        check_unique(&alphabet, "symbol")?;
        check_unique(&states, "state")?;
        let n = states.len();
        if delta.len() != n {
            return Err(Error::Invalid(format!(
                "transition table has {} rows for {} states",
                delta.len(),
                n
            )));
        }
        for (q, row) in delta.iter_mut().enumerate() {
            if row.len() != alphabet.len() {
                return Err(Error::Invalid(format!(
                    "state {:?} has {} transition columns for {} symbols",
                    states[q],
                    row.len(),
                    alphabet.len()
                )));
            }
            for targets in row.iter_mut() {
                targets.sort_unstable();
                targets.dedup();
                if let Some(&bad) = targets.iter().find(|&&t| t >= n) {
                    return Err(Error::Invalid(format!(
                        "transition from {:?} to unknown state index {bad}",
                        states[q]
                    )));
                }
            }
        }
        let mut initial = initial;
        initial.sort_unstable();
        initial.dedup();
        let mut acc = vec![false; n];
        for &q in initial.iter().chain(accepting.iter()) {
            if q >= n {
                return Err(Error::Invalid(format!("unknown state index {q}")));
            }
        }
        for q in accepting {
            acc[q] = true;
        }
        Ok(Automaton {
            alphabet,
            states,
            initial,
            accepting: acc,
            delta,
        })
    }

    pub fn builder<S: AsRef<str>>(alphabet: &[S]) -> AutomatonBuilder {
        AutomatonBuilder::new(alphabet.iter().map(|s| s.as_ref().to_string()).collect())
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet.len()
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn initial(&self) -> &[StateId] {
        &self.initial
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accepting[q]
    }

    pub fn accepting(&self) -> impl Iterator<Item = StateId> + '_ {
        (0..self.states.len()).filter(|&q| self.accepting[q])
    }

    pub fn accepting_mask(&self) -> &[bool] {
        &self.accepting
    }

    /// `q · a`
    pub fn targets(&self, q: StateId, a: Symbol) -> &[StateId] {
        &self.delta[q][a]
    }

    pub fn transitions(&self) -> impl Iterator<Item = (StateId, Symbol, StateId)> + '_ {
        self.delta.iter().enumerate().flat_map(|(q, row)| {
            row.iter()
                .enumerate()
                .flat_map(move |(a, ts)| ts.iter().map(move |&t| (q, a, t)))
        })
    }

    pub fn state_index(&self, name: &str) -> Option<StateId> {
        self.states.iter().position(|s| s == name)
    }

    pub fn symbol_index(&self, token: &str) -> Option<Symbol> {
        self.alphabet.iter().position(|s| s == token)
    }

    /// Converts tokens into a word over this alphabet.
    pub fn word<S: AsRef<str>>(&self, tokens: &[S]) -> Result<Word> {
        tokens
            .iter()
            .map(|t| {
                self.symbol_index(t.as_ref())
                    .ok_or_else(|| Error::UnknownSymbol(t.as_ref().to_string()))
            })
            .collect()
    }

    pub fn check_word(&self, w: &[Symbol]) -> Result<()> {
        match w.iter().find(|&&a| a >= self.alphabet.len()) {
            Some(&a) => Err(Error::SymbolOutOfRange(a)),
            None => Ok(()),
        }
    }

    /// `S · a` for a sorted state set.
    pub fn post(&self, set: &[StateId], a: Symbol) -> Vec<StateId> {
        let mut out: Vec<StateId> = set
            .iter()
            .flat_map(|&q| self.delta[q][a].iter().copied())
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// `I · w`
    pub fn run(&self, w: &[Symbol]) -> Result<Vec<StateId>> {
        self.check_word(w)?;
        let mut cur = self.initial.clone();
        for &a in w {
            if cur.is_empty() {
                break;
            }
            cur = self.post(&cur, a);
        }
        Ok(cur)
    }

    pub fn accepts(&self, w: &[Symbol]) -> Result<bool> {
        Ok(self.run(w)?.iter().any(|&q| self.accepting[q]))
    }

    /// Successor lists of the state graph, with or without self-loops.
    pub fn adjacency(&self, with_self_loops: bool) -> Vec<Vec<StateId>> {
        self.delta
            .iter()
            .enumerate()
            .map(|(q, row)| {
                let mut succ: Vec<StateId> = row
                    .iter()
                    .flatten()
                    .copied()
                    .filter(|&t| with_self_loops || t != q)
                    .collect();
                succ.sort_unstable();
                succ.dedup();
                succ
            })
            .collect()
    }

    pub fn has_self_loop(&self, q: StateId, a: Symbol) -> bool {
        self.delta[q][a].binary_search(&q).is_ok()
    }

    /// Symbols that loop on `q`.
    pub fn loop_symbols(&self, q: StateId) -> Vec<Symbol> {
        (0..self.alphabet.len())
            .filter(|&a| self.has_self_loop(q, a))
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        self.delta.iter().all(|row| row.iter().all(|ts| !ts.is_empty()))
    }

    pub fn is_deterministic(&self) -> bool {
        self.initial.len() == 1 && self.delta.iter().all(|row| row.iter().all(|ts| ts.len() <= 1))
    }

    /// Every cycle of the state graph is a self-loop.
    pub fn is_partially_ordered(&self) -> bool {
        let (_, ncomp) = graph::scc(&self.adjacency(false));
        ncomp == self.states.len()
    }

    /// No state realizes `q ∈ q·a` together with `|q·a| > 1`.
    pub fn is_self_loop_deterministic(&self) -> bool {
        self.delta.iter().enumerate().all(|(q, row)| {
            row.iter()
                .all(|ts| ts.len() <= 1 || ts.binary_search(&q).is_err())
        })
    }

    pub fn classify(&self) -> AutomatonClass {
        let is_complete = self.is_complete();
        let is_deterministic = self.is_deterministic();
        let is_partially_ordered = self.is_partially_ordered();
        let is_self_loop_deterministic = self.is_self_loop_deterministic();
        let class = if is_deterministic && is_partially_ordered {
            ClassTag::PoDfa
        } else if is_deterministic {
            ClassTag::Dfa
        } else if is_partially_ordered && is_self_loop_deterministic {
            ClassTag::RpoNfa
        } else if is_partially_ordered {
            ClassTag::PoNfa
        } else {
            ClassTag::Nfa
        };
        AutomatonClass {
            class,
            is_complete,
            is_deterministic,
            is_partially_ordered,
            is_self_loop_deterministic,
        }
    }

    /// Adds a single non-accepting absorbing sink for the missing moves.
    /// Complete inputs are returned unchanged.
    pub fn completed(&self) -> Automaton {
        if self.is_complete() {
            return self.clone();
        }
        let sink = self.states.len();
        let mut states = self.states.clone();
        states.push(fresh_name(&self.states, "sink"));
        let mut delta = self.delta.clone();
        for row in delta.iter_mut() {
            for ts in row.iter_mut() {
                if ts.is_empty() {
                    ts.push(sink);
                }
            }
        }
        delta.push(vec![vec![sink]; self.alphabet.len()]);
        Automaton {
            alphabet: self.alphabet.clone(),
            states,
            initial: self.initial.clone(),
            accepting: self.accepting.iter().copied().chain([false]).collect(),
            delta,
        }
    }

    /// Number of symbols on a longest self-loop-free path from an initial
    /// state.
    pub fn depth(&self) -> Result<usize> {
        let adj = self.adjacency(false);
        let (comp, ncomp) = graph::scc(&adj);
        if ncomp != self.states.len() {
            return Err(Error::Precondition(
                "depth is only defined for partially ordered automata".into(),
            ));
        }
        // Tarjan numbers components in reverse topological order, so with
        // singleton components every edge q -> t has comp[t] < comp[q].
        let mut order: Vec<StateId> = (0..self.states.len()).collect();
        order.sort_by_key(|&q| comp[q]);
        let mut longest = vec![0usize; self.states.len()];
        for &q in &order {
            longest[q] = adj[q].iter().map(|&t| longest[t] + 1).max().unwrap_or(0);
        }
        Ok(self.initial.iter().map(|&q| longest[q]).max().unwrap_or(0))
    }

    /// Re-indexes the alphabet to `target` order. Fails unless both
    /// alphabets hold the same tokens.
    pub fn aligned_to(&self, target: &[String]) -> Result<Automaton> {
        if self.alphabet == target {
            return Ok(self.clone());
        }
        let mismatch = || Error::AlphabetMismatch {
            left: target.to_vec(),
            right: self.alphabet.clone(),
        };
        if target.len() != self.alphabet.len() {
            return Err(mismatch());
        }
        let map: Vec<Symbol> = target
            .iter()
            .map(|t| self.symbol_index(t).ok_or_else(mismatch))
            .collect::<Result<_>>()?;
        let delta = self
            .delta
            .iter()
            .map(|row| map.iter().map(|&old| row[old].clone()).collect())
            .collect();
        Ok(Automaton {
            alphabet: target.to_vec(),
            states: self.states.clone(),
            initial: self.initial.clone(),
            accepting: self.accepting.clone(),
            delta,
        })
    }

    /// Shortest accepted word, shortlex-least among the shortest.
    pub fn shortest_accepted(&self) -> Option<Word> {
        let n = self.states.len();
        let mut parent: Vec<Option<(StateId, Symbol)>> = vec![None; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        for &q in &self.initial {
            seen[q] = true;
            queue.push_back(q);
        }
        while let Some(q) = queue.pop_front() {
            if self.accepting[q] {
                let mut w = Vec::new();
                let mut cur = q;
                while let Some((p, a)) = parent[cur] {
                    w.push(a);
                    cur = p;
                }
                w.reverse();
                return Some(Word::new(w));
            }
            for a in 0..self.alphabet.len() {
                for &t in &self.delta[q][a] {
                    if !seen[t] {
                        seen[t] = true;
                        parent[t] = Some((q, a));
                        queue.push_back(t);
                    }
                }
            }
        }
        None
    }

    /// States from which an accepting state is reachable.
    pub fn coreachable(&self) -> Vec<bool> {
        let rev = graph::reverse(&self.adjacency(true));
        graph::reachable(&rev, self.accepting())
    }

    pub fn reachable_states(&self) -> Vec<bool> {
        graph::reachable(&self.adjacency(true), self.initial.iter().copied())
    }

    /// States that accept and loop on every symbol: once a run reaches one,
    /// every continuation is accepted.
    pub fn universal_states(&self) -> Vec<bool> {
        (0..self.states.len())
            .map(|q| self.accepting[q] && (0..self.alphabet.len()).all(|a| self.has_self_loop(q, a)))
            .collect()
    }

    pub(crate) fn delta(&self) -> &[Vec<Vec<StateId>>] {
        &self.delta
    }
}

fn check_unique(items: &[String], what: &str) -> Result<()> {
    let mut seen = HashSet::new();
    for it in items {
        if !seen.insert(it.as_str()) {
            return Err(Error::Invalid(format!("duplicate {what} {it:?}")));
        }
    }
    Ok(())
}

pub(crate) fn fresh_name(existing: &[String], base: &str) -> String {
    let mut name = base.to_string();
    while existing.contains(&name) {
        name.push('\'');
    }
    name
}

/// Name-based incremental construction.
#[derive(Clone, Debug)]
pub struct AutomatonBuilder {
    alphabet: Vec<String>,
    states: Vec<String>,
    index: HashMap<String, StateId>,
    initial: Vec<StateId>,
    accepting: Vec<StateId>,
    delta: Vec<Vec<Vec<StateId>>>,
}

impl AutomatonBuilder {
    pub fn new(alphabet: Vec<String>) -> Self {
        AutomatonBuilder {
            alphabet,
            states: Vec::new(),
            index: HashMap::new(),
            initial: Vec::new(),
            accepting: Vec::new(),
            delta: Vec::new(),
        }
    }

    /// Declares a state (idempotent) and returns its index.
    pub fn state(&mut self, name: &str) -> StateId {
        if let Some(&q) = self.index.get(name) {
            return q;
        }
        let q = self.states.len();
        self.states.push(name.to_string());
        self.index.insert(name.to_string(), q);
        self.delta.push(vec![Vec::new(); self.alphabet.len()]);
        q
    }

    pub fn initial(&mut self, name: &str) -> &mut Self {
        let q = self.state(name);
        self.initial.push(q);
        self
    }

    pub fn accepting(&mut self, name: &str) -> &mut Self {
        let q = self.state(name);
        self.accepting.push(q);
        self
    }

    pub fn edge(&mut self, from: &str, symbol: &str, to: &str) -> Result<&mut Self> {
        let a = self
            .alphabet
            .iter()
            .position(|s| s == symbol)
            .ok_or_else(|| Error::UnknownSymbol(symbol.to_string()))?;
        let p = self.state(from);
        let q = self.state(to);
        self.delta[p][a].push(q);
        Ok(self)
    }

    /// Adds `from -s-> from` for every listed symbol.
    pub fn loops(&mut self, state: &str, symbols: &[&str]) -> Result<&mut Self> {
        for s in symbols {
            self.edge(state, s, state)?;
        }
        Ok(self)
    }

    pub fn build(&self) -> Result<Automaton> {
        Automaton::from_parts(
            self.alphabet.clone(),
            self.states.clone(),
            self.initial.clone(),
            self.accepting.clone(),
            self.delta.clone(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a_star() -> Automaton {
        let mut b = Automaton::builder(&["a"]);
        b.initial("q").accepting("q").loops("q", &["a"]).unwrap();
        b.build().unwrap()
    }

    #[test]
    fn empty_word_in_a_star() {
        let a = a_star();
        assert!(a.accepts(&[]).unwrap());
        assert!(a.accepts(&[0, 0, 0]).unwrap());
    }

    #[test]
    fn unknown_symbol_rejected() {
        assert!(matches!(a_star().accepts(&[3]), Err(Error::SymbolOutOfRange(3))));
    }

    #[test]
    fn forbidden_pattern_is_po_but_not_rpo() {
        let mut b = Automaton::builder(&["a"]);
        b.initial("p").accepting("q");
        b.edge("p", "a", "p").unwrap().edge("p", "a", "q").unwrap();
        let c = b.build().unwrap().classify();
        assert_eq!(c.class, ClassTag::PoNfa);
        assert!(c.is_partially_ordered);
        assert!(!c.is_self_loop_deterministic);
    }

    #[test]
    fn chain_with_final_loop_is_po_dfa() {
        let mut b = Automaton::builder(&["a"]);
        b.initial("0").accepting("2");
        b.edge("0", "a", "1").unwrap().edge("1", "a", "2").unwrap();
        b.loops("2", &["a"]).unwrap();
        let a = b.build().unwrap();
        assert_eq!(a.classify().class, ClassTag::PoDfa);
        assert_eq!(a.depth().unwrap(), 2);
    }

    #[test]
    fn two_cycle_is_not_partially_ordered() {
        let mut b = Automaton::builder(&["a"]);
        b.initial("0").accepting("0");
        b.edge("0", "a", "1").unwrap().edge("1", "a", "0").unwrap();
        let a = b.build().unwrap();
        let c = a.classify();
        assert_eq!(c.class, ClassTag::Dfa);
        assert!(!c.is_partially_ordered);
        assert!(a.depth().is_err());
    }

    #[test]
    fn completion_adds_one_sink() {
        let mut b = Automaton::builder(&["a", "b"]);
        b.initial("q").accepting("q");
        let a = b.build().unwrap();
        assert!(!a.is_complete());
        let c = a.completed();
        assert_eq!(c.state_count(), 2);
        assert!(c.is_complete());
        assert!(!c.is_accepting(1));
        assert_eq!(c.targets(1, 0), &[1]);
        assert_eq!(c.targets(1, 1), &[1]);
        assert!(c.accepts(&[]).unwrap());
        assert!(!c.accepts(&[0]).unwrap());
        // already complete: unchanged
        assert_eq!(c.completed(), c);
    }

    #[test]
    fn single_state_depth_zero() {
        assert_eq!(a_star().depth().unwrap(), 0);
    }

    #[test]
    fn invariant_violations() {
        let err = Automaton::from_parts(vec![], vec!["q".into()], vec![], vec![], vec![vec![]]);
        assert!(err.is_err());
        let err = Automaton::from_parts(
            vec!["a".into()],
            vec!["q".into()],
            vec![0],
            vec![],
            vec![vec![vec![4]]],
        );
        assert!(matches!(err, Err(Error::Invalid(_))));
    }

    #[test]
    fn alignment_reorders_columns() {
        let mut b = Automaton::builder(&["a", "b"]);
        b.initial("p").accepting("q");
        b.edge("p", "b", "q").unwrap();
        let a = b.build().unwrap();
        let flipped = a.aligned_to(&["b".to_string(), "a".to_string()]).unwrap();
        assert!(flipped.accepts(&[0]).unwrap());
        assert!(!flipped.accepts(&[1]).unwrap());
        assert!(a.aligned_to(&["a".to_string(), "c".to_string()]).is_err());
    }
}
