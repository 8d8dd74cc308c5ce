//! R-triviality, k-R-triviality and R-expressions.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use crate::automaton::{Automaton, StateId};
use crate::error::{Error, Result};
use crate::graph;
use crate::ops;
use crate::subseq::{self, ReachTracker, RChainSignature, SubseqIndex, WalkStats};
use crate::word::{Symbol, Word};

#[derive(Clone, Copy, Debug)]
pub struct TrivialityOptions {
    pub max_subsets: usize,
    /// Cap on representatives visited by the class walk and on chain states
    /// explored by the oracle.
    pub max_nodes: u64,
}

impl Default for TrivialityOptions {
    fn default() -> Self {
        TrivialityOptions {
            max_subsets: ops::DEFAULT_MAX_SUBSETS,
            max_nodes: 1 << 22,
        }
    }
}

/// A `~R_k` class meeting both the language and its complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitClass {
    pub representative: Word,
    pub member_in: Word,
    pub member_out: Word,
}

/// A state on a nontrivial cycle of the minimal DFA: it is reached by
/// `prefix` and again by `prefix · cycle`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleWitness {
    pub prefix: Word,
    pub cycle: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrivialityVerdict {
    pub holds: bool,
    pub k_used: Option<usize>,
    pub split_class: Option<SplitClass>,
    pub cycle: Option<CycleWitness>,
    pub representatives_tested: u64,
}

pub fn is_r_trivial(a: &Automaton, max_subsets: usize) -> Result<TrivialityVerdict> {
    let m = ops::minimal_dfa(a, max_subsets)?;
    let adj = m.adjacency(false);
    let (comp, ncomp) = graph::scc(&adj);
    let mut verdict = TrivialityVerdict {
        holds: ncomp == m.state_count(),
        k_used: None,
        split_class: None,
        cycle: None,
        representatives_tested: 0,
    };
    if !verdict.holds {
        let mut size = vec![0usize; ncomp];
        comp.iter().for_each(|&c| size[c] += 1);
        let q = (0..m.state_count())
            .find(|&q| size[comp[q]] > 1)
            .expect("some component is not a singleton");
        verdict.cycle = Some(CycleWitness {
            prefix: shortest_path(&m, m.initial()[0], q, false).expect("minimal DFAs are reachable"),
            cycle: shortest_path(&m, q, q, true).expect("q lies on a cycle"),
        });
    }
    Ok(verdict)
}

/// Shortlex-least word leading `from` to `to` in a DFA; `nonempty` forbids
/// the empty word.
fn shortest_path(d: &Automaton, from: StateId, to: StateId, nonempty: bool) -> Option<Word> {
    if from == to && !nonempty {
        return Some(Word::empty());
    }
    let mut parent: HashMap<StateId, (StateId, Symbol)> = HashMap::new();
    let mut queue = VecDeque::from([from]);
    let mut seen = HashSet::from([from]);
    while let Some(p) = queue.pop_front() {
        for s in 0..d.alphabet_size() {
            let t = d.targets(p, s)[0];
            if t == to {
                let mut w = vec![s];
                let mut cur = p;
                while cur != from {
                    let (pp, a) = parent[&cur];
                    w.push(a);
                    cur = pp;
                }
                w.reverse();
                return Some(Word::new(w));
            }
            if seen.insert(t) {
                parent.insert(t, (p, s));
                queue.push_back(t);
            }
        }
    }
    None
}

pub fn is_k_r_trivial(a: &Automaton, k: usize, opts: TrivialityOptions) -> Result<TrivialityVerdict> {
    // fails on binomial overflow before any work is done
    subseq::longest_representative_length(a.alphabet_size(), k)?;
    let d = ops::minimal_dfa(a, opts.max_subsets)?;
    let index = SubseqIndex::new(a.alphabet_size(), k)?;
    let tracker = ReachTracker {
        automata: vec![&d],
    };
    let mut stats = WalkStats::default();
    let split = subseq::walk_classes(&index, &tracker, opts.max_nodes, &mut stats, |w, reach| {
        let set = &reach[0];
        let any_in = set.iter().any(|&q| d.is_accepting(q));
        let any_out = set.iter().any(|&q| !d.is_accepting(q));
        (any_in && any_out).then(|| w.clone())
    })?;
    let split_class = match split {
        None => None,
        Some(w) => Some(split_members(&d, &w, k)?),
    };
    Ok(TrivialityVerdict {
        holds: split_class.is_none(),
        k_used: Some(k),
        split_class,
        cycle: None,
        representatives_tested: stats.representatives,
    })
}

fn split_members(d: &Automaton, w: &Word, k: usize) -> Result<SplitClass> {
    let class = subseq::class_dfa(w, k, d.alphabet())?;
    let member_in = ops::is_empty(&ops::product_intersection(&class, d)?).witness;
    let co = ops::complement(d)?;
    let member_out = ops::is_empty(&ops::product_intersection(&class, &co)?).witness;
    match (member_in, member_out) {
        (Some(member_in), Some(member_out)) => Ok(SplitClass {
            representative: w.clone(),
            member_in,
            member_out,
        }),
        _ => Err(Error::Precondition(
            "class walk reported a split the class automaton does not confirm".into(),
        )),
    }
}

/// Independent check of k-R-triviality: explores the product of the
/// signature machine (states are prefix chains of `sub_k` values) with the
/// minimal DFA, and looks for a chain seen together with both an accepting
/// and a rejecting DFA state.
pub fn is_k_r_trivial_oracle(
    a: &Automaton,
    k: usize,
    opts: TrivialityOptions,
) -> Result<TrivialityVerdict> {
    let d = ops::minimal_dfa(a, opts.max_subsets)?;
    let start = (RChainSignature::start(k), d.initial()[0]);
    let mut first_word: HashMap<(RChainSignature, StateId), Word> = HashMap::new();
    first_word.insert(start.clone(), Word::empty());
    let mut queue = VecDeque::from([start]);
    // per chain: shortest accepted and shortest rejected class word
    let mut by_chain: HashMap<RChainSignature, (Option<Word>, Option<Word>)> = HashMap::new();
    while let Some(node) = queue.pop_front() {
        if first_word.len() as u64 > opts.max_nodes {
            return Err(Error::Capacity {
                what: "signature states",
                limit: opts.max_nodes as usize,
            });
        }
        let w = first_word[&node].clone();
        let entry = by_chain.entry(node.0.clone()).or_default();
        let slot = if d.is_accepting(node.1) {
            &mut entry.0
        } else {
            &mut entry.1
        };
        if slot.is_none() {
            *slot = Some(w.clone());
        }
        for s in 0..d.alphabet_size() {
            let next = (node.0.extended(s), d.targets(node.1, s)[0]);
            if !first_word.contains_key(&next) {
                first_word.insert(next.clone(), w.appended(s));
                queue.push_back(next);
            }
        }
    }
    let split_class = by_chain
        .iter()
        .filter_map(|(chain, slots)| match slots {
            (Some(i), Some(o)) => Some(SplitClass {
                representative: chain.representative(),
                member_in: i.clone(),
                member_out: o.clone(),
            }),
            _ => None,
        })
        .min_by(|x, y| x.representative.cmp(&y.representative));
    Ok(TrivialityVerdict {
        holds: split_class.is_none(),
        k_used: Some(k),
        split_class,
        cycle: None,
        representatives_tested: by_chain.len() as u64,
    })
}

/// `Σ1* a1 Σ2* a2 ... am Σ(m+1)*` with `a_i ∉ Σ_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RExpression {
    loops: Vec<BTreeSet<Symbol>>,
    letters: Vec<Symbol>,
}

impl RExpression {
    pub fn new(loops: Vec<BTreeSet<Symbol>>, letters: Vec<Symbol>) -> Result<Self> {
        if loops.len() != letters.len() + 1 {
            return Err(Error::Invalid(format!(
                "{} loop sets for {} letters",
                loops.len(),
                letters.len()
            )));
        }
        if let Some(i) = (0..letters.len()).find(|&i| loops[i].contains(&letters[i])) {
            return Err(Error::Invalid(format!(
                "letter {} repeats the loop set before it",
                i + 1
            )));
        }
        Ok(RExpression { loops, letters })
    }

    pub fn loops(&self) -> &[BTreeSet<Symbol>] {
        &self.loops
    }

    pub fn letters(&self) -> &[Symbol] {
        &self.letters
    }

    /// Membership by a single left-to-right scan; the constraint
    /// `a_i ∉ Σ_i` makes the scan deterministic.
    pub fn matches(&self, w: &[Symbol]) -> bool {
        let mut stage = 0;
        for &x in w {
            if self.loops[stage].contains(&x) {
                continue;
            }
            if stage < self.letters.len() && self.letters[stage] == x {
                stage += 1;
            } else {
                return false;
            }
        }
        stage == self.letters.len()
    }

    pub fn display_with(&self, alphabet: &[String]) -> String {
        let set = |s: &BTreeSet<Symbol>| {
            let names: Vec<&str> = s.iter().map(|&a| alphabet[a].as_str()).collect();
            format!("{{{}}}*", names.join(","))
        };
        let mut parts = Vec::new();
        for i in 0..self.loops.len() {
            if i > 0 {
                parts.push(alphabet[self.letters[i - 1]].clone());
            }
            if !self.loops[i].is_empty() {
                parts.push(set(&self.loops[i]));
            }
        }
        if parts.is_empty() {
            "ε".to_string()
        } else {
            parts.join(" ")
        }
    }
}

pub const DEFAULT_MAX_PATHS: usize = 1_000_000;

/// One expression per simple accepting path, in depth-first order over
/// states and symbols; structural duplicates are dropped.
pub fn rponfa_to_r_expressions(a: &Automaton, max_paths: usize) -> Result<Vec<RExpression>> {
    let class = a.classify();
    if !class.is_rpo() {
        return Err(Error::Precondition(
            "R-expressions are read off restricted partially ordered automata only".into(),
        ));
    }
    let loops: Vec<BTreeSet<Symbol>> = (0..a.state_count())
        .map(|q| a.loop_symbols(q).into_iter().collect())
        .collect();
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    let mut paths = 0usize;
    // explicit stack of (state, next symbol, next target position)
    for &init in a.initial() {
        let mut states = vec![init];
        let mut letters: Vec<Symbol> = Vec::new();
        let mut cursor: Vec<(usize, usize)> = vec![(0, 0)];
        let mut emit = |states: &[StateId], letters: &[Symbol], paths: &mut usize| -> Result<()> {
            *paths += 1;
            if *paths > max_paths {
                return Err(Error::Capacity {
                    what: "simple accepting paths",
                    limit: max_paths,
                });
            }
            let e = RExpression {
                loops: states.iter().map(|&q| loops[q].clone()).collect(),
                letters: letters.to_vec(),
            };
            if seen.insert(e.clone()) {
                out.push(e);
            }
            Ok(())
        };
        if a.is_accepting(init) {
            emit(&states, &letters, &mut paths)?;
        }
        while let Some(top) = cursor.last_mut() {
            let q = *states.last().unwrap();
            let (sym, pos) = *top;
            if sym == a.alphabet_size() {
                cursor.pop();
                states.pop();
                letters.pop();
                continue;
            }
            let targets = a.targets(q, sym);
            if pos >= targets.len() {
                *top = (sym + 1, 0);
                continue;
            }
            *top = (sym, pos + 1);
            let t = targets[pos];
            if t == q {
                continue;
            }
            states.push(t);
            letters.push(sym);
            cursor.push((0, 0));
            if a.is_accepting(t) {
                emit(&states, &letters, &mut paths)?;
            }
        }
    }
    Ok(out)
}

/// Chain automaton `e0 .. em` with the loop sets as self-loops.
pub fn r_expression_to_automaton(e: &RExpression, alphabet: &[String]) -> Result<Automaton> {
    let n = alphabet.len();
    if let Some(&bad) = e
        .letters
        .iter()
        .chain(e.loops.iter().flatten())
        .find(|&&s| s >= n)
    {
        return Err(Error::SymbolOutOfRange(bad));
    }
    let m = e.letters.len();
    let mut delta = vec![vec![Vec::new(); n]; m + 1];
    for (i, set) in e.loops.iter().enumerate() {
        for &b in set {
            delta[i][b].push(i);
        }
        if i < m {
            delta[i][e.letters[i]].push(i + 1);
        }
    }
    let names = (0..=m).map(|i| format!("e{i}")).collect();
    Automaton::from_parts(alphabet.to_vec(), names, vec![0], vec![m], delta)
}
