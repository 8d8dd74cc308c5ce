//! Universality, inclusion and equivalence.
//!
//! Three strategies are available:
//!
//! * `Generic` explores subsets of the right-hand automaton on the fly and
//!   returns a shortest counterexample, least in alphabet order.
//! * `UnaryPo` handles unary partially ordered inputs by checking a bounded
//!   number of word lengths.
//! * `RponfaBounded` uses that a complete rpoNFA of depth `k` accepts a union
//!   of `~R_k` classes: it walks the class representatives and tests each
//!   class as a whole.
//!
//! `Auto` picks the most specific strategy that applies.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::automaton::{Automaton, Decision, StateId};
use crate::error::{Error, Result};
use crate::ops;
use crate::subseq::{self, ReachTracker, SubseqIndex, WalkStats};
use crate::word::{Symbol, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Strategy {
    Generic,
    UnaryPo,
    RponfaBounded,
    Auto,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Generic => "GENERIC",
            Strategy::UnaryPo => "UNARY_PO",
            Strategy::RponfaBounded => "RPONFA_BOUNDED",
            Strategy::Auto => "AUTO",
        })
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "generic" => Ok(Strategy::Generic),
            "unary" | "unary_po" => Ok(Strategy::UnaryPo),
            "bounded" | "rponfa_bounded" => Ok(Strategy::RponfaBounded),
            "auto" => Ok(Strategy::Auto),
            other => Err(Error::Parse(format!("unknown strategy {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct DecisionOptions {
    /// Cap on explored search nodes (subsets or pairs) for `Generic`.
    pub max_subsets: usize,
    /// Largest representative length `C(k+n, k) - 1` that `RponfaBounded`
    /// accepts before falling back to `Generic`.
    pub bound_budget: u128,
    /// Cap on representatives visited by the class walk.
    pub max_nodes: u64,
}

impl Default for DecisionOptions {
    fn default() -> Self {
        DecisionOptions {
            max_subsets: ops::DEFAULT_MAX_SUBSETS,
            bound_budget: 64,
            max_nodes: 1 << 22,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DecisionStats {
    pub states_explored: u64,
    pub representatives_tested: u64,
    pub words_checked: u64,
    pub bound: Option<u128>,
    pub fell_back: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecisionReport {
    pub decision: Decision,
    /// The strategy that actually ran.
    pub strategy: Strategy,
    pub stats: DecisionStats,
}

fn mismatch(strategy: &'static str, reason: impl Into<String>) -> Error {
    Error::StrategyMismatch {
        strategy,
        reason: reason.into(),
    }
}

fn is_unary_po(a: &Automaton) -> bool {
    a.alphabet_size() == 1 && a.is_partially_ordered()
}

/// `C(k+n, k) - 1` for `k` the depth of the completed automaton.
fn representative_bound(b: &Automaton) -> Result<(Automaton, usize, u128)> {
    let complete = b.completed();
    let k = complete.depth()?;
    let bound = subseq::longest_representative_length(complete.alphabet_size(), k)?;
    Ok((complete, k, bound))
}

pub fn is_universal(a: &Automaton, s: Strategy, opts: DecisionOptions) -> Result<DecisionReport> {
    let strategy = match s {
        Strategy::Auto => {
            if is_unary_po(a) {
                Strategy::UnaryPo
            } else if a.classify().is_rpo()
                && representative_bound(a).is_ok_and(|(_, _, b)| b <= opts.bound_budget)
            {
                Strategy::RponfaBounded
            } else {
                Strategy::Generic
            }
        }
        other => other,
    };
    match strategy {
        Strategy::Generic => generic_universal(a, opts),
        Strategy::UnaryPo => {
            if !is_unary_po(a) {
                return Err(mismatch("UNARY_PO", "needs a unary partially ordered automaton"));
            }
            Ok(unary_universal(a))
        }
        Strategy::RponfaBounded => {
            if !a.classify().is_rpo() {
                return Err(mismatch("RPONFA_BOUNDED", "needs a restricted partially ordered automaton"));
            }
            bounded_includes(None, a, opts)
        }
        Strategy::Auto => unreachable!("resolved above"),
    }
}

pub fn includes(
    a: &Automaton,
    b: &Automaton,
    s: Strategy,
    opts: DecisionOptions,
) -> Result<DecisionReport> {
    let b = b.aligned_to(a.alphabet())?;
    let strategy = match s {
        Strategy::Auto => {
            if is_unary_po(a) && is_unary_po(&b) {
                Strategy::UnaryPo
            } else if b.classify().is_rpo()
                && representative_bound(&b).is_ok_and(|(_, _, x)| x <= opts.bound_budget)
            {
                Strategy::RponfaBounded
            } else {
                Strategy::Generic
            }
        }
        other => other,
    };
    match strategy {
        Strategy::Generic => generic_includes(a, &b, opts),
        Strategy::UnaryPo => {
            if !(is_unary_po(a) && is_unary_po(&b)) {
                return Err(mismatch("UNARY_PO", "needs two unary partially ordered automata"));
            }
            unary_includes(a, &b)
        }
        Strategy::RponfaBounded => {
            if !b.classify().is_rpo() {
                return Err(mismatch(
                    "RPONFA_BOUNDED",
                    "the including automaton must be restricted partially ordered",
                ));
            }
            bounded_includes(Some(a), &b, opts)
        }
        Strategy::Auto => unreachable!("resolved above"),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// The witness is accepted by the left automaton only.
    LeftOnly,
    RightOnly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub decision: Decision,
    pub direction: Option<Direction>,
    pub left: DecisionReport,
    pub right: DecisionReport,
}

/// Inclusion both ways. When the languages differ the witness is the
/// shortlex-smaller of the two one-sided witnesses.
pub fn equivalent(
    a: &Automaton,
    b: &Automaton,
    s: Strategy,
    opts: DecisionOptions,
) -> Result<EquivalenceReport> {
    let left = includes(a, b, s, opts)?;
    let right = includes(&b.aligned_to(a.alphabet())?, a, s, opts)?;
    let pick = match (&left.decision.witness, &right.decision.witness) {
        (Some(x), Some(y)) if y < x => Some((y.clone(), Direction::RightOnly)),
        (Some(x), _) => Some((x.clone(), Direction::LeftOnly)),
        (None, Some(y)) => Some((y.clone(), Direction::RightOnly)),
        (None, None) => None,
    };
    let (decision, direction) = match pick {
        Some((w, d)) => (Decision::no(w), Some(d)),
        None => (Decision::yes(), None),
    };
    Ok(EquivalenceReport {
        decision,
        direction,
        left,
        right,
    })
}

/// Search node: an optional left state plus a right-hand subset.
struct Search {
    nodes: Vec<(Option<StateId>, Vec<StateId>)>,
    parent: Vec<Option<(usize, Symbol)>>,
}

impl Search {
    fn word(&self, mut i: usize) -> Word {
        let mut w = Vec::new();
        while let Some((p, a)) = self.parent[i] {
            w.push(a);
            i = p;
        }
        w.reverse();
        Word::new(w)
    }
}

/// Breadth-first search over `(p, S)` with `p` a state of `left` (or
/// nothing, for universality) and `S` the subset of `right` reached on the
/// same word. The first dequeued node with `p` accepting and `S` rejecting
/// gives a shortest counterexample.
fn subset_search(
    left: Option<&Automaton>,
    right: &Automaton,
    opts: DecisionOptions,
) -> Result<DecisionReport> {
    let universal = right.universal_states();
    let useful = left.map(|l| l.coreachable());
    let mut search = Search {
        nodes: Vec::new(),
        parent: Vec::new(),
    };
    let mut index: HashMap<(Option<StateId>, Vec<StateId>), usize> = HashMap::new();
    let dead = |s: &[StateId]| s.iter().any(|&q| universal[q]);
    let starts: Vec<Option<StateId>> = match left {
        None => vec![None],
        Some(l) => l
            .initial()
            .iter()
            .copied()
            .filter(|&p| useful.as_ref().unwrap()[p])
            .map(Some)
            .collect(),
    };
    let start_set = right.initial().to_vec();
    if !dead(&start_set) {
        for p in starts {
            index.insert((p, start_set.clone()), search.nodes.len());
            search.nodes.push((p, start_set.clone()));
            search.parent.push(None);
        }
    }
    let mut queue: VecDeque<usize> = (0..search.nodes.len()).collect();
    while let Some(i) = queue.pop_front() {
        let (p, set) = search.nodes[i].clone();
        let left_accepts = match (left, p) {
            (Some(l), Some(p)) => l.is_accepting(p),
            _ => true,
        };
        if left_accepts && !set.iter().any(|&q| right.is_accepting(q)) {
            let w = search.word(i);
            return Ok(DecisionReport {
                decision: Decision::no(w),
                strategy: Strategy::Generic,
                stats: DecisionStats {
                    states_explored: search.nodes.len() as u64,
                    ..Default::default()
                },
            });
        }
        for s in 0..right.alphabet_size() {
            let next = right.post(&set, s);
            if dead(&next) {
                continue;
            }
            let lefts: Vec<Option<StateId>> = match (left, p) {
                (Some(l), Some(p)) => l
                    .targets(p, s)
                    .iter()
                    .copied()
                    .filter(|&t| useful.as_ref().unwrap()[t])
                    .map(Some)
                    .collect(),
                _ => vec![None],
            };
            for lp in lefts {
                let key = (lp, next.clone());
                if index.contains_key(&key) {
                    continue;
                }
                if search.nodes.len() >= opts.max_subsets {
                    return Err(Error::Capacity {
                        what: "search nodes",
                        limit: opts.max_subsets,
                    });
                }
                index.insert(key.clone(), search.nodes.len());
                search.nodes.push(key);
                search.parent.push(Some((i, s)));
                queue.push_back(search.nodes.len() - 1);
            }
        }
    }
    Ok(DecisionReport {
        decision: Decision::yes(),
        strategy: Strategy::Generic,
        stats: DecisionStats {
            states_explored: search.nodes.len() as u64,
            ..Default::default()
        },
    })
}

fn generic_universal(a: &Automaton, opts: DecisionOptions) -> Result<DecisionReport> {
    subset_search(None, a, opts)
}

fn generic_includes(a: &Automaton, b: &Automaton, opts: DecisionOptions) -> Result<DecisionReport> {
    subset_search(Some(a), b, opts)
}

/// Unary partially ordered automata accept every word of length at least
/// `n` (the state count) once they accept `a^n`, so `a^0 .. a^n` decide
/// universality.
fn unary_universal(a: &Automaton) -> DecisionReport {
    let n = a.state_count();
    let mut cur = a.initial().to_vec();
    let mut checked = 0;
    for len in 0..=n {
        checked += 1;
        if !cur.iter().any(|&q| a.is_accepting(q)) {
            return DecisionReport {
                decision: Decision::no(Word::new(vec![0; len])),
                strategy: Strategy::UnaryPo,
                stats: DecisionStats {
                    words_checked: checked,
                    ..Default::default()
                },
            };
        }
        cur = a.post(&cur, 0);
    }
    DecisionReport {
        decision: Decision::yes(),
        strategy: Strategy::UnaryPo,
        stats: DecisionStats {
            words_checked: checked,
            ..Default::default()
        },
    }
}

/// Shortest `i + j` over looping states `q` with `dist(I, q) = i` and
/// `dist(q, F) = j`: every word of at least that length is accepted.
/// `None` when the language is finite.
fn unary_threshold(a: &Automaton) -> Option<usize> {
    let from_initial = bfs_distances(a, a.initial(), false);
    let accepting: Vec<StateId> = a.accepting().collect();
    let to_final = bfs_distances(a, &accepting, true);
    (0..a.state_count())
        .filter(|&q| a.has_self_loop(q, 0))
        .filter_map(|q| Some(from_initial[q]? + to_final[q]?))
        .min()
}

fn bfs_distances(a: &Automaton, sources: &[StateId], reverse: bool) -> Vec<Option<usize>> {
    let adj = if reverse {
        crate::graph::reverse(&a.adjacency(true))
    } else {
        a.adjacency(true)
    };
    let mut dist = vec![None; a.state_count()];
    let mut queue = VecDeque::new();
    for &s in sources {
        if dist[s].is_none() {
            dist[s] = Some(0);
            queue.push_back(s);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if dist[w].is_none() {
                dist[w] = Some(dist[v].unwrap() + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Lengths up to `depth(A)` when `L(A)` is finite; otherwise up to the
/// larger of the two acceptance thresholds (or past the longest word of a
/// finite `L(B)`).
fn unary_includes(a: &Automaton, b: &Automaton) -> Result<DecisionReport> {
    let limit = match (unary_threshold(a), unary_threshold(b)) {
        (None, _) => a.depth()?,
        (Some(k), Some(l)) => k.max(l),
        (Some(k), None) => k.max(b.depth()? + 1),
    };
    let mut sa = a.initial().to_vec();
    let mut sb = b.initial().to_vec();
    for len in 0..=limit {
        let in_a = sa.iter().any(|&q| a.is_accepting(q));
        let in_b = sb.iter().any(|&q| b.is_accepting(q));
        if in_a && !in_b {
            return Ok(DecisionReport {
                decision: Decision::no(Word::new(vec![0; len])),
                strategy: Strategy::UnaryPo,
                stats: DecisionStats {
                    words_checked: len as u64 + 1,
                    ..Default::default()
                },
            });
        }
        sa = a.post(&sa, 0);
        sb = b.post(&sb, 0);
    }
    Ok(DecisionReport {
        decision: Decision::yes(),
        strategy: Strategy::UnaryPo,
        stats: DecisionStats {
            words_checked: limit as u64 + 1,
            ..Default::default()
        },
    })
}

/// Class-level search for `L(a) ⊄ L(b)` with `b` an rpoNFA (`a = None`
/// stands for `Σ*`). Falls back to the subset search when the
/// representative bound exceeds the budget.
fn bounded_includes(
    a: Option<&Automaton>,
    b: &Automaton,
    opts: DecisionOptions,
) -> Result<DecisionReport> {
    let (complete, k, bound) = representative_bound(b)?;
    if bound > opts.bound_budget {
        log::warn!(
            "representative bound {bound} exceeds budget {}; using the subset search",
            opts.bound_budget
        );
        let mut report = subset_search(a, b, opts)?;
        report.stats.bound = Some(bound);
        report.stats.fell_back = true;
        return Ok(report);
    }
    let index = SubseqIndex::new(complete.alphabet_size(), k)?;
    let mut automata = vec![&complete];
    if let Some(a) = a {
        automata.push(a);
    }
    let tracker = ReachTracker { automata };
    let mut stats = WalkStats::default();
    let hit = subseq::walk_classes(&index, &tracker, opts.max_nodes, &mut stats, |w, reach| {
        let b_meets = reach[0].iter().any(|&q| complete.is_accepting(q));
        let a_meets = match a {
            Some(a) => reach[1].iter().any(|&q| a.is_accepting(q)),
            None => true,
        };
        (a_meets && !b_meets).then(|| w.clone())
    })?;
    let decision = match (hit, a) {
        (None, _) => Decision::yes(),
        (Some(w), None) => Decision::no(w),
        (Some(w), Some(a)) => {
            let class = subseq::class_dfa(&w, k, complete.alphabet())?;
            let member = ops::is_empty(&ops::product_intersection(&class, a)?)
                .witness
                .ok_or_else(|| Error::Precondition("class walk and class automaton disagree".into()))?;
            Decision::no(member)
        }
    };
    Ok(DecisionReport {
        decision,
        strategy: Strategy::RponfaBounded,
        stats: DecisionStats {
            representatives_tested: stats.representatives,
            bound: Some(bound),
            ..Default::default()
        },
    })
}
