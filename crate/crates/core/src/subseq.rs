//! Bounded subsequence sets and the prefix-sensitive congruence `~R_k`.
//!
//! Two representations coexist. [`SubseqSet`] stores the members as an
//! ordered set of words and is what the public congruence functions and the
//! test oracles use. [`SubseqIndex`] packs a subsequence set into a bitset
//! over all words of length at most `k`; the class-tree walk used by the
//! deciders runs on it.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::hash::Hash;

use crate::automaton::{Automaton, StateId};
use crate::error::{binomial, Error, Result};
use crate::word::{Symbol, Word};

/// `sub_k(w)`: the subsequences of `w` of length at most `k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubseqSet {
    k: usize,
    members: BTreeSet<Word>,
}

impl SubseqSet {
    /// `sub_k(ε) = {ε}`
    pub fn of_empty(k: usize) -> Self {
        SubseqSet {
            k,
            members: BTreeSet::from([Word::empty()]),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn members(&self) -> &BTreeSet<Word> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, u: &[Symbol]) -> bool {
        self.members.contains(&Word::from(u))
    }

    /// `sub_k(wa)` from `sub_k(w)`.
    pub fn extended(&self, a: Symbol) -> SubseqSet {
        let mut members = self.members.clone();
        for u in &self.members {
            if u.len() < self.k {
                members.insert(u.appended(a));
            }
        }
        SubseqSet { k: self.k, members }
    }

    pub fn is_subset(&self, other: &SubseqSet) -> bool {
        self.members.is_subset(&other.members)
    }
}

impl fmt::Debug for SubseqSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.members.iter().map(|w| w.symbols().to_vec()))
            .finish()
    }
}

pub fn sub_k(w: &[Symbol], k: usize) -> SubseqSet {
    w.iter()
        .fold(SubseqSet::of_empty(k), |s, &a| s.extended(a))
}

/// `x ~_k y`
pub fn sim_k(x: &[Symbol], y: &[Symbol], k: usize) -> bool {
    sub_k(x, k) == sub_k(y, k)
}

/// `sub_k` of every prefix of `w`, shortest prefix first.
pub fn prefix_sets(w: &[Symbol], k: usize) -> Vec<SubseqSet> {
    let mut out = Vec::with_capacity(w.len() + 1);
    let mut cur = SubseqSet::of_empty(k);
    out.push(cur.clone());
    for &a in w {
        cur = cur.extended(a);
        out.push(cur.clone());
    }
    out
}

/// The distinct prefix values of `sub_k` along a word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RChainSignature {
    pub k: usize,
    pub chain: Vec<SubseqSet>,
}

impl RChainSignature {
    pub fn start(k: usize) -> Self {
        RChainSignature {
            k,
            chain: vec![SubseqSet::of_empty(k)],
        }
    }

    pub fn last(&self) -> &SubseqSet {
        self.chain.last().expect("chain is never empty")
    }

    /// Signature of `wa` from the signature of `w`.
    pub fn extended(&self, a: Symbol) -> RChainSignature {
        let next = self.last().extended(a);
        if &next == self.last() {
            self.clone()
        } else {
            let mut chain = self.chain.clone();
            chain.push(next);
            RChainSignature { k: self.k, chain }
        }
    }

    /// The minimal representative of the class: consecutive chain entries
    /// differ by the subsequences ending in exactly one new letter.
    pub fn representative(&self) -> Word {
        let mut w = Word::empty();
        for pair in self.chain.windows(2) {
            let a = pair[1]
                .members()
                .difference(pair[0].members())
                .next()
                .and_then(|u| u.last().copied())
                .expect("strict chain step");
            w.push(a);
        }
        w
    }
}

pub fn rk_signature(w: &[Symbol], k: usize) -> RChainSignature {
    w.iter()
        .fold(RChainSignature::start(k), |s, &a| s.extended(a))
}

/// `x ~R_k y`, checked on prefixes in both directions.
pub fn sim_rk(x: &[Symbol], y: &[Symbol], k: usize) -> bool {
    let px = prefix_sets(x, k);
    let py = prefix_sets(y, k);
    px.iter().all(|u| py.contains(u)) && py.iter().all(|v| px.contains(v))
}

/// Every symbol of `w` strictly grows the prefix subsequence set.
pub fn is_minimal_representative(w: &[Symbol], k: usize) -> bool {
    prefix_sets(w, k).windows(2).all(|p| p[0] != p[1])
}

/// Minimal representatives of length at most `max_len`, in shortlex order.
pub fn enumerate_minimal_representatives(
    alphabet_size: usize,
    k: usize,
    max_len: usize,
) -> Result<MinimalRepresentatives> {
    let index = SubseqIndex::new(alphabet_size, k)?;
    let start = index.empty_word_set();
    Ok(MinimalRepresentatives {
        index,
        max_len,
        layer: vec![(Word::empty(), start)],
        pos: 0,
    })
}

pub struct MinimalRepresentatives {
    index: SubseqIndex,
    max_len: usize,
    layer: Vec<(Word, PackedSet)>,
    pos: usize,
}

impl Iterator for MinimalRepresentatives {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.pos == self.layer.len() {
            let len = self.layer.first().map_or(usize::MAX, |(w, _)| w.len());
            if len >= self.max_len {
                self.layer.clear();
                return None;
            }
            let mut next = Vec::new();
            for (w, s) in &self.layer {
                for a in 0..self.index.alphabet_size() {
                    let t = self.index.extended(s, a);
                    if &t != s {
                        next.push((w.appended(a), t));
                    }
                }
            }
            if next.is_empty() {
                self.layer.clear();
                return None;
            }
            self.layer = next;
            self.pos = 0;
        }
        let w = self.layer[self.pos].0.clone();
        self.pos += 1;
        Some(w)
    }
}

/// Length of the longest minimal representative, `C(k+n, k) - 1`.
pub fn longest_representative_length(alphabet_size: usize, k: usize) -> Result<u128> {
    Ok(binomial((k + alphabet_size) as u64, k as u64)? - 1)
}

fn class_state_name(alphabet: &[String], prefix: &[Symbol]) -> String {
    format!("[{}]", Word::from(prefix).display_with(alphabet))
}

/// The complete DFA accepting exactly the `~R_k` class of the minimal
/// representative `w`.
pub fn class_dfa(w: &[Symbol], k: usize, alphabet: &[String]) -> Result<Automaton> {
    let n = alphabet.len();
    if let Some(&a) = w.iter().find(|&&a| a >= n) {
        return Err(Error::SymbolOutOfRange(a));
    }
    if !is_minimal_representative(w, k) {
        return Err(Error::Precondition(format!(
            "{} is not a minimal representative for k = {k}",
            Word::from(w).display_with(alphabet)
        )));
    }
    let prefixes = prefix_sets(w, k);
    let m = w.len();
    let sink = m + 1;
    let mut delta = vec![vec![Vec::new(); n]; m + 2];
    for (i, set) in prefixes.iter().enumerate() {
        for b in 0..n {
            delta[i][b] = if i < m && w[i] == b {
                vec![i + 1]
            } else if &set.extended(b) == set {
                vec![i]
            } else {
                vec![sink]
            };
        }
    }
    delta[sink] = vec![vec![sink]; n];
    let mut names: Vec<String> = (0..=m).map(|i| class_state_name(alphabet, &w[..i])).collect();
    names.push(crate::automaton::fresh_name(&names, "sink"));
    Automaton::from_parts(alphabet.to_vec(), names, vec![0], vec![m], delta)
}

/// Bitset over all words of length at most `k`; see [`SubseqIndex`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PackedSet(Box<[u64]>);

impl fmt::Debug for PackedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PackedSet(")?;
        for w in self.0.iter() {
            write!(f, "{w:016x}")?;
        }
        write!(f, ")")
    }
}

/// Indexing of the words of length at most `k` over `n` letters: a word `u`
/// sits at `offset[|u|] + value(u)` where `value` reads `u` in base `n`.
#[derive(Clone, Debug)]
pub struct SubseqIndex {
    n: usize,
    k: usize,
    // first index of words of length k
    extendable: usize,
    total: usize,
    // child[i * n + a] is the index of u_i a, for |u_i| < k
    child: Vec<u32>,
}

const MAX_PACKED_WORDS: usize = 1 << 24;

impl SubseqIndex {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("alphabet is empty".into()));
        }
        let overflow = Error::Capacity {
            what: "words of length at most k",
            limit: MAX_PACKED_WORDS,
        };
        let mut offset = vec![0usize];
        let mut layer = 1usize;
        for _ in 0..=k {
            let next = offset.last().unwrap().checked_add(layer).ok_or(overflow.clone())?;
            if next > MAX_PACKED_WORDS {
                return Err(overflow);
            }
            offset.push(next);
            layer = layer.checked_mul(n).ok_or(overflow.clone())?;
        }
        let extendable = offset[k];
        let total = offset[k + 1];
        let mut child = Vec::with_capacity(extendable * n);
        for len in 0..k {
            for value in 0..(offset[len + 1] - offset[len]) {
                for a in 0..n {
                    child.push((offset[len + 1] + value * n + a) as u32);
                }
            }
        }
        Ok(SubseqIndex {
            n,
            k,
            extendable,
            total,
            child,
        })
    }

    pub fn alphabet_size(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn empty_word_set(&self) -> PackedSet {
        let mut bits = vec![0u64; self.total.div_ceil(64)].into_boxed_slice();
        bits[0] = 1;
        PackedSet(bits)
    }

    pub fn extended(&self, s: &PackedSet, a: Symbol) -> PackedSet {
        let mut out = s.clone();
        self.extend_into(s, a, &mut out);
        out
    }

    fn extend_into(&self, s: &PackedSet, a: Symbol, out: &mut PackedSet) {
        let limit_word = self.extendable.div_ceil(64);
        for (wi, &word) in s.0.iter().enumerate().take(limit_word) {
            let mut bits = word;
            while bits != 0 {
                let i = wi * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if i >= self.extendable {
                    break;
                }
                let c = self.child[i * self.n + a] as usize;
                out.0[c / 64] |= 1 << (c % 64);
            }
        }
    }

    /// Whether appending `a` leaves the set unchanged.
    pub fn absorbs(&self, s: &PackedSet, a: Symbol) -> bool {
        let limit_word = self.extendable.div_ceil(64);
        for (wi, &word) in s.0.iter().enumerate().take(limit_word) {
            let mut bits = word;
            while bits != 0 {
                let i = wi * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if i >= self.extendable {
                    break;
                }
                let c = self.child[i * self.n + a] as usize;
                if s.0[c / 64] & (1 << (c % 64)) == 0 {
                    return false;
                }
            }
        }
        true
    }

    pub fn of_word(&self, w: &[Symbol]) -> PackedSet {
        w.iter()
            .fold(self.empty_word_set(), |s, &a| self.extended(&s, a))
    }

    pub fn count(&self, s: &PackedSet) -> usize {
        s.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// Per-class bookkeeping carried along the walk over minimal
/// representatives.
///
/// A class word is `u0 a1 u1 ... am um` where `a1...am` is the
/// representative and each `ui` uses only letters absorbed at the `i`-th
/// prefix. A tracker folds that shape into a summary, typically the set of
/// automaton states reachable on some class word.
pub trait ClassTracker {
    type State: Clone + Eq + Hash;
    fn start(&self, loops: &[Symbol]) -> Self::State;
    fn advance(&self, state: &Self::State, a: Symbol, loops: &[Symbol]) -> Self::State;
}

/// States of several automata reachable on words of the current class.
pub struct ReachTracker<'a> {
    pub automata: Vec<&'a Automaton>,
}

impl ReachTracker<'_> {
    fn close(a: &Automaton, mut set: Vec<StateId>, loops: &[Symbol]) -> Vec<StateId> {
        if loops.is_empty() {
            return set;
        }
        let mut frontier = set.clone();
        while !frontier.is_empty() {
            let mut fresh = Vec::new();
            for &b in loops {
                for t in a.post(&frontier, b) {
                    if set.binary_search(&t).is_err() && !fresh.contains(&t) {
                        fresh.push(t);
                    }
                }
            }
            set.extend_from_slice(&fresh);
            set.sort_unstable();
            frontier = fresh;
        }
        set
    }
}

impl ClassTracker for ReachTracker<'_> {
    type State = Vec<Vec<StateId>>;

    fn start(&self, loops: &[Symbol]) -> Self::State {
        self.automata
            .iter()
            .map(|a| Self::close(a, a.initial().to_vec(), loops))
            .collect()
    }

    fn advance(&self, state: &Self::State, a: Symbol, loops: &[Symbol]) -> Self::State {
        self.automata
            .iter()
            .zip(state)
            .map(|(aut, set)| Self::close(aut, aut.post(set, a), loops))
            .collect()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WalkStats {
    pub representatives: u64,
    pub pruned: u64,
}

/// Breadth-first walk over minimal representatives in shortlex order,
/// calling `visit` on each and stopping at the first `Some`.
///
/// Two representatives with the same packed set and the same tracker state
/// root isomorphic subtrees, so only the shortlex-first one is expanded.
/// The first hit of `visit` is therefore still the shortlex-least
/// representative whose summary `visit` accepts.
pub fn walk_classes<T, R>(
    index: &SubseqIndex,
    tracker: &T,
    max_nodes: u64,
    stats: &mut WalkStats,
    mut visit: impl FnMut(&Word, &T::State) -> Option<R>,
) -> Result<Option<R>>
where
    T: ClassTracker,
{
    let loops_of = |s: &PackedSet| -> Vec<Symbol> {
        (0..index.n).filter(|&b| index.absorbs(s, b)).collect()
    };
    let root = index.empty_word_set();
    let root_state = tracker.start(&loops_of(&root));
    let mut seen: HashSet<(PackedSet, T::State)> = HashSet::new();
    seen.insert((root.clone(), root_state.clone()));
    let mut queue = VecDeque::from([(Word::empty(), root, root_state)]);
    while let Some((w, set, state)) = queue.pop_front() {
        stats.representatives += 1;
        if stats.representatives > max_nodes {
            return Err(Error::Capacity {
                what: "class representatives",
                limit: max_nodes as usize,
            });
        }
        if let Some(r) = visit(&w, &state) {
            return Ok(Some(r));
        }
        for a in 0..index.n {
            if index.absorbs(&set, a) {
                continue;
            }
            let next = index.extended(&set, a);
            let loops = loops_of(&next);
            let next_state = tracker.advance(&state, a, &loops);
            let key = (next, next_state);
            if seen.contains(&key) {
                stats.pruned += 1;
                continue;
            }
            seen.insert(key.clone());
            queue.push_back((w.appended(a), key.0, key.1));
        }
    }
    Ok(None)
}
