//! Classical constructions: subset construction, Moore minimization,
//! complement, product, emptiness and language counting.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::automaton::{Automaton, Decision, StateId};
use crate::error::{Error, Result};
use crate::graph;

pub const DEFAULT_MAX_SUBSETS: usize = 1 << 20;

fn require_complete_dfa(d: &Automaton, op: &str) -> Result<()> {
    if d.is_deterministic() && d.is_complete() {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "{op} needs a deterministic complete automaton"
        )))
    }
}

fn subset_name(a: &Automaton, set: &[StateId]) -> String {
    let names: Vec<&str> = set.iter().map(|&q| a.states()[q].as_str()).collect();
    format!("{{{}}}", names.join(","))
}

pub fn determinize(a: &Automaton) -> Result<Automaton> {
    determinize_capped(a, DEFAULT_MAX_SUBSETS)
}

/// Subset construction over the reachable subsets. The result is always
/// complete: the empty subset becomes a rejecting sink when it is reached.
pub fn determinize_capped(a: &Automaton, max_subsets: usize) -> Result<Automaton> {
    let sigma = a.alphabet_size();
    let mut index: HashMap<Vec<StateId>, usize> = HashMap::new();
    let mut subsets: Vec<Vec<StateId>> = Vec::new();
    let mut delta: Vec<Vec<Vec<StateId>>> = Vec::new();
    let start = a.initial().to_vec();
    index.insert(start.clone(), 0);
    subsets.push(start);
    let mut next = 0;
    while next < subsets.len() {
        let mut row = Vec::with_capacity(sigma);
        for s in 0..sigma {
            let t = a.post(&subsets[next], s);
            let id = match index.get(&t) {
                Some(&id) => id,
                None => {
                    if subsets.len() >= max_subsets {
                        return Err(Error::Capacity {
                            what: "subset states",
                            limit: max_subsets,
                        });
                    }
                    let id = subsets.len();
                    index.insert(t.clone(), id);
                    subsets.push(t);
                    id
                }
            };
            row.push(vec![id]);
        }
        delta.push(row);
        next += 1;
    }
    let accepting: Vec<StateId> = subsets
        .iter()
        .enumerate()
        .filter(|(_, set)| set.iter().any(|&q| a.is_accepting(q)))
        .map(|(i, _)| i)
        .collect();
    let names = subsets.iter().map(|s| subset_name(a, s)).collect();
    Automaton::from_parts(a.alphabet().to_vec(), names, vec![0], accepting, delta)
}

/// Moore partition refinement on the reachable part. Blocks are numbered in
/// breadth-first order from the initial block and take the name of their
/// first-reached member.
pub fn minimize(d: &Automaton) -> Result<Automaton> {
    require_complete_dfa(d, "minimize")?;
    let sigma = d.alphabet_size();
    let reach = d.reachable_states();
    let live: Vec<StateId> = (0..d.state_count()).filter(|&q| reach[q]).collect();
    let succ = |q: StateId, s: usize| d.targets(q, s)[0];

    let mut block = vec![usize::MAX; d.state_count()];
    for &q in &live {
        block[q] = usize::from(d.is_accepting(q));
    }
    let mut count = {
        let mut seen = [false; 2];
        live.iter().for_each(|&q| seen[block[q]] = true);
        seen.iter().filter(|&&b| b).count()
    };
    loop {
        let mut sig_ix: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut refined = vec![usize::MAX; d.state_count()];
        for &q in &live {
            let mut sig = Vec::with_capacity(sigma + 1);
            sig.push(block[q]);
            sig.extend((0..sigma).map(|s| block[succ(q, s)]));
            let n = sig_ix.len();
            refined[q] = *sig_ix.entry(sig).or_insert(n);
        }
        let new_count = sig_ix.len();
        block = refined;
        if new_count == count {
            break;
        }
        count = new_count;
    }

    // renumber in BFS order
    let start = d.initial()[0];
    let mut order = vec![usize::MAX; count];
    let mut reps = Vec::with_capacity(count);
    let mut queue = VecDeque::from([start]);
    order[block[start]] = 0;
    reps.push(start);
    while let Some(q) = queue.pop_front() {
        for s in 0..sigma {
            let t = succ(q, s);
            if order[block[t]] == usize::MAX {
                order[block[t]] = reps.len();
                reps.push(t);
                queue.push_back(t);
            }
        }
    }
    let delta = reps
        .iter()
        .map(|&q| (0..sigma).map(|s| vec![order[block[succ(q, s)]]]).collect())
        .collect();
    let accepting = reps
        .iter()
        .enumerate()
        .filter(|(_, &q)| d.is_accepting(q))
        .map(|(i, _)| i)
        .collect();
    let names = reps.iter().map(|&q| d.states()[q].clone()).collect();
    Automaton::from_parts(d.alphabet().to_vec(), names, vec![0], accepting, delta)
}

/// `minimize(determinize(a))`
pub fn minimal_dfa(a: &Automaton, max_subsets: usize) -> Result<Automaton> {
    minimize(&determinize_capped(a, max_subsets)?)
}

pub fn complement(d: &Automaton) -> Result<Automaton> {
    require_complete_dfa(d, "complement")?;
    let accepting = (0..d.state_count()).filter(|&q| !d.is_accepting(q)).collect();
    let delta = (0..d.state_count())
        .map(|q| (0..d.alphabet_size()).map(|s| d.targets(q, s).to_vec()).collect())
        .collect();
    Automaton::from_parts(
        d.alphabet().to_vec(),
        d.states().to_vec(),
        d.initial().to_vec(),
        accepting,
        delta,
    )
}

/// Reachable part of the synchronous product. `b` is re-indexed to `a`'s
/// alphabet order when both hold the same tokens.
pub fn product_intersection(a: &Automaton, b: &Automaton) -> Result<Automaton> {
    let b = b.aligned_to(a.alphabet())?;
    let sigma = a.alphabet_size();
    let mut index: HashMap<(StateId, StateId), usize> = HashMap::new();
    let mut pairs = Vec::new();
    for &p in a.initial() {
        for &q in b.initial() {
            index.insert((p, q), pairs.len());
            pairs.push((p, q));
        }
    }
    let initial: Vec<usize> = (0..pairs.len()).collect();
    let mut delta: Vec<Vec<Vec<StateId>>> = Vec::new();
    let mut next = 0;
    while next < pairs.len() {
        let (p, q) = pairs[next];
        let mut row = Vec::with_capacity(sigma);
        for s in 0..sigma {
            let mut ts = Vec::new();
            for &p2 in a.targets(p, s) {
                for &q2 in b.targets(q, s) {
                    let id = *index.entry((p2, q2)).or_insert_with(|| {
                        pairs.push((p2, q2));
                        pairs.len() - 1
                    });
                    ts.push(id);
                }
            }
            row.push(ts);
        }
        delta.push(row);
        next += 1;
    }
    if pairs.is_empty() {
        // no initial pair: a single dead state keeps the state set nonempty
        return Automaton::from_parts(
            a.alphabet().to_vec(),
            vec!["()".to_string()],
            vec![],
            vec![],
            vec![vec![Vec::new(); sigma]],
        );
    }
    let accepting = pairs
        .iter()
        .enumerate()
        .filter(|(_, &(p, q))| a.is_accepting(p) && b.is_accepting(q))
        .map(|(i, _)| i)
        .collect();
    let names = pairs
        .iter()
        .map(|&(p, q)| format!("({},{})", a.states()[p], b.states()[q]))
        .collect();
    Automaton::from_parts(a.alphabet().to_vec(), names, initial, accepting, delta)
}

/// Holds when `L(a)` is empty; otherwise the witness is a shortest accepted
/// word, least in alphabet order among the shortest.
pub fn is_empty(a: &Automaton) -> Decision {
    match a.shortest_accepted() {
        None => Decision::yes(),
        Some(w) => Decision::no(w),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LanguageSize {
    Finite(u128),
    Infinite,
}

impl Serialize for LanguageSize {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            LanguageSize::Finite(n) => match u64::try_from(*n) {
                Ok(small) => s.serialize_u64(small),
                Err(_) => s.serialize_str(&n.to_string()),
            },
            LanguageSize::Infinite => s.serialize_str("INFINITE"),
        }
    }
}

/// Number of accepted words of a complete DFA.
pub fn count_language_size(d: &Automaton) -> Result<LanguageSize> {
    require_complete_dfa(d, "count_language_size")?;
    let reach = d.reachable_states();
    let coreach = d.coreachable();
    let trim: Vec<bool> = (0..d.state_count()).map(|q| reach[q] && coreach[q]).collect();
    let adj: Vec<Vec<usize>> = (0..d.state_count())
        .map(|q| {
            if !trim[q] {
                return Vec::new();
            }
            let mut v: Vec<usize> = (0..d.alphabet_size())
                .map(|s| d.targets(q, s)[0])
                .filter(|&t| trim[t])
                .collect();
            v.sort_unstable();
            v.dedup();
            v
        })
        .collect();
    if (0..d.state_count()).any(|q| adj[q].contains(&q)) {
        return Ok(LanguageSize::Infinite);
    }
    let (comp, ncomp) = graph::scc(&adj);
    if ncomp != d.state_count() {
        return Ok(LanguageSize::Infinite);
    }
    let mut order: Vec<StateId> = (0..d.state_count()).collect();
    order.sort_by_key(|&q| comp[q]);
    let mut words = vec![0u128; d.state_count()];
    for &q in &order {
        if !trim[q] {
            continue;
        }
        let mut total = u128::from(d.is_accepting(q));
        for s in 0..d.alphabet_size() {
            let t = d.targets(q, s)[0];
            if trim[t] {
                total = total
                    .checked_add(words[t])
                    .ok_or(Error::Overflow("language size"))?;
            }
        }
        words[q] = total;
    }
    Ok(LanguageSize::Finite(words[d.initial()[0]]))
}

/// Disjoint union; state names are prefixed with `0.` and `1.`.
pub fn union(a: &Automaton, b: &Automaton) -> Result<Automaton> {
    let b = b.aligned_to(a.alphabet())?;
    let off = a.state_count();
    let names = a
        .states()
        .iter()
        .map(|s| format!("0.{s}"))
        .chain(b.states().iter().map(|s| format!("1.{s}")))
        .collect();
    let initial = a
        .initial()
        .iter()
        .copied()
        .chain(b.initial().iter().map(|&q| q + off))
        .collect();
    let accepting = a.accepting().chain(b.accepting().map(|q| q + off)).collect();
    let delta = a
        .delta()
        .iter()
        .cloned()
        .chain(b.delta().iter().map(|row| {
            row.iter()
                .map(|ts| ts.iter().map(|&t| t + off).collect())
                .collect()
        }))
        .collect();
    Automaton::from_parts(a.alphabet().to_vec(), names, initial, accepting, delta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Word;

    /// (a+b)*b(a+b)
    fn second_last_b() -> Automaton {
        let mut b = Automaton::builder(&["a", "b"]);
        b.initial("0").accepting("2");
        b.loops("0", &["a", "b"]).unwrap();
        b.edge("0", "b", "1").unwrap();
        b.edge("1", "a", "2").unwrap().edge("1", "b", "2").unwrap();
        b.build().unwrap()
    }

    #[test]
    fn subset_names_and_completion() {
        let d = determinize(&second_last_b()).unwrap();
        assert!(d.is_deterministic() && d.is_complete());
        assert_eq!(d.states()[0], "{0}");
        for w in Word::all_up_to(2, 6) {
            assert_eq!(d.accepts(&w).unwrap(), second_last_b().accepts(&w).unwrap());
        }
    }

    #[test]
    fn second_last_b_has_four_nerode_classes() {
        let m = minimal_dfa(&second_last_b(), DEFAULT_MAX_SUBSETS).unwrap();
        assert_eq!(m.state_count(), 4);
        assert!(!m.is_partially_ordered());
        assert_eq!(minimize(&m).unwrap(), m);
    }

    #[test]
    fn capacity_is_reported() {
        let err = determinize_capped(&second_last_b(), 2).unwrap_err();
        assert!(err.is_capacity());
    }

    #[test]
    fn merged_initial_subset() {
        let mut b = Automaton::builder(&["a", "b"]);
        b.initial("p").initial("q").accepting("p2").accepting("q2");
        b.edge("p", "a", "p2").unwrap().edge("q", "b", "q2").unwrap();
        let d = determinize(&b.build().unwrap()).unwrap();
        assert_eq!(d.states()[0], "{p,q}");
    }

    #[test]
    fn counting() {
        let mut b = Automaton::builder(&["a", "b"]);
        b.initial("0").accepting("0").accepting("1");
        b.edge("0", "a", "1").unwrap().edge("0", "b", "1").unwrap();
        let d = determinize(&b.build().unwrap()).unwrap();
        assert_eq!(count_language_size(&d).unwrap(), LanguageSize::Finite(3));
        let all = {
            let mut b = Automaton::builder(&["a"]);
            b.initial("q").accepting("q").loops("q", &["a"]).unwrap();
            b.build().unwrap()
        };
        assert_eq!(count_language_size(&all).unwrap(), LanguageSize::Infinite);
        let none = complement(&all).unwrap();
        assert_eq!(count_language_size(&none).unwrap(), LanguageSize::Finite(0));
    }

    #[test]
    fn product_with_complement_is_empty() {
        let a = second_last_b();
        let co = complement(&determinize(&a).unwrap()).unwrap();
        assert!(is_empty(&product_intersection(&a, &co).unwrap()).holds);
        let w = is_empty(&co).witness.unwrap();
        assert_eq!(w, Word::empty());
    }

    #[test]
    fn shortest_witness_prefers_alphabet_order() {
        let mut b = Automaton::builder(&["a", "b"]);
        b.initial("0").accepting("1");
        b.edge("0", "b", "1").unwrap().edge("0", "a", "1").unwrap();
        assert_eq!(is_empty(&b.build().unwrap()).witness, Some(Word::new(vec![0])));
    }
}
