//! Brute-force reference implementations used to check the library.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet};

use ponfa::reductions::{Dtm, Move};
use ponfa::Automaton;

pub type Sub = BTreeSet<Vec<usize>>;

/// Every subsequence of length at most `k`, by choosing positions.
pub fn subsequences(w: &[usize], k: usize) -> Sub {
    fn go(w: &[usize], from: usize, k: usize, cur: &mut Vec<usize>, out: &mut Sub) {
        out.insert(cur.clone());
        if cur.len() == k {
            return;
        }
        for i in from..w.len() {
            cur.push(w[i]);
            go(w, i + 1, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Sub::new();
    go(w, 0, k, &mut Vec::new(), &mut out);
    out
}

pub fn sim_k(x: &[usize], y: &[usize], k: usize) -> bool {
    subsequences(x, k) == subsequences(y, k)
}

pub fn prefix_family(w: &[usize], k: usize) -> BTreeSet<Sub> {
    (0..=w.len()).map(|i| subsequences(&w[..i], k)).collect()
}

/// Both directions of the prefix-matching definition.
pub fn sim_rk(x: &[usize], y: &[usize], k: usize) -> bool {
    let px: Vec<Sub> = (0..=x.len()).map(|i| subsequences(&x[..i], k)).collect();
    let py: Vec<Sub> = (0..=y.len()).map(|i| subsequences(&y[..i], k)).collect();
    px.iter().all(|u| py.contains(u)) && py.iter().all(|v| px.contains(v))
}

pub fn accepts(a: &Automaton, w: &[usize]) -> bool {
    let mut cur: HashSet<usize> = a.initial().iter().copied().collect();
    for &s in w {
        cur = cur.iter().flat_map(|&q| a.targets(q, s).iter().copied()).collect();
    }
    cur.iter().any(|&q| a.is_accepting(q))
}

/// All words over `n` letters up to `max_len`, shortest first, then
/// lexicographic.
pub fn words_up_to(n: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for a in 0..n {
                let mut v: Vec<usize> = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

pub fn first_word(n: usize, max_len: usize, pred: impl Fn(&[usize]) -> bool) -> Option<Vec<usize>> {
    words_up_to(n, max_len).into_iter().find(|w| pred(w))
}

/// Longest path counted in symbols, ignoring self-loops; the graph must be
/// acyclic otherwise.
pub fn depth(a: &Automaton) -> usize {
    fn longest(a: &Automaton, q: usize, memo: &mut HashMap<usize, usize>) -> usize {
        if let Some(&d) = memo.get(&q) {
            return d;
        }
        let mut best = 0;
        for s in 0..a.alphabet_size() {
            for &r in a.targets(q, s) {
                if r != q {
                    best = best.max(1 + longest(a, r, memo));
                }
            }
        }
        memo.insert(q, best);
        best
    }
    let mut memo = HashMap::new();
    a.initial().iter().map(|&q| longest(a, q, &mut memo)).max().unwrap_or(0)
}

pub fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn satisfies(clauses: &[Vec<i32>], assignment: &[bool]) -> bool {
    clauses.iter().all(|c| {
        c.iter().any(|&l| assignment[l.unsigned_abs() as usize - 1] == (l > 0))
    })
}

pub fn sat(variables: usize, clauses: &[Vec<i32>]) -> bool {
    (0u32..1 << variables).any(|m| {
        let assignment: Vec<bool> = (0..variables).map(|j| m >> j & 1 == 1).collect();
        satisfies(clauses, &assignment)
    })
}

/// Whether the machine reaches its accepting state within the space bound.
pub fn machine_accepts(m: &Dtm, x: &[usize]) -> bool {
    let mut tape: Vec<usize> = (0..m.space_bound).map(|i| x.get(i).copied().unwrap_or(m.blank)).collect();
    let (mut q, mut head) = (m.initial, 0usize);
    let mut seen = HashSet::new();
    while q != m.accepting {
        if !seen.insert((tape.clone(), q, head)) {
            return false;
        }
        let (q2, t2, mv) = m.transitions[&(q, tape[head])];
        tape[head] = t2;
        q = q2;
        match mv {
            Move::L => head -= 1,
            Move::R => head += 1,
            Move::S => {}
        }
    }
    true
}
