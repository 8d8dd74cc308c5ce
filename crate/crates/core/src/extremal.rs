//! The extremal words `W(k,n)` and the rpoNFAs `A(k,n)` that reject exactly
//! them.
//!
//! `W(k,n) = W(k,n-1) a_n W(k-1,n)` with `W(k,n) = ε` when `kn = 0`. Its
//! length is `C(k+n, n) - 1`, which is also the length of the longest
//! minimal representative of `~R_k` over `n` letters.

use serde::Serialize;

use crate::automaton::{Automaton, ClassTag};
use crate::error::{binomial, Error, Result};
use crate::ops::{self, LanguageSize};
use crate::word::{Symbol, Word};

/// Longest word `build_w` will materialize.
pub const MAX_WORD_LEN: u128 = 1 << 28;

pub fn symbol_tokens(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("a{i}")).collect()
}

pub fn w_length(k: usize, n: usize) -> Result<u128> {
    Ok(binomial((k + n) as u64, n as u64)? - 1)
}

/// `W(k,n)`, built column by column: `col[j]` holds `W(j, n')` for the
/// current `n'`.
pub fn build_w(k: usize, n: usize) -> Result<Word> {
    let len = w_length(k, n)?;
    if len > MAX_WORD_LEN {
        return Err(Error::Capacity {
            what: "extremal word length",
            limit: MAX_WORD_LEN as usize,
        });
    }
    if k == 0 || n == 0 {
        return Ok(Word::empty());
    }
    let mut col: Vec<Vec<Symbol>> = (0..=k).map(|j| vec![0; j]).collect();
    for m in 1..n {
        let mut next: Vec<Vec<Symbol>> = vec![Vec::new(); k + 1];
        for j in 1..=k {
            let mut w = Vec::with_capacity(col[j].len() + 1 + next[j - 1].len());
            w.extend_from_slice(&col[j]);
            w.push(m);
            w.extend_from_slice(&next[j - 1]);
            next[j] = w;
        }
        col = next;
    }
    Ok(Word::new(std::mem::take(&mut col[k])))
}

/// Streams `W(k,n)` symbol by symbol without materializing it.
pub struct WStream {
    // pending work: either a sub-word (k, n) or a literal symbol
    stack: Vec<Frame>,
}

enum Frame {
    Word(usize, usize),
    Symbol(Symbol),
}

impl WStream {
    pub fn new(k: usize, n: usize) -> Self {
        WStream {
            stack: vec![Frame::Word(k, n)],
        }
    }
}

impl Iterator for WStream {
    type Item = Symbol;

    fn next(&mut self) -> Option<Symbol> {
        while let Some(frame) = self.stack.pop() {
            match frame {
                Frame::Symbol(a) => return Some(a),
                Frame::Word(k, n) if k == 0 || n == 0 => {}
                Frame::Word(k, 1) => {
                    self.stack.extend((0..k).map(|_| Frame::Symbol(0)));
                }
                Frame::Word(k, n) => {
                    self.stack.push(Frame::Word(k - 1, n));
                    self.stack.push(Frame::Symbol(n - 1));
                    self.stack.push(Frame::Word(k, n - 1));
                }
            }
        }
        None
    }
}

fn state_name(i: usize, m: usize) -> String {
    format!("({i};{m})")
}

/// `A(k,n)` over `a1..an` with `n(k+2)` states `(i;m)`.
pub fn build_a(k: usize, n: usize) -> Result<Automaton> {
    if k == 0 || n == 0 {
        return Err(Error::Precondition("build_a needs k >= 1 and n >= 1".into()));
    }
    let sigma = symbol_tokens(n);
    let width = k + 2;
    let id = |i: usize, m: usize| (m - 1) * width + i;
    let accepting_state = |i: usize| i != k;
    let mut delta = vec![vec![Vec::new(); n]; n * width];
    for i in 0..=k {
        delta[id(i, 1)][0].push(id(i + 1, 1));
    }
    delta[id(k + 1, 1)][0].push(id(k + 1, 1));
    for layer in 2..=n {
        let a = layer - 1;
        for i in 0..width {
            for b in 0..a {
                delta[id(i, layer)][b].push(id(i, layer));
            }
        }
        for i in 0..=k {
            delta[id(i, layer)][a].push(id(i + 1, layer));
            for m in 1..layer {
                delta[id(i, layer)][a].push(id(i + 1, m));
            }
        }
        delta[id(k + 1, layer)][a].push(id(k + 1, layer));
        for m in 1..layer {
            for i in (0..width).filter(|&i| accepting_state(i)) {
                delta[id(i, m)][a].push(id(k + 1, layer));
            }
        }
    }
    let names = (1..=n)
        .flat_map(|m| (0..width).map(move |i| state_name(i, m)))
        .collect();
    let initial = (1..=n).map(|m| id(0, m)).collect();
    let accepting = (1..=n)
        .flat_map(|m| (0..width).filter(|&i| accepting_state(i)).map(move |i| id(i, m)))
        .collect();
    Automaton::from_parts(sigma, names, initial, accepting, delta)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalReport {
    pub k: usize,
    pub n: usize,
    pub state_count: usize,
    pub expected_states: usize,
    pub class: ClassTag,
    pub word_length: usize,
    pub accepts_w: bool,
    pub rejected_count: LanguageSize,
    pub rejected_word_matches: bool,
    pub min_dfa_states: Option<usize>,
    /// `C(2n, n)` when `k = n`.
    pub min_dfa_bound: Option<u128>,
}

impl ExtremalReport {
    pub fn passed(&self) -> bool {
        self.state_count == self.expected_states
            && self.class == ClassTag::RpoNfa
            && !self.accepts_w
            && self.rejected_count == LanguageSize::Finite(1)
            && self.rejected_word_matches
            && match (self.min_dfa_states, self.min_dfa_bound) {
                (Some(s), Some(b)) => s as u128 >= b,
                _ => true,
            }
    }
}

pub fn verify_extremal(
    k: usize,
    n: usize,
    do_minimize: bool,
    max_subsets: usize,
) -> Result<ExtremalReport> {
    let a = build_a(k, n)?;
    let w = build_w(k, n)?;
    let d = ops::determinize_capped(&a, max_subsets)?;
    let co = ops::complement(&d)?;
    let rejected_count = ops::count_language_size(&co)?;
    let rejected_word_matches = ops::is_empty(&co).witness.as_ref() == Some(&w);
    let min_dfa_states = if do_minimize {
        Some(ops::minimize(&d)?.state_count())
    } else {
        None
    };
    let min_dfa_bound = if do_minimize && k == n {
        Some(binomial(2 * n as u64, n as u64)?)
    } else {
        None
    };
    Ok(ExtremalReport {
        k,
        n,
        state_count: a.state_count(),
        expected_states: n * (k + 2),
        class: a.classify().class,
        word_length: w.len(),
        accepts_w: a.accepts(&w)?,
        rejected_count,
        rejected_word_matches,
        min_dfa_states,
        min_dfa_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tokens(w: &Word, n: usize) -> String {
        w.display_with(&symbol_tokens(n))
    }

    #[test]
    fn small_words() {
        assert_eq!(tokens(&build_w(2, 2).unwrap(), 2), "a1 a1 a2 a1 a2");
        assert_eq!(build_w(0, 3).unwrap(), Word::empty());
        assert_eq!(build_w(3, 0).unwrap(), Word::empty());
        assert_eq!(tokens(&build_w(1, 3).unwrap(), 3), "a1 a2 a3");
    }

    #[test]
    fn stream_matches_table() {
        for k in 0..5 {
            for n in 0..5 {
                let streamed: Word = WStream::new(k, n).collect();
                assert_eq!(streamed, build_w(k, n).unwrap(), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn a11_rejects_only_a1() {
        let a = build_a(1, 1).unwrap();
        assert_eq!(a.state_count(), 3);
        assert!(!a.accepts(&[0]).unwrap());
        assert!(a.accepts(&[]).unwrap());
        assert!(a.accepts(&[0, 0]).unwrap());
    }

    #[test]
    fn a22_shape() {
        let a = build_a(2, 2).unwrap();
        assert_eq!(a.state_count(), 8);
        assert_eq!(a.classify().class, ClassTag::RpoNfa);
        assert!(!a.accepts(&build_w(2, 2).unwrap()).unwrap());
        assert!(a.accepts(&[0, 1, 0, 1]).unwrap());
    }

    #[test]
    fn report_for_small_case() {
        let r = verify_extremal(2, 2, true, ops::DEFAULT_MAX_SUBSETS).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.word_length, 5);
        assert!(r.min_dfa_states.unwrap() >= 6);
    }

    #[test]
    fn last_letter_count_and_minimality() {
        for k in 1..=4 {
            for n in 1..=4 {
                let w = build_w(k, n).unwrap();
                assert_eq!(w.iter().filter(|&&a| a == n - 1).count(), k);
                assert!(crate::subseq::is_minimal_representative(&w, k), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn classes_and_completion() {
        for k in 1..=4 {
            assert_eq!(build_a(k, 1).unwrap().classify().class, ClassTag::PoDfa);
            assert_eq!(build_a(k, 1).unwrap().depth().unwrap(), k + 1);
            for n in 2..=4 {
                let a = build_a(k, n).unwrap();
                assert_eq!(a.classify().class, ClassTag::RpoNfa);
                // only the sink is missing
                assert!(!a.is_complete());
                let c = a.completed();
                assert_eq!(c.state_count(), a.state_count() + 1);
                assert!(c.classify().is_rpo());
            }
        }
    }

    #[test]
    fn depth_of_a22_by_path_enumeration() {
        fn longest(a: &Automaton, q: usize) -> usize {
            let mut best = 0;
            for s in 0..a.alphabet_size() {
                for &r in a.targets(q, s).iter().filter(|&&r| r != q) {
                    best = best.max(1 + longest(a, r));
                }
            }
            best
        }
        let a = build_a(2, 2).unwrap();
        let expected = a.initial().iter().map(|&q| longest(&a, q)).max().unwrap();
        assert_eq!(expected, 4);
        assert_eq!(a.depth().unwrap(), expected);
    }
}
