//! Seedable generators for test corpora. States of the ordered families are
//! numbered along their partial order.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::automaton::{Automaton, StateId};
use crate::reductions::CnfFormula;

pub fn letters(n: usize) -> Vec<String> {
    (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
}

fn assemble(
    rng: &mut impl Rng,
    alphabet_size: usize,
    delta: Vec<Vec<Vec<StateId>>>,
    accept_prob: f64,
) -> Automaton {
    let n = delta.len();
    let mut initial = vec![0];
    if n > 1 && rng.gen_bool(0.25) {
        initial.push(rng.gen_range(1..n));
    }
    let accepting = (0..n).filter(|_| rng.gen_bool(accept_prob)).collect();
    Automaton::from_parts(
        letters(alphabet_size),
        (0..n).map(|q| format!("q{q}")).collect(),
        initial,
        accepting,
        delta,
    )
    .expect("generated automaton is well formed")
}

fn subset(rng: &mut impl Rng, pool: impl Iterator<Item = StateId>, p: f64) -> Vec<StateId> {
    pool.filter(|_| rng.gen_bool(p)).collect()
}

/// Arbitrary NFA; each transition is present with probability `density`.
pub fn random_nfa(rng: &mut impl Rng, states: usize, alphabet_size: usize, density: f64) -> Automaton {
    let delta = (0..states)
        .map(|_| (0..alphabet_size).map(|_| subset(rng, 0..states, density)).collect())
        .collect();
    assemble(rng, alphabet_size, delta, 0.4)
}

/// rpoNFA: every symbol on a state either only loops or moves strictly
/// upward.
pub fn random_rponfa(rng: &mut impl Rng, states: usize, alphabet_size: usize) -> Automaton {
    rponfa_with(rng, states, alphabet_size, false)
}

pub fn random_complete_rponfa(rng: &mut impl Rng, states: usize, alphabet_size: usize) -> Automaton {
    rponfa_with(rng, states, alphabet_size, true)
}

fn rponfa_with(rng: &mut impl Rng, states: usize, alphabet_size: usize, complete: bool) -> Automaton {
    let delta = (0..states)
        .map(|q| {
            (0..alphabet_size)
                .map(|_| {
                    let upward = if rng.gen_bool(0.4) {
                        Vec::new()
                    } else {
                        subset(rng, q + 1..states, 0.45)
                    };
                    if upward.is_empty() && (complete || rng.gen_bool(0.6)) {
                        vec![q]
                    } else {
                        upward
                    }
                })
                .collect()
        })
        .collect();
    assemble(rng, alphabet_size, delta, 0.4)
}

/// Unary poNFA; self-loops may coexist with upward moves.
pub fn random_unary_ponfa(rng: &mut impl Rng, states: usize) -> Automaton {
    let delta = (0..states)
        .map(|q| {
            let mut t = subset(rng, q + 1..states, 0.4);
            if rng.gen_bool(0.5) {
                t.insert(0, q);
            }
            vec![t]
        })
        .collect();
    assemble(rng, 1, delta, 0.4)
}

/// CNF with clauses of up to `width` distinct variables.
pub fn random_cnf(rng: &mut impl Rng, variables: usize, clauses: usize, width: usize) -> CnfFormula {
    let vars: Vec<i32> = (1..=variables as i32).collect();
    let clauses = (0..clauses)
        .map(|_| {
            let len = rng.gen_range(1..=width.min(variables));
            vars.choose_multiple(rng, len)
                .map(|&v| if rng.gen_bool(0.5) { v } else { -v })
                .collect()
        })
        .collect();
    CnfFormula::new(variables, clauses).expect("generated formula is well formed")
}
