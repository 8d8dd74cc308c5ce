//! Orbits of deterministic automata and definability by deterministic
//! regular expressions.
//!
//! Definability is decided by the Brüggemann-Klein–Wood recursion: take the
//! trimmed minimal DFA, cut the transitions of its consistent symbols out
//! of the accepting states, require the orbit property, and recurse into
//! every orbit automaton after minimizing it again.

use crate::automaton::{Automaton, StateId};
use crate::error::{Error, Result};
use crate::graph::scc;
use crate::ops::{minimize, minimal_dfa, DEFAULT_MAX_SUBSETS};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDecomposition {
    /// Orbits ordered by their least state; members ascending.
    pub orbits: Vec<Vec<StateId>>,
    pub orbit_of: Vec<usize>,
    /// Per orbit, the states that accept or have a transition leaving it.
    pub gates: Vec<Vec<StateId>>,
    /// Per orbit, whether it carries a cycle (a self-loop suffices).
    pub cyclic: Vec<bool>,
}

/// Partial DFA; `delta[q][a]` is the unique successor if any.
#[derive(Clone, Debug)]
struct Pdfa {
    delta: Vec<Vec<Option<StateId>>>,
    initial: StateId,
    accepting: Vec<bool>,
}

impl Pdfa {
    fn from_automaton(d: &Automaton) -> Result<Pdfa> {
        if !d.is_deterministic() {
            return Err(Error::Precondition("orbit analysis needs a deterministic automaton".into()));
        }
        Ok(Pdfa {
            delta: d
                .delta()
                .iter()
                .map(|row| row.iter().map(|t| t.first().copied()).collect())
                .collect(),
            initial: d.initial()[0],
            accepting: d.accepting_mask().to_vec(),
        })
    }

    fn len(&self) -> usize {
        self.delta.len()
    }

    fn transition_count(&self) -> usize {
        self.delta.iter().flatten().filter(|t| t.is_some()).count()
    }

    fn to_automaton(&self, alphabet: &[String]) -> Result<Automaton> {
        let delta = self
            .delta
            .iter()
            .map(|row| row.iter().map(|t| t.iter().copied().collect()).collect())
            .collect();
        Automaton::from_parts(
            alphabet.to_vec(),
            (0..self.len()).map(|q| format!("s{q}")).collect(),
            vec![self.initial],
            (0..self.len()).filter(|&q| self.accepting[q]).collect(),
            delta,
        )
    }

    /// Restriction to useful states, or `None` for the empty language.
    fn trimmed(d: &Automaton) -> Result<Option<Pdfa>> {
        let p = Pdfa::from_automaton(d)?;
        let reach = d.reachable_states();
        let co = d.coreachable();
        let keep: Vec<bool> = (0..p.len()).map(|q| reach[q] && co[q]).collect();
        if !keep[p.initial] {
            return Ok(None);
        }
        let mut id = vec![usize::MAX; p.len()];
        let mut next = 0;
        for q in 0..p.len() {
            if keep[q] {
                id[q] = next;
                next += 1;
            }
        }
        let delta = (0..p.len())
            .filter(|&q| keep[q])
            .map(|q| {
                p.delta[q]
                    .iter()
                    .map(|t| t.filter(|&r| keep[r]).map(|r| id[r]))
                    .collect()
            })
            .collect();
        Ok(Some(Pdfa {
            delta,
            initial: id[p.initial],
            accepting: (0..p.len()).filter(|&q| keep[q]).map(|q| p.accepting[q]).collect(),
        }))
    }

    fn minimal(&self, alphabet: &[String]) -> Result<Option<Pdfa>> {
        let m = minimize(&self.to_automaton(alphabet)?.completed())?;
        Pdfa::trimmed(&m)
    }

    fn orbits(&self) -> OrbitDecomposition {
        let adj: Vec<Vec<StateId>> = self
            .delta
            .iter()
            .map(|row| row.iter().flatten().copied().collect())
            .collect();
        let (comp, count) = scc(&adj);
        // renumber components by least member
        let mut order = vec![usize::MAX; count];
        let mut orbits = Vec::new();
        for q in 0..self.len() {
            if order[comp[q]] == usize::MAX {
                order[comp[q]] = orbits.len();
                orbits.push(Vec::new());
            }
            orbits[order[comp[q]]].push(q);
        }
        let orbit_of: Vec<usize> = (0..self.len()).map(|q| order[comp[q]]).collect();
        let gates = orbits
            .iter()
            .map(|states| {
                states
                    .iter()
                    .copied()
                    .filter(|&q| {
                        self.accepting[q] || adj[q].iter().any(|&r| orbit_of[r] != orbit_of[q])
                    })
                    .collect()
            })
            .collect();
        let cyclic = orbits
            .iter()
            .map(|states| states.len() > 1 || adj[states[0]].contains(&states[0]))
            .collect();
        OrbitDecomposition {
            orbits,
            orbit_of,
            gates,
            cyclic,
        }
    }

    fn exit(&self, dec: &OrbitDecomposition, q: StateId, a: usize) -> Option<StateId> {
        self.delta[q][a].filter(|&r| dec.orbit_of[r] != dec.orbit_of[q])
    }

    fn has_orbit_property(&self, dec: &OrbitDecomposition) -> bool {
        let symbols = self.delta.first().map_or(0, Vec::len);
        dec.gates.iter().all(|gates| {
            gates.windows(2).all(|pair| {
                let (g, h) = (pair[0], pair[1]);
                self.accepting[g] == self.accepting[h]
                    && (0..symbols).all(|a| self.exit(dec, g, a) == self.exit(dec, h, a))
            })
        })
    }

    /// Symbols on which every accepting state moves to one common state.
    fn consistent_symbols(&self) -> Vec<usize> {
        let symbols = self.delta.first().map_or(0, Vec::len);
        let finals: Vec<StateId> = (0..self.len()).filter(|&q| self.accepting[q]).collect();
        (0..symbols)
            .filter(|&a| {
                let first = self.delta[finals[0]][a];
                first.is_some() && finals.iter().all(|&f| self.delta[f][a] == first)
            })
            .collect()
    }

    /// Orbit automaton of `orbit`: transitions inside it only, accepting at
    /// its gates, started at its least state.
    fn orbit_automaton(&self, dec: &OrbitDecomposition, orbit: usize) -> Pdfa {
        let states = &dec.orbits[orbit];
        let local = |q: StateId| states.binary_search(&q).ok();
        Pdfa {
            delta: states
                .iter()
                .map(|&q| self.delta[q].iter().map(|t| t.and_then(local)).collect())
                .collect(),
            initial: 0,
            accepting: states.iter().map(|q| dec.gates[orbit].contains(q)).collect(),
        }
    }
}

pub fn orbits(d: &Automaton) -> Result<OrbitDecomposition> {
    Ok(Pdfa::from_automaton(d)?.orbits())
}

pub fn has_orbit_property(d: &Automaton) -> Result<bool> {
    let p = Pdfa::from_automaton(d)?;
    Ok(p.has_orbit_property(&p.orbits()))
}

pub fn is_dre_definable(a: &Automaton) -> Result<bool> {
    is_dre_definable_capped(a, DEFAULT_MAX_SUBSETS)
}

pub fn is_dre_definable_capped(a: &Automaton, max_subsets: usize) -> Result<bool> {
    let m = minimal_dfa(a, max_subsets)?;
    match Pdfa::trimmed(&m)? {
        None => Ok(true),
        Some(p) => {
            let guard = p.transition_count() + 1;
            definable(&p, a.alphabet(), 0, guard)
        }
    }
}

// `p` is the trimmed minimal DFA of a nonempty language.
fn definable(p: &Pdfa, alphabet: &[String], depth: usize, guard: usize) -> Result<bool> {
    if depth > guard {
        return Err(Error::Capacity {
            what: "orbit recursion depth",
            limit: guard,
        });
    }
    let whole = p.orbits();
    let consistent = p.consistent_symbols();
    if whole.orbits.len() == 1 && whole.cyclic[0] && consistent.is_empty() {
        return Ok(false);
    }
    let mut cut = p.clone();
    for q in 0..cut.len() {
        if cut.accepting[q] {
            for &a in &consistent {
                cut.delta[q][a] = None;
            }
        }
    }
    let dec = cut.orbits();
    if !cut.has_orbit_property(&dec) {
        return Ok(false);
    }
    for orbit in 0..dec.orbits.len() {
        if !dec.cyclic[orbit] {
            continue;
        }
        if let Some(sub) = cut.orbit_automaton(&dec, orbit).minimal(alphabet)? {
            if !definable(&sub, alphabet, depth + 1, guard)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
