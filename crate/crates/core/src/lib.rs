//! Partially ordered NFAs and the languages they recognize.
//!
//! The crate is organised bottom-up:
//!
//! * [`automaton`], [`format`] and [`ops`] hold the automaton model, its JSON
//!   form and the classical constructions (subset construction, Moore
//!   minimization, products, complement, counting).
//! * [`subseq`] implements bounded subsequence sets, the prefix-sensitive
//!   congruence built from them, minimal class representatives and the class
//!   DFA of a representative.
//! * [`triviality`] decides R-triviality and k-R-triviality and converts
//!   restricted poNFAs into R-expressions and back.
//! * [`decision`] answers universality, inclusion and equivalence with a
//!   generic subset search and two class-specific strategies.
//! * [`extremal`] builds the extremal words `W(k,n)` and automata `A(k,n)`.
//! * [`reductions`] turns CNF formulas and space-bounded Turing machines into
//!   universality instances.
//! * [`dre`] tests definability by deterministic regular expressions.
//! * [`cli`] binds everything to a command line.

pub mod automaton;
pub mod cli;
pub mod decision;
pub mod dre;
pub mod error;
pub mod extremal;
pub mod format;
pub mod graph;
pub mod ops;
pub mod random;
pub mod reductions;
pub mod subseq;
pub mod triviality;
pub mod word;

pub use automaton::{Automaton, AutomatonBuilder, AutomatonClass, ClassTag, Decision, StateId};
pub use error::{binomial, Error, Result};
pub use word::{Symbol, Word};
