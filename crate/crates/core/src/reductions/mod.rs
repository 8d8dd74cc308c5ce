//! Hardness reductions: CNF satisfiability to rpoNFA universality, and
//! space-bounded Turing machine acceptance to binary poNFA universality.

pub mod cnf;
pub mod dtm;
mod net;

pub use cnf::{cnf_to_rponfa, parse_dimacs, sat_brute_force, CnfFormula};
pub use dtm::{dtm_to_ponfa, encode_run, Dtm, Move};
