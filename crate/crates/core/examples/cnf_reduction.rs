//! Satisfiability as non-universality of an rpoNFA.

use ponfa::decision::{is_universal, DecisionOptions, Strategy};
use ponfa::reductions::cnf::decode_assignment;
use ponfa::reductions::{cnf_to_rponfa, parse_dimacs, sat_brute_force};

fn main() -> ponfa::Result<()> {
    for (name, text) in [
        ("xor", include_str!("data/xor.cnf")),
        ("contradiction", include_str!("data/contradiction.cnf")),
    ] {
        let f = parse_dimacs(text)?;
        let a = cnf_to_rponfa(&f)?;
        let r = is_universal(&a, Strategy::Generic, DecisionOptions::default())?;
        println!(
            "{name}: {} states, class {}, satisfiable {}, universal {}",
            a.state_count(),
            a.classify().class.as_str(),
            sat_brute_force(&f)?,
            r.decision.holds
        );
        if let Some(w) = r.decision.witness {
            println!("  model {:?}", decode_assignment(&w));
        }
    }
    Ok(())
}
