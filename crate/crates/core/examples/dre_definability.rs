//! Orbits and definability by deterministic regular expressions.

use ponfa::dre::{has_orbit_property, is_dre_definable, orbits};
use ponfa::format::parse_automaton;
use ponfa::ops::{minimal_dfa, DEFAULT_MAX_SUBSETS};

fn main() -> ponfa::Result<()> {
    for (name, text) in [
        ("(a+b)*b(a+b)", include_str!("data/second_last_b.json")),
        ("b*a(b*a)*", include_str!("data/ends_in_a.json")),
        ("A_2,2", include_str!("data/a22.json")),
    ] {
        let a = parse_automaton(text)?;
        let m = minimal_dfa(&a, DEFAULT_MAX_SUBSETS)?;
        let dec = orbits(&m)?;
        println!(
            "{name}: minimal DFA {} states, {} orbits, orbit property {}, definable {}",
            m.state_count(),
            dec.orbits.len(),
            has_orbit_property(&m)?,
            is_dre_definable(&a)?
        );
    }
    Ok(())
}
