//! A space-bounded machine and the poNFA missing exactly its accepting run.

use ponfa::decision::{is_universal, DecisionOptions, Strategy};
use ponfa::reductions::dtm::simulate;
use ponfa::reductions::{dtm_to_ponfa, encode_run, Dtm};

fn main() -> ponfa::Result<()> {
    let m = Dtm::parse(include_str!("data/bounce.json"))?;
    for input in ["1", "11", ""] {
        let x = m.parse_input(input)?;
        let outcome = simulate(&m, &x)?;
        let a = dtm_to_ponfa(&m, &x)?;
        let r = is_universal(&a, Strategy::Generic, DecisionOptions::default())?;
        println!(
            "input {input:?}: accepted {}, automaton {} states ({}), universal {}",
            matches!(outcome, ponfa::reductions::dtm::RunOutcome::Accepted(_)),
            a.state_count(),
            a.classify().class.as_str(),
            r.decision.holds
        );
        if let Some(run) = encode_run(&m, &x)? {
            let bits: String = run.iter().map(|b| char::from(b'0' + *b as u8)).collect();
            println!("  run encoding {bits}");
        }
    }
    Ok(())
}
