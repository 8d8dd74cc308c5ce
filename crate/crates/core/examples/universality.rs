//! Universality, inclusion and equivalence under the three strategies.

use ponfa::decision::{equivalent, includes, is_universal, DecisionOptions, Strategy};
use ponfa::format::parse_automaton;
use ponfa::AutomatonBuilder;
use ponfa::ops::minimal_dfa;

fn main() -> ponfa::Result<()> {
    let a = parse_automaton(include_str!("data/a22.json"))?;
    let opts = DecisionOptions::default();
    for s in [Strategy::Generic, Strategy::RponfaBounded, Strategy::Auto] {
        let r = is_universal(&a, s, opts)?;
        let witness = r.decision.witness.as_ref().map(|w| w.display_with(a.alphabet()));
        println!("{:>14}: universal={} witness={:?} via {}", s.to_string(), r.decision.holds, witness, r.strategy);
        println!("{:>14}  {:?}", "", r.stats);
    }

    let unary = parse_automaton(include_str!("data/unary_gap.json"))?;
    let r = is_universal(&unary, Strategy::UnaryPo, opts)?;
    println!("unary gap: universal={} witness length {:?}", r.decision.holds, r.decision.witness.map(|w| w.len()));

    let d = minimal_dfa(&a, opts.max_subsets)?;
    println!("A ⊆ min(A): {}", includes(&a, &d, Strategy::Generic, opts)?.decision.holds);
    println!("A ≡ min(A): {}", equivalent(&a, &d, Strategy::Auto, opts)?.decision.holds);

    let mut all = AutomatonBuilder::new(a.alphabet().to_vec());
    all.initial("u").accepting("u");
    all.loops("u", &["a1", "a2"])?;
    let e = equivalent(&a, &all.build()?, Strategy::Generic, opts)?;
    let w = e.decision.witness.expect("languages differ");
    println!("A vs Σ*: differ on {} ({:?})", w.display_with(a.alphabet()), e.direction);
    Ok(())
}
