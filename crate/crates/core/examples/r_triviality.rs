//! R-triviality, k-R-triviality and R-expressions of an rpoNFA.

use ponfa::extremal::build_a;
use ponfa::format::parse_automaton;
use ponfa::ops::DEFAULT_MAX_SUBSETS;
use ponfa::triviality::{
    is_k_r_trivial, is_k_r_trivial_oracle, is_r_trivial, rponfa_to_r_expressions, TrivialityOptions,
    DEFAULT_MAX_PATHS,
};

fn main() -> ponfa::Result<()> {
    let a = build_a(2, 1)?;
    println!("A_2,1 R-trivial: {}", is_r_trivial(&a, DEFAULT_MAX_SUBSETS)?.holds);
    let complete = a.completed();
    println!("depth of its completion: {}", complete.depth()?);
    for k in 1..=3 {
        let v = is_k_r_trivial(&a, k, TrivialityOptions::default())?;
        let o = is_k_r_trivial_oracle(&a, k, TrivialityOptions::default())?;
        print!("k={k}: {} (oracle {})", v.holds, o.holds);
        if let Some(s) = v.split_class {
            print!(
                "  class of {} holds {} and {}",
                s.representative.display_with(a.alphabet()),
                s.member_in.display_with(a.alphabet()),
                s.member_out.display_with(a.alphabet())
            );
        }
        println!();
    }

    for e in rponfa_to_r_expressions(&a, DEFAULT_MAX_PATHS)? {
        println!("  {}", e.display_with(a.alphabet()));
    }

    let b = parse_automaton(include_str!("data/ends_in_a.json"))?;
    let v = is_r_trivial(&b, DEFAULT_MAX_SUBSETS)?;
    let c = v.cycle.expect("a cycle exists");
    println!(
        "(b*a)+ R-trivial: {} (after {} the word {} returns to the same state)",
        v.holds,
        c.prefix.display_with(b.alphabet()),
        c.cycle.display_with(b.alphabet())
    );
    Ok(())
}
