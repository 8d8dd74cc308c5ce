//! Subsequence sets, the prefix-refined congruence and its class automata.

use ponfa::subseq::{class_dfa, enumerate_minimal_representatives, longest_representative_length, sim_k, sim_rk, sub_k};
use ponfa::Word;

fn main() -> ponfa::Result<()> {
    let sigma = vec!["a".to_string(), "b".to_string()];
    let u = Word::new(vec![0, 1, 0]);
    let v = Word::new(vec![1, 0, 1, 0]);
    let shown: Vec<String> = sub_k(&u, 2).members().iter().map(|w| w.display_with(&sigma)).collect();
    println!("sub_2(aba) = {{{}}}", shown.join(", "));
    println!("aba ~2 baba: {}, prefix-refined: {}", sim_k(&u, &v, 2), sim_rk(&u, &v, 2));

    let k = 2;
    let reps: Vec<Word> = enumerate_minimal_representatives(2, k, 16)?.collect();
    println!("{} classes for k={k} over two letters; longest representative {}", reps.len(), longest_representative_length(2, k)?);
    for w in reps.iter().take(8) {
        println!("  {}", w.display_with(&sigma));
    }

    let d = class_dfa(&u, k, &sigma)?;
    println!("class automaton of aba: {} states", d.state_count());
    for w in Word::all_up_to(2, 5) {
        if d.accepts(&w)? {
            println!("  member {}", w.display_with(&sigma));
        }
    }
    Ok(())
}
