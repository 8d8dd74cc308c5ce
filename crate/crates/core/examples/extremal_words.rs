//! The words W_{k,n} and the rpoNFAs A_{k,n} that reject exactly them.
//!
//! ```text
//! cargo run --example extremal_words -- 3 2
//! ```

use ponfa::extremal::{build_a, build_w, symbol_tokens, verify_extremal, w_length};
use ponfa::ops::DEFAULT_MAX_SUBSETS;

fn main() -> ponfa::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let (k, n) = match args.as_slice() {
        [k, n, ..] => (*k, *n),
        _ => (2, 2),
    };

    println!("lengths |W_k,n| for k, n <= 4:");
    for k in 1..=4 {
        let row: Vec<String> = (1..=4).map(|n| w_length(k, n).unwrap().to_string()).collect();
        println!("  k={k}: {}", row.join(" "));
    }

    let w = build_w(k, n)?;
    println!("W_{k},{n} = {}", w.tokens(&symbol_tokens(n)).join(" "));

    let a = build_a(k, n)?;
    println!("A_{k},{n}: {} states, class {}", a.state_count(), a.classify().class.as_str());

    let report = verify_extremal(k, n, k == n && n <= 3, DEFAULT_MAX_SUBSETS)?;
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    Ok(())
}
