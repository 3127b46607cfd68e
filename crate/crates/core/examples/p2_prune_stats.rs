//! Builds the period-2 pruning table for a few rules and prints the
//! fraction of pruned entries.
//!
//! cargo run --example p2_prune_stats -- B3/S23 B27/S0

use std::time::Instant;

use shipsearch::successor::P2Table;
use shipsearch::parse_rule;

fn main() {
    let mut rules: Vec<String> = std::env::args().skip(1).collect();
    if rules.is_empty() {
        rules = vec!["B3/S23".into(), "B27/S0".into(), "B36/S23".into()];
    }
    for text in rules {
        let rule = match parse_rule(&text) {
            Ok(r) => r,
            Err(e) => {
                eprintln!("{text}: {e}");
                continue;
            }
        };
        let start = Instant::now();
        let table = P2Table::new(&rule);
        println!(
            "{rule}: pruned {:.2}% ({} of {}) in {:.3}s",
            100.0 * table.pruned_fraction(),
            table.pruned_count(),
            P2Table::SIZE,
            start.elapsed().as_secs_f64()
        );
    }
}
