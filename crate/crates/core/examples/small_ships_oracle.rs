//! Enumerates every seed in a small box and reports the spaceships among
//! them. Useful as ground truth for tiny searches.
//!
//! cargo run --release --example small_ships_oracle -- B3/S23 3 3

use shipsearch::oracle::oracle_ship_search;
use shipsearch::{emit_rle, parse_rule};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let rule = parse_rule(args.first().map_or("B3/S23", |s| s.as_str())).expect("bad rule");
    let w = args.get(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    let h = args.get(2).and_then(|a| a.parse().ok()).unwrap_or(3);
    match oracle_ship_search(&rule, w, h, 8) {
        Ok(ships) => {
            println!("{} ship phases in a {w}x{h} box under {rule}", ships.len());
            for (p, d) in ships {
                println!("# {d}\n{}", emit_rle(&p, &rule));
            }
        }
        Err(e) => eprintln!("{e}"),
    }
}
