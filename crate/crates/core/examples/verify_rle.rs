//! Parses RLE (a file argument, or a built-in glider) and classifies it.
//!
//! cargo run --example verify_rle -- ship.rle

use shipsearch::{classify, parse_rle, Rule};

const GLIDER: &str = "#C glider\nx = 3, y = 3, rule = B3/S23\nbo$2bo$3o!\n";

fn main() {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}")),
        None => GLIDER.to_string(),
    };
    let (pattern, rule) = match parse_rle(&text) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("parse error: {e}");
            std::process::exit(2);
        }
    };
    let rule = rule.unwrap_or(Rule::LIFE);
    println!("{}x{} pattern, {} cells, rule {rule}", pattern.width(), pattern.height(), pattern.population());
    match classify(&rule, &pattern, 64) {
        Ok(verdict) => println!("{verdict}"),
        Err(e) => println!("{e}"),
    }
}
