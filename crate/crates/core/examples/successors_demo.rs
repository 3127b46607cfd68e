//! Shows the rows that may follow a small state under each lookahead
//! setting, next to the brute-force reference.

use shipsearch::oracle::Oracle;
use shipsearch::successor::{Lookahead, SuccessorGenerator};
use shipsearch::{Row, Rule, SearchParams};

fn main() {
    let params = SearchParams::orthogonal(Rule::LIFE, 3, 1, 5).unwrap();
    // Oldest first; the last row is r[i-1].
    let history: Vec<Row> = ["00000", "00000", "00000", "00000", "00000", "01100"]
        .iter()
        .map(|s| Row::parse_bits(s).unwrap())
        .collect();
    let mut oracle = Oracle::new(&params);
    for la in [Lookahead::Off, Lookahead::Single, Lookahead::Full] {
        let fast = SuccessorGenerator::new(&params, la).successors(&history);
        let slow = oracle.successors(&history, la).unwrap();
        let shown: Vec<String> = fast.iter().map(|r| r.to_bit_string(params.width)).collect();
        println!("{la:>6}: {:2} rows, oracle agrees: {}", fast.len(), fast == slow);
        println!("        {}", shown.join(" "));
    }
}
