//! Finds the c/4 diagonal glider in Life and prints it as RLE.

use shipsearch::{emit_rle, run_search, Outcome, Rule, SearchConfig, SearchParams, Symmetry, Translation};

fn main() {
    let params = SearchParams::new(Rule::LIFE, 4, 1, 4, Symmetry::Asymmetric, Translation::Diagonal).unwrap();
    let result = run_search(&params, &SearchConfig::default(), &mut ()).unwrap();
    match result.status.outcome {
        Outcome::ShipFound(ship) => {
            println!("# {}", ship.descriptor);
            print!("{}", emit_rle(&ship.pattern, &params.rule));
        }
        other => println!("no ship: {other:?}"),
    }
}
