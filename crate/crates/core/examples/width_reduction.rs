//! Starts a glide-reflect c/2 search too wide with a small arena and a low
//! deepening cap, so the search narrows itself until it finds a ship.

use shipsearch::search::SearchObserver;
use shipsearch::{run_search, Outcome, Rule, SearchConfig, SearchParams, Symmetry, Translation};

struct Narrowing;

impl SearchObserver for Narrowing {
    fn width_reduced(&mut self, width: u32) {
        println!("width reduced to {width}");
    }
}

fn main() {
    let params = SearchParams::new(Rule::LIFE, 2, 1, 7, Symmetry::GlideReflect, Translation::Orthogonal).unwrap();
    let config = SearchConfig {
        node_capacity: 32,
        max_deepening: Some(4),
        ..Default::default()
    };
    let result = run_search(&params, &config, &mut Narrowing).unwrap();
    match result.status.outcome {
        Outcome::ShipFound(ship) => println!("{} at width {}", ship.descriptor, result.status.current_width),
        other => println!("{other:?}"),
    }
}
