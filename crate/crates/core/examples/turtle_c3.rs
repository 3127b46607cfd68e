//! The c/3 even-symmetric search at effective width 6, with progress
//! reporting through an observer.

use shipsearch::search::SearchObserver;
use shipsearch::{
    emit_rle, run_search, FoundShip, Outcome, Rule, SearchConfig, SearchParams, SearchStatus, Symmetry,
    Translation,
};

struct Log;

impl SearchObserver for Log {
    fn progress(&mut self, s: &SearchStatus, rate: f64) {
        eprintln!("level {} queue {} expanded {} ({rate:.0}/s)", s.frontier_level, s.queue_len, s.states_expanded);
    }

    fn ship(&mut self, ship: &FoundShip) {
        eprintln!("found {}", ship.descriptor);
    }
}

fn main() {
    let params = SearchParams::new(Rule::LIFE, 3, 1, 6, Symmetry::EvenMirror, Translation::Orthogonal).unwrap();
    let config = SearchConfig {
        progress_interval: 1000,
        ..Default::default()
    };
    let result = run_search(&params, &config, &mut Log).unwrap();
    if let Outcome::ShipFound(ship) = result.status.outcome {
        print!("{}", emit_rle(&ship.pattern, &params.rule));
    }
}
