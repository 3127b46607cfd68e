//! Runs the same search with a roomy and a tiny node arena. The tiny one
//! has to fall back on depth-first rounds and compaction.

use shipsearch::search::SearchObserver;
use shipsearch::{run_search, Outcome, Rule, SearchConfig, SearchParams, SearchStatus, Symmetry, Translation};

struct Rounds;

impl SearchObserver for Rounds {
    fn deepening(&mut self, s: &SearchStatus, removed: usize) {
        println!(
            "  round to depth {}: removed {removed} roots, {} queued, {} nodes",
            s.deepening_limit, s.queue_len, s.nodes_in_arena
        );
    }
}

fn main() {
    let params = SearchParams::new(Rule::LIFE, 2, 1, 5, Symmetry::GlideReflect, Translation::Orthogonal).unwrap();
    for capacity in [1 << 22, 20] {
        println!("capacity {capacity}:");
        let config = SearchConfig {
            node_capacity: capacity,
            ..Default::default()
        };
        let result = run_search(&params, &config, &mut Rounds).unwrap();
        let found = match &result.status.outcome {
            Outcome::ShipFound(s) => format!("{} ({} rows)", s.descriptor, s.rows.len()),
            other => format!("{other:?}"),
        };
        println!("  {found}; peak {} nodes, {} expansions", result.peak_nodes, result.status.states_expanded);
    }
}
