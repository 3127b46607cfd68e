//! Searches for c/2 glide-reflect ships in Life and lists the first few
//! distinct ones, shortest first.
//!
//! cargo run --example c2_glide -- [width] [count]

use shipsearch::{emit_rle, run_search, Rule, SearchConfig, SearchParams, Symmetry, Translation};

fn main() {
    let mut args = std::env::args().skip(1);
    let width = args.next().and_then(|a| a.parse().ok()).unwrap_or(6);
    let count = args.next().and_then(|a| a.parse().ok()).unwrap_or(4);
    let params = SearchParams::new(Rule::LIFE, 2, 1, width, Symmetry::GlideReflect, Translation::Orthogonal).unwrap();
    let config = SearchConfig {
        continue_after_find: true,
        max_ships: Some(count),
        ..Default::default()
    };
    let result = run_search(&params, &config, &mut ()).unwrap();
    for ship in &result.ships {
        println!("# {} rows, {} cells, {}", ship.rows.len(), ship.pattern.population(), ship.descriptor);
        println!("{}", emit_rle(&ship.pattern, &params.rule));
    }
    println!("# {} ships, {} states expanded", result.ships.len(), result.status.states_expanded);
}
