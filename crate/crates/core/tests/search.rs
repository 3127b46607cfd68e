use shipsearch::oracle::oracle_ship_search;
use shipsearch::search::SearchObserver;
use shipsearch::statespace::extract_ship;
use shipsearch::{
    classify_ship, run_search, FoundShip, Outcome, Rule, SearchConfig, SearchParams, SearchStatus, Symmetry,
    Translation,
};

fn params(p: u32, k: u32, w: u32, sym: Symmetry, tr: Translation) -> SearchParams {
    SearchParams::new(Rule::LIFE, p, k, w, sym, tr).unwrap()
}

fn assert_verifies(params: &SearchParams, ship: &FoundShip) {
    let d = classify_ship(&params.rule, &ship.pattern, params.full_period())
        .unwrap()
        .expect("reported ship is not a ship");
    assert_eq!(d, ship.descriptor);
    let disp = d.dx.abs().max(d.dy.abs());
    assert_eq!(disp * params.period as i64, params.offset as i64 * d.period as i64);
    match params.translation {
        Translation::Orthogonal => assert!(d.dx == 0 || d.dy == 0),
        Translation::Diagonal => assert_eq!(d.dx.abs(), d.dy.abs()),
    }
    assert_eq!(extract_ship(params, &ship.rows), ship.pattern);
}

#[test]
fn no_width_one_c2_ship() {
    let p = params(2, 1, 1, Symmetry::Asymmetric, Translation::Orthogonal);
    let result = run_search(&p, &SearchConfig::default(), &mut ()).unwrap();
    assert_eq!(result.status.outcome, Outcome::Exhausted);
    // No ship of any kind fits in a single column.
    assert!(oracle_ship_search(&Rule::LIFE, 1, 16, 4).unwrap().is_empty());
}

#[test]
fn glider_is_found_diagonally() {
    let p = params(4, 1, 4, Symmetry::Asymmetric, Translation::Diagonal);
    let result = run_search(&p, &SearchConfig::default(), &mut ()).unwrap();
    let Outcome::ShipFound(ship) = &result.status.outcome else { panic!("{:?}", result.status) };
    assert_verifies(&p, ship);
    assert_eq!(ship.pattern.population(), 5);
    // The same shape as the oracle's 3x3 glider phases.
    let gliders = oracle_ship_search(&Rule::LIFE, 3, 3, 4).unwrap();
    assert!(gliders.iter().any(|(g, _)| *g == ship.pattern));
}

/// Records deepening limits and widths as they happen.
#[derive(Default)]
struct Recorder {
    events: Vec<(u32, u32)>,
    max_nodes: usize,
}

impl SearchObserver for Recorder {
    fn deepening(&mut self, s: &SearchStatus, _removed: usize) {
        self.events.push((s.current_width, s.deepening_limit));
        self.max_nodes = self.max_nodes.max(s.nodes_in_arena);
    }
}

#[test]
fn tiny_arena_matches_large_arena() {
    let p = params(2, 1, 5, Symmetry::GlideReflect, Translation::Orthogonal);
    let big = run_search(&p, &SearchConfig::default(), &mut ()).unwrap();
    assert_eq!(big.status.deepening_rounds, 0);
    let config = SearchConfig {
        node_capacity: 10 * 2,
        ..Default::default()
    };
    let mut rec = Recorder::default();
    let small = run_search(&p, &config, &mut rec).unwrap();
    for result in [&big, &small] {
        let Outcome::ShipFound(ship) = &result.status.outcome else { panic!("{:?}", result.status) };
        assert_verifies(&p, ship);
    }
    assert!(small.status.deepening_rounds >= 2);
    assert!(small.peak_nodes <= 20 && rec.max_nodes <= 20);
    assert!(rec.events.windows(2).all(|w| w[0].1 <= w[1].1));
}

#[test]
fn breadth_first_reports_shortest_first() {
    let p = params(2, 1, 5, Symmetry::GlideReflect, Translation::Orthogonal);
    let config = SearchConfig {
        continue_after_find: true,
        max_ships: Some(6),
        ..Default::default()
    };
    let result = run_search(&p, &config, &mut ()).unwrap();
    assert_eq!(result.status.deepening_rounds, 0);
    assert!(result.ships.len() >= 2);
    let lens: Vec<usize> = result.ships.iter().map(|s| s.rows.len()).collect();
    assert!(lens.windows(2).all(|w| w[0] <= w[1]), "{lens:?}");
    for ship in &result.ships {
        assert_verifies(&p, ship);
    }
    let mut shapes: Vec<_> = result.ships.iter().map(|s| s.pattern.clone()).collect();
    shapes.dedup();
    assert_eq!(shapes.len(), result.ships.len());
}

#[test]
fn width_reduction_keeps_narrow_ships() {
    // The c/2 glide-reflect ship needs width 5. Starting at 7 with almost no
    // room to deepen forces one reduction, which drops a column per side.
    let p = params(2, 1, 7, Symmetry::GlideReflect, Translation::Orthogonal);
    let config = SearchConfig {
        node_capacity: 32,
        max_deepening: Some(4),
        ..Default::default()
    };
    let mut rec = Recorder::default();
    let result = run_search(&p, &config, &mut rec).unwrap();
    let Outcome::ShipFound(ship) = &result.status.outcome else { panic!("{:?}", result.status) };
    assert_verifies(&p, ship);
    assert_eq!(result.status.current_width, 5);
    assert!(result.peak_nodes <= 32);
    // Limits only grow between reductions.
    for w in rec.events.windows(2) {
        if w[0].0 == w[1].0 {
            assert!(w[0].1 <= w[1].1, "{:?}", rec.events);
        }
    }
    // Same ship class as a direct search at the narrow width.
    let narrow = params(2, 1, 5, Symmetry::GlideReflect, Translation::Orthogonal);
    let direct = run_search(&narrow, &SearchConfig::default(), &mut ()).unwrap();
    let Outcome::ShipFound(d) = &direct.status.outcome else { panic!() };
    assert_eq!(d.descriptor.speed_string(), ship.descriptor.speed_string());
}

#[test]
fn width_exhaustion_is_reported() {
    let p = params(2, 1, 3, Symmetry::Asymmetric, Translation::Orthogonal);
    let config = SearchConfig {
        node_capacity: 8,
        max_deepening: Some(0),
        ..Default::default()
    };
    let result = run_search(&p, &config, &mut ()).unwrap();
    assert!(
        matches!(result.status.outcome, Outcome::WidthExhausted | Outcome::Exhausted),
        "{:?}",
        result.status
    );
    assert!(result.ships.is_empty());
}
