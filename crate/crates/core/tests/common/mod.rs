#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use shipsearch::oracle::{oracle_p2_pruned, Oracle};
use shipsearch::statespace::is_consistent;
use shipsearch::successor::{Lookahead, SuccessorGenerator};
use shipsearch::{Row, Rule, SearchParams, Symmetry, Translation};

/// Every supported mode at a small width.
pub fn small_modes(rule: Rule, rng: &mut impl Rng) -> Vec<SearchParams> {
    modes(rule, rng, 3, 5, 5)
}

/// Every supported mode with period at most `max_period`, each at a random
/// width in `min_width..=max_width`.
pub fn modes(rule: Rule, rng: &mut impl Rng, min_width: u32, max_width: u32, max_period: u32) -> Vec<SearchParams> {
    let mut out = Vec::new();
    let mut add = |p: u32, k, sym, tr| {
        let w = rng.gen_range(min_width..=max_width);
        if p > max_period {
            return;
        }
        if let Ok(params) = SearchParams::new(rule, p, k, w, sym, tr) {
            out.push(params);
        }
    };
    use Symmetry::*;
    use Translation::*;
    for (p, k) in [(2, 1), (3, 1), (3, 2), (4, 1), (4, 3), (5, 2)] {
        add(p, k, Asymmetric, Orthogonal);
    }
    for (p, k) in [(2, 1), (3, 1), (4, 1)] {
        add(p, k, EvenMirror, Orthogonal);
        add(p, k, OddMirror, Orthogonal);
    }
    for (p, k) in [(2, 1), (3, 1), (3, 2), (4, 1)] {
        add(p, k, GlideReflect, Orthogonal);
    }
    for (p, k) in [(2, 1), (3, 1), (4, 1)] {
        add(p, k, Asymmetric, Diagonal);
    }
    out
}

pub fn random_rule(rng: &mut impl Rng) -> Rule {
    let birth = rng.gen_range(0u16..1 << 9) & !1;
    let survive = rng.gen_range(0u16..1 << 9);
    Rule::from_masks(birth, survive).unwrap()
}

/// A state reached by a random walk through consistent rows, as the full
/// row sequence from the dead start.
pub fn random_walk(params: &SearchParams, steps: usize, rng: &mut impl Rng) -> Vec<Row> {
    let gen = SuccessorGenerator::new(params, Lookahead::Off);
    let mut rows = vec![Row::DEAD; params.key_rows()];
    for _ in 0..steps {
        let next = gen.successors(&rows);
        if next.is_empty() {
            break;
        }
        rows.push(next[rng.gen_range(0..next.len())]);
    }
    rows
}

pub struct SweepReport {
    pub rules: usize,
    pub states: usize,
    pub comparisons: usize,
    pub mismatches: Vec<String>,
}

#[derive(Debug, Clone, Copy)]
pub struct SweepOptions {
    pub seed: u64,
    pub rules: usize,
    pub states_per_mode: usize,
    /// Only states reached by random walks; otherwise every other state has
    /// arbitrary rows.
    pub reachable_only: bool,
    pub min_width: u32,
    pub max_width: u32,
    pub max_period: u32,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            seed: 7,
            rules: 6,
            states_per_mode: 6,
            reachable_only: false,
            min_width: 3,
            max_width: 5,
            max_period: 5,
        }
    }
}

/// Compares the fast successor generator against the oracle on random
/// states for several rules (Life and B27/S0 first), every mode and every
/// lookahead setting.
pub fn equivalence_sweep(opts: SweepOptions) -> SweepReport {
    let (seed, n_rules, states_per_mode) = (opts.seed, opts.rules, opts.states_per_mode);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SweepReport {
        rules: 0,
        states: 0,
        comparisons: 0,
        mismatches: Vec::new(),
    };
    for r in 0..n_rules {
        let rule = match r {
            0 => Rule::LIFE,
            1 => "B27/S0".parse().unwrap(),
            _ => random_rule(&mut rng),
        };
        report.rules += 1;
        let p2 = std::sync::Arc::new(oracle_p2_pruned(&rule));
        for params in modes(rule, &mut rng, opts.min_width, opts.max_width, opts.max_period) {
            let mut oracle = Oracle::with_p2_pruned(&params, p2.clone());
            let gens = [Lookahead::Off, Lookahead::Single, Lookahead::Full]
                .map(|la| SuccessorGenerator::new(&params, la));
            for s in 0..states_per_mode {
                let rows = if opts.reachable_only || s % 2 == 0 {
                    random_walk(&params, rng.gen_range(1..20), &mut rng)
                } else {
                    (0..params.lookback())
                        .map(|_| Row::from_bits(rng.gen_range(0..1u32 << params.width)))
                        .collect()
                };
                let history = &rows[rows.len().saturating_sub(params.lookback())..];
                report.states += 1;
                for gen in &gens {
                    let fast = gen.successors(history);
                    let slow = oracle.successors(history, gen.lookahead()).unwrap();
                    report.comparisons += 1;
                    if fast != slow {
                        report.mismatches.push(format!(
                            "{} p{} k{} w{} {:?} {} lookahead {}: history {:?} fast {:?} oracle {:?}",
                            rule, params.period, params.offset, params.width, params.symmetry,
                            params.translation, gen.lookahead(), history, fast, slow
                        ));
                    }
                }
            }
        }
    }
    report
}

/// Checks on random walks that every row the oracle rejects without
/// lookahead really breaks the row equation. Returns the number of rows
/// checked and any counterexamples.
pub fn rejected_rows_violate(seed: u64, samples: usize) -> (usize, Vec<String>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    let mut bad = Vec::new();
    while checked < samples {
        let rule = random_rule(&mut rng);
        for params in small_modes(rule, &mut rng) {
            let rows = random_walk(&params, rng.gen_range(1..12), &mut rng);
            let mut oracle = Oracle::new(&params);
            let history = &rows[rows.len().saturating_sub(params.lookback())..];
            let ok = oracle.successors(history, Lookahead::Off).unwrap();
            let row = Row::from_bits(rng.gen_range(0..1u32 << params.width));
            if ok.contains(&row) {
                continue;
            }
            let mut extended = rows.clone();
            extended.push(row);
            checked += 1;
            if is_consistent(&params, &extended) {
                bad.push(format!("{rule} {params:?}: {row:?} after {rows:?}"));
            }
        }
    }
    (checked, bad)
}
