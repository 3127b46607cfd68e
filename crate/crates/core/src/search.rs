//! Breadth-first search over row-sequence states with bounded storage.
//!
//! States are expanded level by level while the arena has room. When it
//! fills up, a depth-first round from every queued state removes the ones
//! that lead nowhere within a depth limit, the arena is compacted, and the
//! breadth-first search resumes.

use std::collections::HashSet;
use std::time::Instant;

use log::{debug, info, warn};
use thiserror::Error;

use crate::pattern::{classify, Classification, Pattern, ShipDescriptor};
use crate::row::Row;
use crate::statespace::{
    extract_ship, make_initial_state, Arena, Geometry, InsertOutcome, NodeId, SearchParams, Translation,
    TranspositionTable,
};
use crate::successor::{ColumnGraph, Lookahead, SuccessorGenerator};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("node capacity {capacity} is below the minimum of {min} (4 * period)")]
    CapacityTooSmall { capacity: usize, min: usize },
    #[error("deepening step must be at least 1")]
    ZeroDelta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Most nodes kept in the arena at once.
    pub node_capacity: usize,
    /// Levels added to the depth limit by each deepening round. Defaults to
    /// the period.
    pub delta: Option<u32>,
    /// When a deepening round would search more than this many levels past
    /// the frontier, the width is reduced instead.
    pub max_deepening: Option<u32>,
    /// Keep searching after a ship is found.
    pub continue_after_find: bool,
    /// Stop after this many distinct ships when continuing.
    pub max_ships: Option<usize>,
    /// Expansions between progress reports; 0 disables them.
    pub progress_interval: u64,
    pub lookahead: Lookahead,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_capacity: 1 << 22,
            delta: None,
            max_deepening: None,
            continue_after_find: false,
            max_ships: None,
            progress_interval: 1 << 20,
            lookahead: Lookahead::Full,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self, params: &SearchParams) -> Result<(), ConfigError> {
        let min = 4 * params.period as usize;
        if self.node_capacity < min {
            return Err(ConfigError::CapacityTooSmall {
                capacity: self.node_capacity,
                min,
            });
        }
        if self.delta == Some(0) {
            return Err(ConfigError::ZeroDelta);
        }
        Ok(())
    }
}

/// A verified ship and the row sequence it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoundShip {
    pub pattern: Pattern,
    pub descriptor: ShipDescriptor,
    pub rows: Vec<Row>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Running,
    ShipFound(FoundShip),
    /// The queue emptied.
    Exhausted,
    /// The width was reduced until nothing was left.
    WidthExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchStatus {
    /// Depth of the deepest queued state.
    pub frontier_level: u32,
    /// Depth limit of the last deepening round, 0 before the first.
    pub deepening_limit: u32,
    pub nodes_in_arena: usize,
    pub queue_len: usize,
    pub states_expanded: u64,
    pub deepening_rounds: u64,
    pub current_width: u32,
    pub outcome: Outcome,
}

/// Everything a search produced.
#[derive(Debug, Clone)]
pub struct SearchResult {
    pub status: SearchStatus,
    /// Distinct verified ships in the order found.
    pub ships: Vec<FoundShip>,
    /// Goal states whose extracted pattern did not verify.
    pub rejected_goals: u64,
    /// Largest arena occupancy seen.
    pub peak_nodes: usize,
}

/// Hooks called while a search runs. All methods default to doing nothing.
pub trait SearchObserver {
    fn progress(&mut self, _status: &SearchStatus, _rate: f64) {}
    fn ship(&mut self, _ship: &FoundShip) {}
    fn deepening(&mut self, _status: &SearchStatus, _removed: usize) {}
    fn width_reduced(&mut self, _width: u32) {}
}

impl SearchObserver for () {}

enum DfsOutcome {
    /// The root reached the depth limit.
    Reached,
    /// Every path from the root dies before the limit.
    Exhausted,
    /// A ship was found and the search should stop.
    Stop,
}

pub struct Search<'o> {
    params: SearchParams,
    config: SearchConfig,
    delta: u32,
    gen: SuccessorGenerator,
    geometry: Geometry,
    arena: Arena,
    tt: TranspositionTable,
    /// Queue is `arena[head..]`.
    head: usize,
    limit: u32,
    status: SearchStatus,
    ships: Vec<FoundShip>,
    seen: HashSet<Pattern>,
    rejected_goals: u64,
    peak_nodes: usize,
    observer: &'o mut dyn SearchObserver,
    graph: ColumnGraph,
    history: Vec<Row>,
    started: Instant,
    last_report: u64,
}

impl<'o> Search<'o> {
    pub fn new(
        params: &SearchParams,
        config: &SearchConfig,
        observer: &'o mut dyn SearchObserver,
    ) -> Result<Self, ConfigError> {
        config.validate(params)?;
        let gen = SuccessorGenerator::new(params, config.lookahead);
        let (arena, root) = make_initial_state(params);
        let key_rows = params.key_rows();
        let mut tt = TranspositionTable::new(2 * config.node_capacity, key_rows);
        tt.insert(&arena, root);
        let status = SearchStatus {
            frontier_level: arena.get(root).depth,
            deepening_limit: 0,
            nodes_in_arena: arena.len(),
            queue_len: 1,
            states_expanded: 0,
            deepening_rounds: 0,
            current_width: params.width,
            outcome: Outcome::Running,
        };
        Ok(Search {
            params: *params,
            config: *config,
            delta: config.delta.unwrap_or(params.period),
            geometry: params.geometry(),
            gen,
            head: root as usize,
            peak_nodes: arena.len(),
            arena,
            tt,
            limit: 0,
            status,
            ships: Vec::new(),
            seen: HashSet::new(),
            rejected_goals: 0,
            observer,
            graph: ColumnGraph::default(),
            history: Vec::new(),
            started: Instant::now(),
            last_report: 0,
        })
    }

    pub fn status(&self) -> &SearchStatus {
        &self.status
    }

    pub fn arena(&self) -> &Arena {
        &self.arena
    }

    /// Runs to completion.
    pub fn run(mut self) -> SearchResult {
        while self.status.outcome == Outcome::Running {
            self.step();
        }
        self.refresh_status();
        SearchResult {
            status: self.status,
            ships: self.ships,
            rejected_goals: self.rejected_goals,
            peak_nodes: self.peak_nodes,
        }
    }

    /// Expands one queued state, or runs a deepening round if there is no
    /// room to do so.
    fn step(&mut self) {
        if self.head >= self.arena.len() {
            self.status.outcome = Outcome::Exhausted;
            return;
        }
        let id = self.head as NodeId;
        self.arena.history_into(id, self.params.lookback(), &mut self.history);
        let mut succ = Vec::new();
        self.gen.successors_into(&self.history, &mut self.graph, &mut succ);
        self.status.states_expanded += 1;
        if self.arena.len() + succ.len() > self.config.node_capacity {
            self.deepen();
            return;
        }
        self.head += 1;
        let key_rows = self.params.key_rows();
        for row in succ {
            let child = self.arena.push(row, id);
            if self.trailing_dead(child, key_rows) {
                self.arena.pop();
                let rows = self.arena_rows_with(id, row);
                if self.report_goal(&rows) {
                    return;
                }
                continue;
            }
            match self.tt.insert(&self.arena, child) {
                InsertOutcome::Fresh => {}
                InsertOutcome::Duplicate(_) => {
                    self.arena.pop();
                }
                InsertOutcome::Replaced(old) => {
                    // Breadth-first order never finds a shallower duplicate.
                    debug_assert!(false, "replaced {old} during BFS");
                }
                InsertOutcome::Full => {
                    // The table is sized at twice the arena; treat as fresh.
                    warn!("transposition table full");
                }
            }
        }
        self.peak_nodes = self.peak_nodes.max(self.arena.len());
        self.maybe_report();
    }

    /// Whether the last `n` rows of the state at `id` are all dead.
    fn trailing_dead(&self, id: NodeId, n: usize) -> bool {
        self.arena.ancestors(id).take(n).all(|node| node.row.is_empty())
    }

    fn arena_rows_with(&self, id: NodeId, row: Row) -> Vec<Row> {
        let mut rows = self.arena.rows(id);
        rows.push(row);
        rows
    }

    /// Handles a state whose last `2p` rows are dead. Returns true when
    /// the search should stop.
    fn report_goal(&mut self, rows: &[Row]) -> bool {
        if rows.iter().all(|r| r.is_empty()) {
            return false;
        }
        let pattern = extract_ship(&self.params, rows);
        let Some(descriptor) = self.verify(&pattern) else {
            self.rejected_goals += 1;
            debug!("goal state did not verify as a ship");
            return false;
        };
        let ship = FoundShip {
            pattern: pattern.clone(),
            descriptor,
            rows: rows.to_vec(),
        };
        if !self.seen.insert(pattern) {
            return false;
        }
        info!("found {descriptor}");
        self.observer.ship(&ship);
        self.ships.push(ship.clone());
        let enough = self.config.max_ships.is_some_and(|m| self.ships.len() >= m);
        if !self.config.continue_after_find || enough {
            self.status.outcome = Outcome::ShipFound(ship);
            return true;
        }
        false
    }

    /// Classifies the pattern and checks that it moves the way the search
    /// parameters say it should.
    fn verify(&self, pattern: &Pattern) -> Option<ShipDescriptor> {
        let Ok(Classification::Ship(d)) = classify(&self.params.rule, pattern, self.params.full_period()) else {
            return None;
        };
        let (p, k) = (self.params.period as i64, self.params.offset as i64);
        let (ax, ay) = (d.dx.abs(), d.dy.abs());
        let direction_ok = match self.params.translation {
            Translation::Orthogonal => ax == 0 || ay == 0,
            Translation::Diagonal => ax == ay,
        };
        (direction_ok && ax.max(ay) * p == k * d.period as i64).then_some(d)
    }

    /// Suspends the breadth-first search for one depth-first round from
    /// every queued state, then compacts the arena.
    fn deepen(&mut self) {
        let frontier = self.arena.get(self.arena.len() as NodeId - 1).depth;
        let limit = (frontier + self.delta).max(self.limit + self.delta);
        if let Some(max) = self.config.max_deepening {
            if limit - frontier > max {
                self.reduce_width();
                return;
            }
        }
        self.limit = limit;
        self.status.deepening_rounds += 1;
        debug!("deepening round to depth {limit} from frontier {frontier}");

        let roots: Vec<NodeId> = (self.head..self.arena.len()).map(|i| i as NodeId).collect();
        let mut keep = vec![false; roots.len()];
        for (slot, &root) in keep.iter_mut().zip(&roots) {
            match self.dfs(root, limit) {
                DfsOutcome::Reached => *slot = true,
                DfsOutcome::Exhausted => {}
                DfsOutcome::Stop => return,
            }
        }
        let removed = keep.iter().filter(|&&k| !k).count();
        self.compact(&keep);
        self.refresh_status();
        self.observer.deepening(&self.status, removed);
    }

    /// Depth-first search from `root` down to depth `limit`. Nodes live in
    /// a local stack; repeated states are only detected along the path.
    fn dfs(&mut self, root: NodeId, limit: u32) -> DfsOutcome {
        let root_depth = self.arena.get(root).depth;
        if root_depth >= limit {
            return DfsOutcome::Reached;
        }
        let lookback = self.params.lookback();
        let key_rows = self.params.key_rows();
        let root_live = self.arena.ancestors(root).any(|n| !n.row.is_empty());
        let mut path = Vec::new();
        self.arena.history_into(root, lookback, &mut path);
        let base = path.len();

        let mut levels: Vec<(Vec<Row>, usize)> = Vec::new();
        let mut first = Vec::new();
        self.gen.successors_into(&path, &mut self.graph, &mut first);
        self.status.states_expanded += 1;
        levels.push((first, 0));

        while let Some((rows, cursor)) = levels.last_mut() {
            if *cursor == rows.len() {
                levels.pop();
                continue;
            }
            let row = rows[*cursor];
            *cursor += 1;
            let level = levels.len();
            path.truncate(base + level - 1);
            path.push(row);
            let depth = root_depth + level as u32;

            if path[path.len() - key_rows..].iter().all(|r| r.is_empty()) {
                if root_live || path[base..].iter().any(|r| !r.is_empty()) {
                    let mut rows = self.arena.rows(root);
                    rows.extend_from_slice(&path[base..]);
                    if self.report_goal(&rows) {
                        return DfsOutcome::Stop;
                    }
                }
                continue;
            }
            if depth >= limit {
                return DfsOutcome::Reached;
            }
            // A state repeating an earlier one on this path adds nothing.
            let key = &path[path.len() - key_rows..];
            let repeats = (key_rows..path.len()).any(|end| &path[end - key_rows..end] == key);
            if repeats {
                continue;
            }
            let mut next = Vec::new();
            self.gen.successors_into(&path[path.len() - lookback..], &mut self.graph, &mut next);
            self.status.states_expanded += 1;
            levels.push((next, 0));
            self.maybe_report();
        }
        DfsOutcome::Exhausted
    }

    /// Keeps the queued states flagged in `keep` (indexed from the queue
    /// head) with their ancestors, and rebuilds the transposition table.
    fn compact(&mut self, keep: &[bool]) {
        let n = self.arena.len();
        let mut retain = vec![false; n];
        for (offset, &k) in keep.iter().enumerate() {
            let mut id = (self.head + offset) as NodeId;
            if !k {
                continue;
            }
            while id != crate::statespace::NO_PARENT && !retain[id as usize] {
                retain[id as usize] = true;
                id = self.arena.get(id).parent;
            }
        }
        let new_head = retain[..self.head].iter().filter(|&&r| r).count();
        self.arena.retain(&retain);
        self.head = new_head;
        self.tt.clear();
        for id in 0..self.arena.len() {
            self.tt.insert(&self.arena, id as NodeId);
        }
        if self.head >= self.arena.len() {
            self.status.outcome = Outcome::Exhausted;
        }
    }

    /// Drops the outermost column, discards queued states with live cells
    /// there and resets the depth limit.
    fn reduce_width(&mut self) {
        let Some(narrow) = self.geometry.reduced() else {
            self.status.outcome = Outcome::WidthExhausted;
            return;
        };
        info!("reducing width to {}", narrow.width);
        self.geometry = narrow;
        self.gen.set_geometry(narrow);
        self.limit = 0;
        let mask = narrow.mask();
        let lookback = self.params.lookback();
        let keep: Vec<bool> = (self.head..self.arena.len())
            .map(|i| {
                self.arena
                    .ancestors(i as NodeId)
                    .take(lookback)
                    .all(|n| n.row.bits() & !mask == 0)
            })
            .collect();
        self.compact(&keep);
        self.status.current_width = narrow.width;
        self.refresh_status();
        self.observer.width_reduced(narrow.width);
    }

    fn refresh_status(&mut self) {
        self.status.nodes_in_arena = self.arena.len();
        self.status.queue_len = self.arena.len().saturating_sub(self.head);
        self.status.frontier_level = self.arena.nodes().last().map_or(0, |n| n.depth);
        self.status.deepening_limit = self.limit;
    }

    fn maybe_report(&mut self) {
        let interval = self.config.progress_interval;
        if interval == 0 || self.status.states_expanded - self.last_report < interval {
            return;
        }
        self.last_report = self.status.states_expanded;
        self.refresh_status();
        let rate = self.status.states_expanded as f64 / self.started.elapsed().as_secs_f64().max(1e-9);
        self.observer.progress(&self.status, rate);
    }
}

/// Runs a search to completion.
pub fn run_search(
    params: &SearchParams,
    config: &SearchConfig,
    observer: &mut dyn SearchObserver,
) -> Result<SearchResult, ConfigError> {
    Ok(Search::new(params, config, observer)?.run())
}
