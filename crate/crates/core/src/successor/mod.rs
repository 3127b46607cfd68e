//! Successor generation: every row that can extend a state.
//!
//! The candidates for the new row `r[i]` and the lookahead row `r[i+p-k]`
//! are found together as paths through a graph with one column per cell
//! position. Stage 1 fills the edge sets from table lookups, stage 2
//! propagates reachability from the left boundary, and stage 3 walks back
//! from the right boundary listing each distinct `r[i]`.

mod graph;
mod tables;

pub use graph::{backward, forward, stage2_reach, stage3_enumerate, ColumnGraph, MAX_EDGES};
pub use tables::{edge_index, edge_triples, ConstraintTables, P2Table};

use std::fmt;
use std::str::FromStr;

use crate::row::Row;
use crate::statespace::{constraint_indices, Geometry, SearchParams, Symmetry};

/// How much of the future the successor filter looks at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Lookahead {
    /// The row equation for the new row only.
    Off,
    /// Also require some `r[i+p-k]` satisfying the shifted equation.
    Single,
    /// Also filter each `r[i+p-k]` triple by the approximate double
    /// lookahead, or by the pruning table when `p = 2`.
    #[default]
    Full,
}

impl FromStr for Lookahead {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "off" | "none" => Ok(Lookahead::Off),
            "single" => Ok(Lookahead::Single),
            "full" => Ok(Lookahead::Full),
            _ => Err(format!("unknown lookahead {s:?}")),
        }
    }
}

impl fmt::Display for Lookahead {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Lookahead::Off => "off",
            Lookahead::Single => "single",
            Lookahead::Full => "full",
        })
    }
}

/// Known rows of one successor computation, read through the geometry.
struct Knowns {
    above: u64,
    mid: u64,
    out: u64,
    above_l: u64,
    mid_l: u64,
    ll_x: u64,
    ll_y: u64,
}

pub struct SuccessorGenerator {
    params: SearchParams,
    geometry: Geometry,
    tables: ConstraintTables,
    lookahead: Lookahead,
    range: Vec<u64>,
    start: u16,
}

impl SuccessorGenerator {
    pub fn new(params: &SearchParams, lookahead: Lookahead) -> Self {
        Self::with_tables(params, ConstraintTables::new(params), lookahead)
    }

    pub fn with_tables(params: &SearchParams, tables: ConstraintTables, lookahead: Lookahead) -> Self {
        let mut gen = SuccessorGenerator {
            params: *params,
            geometry: params.geometry(),
            tables,
            lookahead,
            range: Vec::new(),
            start: 0,
        };
        gen.set_geometry(params.geometry());
        gen
    }

    pub fn params(&self) -> &SearchParams {
        &self.params
    }

    pub fn geometry(&self) -> &Geometry {
        &self.geometry
    }

    pub fn tables(&self) -> &ConstraintTables {
        &self.tables
    }

    pub fn lookahead(&self) -> Lookahead {
        self.lookahead
    }

    /// Switches to a different strip, e.g. after a width reduction. The
    /// tables do not depend on the width and are kept.
    pub fn set_geometry(&mut self, geometry: Geometry) {
        self.geometry = geometry;
        let l = geometry.layout_offset();
        self.range = (0..geometry.edge_count())
            .map(|e| {
                let t = e as i32 + l;
                let mut mask = 0u64;
                for idx6 in 0..64u32 {
                    let (a, b) = edge_triples(idx6);
                    let in_range = (0..3).all(|j| {
                        geometry.cell_free(t + j) || (a >> j & 1 == 0 && b >> j & 1 == 0)
                    });
                    // An odd mirror reflects cell -1 onto cell 1.
                    let mirrored = geometry.symmetry != Symmetry::OddMirror
                        || e != 0
                        || (a & 1 == a >> 2 & 1 && b & 1 == b >> 2 & 1);
                    if in_range && mirrored {
                        mask |= 1 << idx6;
                    }
                }
                mask
            })
            .collect();
        self.start = match geometry.symmetry {
            Symmetry::EvenMirror => 1 << 0 | 1 << 5 | 1 << 10 | 1 << 15,
            Symmetry::OddMirror => 0xFFFF,
            _ => 1,
        };
    }

    fn knowns(&self, history: &[Row]) -> Knowns {
        let fetch = |index: i64| {
            // Indices are relative to the new row at 0.
            let d = (-index) as usize;
            if d <= history.len() {
                history[history.len() - d]
            } else {
                Row::DEAD
            }
        };
        let c = constraint_indices(&self.params, 0);
        let g = &self.geometry;
        let ext = |r: &crate::statespace::RowRef| g.extended(fetch(r.index), r.reversed);
        let (p, k) = (self.params.period as i64, self.params.offset as i64);
        let rm = c.star.mid.reversed;
        let (ll_x, ll_y) = if self.tables.p2.is_some() {
            (g.extended(fetch(-2), false), g.extended(fetch(-1), false))
        } else {
            (
                g.extended(fetch(-2 * k), false),
                g.extended(fetch(-p - 2 * k), rm),
            )
        };
        Knowns {
            above: ext(&c.star.above),
            mid: ext(&c.star.mid),
            out: ext(&c.star.out),
            above_l: ext(&c.lookahead.above),
            mid_l: ext(&c.lookahead.mid),
            ll_x,
            ll_y,
        }
    }

    /// Stage 1: the edge set of every column pair. `history` holds the
    /// state's most recent rows, oldest first, ending with `r[i-1]`; rows
    /// before its start are dead.
    pub fn stage1_edges(&self, history: &[Row], graph: &mut ColumnGraph) {
        let kn = self.knowns(history);
        let s = self.params.shear();
        let l = self.geometry.layout_offset();
        let t = &self.tables;
        let win = Geometry::window;
        graph.len = self.range.len();
        graph.start = self.start;
        for (e, &range) in self.range.iter().enumerate() {
            let tt = e as i32 + l;
            let c = tt + 1 + s;
            let star = win(kn.out, c, 1) | win(kn.mid, c - 1, 3) << 1 | win(kn.above, c - 1 + s, 3) << 4;
            let mut mask = match self.lookahead {
                Lookahead::Off => t.star[star as usize],
                _ => {
                    let idx = star | win(kn.mid_l, c - 1, 3) << 7 | win(kn.above_l, c - 1 + s, 3) << 10;
                    t.star_l[idx as usize]
                }
            };
            if self.lookahead == Lookahead::Full {
                mask &= match &t.p2 {
                    Some(p2) => p2[(win(kn.ll_x, tt - 1, 5) | win(kn.ll_y, tt - 1, 5) << 5) as usize],
                    None => {
                        let idx = win(kn.ll_x, tt - 1 + s, 5)
                            | win(kn.ll_y, tt - 1 + 2 * s, 5) << 5
                            | win(kn.mid_l, tt + s, 3) << 10;
                        t.broadcast[t.ll[idx as usize] as usize]
                    }
                };
            }
            graph.edges[e] = mask & range;
        }
    }

    /// All rows that can follow `history`, in increasing order.
    pub fn successors(&self, history: &[Row]) -> Vec<Row> {
        let mut graph = ColumnGraph::default();
        let mut out = Vec::new();
        self.successors_into(history, &mut graph, &mut out);
        out
    }

    /// Like [`successors`](Self::successors), reusing caller-owned scratch.
    /// `out` is cleared first.
    pub fn successors_into(&self, history: &[Row], graph: &mut ColumnGraph, out: &mut Vec<Row>) {
        out.clear();
        self.stage1_edges(history, graph);
        stage2_reach(graph);
        stage3_enumerate(graph, &self.geometry, out);
    }
}

/// Convenience wrapper building the tables on every call.
pub fn successors(params: &SearchParams, history: &[Row], lookahead: Lookahead) -> Vec<Row> {
    SuccessorGenerator::new(params, lookahead).successors(history)
}
