//! Lookup tables built once per rule and search mode.
//!
//! Every table answers a question about a single 3-cell column triple of the
//! new row `r[i]` and the lookahead row `r[i+p-k]`, encoded as a 64-bit mask
//! over the 64 possible (a, b) triple pairs. Bit `idx6` of a mask stands for
//! the pair with `a_j = idx6 >> (5 - 2j) & 1` and `b_j = idx6 >> (4 - 2j) & 1`.

use crate::rules::{EvolutionTable, Rule};
use crate::statespace::{SearchParams, Symmetry, Translation};

/// Index of the edge for triples `a` and `b` (bit `j` = cell `j`).
#[inline]
pub fn edge_index(a: u32, b: u32) -> u32 {
    let mut idx = 0;
    for j in 0..3 {
        idx |= (a >> j & 1) << (5 - 2 * j) | (b >> j & 1) << (4 - 2 * j);
    }
    idx
}

/// Splits an edge index into its `(a, b)` triples.
#[inline]
pub fn edge_triples(idx6: u32) -> (u32, u32) {
    let mut a = 0;
    let mut b = 0;
    for j in 0..3 {
        a |= (idx6 >> (5 - 2 * j) & 1) << j;
        b |= (idx6 >> (4 - 2 * j) & 1) << j;
    }
    (a, b)
}

/// Next states of the three middle cells of a 5-cell-wide strip.
#[inline]
fn evolve5(table: &EvolutionTable, top: u32, mid: u32, bot: u32) -> u32 {
    let mut out = 0;
    for j in 0..3 {
        let idx = (top >> j & 7) | (mid >> j & 7) << 3 | (bot >> j & 7) << 6;
        out |= (table.next(idx) as u32) << j;
    }
    out
}

/// Pruning table for period-2 searches, indexed by
/// `x | y << 5 | a << 10 | b << 13` where `x` and `y` are 5-cell windows of
/// `r[i-2]` and `r[i-1]`, and `a`, `b` are the 3-cell triples of `r[i]` and
/// `r[i+1]` centered under them.
///
/// Four consecutive 5-cell rows form a vertex of a de Bruijn graph whose
/// edges append a fifth row consistent with the row equation; cells beyond
/// the window are unconstrained. An entry is pruned when no vertex with
/// these cells can reach the all-dead vertex.
#[derive(Clone)]
pub struct P2Table {
    pruned: Vec<u64>,
}

impl P2Table {
    pub const SIZE: usize = 1 << 16;
    const VERTICES: usize = 1 << 20;

    pub fn new(rule: &Rule) -> Self {
        let table = rule.table();

        // valid_d[a | c << 5 | e << 10] = set of rows d that can be produced
        // from rows a, c, e (above, middle, below).
        let mut valid_d = vec![0u32; 1 << 15];
        for ace in 0..1u32 << 15 {
            let (a, c, e) = (ace & 31, ace >> 5 & 31, ace >> 10);
            let mut per_cell = [0u32; 5];
            for (x, slot) in per_cell.iter_mut().enumerate() {
                // Cells just outside the window are unconstrained, so the
                // edge cells may take any value their free neighbors allow.
                let combos = if x == 0 || x == 4 { 8 } else { 1 };
                for f in 0..combos {
                    let ext = |r: u32, bit: u32| {
                        let fr = f >> bit & 1;
                        if x == 0 { r << 1 | fr } else { r << 1 | fr << 6 }
                    };
                    let idx = (ext(a, 0) >> x & 7)
                        | (ext(c, 1) >> x & 7) << 3
                        | (ext(e, 2) >> x & 7) << 6;
                    *slot |= 1 << table.next(idx) as u32;
                }
            }
            let mut set = 0u32;
            for d in 0..32u32 {
                if (0..5).all(|x| per_cell[x] >> (d >> x & 1) & 1 == 1) {
                    set |= 1 << d;
                }
            }
            valid_d[ace as usize] = set;
        }

        // Vertices that can reach the all-dead vertex, by reverse search.
        let mut live = vec![0u64; Self::VERTICES / 64];
        let mut queue = vec![0u32];
        live[0] |= 1;
        while let Some(v) = queue.pop() {
            // v = (B, C, D, E); predecessors are (A, B, C, D).
            let (b, c, d, e) = (v & 31, v >> 5 & 31, v >> 10 & 31, v >> 15);
            for a in 0..32u32 {
                if valid_d[(a | c << 5 | e << 10) as usize] >> d & 1 == 0 {
                    continue;
                }
                let u = a | b << 5 | c << 10 | d << 15;
                let (w, bit) = (u as usize / 64, u % 64);
                if live[w] >> bit & 1 == 0 {
                    live[w] |= 1 << bit;
                    queue.push(u);
                }
            }
        }
        let reaches = |v: u32| live[v as usize / 64] >> (v % 64) & 1 == 1;

        let mut pruned = vec![0u64; Self::SIZE / 64];
        for idx in 0..Self::SIZE as u32 {
            let (x, y, a, b) = (idx & 31, idx >> 5 & 31, idx >> 10 & 7, idx >> 13);
            let ok = (0..16u32).any(|edges| {
                let a5 = a << 1 | (edges & 1) | (edges >> 1 & 1) << 4;
                let b5 = b << 1 | (edges >> 2 & 1) | (edges >> 3 & 1) << 4;
                reaches(x | y << 5 | a5 << 10 | b5 << 15)
            });
            if !ok {
                pruned[idx as usize / 64] |= 1 << (idx % 64);
            }
        }
        P2Table { pruned }
    }

    pub fn is_pruned(&self, index: u32) -> bool {
        self.pruned[index as usize / 64] >> (index % 64) & 1 == 1
    }

    pub fn pruned_count(&self) -> usize {
        self.pruned.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn pruned_fraction(&self) -> f64 {
        self.pruned_count() as f64 / Self::SIZE as f64
    }

    /// Allowed-edge masks indexed by `x | y << 5`.
    fn edge_masks(&self) -> Vec<u64> {
        (0..1024u32)
            .map(|xy| {
                let mut mask = 0u64;
                for idx6 in 0..64 {
                    let (a, b) = edge_triples(idx6);
                    if !self.is_pruned(xy | a << 10 | b << 13) {
                        mask |= 1 << idx6;
                    }
                }
                mask
            })
            .collect()
    }
}

/// The per-rule tables consulted while building a column graph.
#[derive(Clone)]
pub struct ConstraintTables {
    /// Row equation alone, indexed by `out | mid << 1 | above << 4`.
    pub(crate) star: [u64; 128],
    /// Row equation and single lookahead, indexed by
    /// `out | mid << 1 | above << 4 | mid_l << 7 | above_l << 10`.
    pub(crate) star_l: Vec<u64>,
    /// Allowed lookahead triples, indexed by `x | y << 5 | z << 10` for
    /// windows of `r[i-2k]`, `r[i-p-2k]` and `r[i-k]`.
    pub(crate) ll: Vec<u8>,
    /// `broadcast_b` for every 8-bit set.
    pub(crate) broadcast: Vec<u64>,
    /// Edge masks for the period-2 pruning table, indexed by `x | y << 5`.
    pub(crate) p2: Option<Vec<u64>>,
    p2_table: Option<P2Table>,
}

/// Edge mask of every pair whose `b` triple is in the 8-bit set.
pub(crate) fn broadcast_b(set: u8) -> u64 {
    let mut mask = 0;
    for idx6 in 0..64 {
        if set >> edge_triples(idx6).1 & 1 == 1 {
            mask |= 1 << idx6;
        }
    }
    mask
}

impl ConstraintTables {
    pub fn new(params: &SearchParams) -> Self {
        let table = params.rule.table();
        let s = params.shear() as u32;

        let mut star = [0u64; 128];
        let mut star_l = vec![0u64; 1 << 13];
        for idx in 0..1u32 << 13 {
            let out = idx & 1 == 1;
            let (mid, above) = (idx >> 1 & 7, idx >> 4 & 7);
            let (mid_l, above_l) = (idx >> 7 & 7, idx >> 10 & 7);
            let mut mask = 0u64;
            let mut star_mask = 0u64;
            for idx6 in 0..64 {
                let (a, b) = edge_triples(idx6);
                if table.next_rows(above, mid, a) != out {
                    continue;
                }
                star_mask |= 1 << idx6;
                if table.next_rows(above_l, mid_l, b) == (a >> (1 + s) & 1 == 1) {
                    mask |= 1 << idx6;
                }
            }
            star_l[idx as usize] = mask;
            if idx < 128 {
                star[idx as usize] = star_mask;
            }
        }

        // below[x][v] = set of triples producible under rows x, v.
        let mut below = vec![0u8; 1 << 10];
        for xv in 0..1u32 << 10 {
            let (x, v) = (xv & 31, xv >> 5);
            for w in 0..32 {
                below[xv as usize] |= 1 << evolve5(&table, x, v, w);
            }
        }
        let mut ll = vec![0u8; 1 << 13];
        for xy in 0..1u32 << 10 {
            let (x, y) = (xy & 31, xy >> 5);
            for v in 0..32u32 {
                let z = evolve5(&table, y, x, v);
                ll[(xy | z << 10) as usize] |= below[(x | v << 5) as usize];
            }
        }

        let p2_table = (params.period == 2
            && params.translation == Translation::Orthogonal
            && params.symmetry != Symmetry::GlideReflect)
            .then(|| P2Table::new(&params.rule));
        ConstraintTables {
            star,
            star_l,
            ll,
            broadcast: (0..=255).map(broadcast_b).collect(),
            p2: p2_table.as_ref().map(P2Table::edge_masks),
            p2_table,
        }
    }

    /// The period-2 pruning table, when this search uses one.
    pub fn p2_table(&self) -> Option<&P2Table> {
        self.p2_table.as_ref()
    }

    /// Fraction of set bits in the combined row-equation and lookahead
    /// table.
    pub fn star_l_density(&self) -> f64 {
        let ones: u64 = self.star_l.iter().map(|m| m.count_ones() as u64).sum();
        ones as f64 / (self.star_l.len() * 64) as f64
    }

    /// Fraction of allowed lookahead triples.
    pub fn ll_density(&self) -> f64 {
        let ones: u64 = self.ll.iter().map(|m| m.count_ones() as u64).sum();
        ones as f64 / (self.ll.len() * 8) as f64
    }
}
