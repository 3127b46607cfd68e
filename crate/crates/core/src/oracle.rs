//! Brute-force reference implementations for tests.
//!
//! Nothing here shares code with the successor machinery beyond the rule
//! itself: every constraint is evaluated cell by cell from neighbor counts,
//! and candidate rows are enumerated exhaustively.

use std::collections::HashSet;
use std::sync::Arc;

use thiserror::Error;

use crate::pattern::{classify, Classification, Pattern, ShipDescriptor};
use crate::row::Row;
use crate::rules::Rule;
use crate::statespace::{SearchParams, Symmetry, Translation};
use crate::successor::Lookahead;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("width {width} exceeds the oracle budget of {max}")]
    WidthOverBudget { width: u32, max: u32 },
    #[error("{cells} seed cells exceed the oracle budget of {max}")]
    CellsOverBudget { cells: usize, max: usize },
}

/// Limits that keep exhaustive enumeration fast.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    /// Widest strip for successor enumeration.
    pub max_width: u32,
    /// Most cells in a seed box for ship enumeration.
    pub max_cells: usize,
    /// Longest period checked when classifying seeds.
    pub max_generations: u32,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_width: 6,
            max_cells: 16,
            max_generations: 8,
        }
    }
}

/// Reads cell `q` of a stored row, reflecting through the mirror axis and
/// optionally reversing the strip.
fn read_cell(symmetry: Symmetry, w: i32, row: Row, q: i32, reversed: bool) -> bool {
    let q = match symmetry {
        Symmetry::EvenMirror if q < 0 => -q - 1,
        Symmetry::OddMirror if q < 0 => -q,
        _ => q,
    };
    if !(0..w).contains(&q) {
        return false;
    }
    let q = if reversed { w - 1 - q } else { q };
    row.bits() >> q & 1 == 1
}

/// Next state of the center of a 3x3 block given as rows of cells.
fn evolve3(rule: &Rule, block: [[bool; 3]; 3]) -> bool {
    let mut count = 0;
    for (y, row) in block.iter().enumerate() {
        for (x, &c) in row.iter().enumerate() {
            if c && (x, y) != (1, 1) {
                count += 1;
            }
        }
    }
    rule.next_state(block[1][1], count)
}

fn uses_p2(params: &SearchParams) -> bool {
    params.period == 2
        && params.translation == Translation::Orthogonal
        && params.symmetry != Symmetry::GlideReflect
}

/// Reference successor enumeration for one search mode.
pub struct Oracle {
    params: SearchParams,
    budget: OracleBudget,
    /// Double-lookahead verdicts keyed by `x | y << 5 | z << 10 | b << 13`:
    /// 0 unknown, 1 rejected, 2 allowed.
    ll_memo: Vec<u8>,
    p2_pruned: Option<Arc<Vec<bool>>>,
}

impl Oracle {
    pub fn new(params: &SearchParams) -> Self {
        Self::with_budget(params, OracleBudget::default())
    }

    pub fn with_budget(params: &SearchParams, budget: OracleBudget) -> Self {
        let p2 = uses_p2(params).then(|| Arc::new(oracle_p2_pruned(&params.rule)));
        Oracle {
            params: *params,
            budget,
            ll_memo: vec![0; 1 << 16],
            p2_pruned: p2,
        }
    }

    /// Reuses a table from [`oracle_p2_pruned`] for the same rule; it is
    /// ignored by modes that do not need it.
    pub fn with_p2_pruned(params: &SearchParams, pruned: Arc<Vec<bool>>) -> Self {
        Oracle {
            params: *params,
            budget: OracleBudget::default(),
            ll_memo: vec![0; 1 << 16],
            p2_pruned: uses_p2(params).then_some(pruned),
        }
    }

    fn w(&self) -> i32 {
        self.params.width as i32
    }

    fn shear(&self) -> i32 {
        (self.params.translation == Translation::Diagonal) as i32
    }

    /// Reads cell `q` of a stored row, reflecting through the mirror axis
    /// and optionally reversing the strip.
    fn cell(&self, row: Row, q: i32, reversed: bool) -> bool {
        read_cell(self.params.symmetry, self.w(), row, q, reversed)
    }

    /// Output positions that can possibly be live.
    fn checked_outputs(&self) -> std::ops::RangeInclusive<i32> {
        let w = self.w();
        if self.params.symmetry.is_mirror() {
            0..=w
        } else if self.params.translation == Translation::Diagonal {
            -2..=w + 1
        } else {
            -1..=w
        }
    }

    /// Starting positions of the lookahead triples that are filtered.
    fn filtered_triples(&self) -> std::ops::RangeInclusive<i32> {
        let first = if self.params.symmetry.is_mirror() {
            -1
        } else if self.params.translation == Translation::Diagonal {
            -4
        } else {
            -2
        };
        first..=self.w() - 1
    }

    /// `out == evolve(above, mid, below)` at every checked position, where
    /// each row is given with its reversal flag.
    fn equation_holds(&self, above: (Row, bool), mid: (Row, bool), below: (Row, bool), out: (Row, bool)) -> bool {
        let s = self.shear();
        self.checked_outputs().all(|c| {
            let mut block = [[false; 3]; 3];
            for dx in 0..3 {
                block[0][dx] = self.cell(above.0, c + s + dx as i32 - 1, above.1);
                block[1][dx] = self.cell(mid.0, c + dx as i32 - 1, mid.1);
                block[2][dx] = self.cell(below.0, c - s + dx as i32 - 1, below.1);
            }
            evolve3(&self.params.rule, block) == self.cell(out.0, c, out.1)
        })
    }

    /// Whether some 5-cell rows `v` and `w` make the triple `b` of
    /// `r[i+p-k]` (cells `t..t+3` of the lookahead frame) consistent with the
    /// 5-cell windows `x` of `r[i-2k]`, `y` of `r[i-p-2k]` and the triple
    /// `z` of `r[i-k]`.
    fn ll_allows(&mut self, x: u32, y: u32, z: u32, b: u32) -> bool {
        let key = (x | y << 5 | z << 10 | b << 13) as usize;
        if self.ll_memo[key] == 0 {
            let rule = self.params.rule;
            let bit = |r: u32, j: u32| r >> j & 1 == 1;
            // Row triples laid out so that output j of a 5-wide strip
            // depends on cells j..j+3 of each input.
            let produces = |top: u32, mid: u32, bot: u32, out: u32| {
                (0..3).all(|j| {
                    let mut block = [[false; 3]; 3];
                    for dx in 0..3 {
                        block[0][dx] = bit(top, j + dx as u32);
                        block[1][dx] = bit(mid, j + dx as u32);
                        block[2][dx] = bit(bot, j + dx as u32);
                    }
                    evolve3(&rule, block) == bit(out, j)
                })
            };
            let ok = (0..32).any(|v| produces(y, x, v, z) && (0..32).any(|w| produces(x, v, w, b)));
            self.ll_memo[key] = 1 + ok as u8;
        }
        self.ll_memo[key] == 2
    }

    /// All rows that can follow `history` (oldest first, ending at
    /// `r[i-1]`), by exhaustive enumeration, in increasing order.
    pub fn successors(&mut self, history: &[Row], lookahead: Lookahead) -> Result<Vec<Row>, OracleError> {
        if self.params.width > self.budget.max_width {
            return Err(OracleError::WidthOverBudget {
                width: self.params.width,
                max: self.budget.max_width,
            });
        }
        let (p, k) = (self.params.period as usize, self.params.offset as usize);
        let r = |d: usize| {
            if d <= history.len() {
                history[history.len() - d]
            } else {
                Row::DEAD
            }
        };
        let (rev_mid, rev_out) = match self.params.glide_flip() {
            Some(f) => (f.reverse_mid, f.reverse_out),
            None => (false, false),
        };
        let n = 1u32 << self.params.width;
        let mut out = Vec::new();
        for a in (0..n).map(Row::from_bits) {
            if !self.equation_holds((r(2 * p), false), (r(p), rev_mid), (a, false), (r(p - k), rev_out)) {
                continue;
            }
            if lookahead == Lookahead::Off {
                out.push(a);
                continue;
            }
            // The unknown row is enumerated directly in the frame of `a`.
            let above = (r(p + k), rev_out);
            let mid = (r(k), rev_mid ^ rev_out);
            let witness = (0..n).map(Row::from_bits).any(|u| {
                self.equation_holds(above, mid, (u, false), (a, false))
                    && (lookahead == Lookahead::Single || self.filters_allow(history, a, u))
            });
            if witness {
                out.push(a);
            }
        }
        Ok(out)
    }

    fn filters_allow(&mut self, history: &[Row], a: Row, u: Row) -> bool {
        let (p, k) = (self.params.period as usize, self.params.offset as usize);
        let r = |d: usize| {
            if d <= history.len() {
                history[history.len() - d]
            } else {
                Row::DEAD
            }
        };
        let s = self.shear();
        let rev_mid = self.params.glide_flip().is_some_and(|f| f.reverse_mid);
        let rev_z = self.params.glide_flip().is_some_and(|f| f.reverse_mid ^ f.reverse_out);
        let (sym, w) = (self.params.symmetry, self.w());
        let bits = |row: Row, from: i32, n: i32, rev: bool| -> u32 {
            (0..n).map(|j| (read_cell(sym, w, row, from + j, rev) as u32) << j).sum()
        };
        for t in self.filtered_triples() {
            let b = bits(u, t, 3, false);
            let allowed = if let Some(pruned) = &self.p2_pruned {
                let idx = bits(r(2), t - 1, 5, false)
                    | bits(r(1), t - 1, 5, false) << 5
                    | bits(a, t, 3, false) << 10
                    | b << 13;
                !pruned[idx as usize]
            } else {
                let x = bits(r(2 * k), t - 1 + s, 5, false);
                let y = bits(r(p + 2 * k), t - 1 + 2 * s, 5, rev_mid);
                let z = bits(r(k), t + s, 3, rev_z);
                self.ll_allows(x, y, z, b)
            };
            if !allowed {
                return false;
            }
        }
        true
    }
}

/// Convenience wrapper around [`Oracle::successors`].
pub fn oracle_successors(
    params: &SearchParams,
    history: &[Row],
    lookahead: Lookahead,
) -> Result<Vec<Row>, OracleError> {
    Oracle::new(params).successors(history, lookahead)
}

/// The period-2 pruning table computed by forward fixpoint iteration over
/// explicit transitions. Entry `x | y << 5 | a << 10 | b << 13` is true when
/// pruned.
pub fn oracle_p2_pruned(rule: &Rule) -> Vec<bool> {
    // step_ok[a | c << 5 | e << 10 | d << 15]: can row d (5 cells) be
    // produced from rows a, c, e when the cells just outside the window are
    // free?
    let bit = |r: u32, j: i32| (0..5).contains(&j) && r >> j & 1 == 1;
    let mut step_ok = vec![false; 1 << 20];
    for idx in 0..1u32 << 20 {
        let (a, c, e, d) = (idx & 31, idx >> 5 & 31, idx >> 10 & 31, idx >> 15);
        step_ok[idx as usize] = (0..5).all(|x: i32| {
            let edge = x == 0 || x == 4;
            let outside = if x == 0 { -1 } else { 5 };
            (0..if edge { 8 } else { 1 }).any(|free: u32| {
                let get = |r: u32, j: i32, fbit: u32| {
                    if j == outside && edge {
                        free >> fbit & 1 == 1
                    } else {
                        bit(r, j)
                    }
                };
                let mut block = [[false; 3]; 3];
                for dx in 0..3 {
                    let j = x + dx as i32 - 1;
                    block[0][dx] = get(a, j, 0);
                    block[1][dx] = get(c, j, 1);
                    block[2][dx] = get(e, j, 2);
                }
                evolve3(rule, block) == bit(d, x)
            })
        });
    }

    // good[v]: vertex v = (r0, r1, r2, r3) can reach the dead vertex.
    let mut good = vec![false; 1 << 20];
    good[0] = true;
    loop {
        let mut changed = false;
        for v in 0..1u32 << 20 {
            if good[v as usize] {
                continue;
            }
            let (r0, r1, r2, r3) = (v & 31, v >> 5 & 31, v >> 10 & 31, v >> 15);
            let reaches = (0..32u32).any(|r4| {
                step_ok[(r0 | r2 << 5 | r4 << 10 | r3 << 15) as usize]
                    && good[(r1 | r2 << 5 | r3 << 10 | r4 << 15) as usize]
            });
            if reaches {
                good[v as usize] = true;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    (0..1u32 << 16)
        .map(|idx| {
            let (x, y, a, b) = (idx & 31, idx >> 5 & 31, idx >> 10 & 7, idx >> 13);
            !(0..4u32).any(|ea| {
                (0..4u32).any(|eb| {
                    let a5 = (ea & 1) | a << 1 | (ea >> 1) << 4;
                    let b5 = (eb & 1) | b << 1 | (eb >> 1) << 4;
                    good[(x | y << 5 | a5 << 10 | b5 << 15) as usize]
                })
            })
        })
        .collect()
}

/// Every spaceship with period at most `max_period` that appears as a seed
/// inside a `width` x `height` box, deduplicated by trimmed shape.
pub fn oracle_ship_search(
    rule: &Rule,
    width: usize,
    height: usize,
    max_period: u32,
) -> Result<Vec<(Pattern, ShipDescriptor)>, OracleError> {
    let budget = OracleBudget::default();
    let cells = width * height;
    if cells > budget.max_cells {
        return Err(OracleError::CellsOverBudget {
            cells,
            max: budget.max_cells,
        });
    }
    let mut seen = HashSet::new();
    let mut ships = Vec::new();
    for seed in 1u32..1 << cells {
        let mut p = Pattern::new(width, height);
        for j in 0..cells {
            if seed >> j & 1 == 1 {
                p.set(j % width, j / width, true);
            }
        }
        let p = p.trimmed();
        if !seen.insert(p.clone()) {
            continue;
        }
        if let Ok(Classification::Ship(d)) = classify(rule, &p, max_period) {
            ships.push((p, d));
        }
    }
    Ok(ships)
}
