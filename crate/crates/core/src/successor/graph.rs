use crate::row::Row;
use crate::statespace::Geometry;

/// Upper bound on column pairs: width 32 plus the widest boundary layout.
pub const MAX_EDGES: usize = 40;

/// Per-call scratch: one 64-bit edge set per pair of adjacent columns and
/// one 16-bit reachable set per column.
///
/// A vertex is a 2x2 block: two adjacent cells of `r[i]` and the two cells
/// of `r[i+p-k]` below them, packed as `a_l << 3 | b_l << 2 | a_r << 1 | b_r`.
/// An edge joins blocks that overlap in their shared cell pair, so it is
/// named by the 3-cell triples it covers (see [`super::edge_index`]).
#[derive(Clone)]
pub struct ColumnGraph {
    pub edges: [u64; MAX_EDGES],
    pub reach: [u16; MAX_EDGES + 1],
    /// Number of edge sets in use; there are `len + 1` columns.
    pub len: usize,
    /// Allowed vertices of column 0.
    pub start: u16,
}

impl Default for ColumnGraph {
    fn default() -> Self {
        ColumnGraph {
            edges: [0; MAX_EDGES],
            reach: [0; MAX_EDGES + 1],
            len: 0,
            start: 0,
        }
    }
}

impl ColumnGraph {
    /// A graph with every edge present, `len` edge sets and the given start
    /// set. Mostly useful in tests.
    pub fn full(len: usize, start: u16) -> Self {
        let mut g = ColumnGraph {
            len,
            start,
            ..Default::default()
        };
        g.edges[..len].fill(u64::MAX);
        g
    }
}

/// Copies bit `s` of a 16-bit set into all four bits of nibble `s`.
#[inline]
fn spread_nibbles(set: u16) -> u64 {
    let mut x = set as u64;
    x = (x | x << 24) & 0x0000_00FF_0000_00FF;
    x = (x | x << 12) & 0x000F_000F_000F_000F;
    x = (x | x << 6) & 0x0303_0303_0303_0303;
    x = (x | x << 3) & 0x1111_1111_1111_1111;
    x * 0xF
}

/// Sets bit `s` of the result if nibble `s` of `m` is nonzero.
#[inline]
fn compress_nibbles(m: u64) -> u16 {
    let mut y = (m | m >> 1 | m >> 2 | m >> 3) & 0x1111_1111_1111_1111;
    y = (y | y >> 3) & 0x0303_0303_0303_0303;
    y = (y | y >> 6) & 0x000F_000F_000F_000F;
    y = (y | y >> 12) & 0x0000_00FF_0000_00FF;
    y = y | y >> 24;
    y as u16
}

/// Vertices of the next column reachable from `set` through `edges`.
///
/// Edges leaving source vertex `s` occupy nibble `s` of the mask, and bit
/// `j` of that nibble leads to target `(s & 3) << 2 | j`.
#[inline]
pub fn forward(set: u16, edges: u64) -> u16 {
    let m = edges & spread_nibbles(set);
    (m | m >> 16 | m >> 32 | m >> 48) as u16
}

/// Vertices of the previous column with an edge into `set`.
#[inline]
pub fn backward(set: u16, edges: u64) -> u16 {
    let t = set as u64;
    compress_nibbles(edges & (t | t << 16 | t << 32 | t << 48))
}

/// Fills `reach[0..=len]` with the vertices reachable from the start set.
pub fn stage2_reach(graph: &mut ColumnGraph) {
    graph.reach[0] = graph.start;
    for e in 0..graph.len {
        graph.reach[e + 1] = forward(graph.reach[e], graph.edges[e]);
    }
}

/// Vertices whose left `r[i]` cell is dead / live.
const LEFT_DEAD: u16 = 0x00FF;
const LEFT_LIVE: u16 = 0xFF00;

/// Every row `r[i]` realized by a path from the start set to the dead
/// vertex of the last column, each exactly once and in increasing order.
/// Requires [`stage2_reach`].
pub fn stage3_enumerate(graph: &ColumnGraph, geom: &Geometry, out: &mut Vec<Row>) {
    if graph.reach[graph.len] & 1 == 0 {
        return;
    }
    let produced = backtrack(graph, geom, graph.len, 1, 0, out);
    debug_assert!(produced > 0);
}

fn backtrack(
    graph: &ColumnGraph,
    geom: &Geometry,
    col: usize,
    set: u16,
    bits: u32,
    out: &mut Vec<Row>,
) -> usize {
    if col == 0 {
        debug_assert!(set & graph.start != 0);
        out.push(geom.from_relative(bits));
        return 1;
    }
    let prev = backward(set, graph.edges[col - 1]) & graph.reach[col - 1];
    debug_assert!(prev != 0, "stage 3 reached a dead end");
    // The cell fixed by stepping into column `col - 1` is its left cell.
    let q = col as i32 - 1 + geom.layout_offset();
    if !(0..geom.width as i32).contains(&q) {
        return backtrack(graph, geom, col - 1, prev, bits, out);
    }
    let mut produced = 0;
    if prev & LEFT_DEAD != 0 {
        produced += backtrack(graph, geom, col - 1, prev & LEFT_DEAD, bits, out);
    }
    if prev & LEFT_LIVE != 0 {
        produced += backtrack(graph, geom, col - 1, prev & LEFT_LIVE, bits | 1 << q, out);
    }
    debug_assert!(produced > 0);
    produced
}
