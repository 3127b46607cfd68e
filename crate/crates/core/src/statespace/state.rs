use crate::pattern::Pattern;
use crate::row::Row;

use super::{SearchParams, Symmetry};

pub type NodeId = u32;

/// Parent marker of the first root node.
pub const NO_PARENT: NodeId = u32::MAX;

/// One row of a state plus a link to the state it extends.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchNode {
    pub row: Row,
    pub parent: NodeId,
    /// Index of `row` in the merged sequence.
    pub depth: u32,
}

/// Storage for the breadth-first search tree. Node ids are indices.
#[derive(Debug, Clone, Default)]
pub struct Arena {
    nodes: Vec<SearchNode>,
}

/// The last `2p` rows of a state, newest first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StateKey(pub Vec<Row>);

impl StateKey {
    pub fn hash64(&self) -> u64 {
        hash_rows(self.0.iter().copied())
    }
}

/// Hash of a row sequence given newest first.
pub(crate) fn hash_rows(rows: impl Iterator<Item = Row>) -> u64 {
    let mut h = 0x243f_6a88_85a3_08d3u64;
    for r in rows {
        h ^= r.bits() as u64;
        h = h.wrapping_mul(0x9e37_79b9_7f4a_7c15);
        h ^= h >> 29;
    }
    h ^= h >> 32;
    h.wrapping_mul(0xbf58_476d_1ce4_e5b9) ^ (h >> 31)
}

impl Arena {
    pub fn new() -> Self {
        Arena::default()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn push(&mut self, row: Row, parent: NodeId) -> NodeId {
        let depth = if parent == NO_PARENT {
            0
        } else {
            self.nodes[parent as usize].depth + 1
        };
        let id = self.nodes.len() as NodeId;
        self.nodes.push(SearchNode { row, parent, depth });
        id
    }

    /// Removes the most recently pushed node.
    pub fn pop(&mut self) -> Option<SearchNode> {
        self.nodes.pop()
    }

    pub fn get(&self, id: NodeId) -> &SearchNode {
        &self.nodes[id as usize]
    }

    pub fn nodes(&self) -> &[SearchNode] {
        &self.nodes
    }

    /// Nodes from `id` back to the root, starting with `id`.
    pub fn ancestors(&self, id: NodeId) -> impl Iterator<Item = &SearchNode> + '_ {
        let mut cur = id;
        std::iter::from_fn(move || {
            if cur == NO_PARENT {
                return None;
            }
            let n = &self.nodes[cur as usize];
            cur = n.parent;
            Some(n)
        })
    }

    /// Every row of the state ending at `id`, oldest first.
    pub fn rows(&self, id: NodeId) -> Vec<Row> {
        let mut rows: Vec<Row> = self.ancestors(id).map(|n| n.row).collect();
        rows.reverse();
        rows
    }

    /// The last `n` rows of the state ending at `id`, oldest first. Rows
    /// before the start of the sequence are omitted.
    pub fn history_into(&self, id: NodeId, n: usize, out: &mut Vec<Row>) {
        out.clear();
        out.extend(self.ancestors(id).take(n).map(|n| n.row));
        out.reverse();
    }

    pub fn key(&self, id: NodeId, key_rows: usize) -> StateKey {
        StateKey(self.ancestors(id).take(key_rows).map(|n| n.row).collect())
    }

    pub fn key_hash(&self, id: NodeId, key_rows: usize) -> u64 {
        hash_rows(self.ancestors(id).take(key_rows).map(|n| n.row))
    }

    /// Compares the last `key_rows` rows of two states.
    pub fn keys_equal(&self, a: NodeId, b: NodeId, key_rows: usize) -> bool {
        self.ancestors(a)
            .zip(self.ancestors(b))
            .take(key_rows)
            .all(|(x, y)| x.row == y.row)
    }

    /// Keeps the nodes with `keep[id]` set, preserving order, and returns the
    /// old-to-new id map (`NO_PARENT` for dropped nodes). Every kept node's
    /// parent must be kept.
    pub fn retain(&mut self, keep: &[bool]) -> Vec<NodeId> {
        assert_eq!(keep.len(), self.nodes.len());
        let mut remap = vec![NO_PARENT; self.nodes.len()];
        let mut next = 0usize;
        for old in 0..self.nodes.len() {
            if !keep[old] {
                continue;
            }
            let mut node = self.nodes[old];
            if node.parent != NO_PARENT {
                node.parent = remap[node.parent as usize];
                assert_ne!(node.parent, NO_PARENT, "kept node with dropped parent");
            }
            remap[old] = next as NodeId;
            self.nodes[next] = node;
            next += 1;
        }
        self.nodes.truncate(next);
        remap
    }
}

/// The root chain of `2p` dead rows. Returns the arena and the id of the
/// last root, which is the initial state.
pub fn make_initial_state(params: &SearchParams) -> (Arena, NodeId) {
    let mut arena = Arena::new();
    let mut parent = NO_PARENT;
    for _ in 0..params.key_rows() {
        parent = arena.push(Row::DEAD, parent);
    }
    (arena, parent)
}

/// A row taking part in one constraint instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RowRef {
    /// Index in the merged sequence. Negative indices are dead rows.
    pub index: i64,
    /// Horizontal offset of this row's 3-cell window relative to the
    /// produced cell.
    pub shift: i32,
    /// Read the stored row mirrored.
    pub reversed: bool,
}

/// `out = evolve(above, mid, below)`, cell by cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Instance {
    pub above: RowRef,
    pub mid: RowRef,
    pub below: RowRef,
    pub out: RowRef,
}

/// The two constraint instances tying a new row `r[i]` to the state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstraintIndices {
    /// `r[i-p+k] = evolve(r[i-2p], r[i-p], r[i])`.
    pub star: Instance,
    /// `r[i] = evolve(r[i-p-k], r[i-k], r[i+p-k])`, expressed in the frame
    /// of `r[i]`. The `below` row is the not yet known `r[i+p-k]`.
    pub lookahead: Instance,
}

pub fn constraint_indices(params: &SearchParams, i: i64) -> ConstraintIndices {
    let (p, k) = (params.period as i64, params.offset as i64);
    let s = params.shear();
    let (rm, ro) = match params.glide_flip() {
        Some(f) => (f.reverse_mid, f.reverse_out),
        None => (false, false),
    };
    let at = |index, shift, reversed| RowRef {
        index,
        shift,
        reversed,
    };
    ConstraintIndices {
        star: Instance {
            above: at(i - 2 * p, s, false),
            mid: at(i - p, 0, rm),
            below: at(i, -s, false),
            out: at(i - p + k, 0, ro),
        },
        lookahead: Instance {
            above: at(i - p - k, s, ro),
            mid: at(i - k, 0, rm ^ ro),
            below: at(i + p - k, -s, ro),
            out: at(i, 0, false),
        },
    }
}

fn row_at(rows: &[Row], index: i64) -> Row {
    if index < 0 {
        Row::DEAD
    } else {
        rows[index as usize]
    }
}

/// Whether every instance of the row equation whose rows all lie in `rows`
/// holds, including the requirement that no cell outside the strip comes
/// alive.
pub fn is_consistent(params: &SearchParams, rows: &[Row]) -> bool {
    let geom = params.geometry();
    let (lo, hi) = geom.output_range();
    let rule = params.rule;
    let n = rows.len() as i64;
    for i in 2 * params.period as i64..n {
        let inst = constraint_indices(params, i).star;
        let read = |r: &RowRef, q: i32| geom.read(row_at(rows, r.index), q, r.reversed);
        for c in lo..=hi {
            let mut count = 0;
            let mut center = false;
            for (r, dy) in [(&inst.above, 0), (&inst.mid, 1), (&inst.below, 2)] {
                for dx in -1..=1 {
                    let live = read(r, c + r.shift + dx);
                    if dy == 1 && dx == 0 {
                        center = live;
                    } else if live {
                        count += 1;
                    }
                }
            }
            if rule.next_state(center, count) != read(&inst.out, c) {
                return false;
            }
        }
    }
    true
}

/// The last `2p` rows are dead and some earlier row is not.
pub fn is_goal(params: &SearchParams, rows: &[Row]) -> bool {
    let n = params.key_rows();
    rows.len() > n
        && rows[rows.len() - n..].iter().all(|r| r.is_empty())
        && rows[..rows.len() - n].iter().any(|r| !r.is_empty())
}

/// One phase of the ship described by a goal state: every `p`th row,
/// starting from the phase of the first nonempty row, laid out in ordinary
/// coordinates and trimmed.
pub fn extract_ship(params: &SearchParams, rows: &[Row]) -> Pattern {
    let Some(first) = rows.iter().position(|r| !r.is_empty()) else {
        return Pattern::empty();
    };
    let geom = params.geometry();
    let p = params.period as usize;
    let w = params.width as i64;
    let reverse_alternate = params.glide_flip().is_some_and(|f| f.reverse_mid);
    let mut cells = Vec::new();
    for (m, &row) in rows.iter().skip(first % p).step_by(p).enumerate() {
        let m = m as i64;
        for q in 0..w {
            let reversed = reverse_alternate && m % 2 == 1;
            if !geom.read(row, q as i32, reversed) {
                continue;
            }
            match params.symmetry {
                Symmetry::EvenMirror => {
                    cells.push((w + q, m));
                    cells.push((w - 1 - q, m));
                }
                Symmetry::OddMirror => {
                    cells.push((w - 1 + q, m));
                    cells.push((w - 1 - q, m));
                }
                _ => cells.push((q + m * params.shear() as i64, m)),
            }
        }
    }
    Pattern::from_cells(&cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rules::Rule;
    use crate::statespace::Translation;

    fn params(p: u32, k: u32, w: u32) -> SearchParams {
        SearchParams::orthogonal(Rule::LIFE, p, k, w).unwrap()
    }

    #[test]
    fn initial_state() {
        let (arena, id) = make_initial_state(&params(3, 1, 6));
        assert_eq!(arena.len(), 6);
        assert_eq!(arena.get(id).depth, 5);
        assert!(arena.rows(id).iter().all(|r| r.is_empty()));
        assert!(arena.key(id, 6).0.iter().all(|r| r.is_empty()));
        let (arena, _) = make_initial_state(&params(2, 1, 4));
        assert_eq!(arena.len(), 4);
    }

    #[test]
    fn index_arithmetic() {
        let c = constraint_indices(&params(3, 1, 6), 10);
        let star: Vec<i64> = [c.star.above, c.star.mid, c.star.below, c.star.out]
            .iter()
            .map(|r| r.index)
            .collect();
        assert_eq!(star, vec![4, 7, 10, 8]);
        let la: Vec<i64> = [c.lookahead.above, c.lookahead.mid, c.lookahead.below, c.lookahead.out]
            .iter()
            .map(|r| r.index)
            .collect();
        assert_eq!(la, vec![6, 9, 12, 10]);

        let c = constraint_indices(&params(2, 1, 6), 6);
        assert_eq!(
            (c.star.above.index, c.star.mid.index, c.star.below.index, c.star.out.index),
            (2, 4, 6, 5)
        );
    }

    #[test]
    fn diagonal_shifts_and_glide_flags() {
        let diag = SearchParams::new(
            Rule::LIFE,
            4,
            1,
            4,
            Symmetry::Asymmetric,
            Translation::Diagonal,
        )
        .unwrap();
        let c = constraint_indices(&diag, 9);
        assert_eq!((c.star.above.shift, c.star.mid.shift, c.star.below.shift), (1, 0, -1));

        let glide = SearchParams::new(
            Rule::LIFE,
            3,
            1,
            4,
            Symmetry::GlideReflect,
            Translation::Orthogonal,
        )
        .unwrap();
        let c = constraint_indices(&glide, 9);
        assert!(!c.star.mid.reversed && c.star.out.reversed);
        assert!(!c.star.above.reversed && !c.star.below.reversed);
    }

    #[test]
    fn consistency_and_goals() {
        let p = params(2, 1, 5);
        let dead = vec![Row::DEAD; 9];
        assert!(is_consistent(&p, &dead));
        assert!(!is_goal(&p, &dead));
        assert!(!is_goal(&p, &dead[..4]));

        // A lone cell in r[4] causes no births in r[3].
        let mut rows = vec![Row::DEAD; 4];
        rows.push(Row::parse_bits("00100").unwrap());
        assert!(is_consistent(&p, &rows));
        // Once r[5] exists, r[4] = evolve(r[1], r[3], r[5]) is all dead.
        rows.push(Row::DEAD);
        assert!(!is_consistent(&p, &rows));

        // Three cells in a row force a birth above the middle one.
        let mut rows = vec![Row::DEAD; 4];
        rows.push(Row::parse_bits("01110").unwrap());
        assert!(!is_consistent(&p, &rows));

        let mut goal = vec![Row::DEAD; 4];
        goal.push(Row::parse_bits("1").unwrap());
        goal.extend([Row::DEAD; 4]);
        assert!(is_goal(&p, &goal));
    }

    #[test]
    fn arena_retain_remaps_parents() {
        let mut arena = Arena::new();
        let a = arena.push(Row::DEAD, NO_PARENT);
        let b = arena.push(Row::from_bits(1), a);
        let c = arena.push(Row::from_bits(2), a);
        let d = arena.push(Row::from_bits(3), c);
        let remap = arena.retain(&[true, false, true, true]);
        assert_eq!(remap[b as usize], NO_PARENT);
        let d2 = remap[d as usize];
        assert_eq!(
            arena.rows(d2),
            vec![Row::DEAD, Row::from_bits(2), Row::from_bits(3)]
        );
    }

    #[test]
    fn keys_compare_last_rows_only() {
        let mut arena = Arena::new();
        let root = arena.push(Row::DEAD, NO_PARENT);
        let x = arena.push(Row::from_bits(1), root);
        let y = arena.push(Row::from_bits(2), root);
        let x2 = arena.push(Row::from_bits(7), x);
        let y2 = arena.push(Row::from_bits(7), y);
        assert!(arena.keys_equal(x2, y2, 1));
        assert!(!arena.keys_equal(x2, y2, 2));
        assert_eq!(arena.key_hash(x2, 1), arena.key_hash(y2, 1));
        assert_eq!(arena.key(x2, 1).hash64(), arena.key_hash(x2, 1));
    }

    #[test]
    fn mirror_extraction_widths() {
        let even = SearchParams::new(
            Rule::LIFE,
            3,
            1,
            3,
            Symmetry::EvenMirror,
            Translation::Orthogonal,
        )
        .unwrap();
        // Half row "001": cell 2 is the outer edge.
        let rows = vec![Row::parse_bits("001").unwrap()];
        let pat = extract_ship(&even, &rows);
        assert_eq!(pat.width(), 6);
        assert_eq!(pat.population(), 2);
        let odd = SearchParams {
            symmetry: Symmetry::OddMirror,
            ..even
        };
        let rows = vec![Row::parse_bits("101").unwrap()];
        let pat = extract_ship(&odd, &rows);
        assert_eq!(pat, Pattern::from_text(&["o.o.o"]));
    }
}
