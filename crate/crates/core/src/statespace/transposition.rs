use super::{Arena, NodeId};

const EMPTY: NodeId = NodeId::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InsertOutcome {
    Fresh,
    /// An equivalent state no deeper than the new one is already stored.
    Duplicate(NodeId),
    /// The new state is shallower than the stored equivalent and took its
    /// place.
    Replaced(NodeId),
    /// No room left; the node was not recorded.
    Full,
}

/// Open-addressing set of states keyed on their last `2p` rows. Slots hold
/// node ids only; equality is checked by walking both parent chains.
#[derive(Debug, Clone)]
pub struct TranspositionTable {
    slots: Vec<NodeId>,
    len: usize,
    max_len: usize,
    key_rows: usize,
}

impl TranspositionTable {
    /// A table with `capacity` slots (rounded up to a power of two), filled
    /// to at most three quarters.
    pub fn new(capacity: usize, key_rows: usize) -> Self {
        let n = capacity.max(16).next_power_of_two();
        TranspositionTable {
            slots: vec![EMPTY; n],
            len: 0,
            max_len: n / 4 * 3,
            key_rows,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn clear(&mut self) {
        self.slots.fill(EMPTY);
        self.len = 0;
    }

    pub fn insert(&mut self, arena: &Arena, node: NodeId) -> InsertOutcome {
        let mask = self.slots.len() - 1;
        let mut slot = arena.key_hash(node, self.key_rows) as usize & mask;
        loop {
            let existing = self.slots[slot];
            if existing == EMPTY {
                if self.len >= self.max_len {
                    return InsertOutcome::Full;
                }
                self.slots[slot] = node;
                self.len += 1;
                return InsertOutcome::Fresh;
            }
            if arena.keys_equal(existing, node, self.key_rows) {
                if arena.get(node).depth < arena.get(existing).depth {
                    self.slots[slot] = node;
                    return InsertOutcome::Replaced(existing);
                }
                return InsertOutcome::Duplicate(existing);
            }
            slot = (slot + 1) & mask;
        }
    }

    /// The stored node equivalent to `node`, if any.
    pub fn find(&self, arena: &Arena, node: NodeId) -> Option<NodeId> {
        let mask = self.slots.len() - 1;
        let mut slot = arena.key_hash(node, self.key_rows) as usize & mask;
        loop {
            let existing = self.slots[slot];
            if existing == EMPTY {
                return None;
            }
            if arena.keys_equal(existing, node, self.key_rows) {
                return Some(existing);
            }
            slot = (slot + 1) & mask;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::row::Row;
    use crate::statespace::NO_PARENT;

    #[test]
    fn duplicates_share_trailing_rows() {
        let mut arena = Arena::new();
        let root = arena.push(Row::DEAD, NO_PARENT);
        let a = arena.push(Row::from_bits(1), root);
        let b = arena.push(Row::from_bits(2), root);
        let a1 = arena.push(Row::from_bits(5), a);
        let b1 = arena.push(Row::from_bits(5), b);
        let mut table = TranspositionTable::new(64, 1);
        assert_eq!(table.insert(&arena, root), InsertOutcome::Fresh);
        assert_eq!(table.insert(&arena, root), InsertOutcome::Duplicate(root));
        assert_eq!(table.insert(&arena, a1), InsertOutcome::Fresh);
        assert_eq!(table.insert(&arena, b1), InsertOutcome::Duplicate(a1));
        let mut wide = TranspositionTable::new(64, 2);
        assert_eq!(wide.insert(&arena, a1), InsertOutcome::Fresh);
        assert_eq!(wide.insert(&arena, b1), InsertOutcome::Fresh);
    }

    #[test]
    fn shallower_state_replaces() {
        let mut arena = Arena::new();
        let root = arena.push(Row::DEAD, NO_PARENT);
        let deep1 = arena.push(Row::from_bits(3), root);
        let deep2 = arena.push(Row::from_bits(9), deep1);
        let shallow = arena.push(Row::from_bits(9), root);
        let mut table = TranspositionTable::new(64, 1);
        assert_eq!(table.insert(&arena, deep2), InsertOutcome::Fresh);
        assert_eq!(table.insert(&arena, shallow), InsertOutcome::Replaced(deep2));
        assert_eq!(table.find(&arena, deep2), Some(shallow));
    }

    #[test]
    fn full_table_reports_full() {
        let mut arena = Arena::new();
        let mut table = TranspositionTable::new(16, 1);
        let mut outcomes = Vec::new();
        for i in 0..20 {
            let id = arena.push(Row::from_bits(i), NO_PARENT);
            outcomes.push(table.insert(&arena, id));
        }
        assert_eq!(table.len(), 12);
        assert_eq!(outcomes.iter().filter(|o| **o == InsertOutcome::Full).count(), 8);
    }
}
