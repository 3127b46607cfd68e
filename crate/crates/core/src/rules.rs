//! Outer-totalistic rules on the Moore neighborhood.
//!
//! A rule is written `B<digits>/S<digits>`: a dead cell is born when its
//! live-neighbor count is listed after `B`, and a live cell survives when its
//! count is listed after `S`. Conway's Life is `B3/S23`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::row::Row;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleError {
    #[error("empty rule string")]
    Empty,
    #[error("rule string must have the form B.../S...")]
    Malformed,
    #[error("rule string is missing its {0} part")]
    MissingPart(char),
    #[error("invalid character {0:?} in rule string")]
    InvalidChar(char),
    #[error("neighbor count 9 is impossible in the Moore neighborhood")]
    CountTooLarge,
    #[error("rules containing B0 are not supported (the dead background would not be stable)")]
    BirthOnZero,
}

/// Birth and survival neighbor-count sets, stored as bitmasks over `0..=8`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rule {
    birth: u16,
    survive: u16,
}

impl Rule {
    /// Conway's Life.
    pub const LIFE: Rule = Rule {
        birth: 1 << 3,
        survive: 1 << 2 | 1 << 3,
    };

    /// Builds a rule from neighbor-count lists.
    pub fn new(birth: &[u8], survive: &[u8]) -> Result<Self, RuleError> {
        let mut rule = Rule {
            birth: 0,
            survive: 0,
        };
        for &n in birth {
            if n > 8 {
                return Err(RuleError::CountTooLarge);
            }
            rule.birth |= 1 << n;
        }
        for &n in survive {
            if n > 8 {
                return Err(RuleError::CountTooLarge);
            }
            rule.survive |= 1 << n;
        }
        if rule.birth & 1 != 0 {
            return Err(RuleError::BirthOnZero);
        }
        Ok(rule)
    }

    /// Builds a rule from raw 9-bit masks. Fails on B0.
    pub fn from_masks(birth: u16, survive: u16) -> Result<Self, RuleError> {
        if birth & 1 != 0 {
            return Err(RuleError::BirthOnZero);
        }
        Ok(Rule {
            birth: birth & 0x1ff,
            survive: survive & 0x1ff,
        })
    }

    pub fn birth_mask(&self) -> u16 {
        self.birth
    }

    pub fn survive_mask(&self) -> u16 {
        self.survive
    }

    pub fn birth(&self) -> Vec<u8> {
        (0..=8).filter(|&n| self.births_on(n)).collect()
    }

    pub fn survive(&self) -> Vec<u8> {
        (0..=8).filter(|&n| self.survives_on(n)).collect()
    }

    pub fn births_on(&self, count: u8) -> bool {
        count <= 8 && self.birth >> count & 1 == 1
    }

    pub fn survives_on(&self, count: u8) -> bool {
        count <= 8 && self.survive >> count & 1 == 1
    }

    /// Next state of a cell given its state and its live-neighbor count.
    pub fn next_state(&self, alive: bool, count: u8) -> bool {
        if alive {
            self.survives_on(count)
        } else {
            self.births_on(count)
        }
    }

    pub fn table(&self) -> EvolutionTable {
        EvolutionTable::new(self)
    }
}

/// Parses a rule string. See [`Rule`] for the accepted notation.
pub fn parse_rule(text: &str) -> Result<Rule, RuleError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(RuleError::Empty);
    }
    let mut parts = text.split('/');
    let (first, second) = match (parts.next(), parts.next(), parts.next()) {
        (Some(a), Some(b), None) => (a, b),
        (Some(_), None, _) => {
            let missing = if text.starts_with(['B', 'b']) { 'S' } else { 'B' };
            return Err(RuleError::MissingPart(missing));
        }
        _ => return Err(RuleError::Malformed),
    };
    let mut birth = None;
    let mut survive = None;
    for part in [first, second] {
        let mut chars = part.chars();
        let slot = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('B') => &mut birth,
            Some('S') => &mut survive,
            Some(c) => return Err(RuleError::InvalidChar(c)),
            None => return Err(RuleError::Malformed),
        };
        if slot.is_some() {
            return Err(RuleError::Malformed);
        }
        let mut mask = 0u16;
        for c in chars {
            match c {
                '0'..='8' => mask |= 1 << (c as u8 - b'0'),
                '9' => return Err(RuleError::CountTooLarge),
                _ => return Err(RuleError::InvalidChar(c)),
            }
        }
        *slot = Some(mask);
    }
    let birth = birth.ok_or(RuleError::MissingPart('B'))?;
    let survive = survive.ok_or(RuleError::MissingPart('S'))?;
    Rule::from_masks(birth, survive)
}

/// Canonical `B.../S...` form with ascending digits.
pub fn format_rule(rule: &Rule) -> String {
    rule.to_string()
}

impl FromStr for Rule {
    type Err = RuleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_rule(s)
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("B")?;
        for n in self.birth() {
            write!(f, "{n}")?;
        }
        f.write_str("/S")?;
        for n in self.survive() {
            write!(f, "{n}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rule({self})")
    }
}

/// Next-state lookup for every 3x3 neighborhood.
///
/// The index packs the neighborhood row-major: bits 0..3 are the top row
/// (left to right), bits 3..6 the middle row and bits 6..9 the bottom row.
/// The center cell is bit 4.
#[derive(Clone, PartialEq, Eq)]
pub struct EvolutionTable {
    next: [u64; 8],
}

impl EvolutionTable {
    pub const SIZE: usize = 512;
    pub const CENTER_BIT: u32 = 4;

    pub fn new(rule: &Rule) -> Self {
        let mut next = [0u64; 8];
        for idx in 0..Self::SIZE as u32 {
            let center = idx >> Self::CENTER_BIT & 1 == 1;
            let count = (idx & !(1 << Self::CENTER_BIT)).count_ones() as u8;
            if rule.next_state(center, count) {
                next[idx as usize >> 6] |= 1 << (idx & 63);
            }
        }
        EvolutionTable { next }
    }

    /// Next center state for a packed 3x3 neighborhood.
    #[inline]
    pub fn next(&self, index: u32) -> bool {
        debug_assert!(index < 512);
        self.next[index as usize >> 6] >> (index & 63) & 1 == 1
    }

    /// Next center state for a neighborhood given as three 3-bit rows.
    #[inline]
    pub fn next_rows(&self, top: u32, middle: u32, bottom: u32) -> bool {
        self.next(top | middle << 3 | bottom << 6)
    }

    pub fn len(&self) -> usize {
        Self::SIZE
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Evolves a single cell. `neighbors` lists the 8 surrounding cells in any
/// order.
pub fn evolve_cell(table: &EvolutionTable, center: bool, neighbors: [bool; 8]) -> bool {
    // Place the neighbors around the center; only the count matters for an
    // outer-totalistic rule, and the table is built from the count.
    let mut index = (center as u32) << EvolutionTable::CENTER_BIT;
    let mut slot = 0;
    for live in neighbors {
        if slot == EvolutionTable::CENTER_BIT {
            slot += 1;
        }
        index |= (live as u32) << slot;
        slot += 1;
    }
    table.next(index)
}

/// Evolves the middle row of a height-three strip. Cells outside
/// `0..width` are dead.
pub fn evolve_row_triple(
    table: &EvolutionTable,
    above: Row,
    mid: Row,
    below: Row,
    width: u32,
) -> Row {
    let mask = if width >= 32 { u32::MAX } else { (1 << width) - 1 };
    let (a, m, b) = (
        (above.bits() & mask) as u64,
        (mid.bits() & mask) as u64,
        (below.bits() & mask) as u64,
    );
    let mut out = 0u32;
    for j in 0..width {
        // Shift so that bit 0 is cell j - 1.
        let sh = |r: u64| ((r << 1) >> j) as u32 & 7;
        if table.next_rows(sh(a), sh(m), sh(b)) {
            out |= 1 << j;
        }
    }
    Row::from_bits(out)
}
