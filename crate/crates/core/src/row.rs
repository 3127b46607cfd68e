use std::fmt;

/// Maximum number of cells in a row.
pub const MAX_WIDTH: u32 = 32;

/// A row of cells packed into a machine word. Bit `j` holds cell `j`
/// (1 = live). Cells beyond the searched width are always zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Row(u32);

impl Row {
    pub const DEAD: Row = Row(0);

    pub const fn from_bits(bits: u32) -> Self {
        Row(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Cell `j`. Positions outside `0..32` read as dead.
    pub fn get(self, j: i32) -> bool {
        (0..32).contains(&j) && (self.0 >> j) & 1 == 1
    }

    pub fn with(self, j: u32, live: bool) -> Self {
        if live {
            Row(self.0 | 1 << j)
        } else {
            Row(self.0 & !(1 << j))
        }
    }

    pub fn population(self) -> u32 {
        self.0.count_ones()
    }

    /// Parses a bit string such as `"00100"`, cell 0 first.
    pub fn parse_bits(s: &str) -> Option<Self> {
        if s.len() > MAX_WIDTH as usize {
            return None;
        }
        let mut bits = 0;
        for (j, c) in s.chars().enumerate() {
            match c {
                '0' | '.' => {}
                '1' | 'o' | 'O' => bits |= 1 << j,
                _ => return None,
            }
        }
        Some(Row(bits))
    }

    /// Formats the first `width` cells as a bit string, cell 0 first.
    pub fn to_bit_string(self, width: u32) -> String {
        (0..width as i32)
            .map(|j| if self.get(j) { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Debug for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = 32 - self.0.leading_zeros();
        write!(f, "Row({})", self.to_bit_string(width.max(1)))
    }
}
