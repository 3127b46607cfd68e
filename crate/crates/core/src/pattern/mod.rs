//! Finite patterns on a dead background, a simple bounded-grid evolution
//! engine, and spaceship classification.
//!
//! Nothing here depends on the search machinery, so it serves as the
//! independent check for every pattern the search reports.

mod classify;
mod rle;

pub use classify::{classify, classify_ship, Classification, ClassifyError, ShipDescriptor, Slope};
pub use rle::{emit_rle, parse_rle, RleError};
pub(crate) use classify::gcd;

use std::fmt;

use crate::rules::{EvolutionTable, Rule};

/// A rectangular grid of cells, row-major.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Pattern {
    width: usize,
    height: usize,
    cells: Vec<bool>,
}

impl Pattern {
    /// An all-dead pattern of the given size.
    pub fn new(width: usize, height: usize) -> Self {
        Pattern {
            width,
            height,
            cells: vec![false; width * height],
        }
    }

    pub fn empty() -> Self {
        Pattern::default()
    }

    /// Builds a pattern from text rows where `o`, `O`, `*` or `#` mark live
    /// cells. Short rows are padded with dead cells.
    pub fn from_text(rows: &[&str]) -> Self {
        let width = rows.iter().map(|r| r.chars().count()).max().unwrap_or(0);
        let mut p = Pattern::new(width, rows.len());
        for (y, r) in rows.iter().enumerate() {
            for (x, c) in r.chars().enumerate() {
                if matches!(c, 'o' | 'O' | '*' | '#') {
                    p.set(x, y, true);
                }
            }
        }
        p
    }

    /// Builds a pattern from a list of live cell coordinates, translated so
    /// that the minimum coordinates land at the origin.
    pub fn from_cells(cells: &[(i64, i64)]) -> Self {
        let Some(min_x) = cells.iter().map(|c| c.0).min() else {
            return Pattern::empty();
        };
        let min_y = cells.iter().map(|c| c.1).min().unwrap();
        let max_x = cells.iter().map(|c| c.0).max().unwrap();
        let max_y = cells.iter().map(|c| c.1).max().unwrap();
        let mut p = Pattern::new((max_x - min_x + 1) as usize, (max_y - min_y + 1) as usize);
        for &(x, y) in cells {
            p.set((x - min_x) as usize, (y - min_y) as usize, true);
        }
        p
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn get(&self, x: usize, y: usize) -> bool {
        x < self.width && y < self.height && self.cells[y * self.width + x]
    }

    /// Cell lookup with signed coordinates; anything outside is dead.
    pub fn get_signed(&self, x: i64, y: i64) -> bool {
        x >= 0 && y >= 0 && self.get(x as usize, y as usize)
    }

    pub fn set(&mut self, x: usize, y: usize, live: bool) {
        assert!(x < self.width && y < self.height, "cell out of bounds");
        self.cells[y * self.width + x] = live;
    }

    pub fn population(&self) -> usize {
        self.cells.iter().filter(|&&c| c).count()
    }

    /// True if no cell is live.
    pub fn is_empty(&self) -> bool {
        !self.cells.iter().any(|&c| c)
    }

    /// Live cell coordinates in row-major order.
    pub fn live_cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for y in 0..self.height {
            for x in 0..self.width {
                if self.get(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Removes all-dead border rows and columns. Returns the trimmed pattern
    /// and the position of its origin in the original coordinates.
    pub fn trim_with_offset(&self) -> (Pattern, (i64, i64)) {
        let mut min_x = usize::MAX;
        let mut min_y = usize::MAX;
        let mut max_x = 0;
        let mut max_y = 0;
        for (x, y) in self.live_cells() {
            min_x = min_x.min(x);
            min_y = min_y.min(y);
            max_x = max_x.max(x);
            max_y = max_y.max(y);
        }
        if min_x == usize::MAX {
            return (Pattern::empty(), (0, 0));
        }
        let mut p = Pattern::new(max_x - min_x + 1, max_y - min_y + 1);
        for y in min_y..=max_y {
            for x in min_x..=max_x {
                if self.get(x, y) {
                    p.set(x - min_x, y - min_y, true);
                }
            }
        }
        (p, (min_x as i64, min_y as i64))
    }

    pub fn trimmed(&self) -> Pattern {
        self.trim_with_offset().0
    }

    pub fn is_trimmed(&self) -> bool {
        *self == self.trimmed()
    }

    /// Mirror image across the vertical axis.
    pub fn flip_horizontal(&self) -> Pattern {
        let mut p = Pattern::new(self.width, self.height);
        for (x, y) in self.live_cells() {
            p.set(self.width - 1 - x, y, true);
        }
        p
    }

    /// One generation on a grid padded by one dead cell on every side.
    /// Returns the untrimmed result whose origin sits at (-1, -1) relative
    /// to this pattern.
    fn step_padded(&self, table: &EvolutionTable) -> Pattern {
        let (w, h) = (self.width as i64 + 2, self.height as i64 + 2);
        let mut next = Pattern::new(w as usize, h as usize);
        for y in 0..h {
            for x in 0..w {
                // (x, y) in the padded grid is (x - 1, y - 1) here.
                let mut index = 0u32;
                for dy in 0..3 {
                    for dx in 0..3 {
                        if self.get_signed(x - 2 + dx, y - 2 + dy) {
                            index |= 1 << (dy * 3 + dx);
                        }
                    }
                }
                if table.next(index) {
                    next.set(x as usize, y as usize, true);
                }
            }
        }
        next
    }

    /// Evolves one generation and trims. Returns the new pattern and the
    /// offset of its origin relative to this pattern's origin.
    pub(crate) fn step(&self, table: &EvolutionTable) -> (Pattern, (i64, i64)) {
        let (p, (ox, oy)) = self.step_padded(table).trim_with_offset();
        (p, (ox - 1, oy - 1))
    }
}

/// Evolves a pattern for `generations` steps on an unbounded dead
/// background and returns the trimmed result.
pub fn evolve_pattern(rule: &Rule, pattern: &Pattern, generations: usize) -> Pattern {
    let table = rule.table();
    let mut p = pattern.trimmed();
    for _ in 0..generations {
        if p.is_empty() {
            break;
        }
        p = p.step(&table).0;
    }
    p
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Pattern {}x{}", self.width, self.height)?;
        for y in 0..self.height {
            let line: String = (0..self.width)
                .map(|x| if self.get(x, y) { 'o' } else { '.' })
                .collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blinker_oscillates() {
        let blinker = Pattern::from_text(&["ooo"]);
        let one = evolve_pattern(&Rule::LIFE, &blinker, 1);
        assert_eq!(one, Pattern::from_text(&["o", "o", "o"]));
        assert_eq!(evolve_pattern(&Rule::LIFE, &blinker, 2), blinker);
    }

    #[test]
    fn block_is_still() {
        let block = Pattern::from_text(&["oo", "oo"]);
        for g in [0, 1, 5, 17] {
            assert_eq!(evolve_pattern(&Rule::LIFE, &block, g), block);
        }
    }

    #[test]
    fn empty_stays_empty() {
        assert!(evolve_pattern(&Rule::LIFE, &Pattern::empty(), 10).is_empty());
        let dead = Pattern::new(4, 3);
        assert_eq!(evolve_pattern(&Rule::LIFE, &dead, 3), Pattern::empty());
    }

    #[test]
    fn trim_reports_offset() {
        let p = Pattern::from_text(&["....", "..o.", "...o"]);
        let (t, off) = p.trim_with_offset();
        assert_eq!(off, (2, 1));
        assert_eq!(t, Pattern::from_text(&["o.", ".o"]));
    }

    #[test]
    fn glider_moves_diagonally() {
        let glider = Pattern::from_text(&[".o.", "..o", "ooo"]);
        let table = Rule::LIFE.table();
        let mut p = glider.clone();
        let (mut x, mut y) = (0, 0);
        for _ in 0..4 {
            let (q, (dx, dy)) = p.step(&table);
            p = q;
            x += dx;
            y += dy;
        }
        assert_eq!(p, glider);
        assert_eq!((x, y), (1, 1));
    }
}
