use crate::row::Row;

use super::{Symmetry, Translation};

/// Offset of cell 0 inside an extended row.
pub const PAD: i32 = 16;

/// Horizontal layout of the searched strip: which cells a row may use, how
/// cells outside it read, and which positions the column graph covers.
///
/// Positions are relative to `lo`, the bit that holds cell 0. `lo` only
/// moves when a glide-reflect search narrows from both sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Geometry {
    pub lo: u32,
    pub width: u32,
    pub symmetry: Symmetry,
    pub translation: Translation,
}

impl Geometry {
    pub fn new(lo: u32, width: u32, symmetry: Symmetry, translation: Translation) -> Self {
        assert!(width >= 1 && lo + width <= 32);
        Geometry {
            lo,
            width,
            symmetry,
            translation,
        }
    }

    pub fn shear(&self) -> i32 {
        match self.translation {
            Translation::Orthogonal => 0,
            Translation::Diagonal => 1,
        }
    }

    fn w(&self) -> i32 {
        self.width as i32
    }

    /// Mask of the bits this geometry may use.
    pub fn mask(&self) -> u32 {
        let m = if self.width >= 32 { u32::MAX } else { (1 << self.width) - 1 };
        m << self.lo
    }

    /// Cell `q` of a stored row, honoring mirror reflection and an optional
    /// left-right reversal of the strip.
    pub fn read(&self, row: Row, q: i32, reversed: bool) -> bool {
        let q = match self.symmetry {
            Symmetry::EvenMirror if q < 0 => -1 - q,
            Symmetry::OddMirror if q < 0 => -q,
            _ => q,
        };
        if q < 0 || q >= self.w() {
            return false;
        }
        let q = if reversed { self.w() - 1 - q } else { q };
        row.bits() >> (self.lo as i32 + q) & 1 == 1
    }

    /// Cells `0..width` of `row` as bits `0..width`.
    pub fn relative(&self, row: Row) -> u32 {
        (row.bits() & self.mask()) >> self.lo
    }

    pub fn from_relative(&self, bits: u32) -> Row {
        Row::from_bits((bits << self.lo) & self.mask())
    }

    /// The row as a 64-bit word in which bit `q + PAD` holds `read(row, q,
    /// reversed)` for every `q` in `-PAD..64 - PAD`.
    pub fn extended(&self, row: Row, reversed: bool) -> u64 {
        let mut rel = self.relative(row);
        if reversed {
            rel = rel.reverse_bits() >> (32 - self.width);
        }
        let rev = rel.reverse_bits() as u64;
        let left = match self.symmetry {
            Symmetry::EvenMirror => rev >> (32 - PAD),
            Symmetry::OddMirror => rev >> (32 - PAD - 1),
            _ => 0,
        };
        (rel as u64) << PAD | left
    }

    /// Bits `q0..q0+n` of an extended row.
    #[inline]
    pub fn window(ext: u64, q0: i32, n: u32) -> u32 {
        ((ext >> (q0 + PAD)) as u32) & ((1 << n) - 1)
    }

    /// Position of the left cell of column 0 in the column graph.
    pub fn layout_offset(&self) -> i32 {
        match (self.symmetry, self.translation) {
            (Symmetry::EvenMirror | Symmetry::OddMirror, _) => -1,
            (_, Translation::Diagonal) => -4,
            _ => -2,
        }
    }

    /// Number of column pairs. Edge `e` covers the cell triple starting at
    /// `e + layout_offset()`; the last triple starts at `width - 1`.
    pub fn edge_count(&self) -> usize {
        (self.w() - self.layout_offset()) as usize
    }

    /// Inclusive range of produced-row positions that can be live and so
    /// must be checked. Positions outside `0..width` must come out dead.
    pub fn output_range(&self) -> (i32, i32) {
        match (self.symmetry, self.translation) {
            (Symmetry::EvenMirror | Symmetry::OddMirror, _) => (0, self.w()),
            (_, Translation::Diagonal) => (-2, self.w() + 1),
            _ => (-1, self.w()),
        }
    }

    /// Whether a new row may hold a live cell at position `q` of the column
    /// graph. Negative positions under mirror symmetry are reflections and
    /// are tied to their images by the start vertices instead.
    pub fn cell_free(&self, q: i32) -> bool {
        if self.symmetry.is_mirror() {
            q < self.w()
        } else {
            (0..self.w()).contains(&q)
        }
    }

    /// The narrower geometry used after a width reduction, or `None` if no
    /// cells would remain. Mirror and asymmetric strips lose their outer
    /// right column; glide-reflect strips lose one column on each side to
    /// keep the reflection axis in place.
    pub fn reduced(&self) -> Option<Geometry> {
        match self.symmetry {
            Symmetry::GlideReflect => (self.width > 2).then(|| Geometry {
                lo: self.lo + 1,
                width: self.width - 2,
                ..*self
            }),
            _ => (self.width > 1).then(|| Geometry {
                width: self.width - 1,
                ..*self
            }),
        }
    }
}
