//! The row-sequence state space.
//!
//! A spaceship that moves `k` rows every `p` generations is described by a
//! single merged sequence of rows `r[0], r[1], ...`: row `Y` of generation
//! `g` sits at index `p*Y + k*g`. Three consecutive rows of one generation
//! (`r[i-2p]`, `r[i-p]`, `r[i]`) determine one row of the next generation,
//! which sits at `r[i-p+k]`. A search state is a finite prefix of this
//! sequence; two states are interchangeable when their last `2p` rows agree.

mod geometry;
mod state;
mod transposition;

pub use geometry::{Geometry, PAD};
pub use state::{
    constraint_indices, extract_ship, is_consistent, is_goal, make_initial_state, Arena,
    ConstraintIndices, Instance, NodeId, RowRef, SearchNode, StateKey, NO_PARENT,
};
pub use transposition::{InsertOutcome, TranspositionTable};

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::pattern::gcd;
use crate::row::MAX_WIDTH;
use crate::rules::Rule;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Asymmetric,
    /// Mirror image across an axis between two cells; the searched row is
    /// the half on one side.
    EvenMirror,
    /// Mirror image across an axis through a column of cells.
    OddMirror,
    /// The pattern reappears reflected after `p` generations; `p` is the
    /// half-period.
    GlideReflect,
}

impl Symmetry {
    pub fn is_mirror(self) -> bool {
        matches!(self, Symmetry::EvenMirror | Symmetry::OddMirror)
    }

    pub fn name(self) -> &'static str {
        match self {
            Symmetry::Asymmetric => "asymmetric",
            Symmetry::EvenMirror => "even",
            Symmetry::OddMirror => "odd",
            Symmetry::GlideReflect => "glide",
        }
    }
}

impl FromStr for Symmetry {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "asymmetric" | "asym" | "none" => Ok(Symmetry::Asymmetric),
            "even" | "even-mirror" => Ok(Symmetry::EvenMirror),
            "odd" | "odd-mirror" => Ok(Symmetry::OddMirror),
            "glide" | "glide-reflect" => Ok(Symmetry::GlideReflect),
            _ => Err(format!("unknown symmetry {s:?}")),
        }
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Translation {
    Orthogonal,
    /// Moves `k` cells down and `k` cells sideways every `p` generations.
    Diagonal,
}

impl FromStr for Translation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "orthogonal" | "orth" => Ok(Translation::Orthogonal),
            "diagonal" | "diag" => Ok(Translation::Diagonal),
            _ => Err(format!("unknown translation {s:?}")),
        }
    }
}

impl fmt::Display for Translation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Translation::Orthogonal => "orthogonal",
            Translation::Diagonal => "diagonal",
        })
    }
}

/// Which rows of a constraint instance are read mirrored in a glide-reflect
/// search. The new row and the row above it are never reversed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GlideFlip {
    /// Reverse `r[i-p]`.
    pub reverse_mid: bool,
    /// Reverse the produced row `r[i-p+k]`.
    pub reverse_out: bool,
}

impl GlideFlip {
    /// The assignment used for `(p, k)`: reverse only the produced row when
    /// `p` is odd, otherwise reverse the middle and produced rows.
    pub fn for_params(period: u32, offset: u32) -> GlideFlip {
        if period % 2 == 1 {
            GlideFlip {
                reverse_mid: false,
                reverse_out: true,
            }
        } else {
            debug_assert!(offset % 2 == 1);
            GlideFlip {
                reverse_mid: true,
                reverse_out: true,
            }
        }
    }

    /// Whether the flips describe a consistent orientation of every row.
    ///
    /// Orienting row `Y` of generation `g` by the parity of `a*Y + b*g`
    /// (reverse_mid = a, reverse_out = a + b) is well defined on the merged
    /// sequence exactly when `a*k + b*p` is odd.
    pub fn is_valid_for(self, period: u32, offset: u32) -> bool {
        let a = self.reverse_mid as u32;
        let b = (self.reverse_out ^ self.reverse_mid) as u32;
        (a * offset + b * period) % 2 == 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("offset must be at least 1 (offset 0 describes an oscillator)")]
    ZeroOffset,
    #[error("offset {offset} must be less than the period {period}")]
    OffsetTooLarge { period: u32, offset: u32 },
    #[error("period {period} and offset {offset} must be coprime (gcd is {gcd})")]
    NotCoprime { period: u32, offset: u32, gcd: u32 },
    #[error("width {0} is outside 1..=32")]
    Width(u32),
    #[error("glide-reflect symmetry requires orthogonal translation")]
    GlideDiagonal,
    #[error("diagonal translation requires asymmetric symmetry")]
    DiagonalSymmetric,
}

/// Everything that determines a search space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchParams {
    pub rule: Rule,
    pub period: u32,
    pub offset: u32,
    pub width: u32,
    pub symmetry: Symmetry,
    pub translation: Translation,
    glide_flip: Option<GlideFlip>,
}

impl SearchParams {
    pub fn new(
        rule: Rule,
        period: u32,
        offset: u32,
        width: u32,
        symmetry: Symmetry,
        translation: Translation,
    ) -> Result<Self, ParamError> {
        if offset == 0 {
            return Err(ParamError::ZeroOffset);
        }
        if offset >= period {
            return Err(ParamError::OffsetTooLarge { period, offset });
        }
        let g = gcd(period as u64, offset as u64) as u32;
        if g != 1 {
            return Err(ParamError::NotCoprime {
                period,
                offset,
                gcd: g,
            });
        }
        if width == 0 || width > MAX_WIDTH {
            return Err(ParamError::Width(width));
        }
        if symmetry == Symmetry::GlideReflect && translation == Translation::Diagonal {
            return Err(ParamError::GlideDiagonal);
        }
        if translation == Translation::Diagonal && symmetry != Symmetry::Asymmetric {
            return Err(ParamError::DiagonalSymmetric);
        }
        Ok(SearchParams {
            rule,
            period,
            offset,
            width,
            symmetry,
            translation,
            glide_flip: None,
        })
    }

    /// Orthogonal asymmetric search.
    pub fn orthogonal(rule: Rule, period: u32, offset: u32, width: u32) -> Result<Self, ParamError> {
        Self::new(rule, period, offset, width, Symmetry::Asymmetric, Translation::Orthogonal)
    }

    /// Overrides the glide-reflect row reversal. Only useful for experiments;
    /// an assignment that fails [`GlideFlip::is_valid_for`] describes
    /// sequences that are not spaceships.
    pub fn with_glide_flip(mut self, flip: GlideFlip) -> Self {
        self.glide_flip = Some(flip);
        self
    }

    /// Reversal flags for glide-reflect searches, `None` otherwise.
    pub fn glide_flip(&self) -> Option<GlideFlip> {
        (self.symmetry == Symmetry::GlideReflect)
            .then(|| self.glide_flip.unwrap_or(GlideFlip::for_params(self.period, self.offset)))
    }

    pub fn with_width(mut self, width: u32) -> Result<Self, ParamError> {
        if width == 0 || width > MAX_WIDTH {
            return Err(ParamError::Width(width));
        }
        self.width = width;
        Ok(self)
    }

    /// Number of trailing rows that make up a state's identity.
    pub fn key_rows(&self) -> usize {
        2 * self.period as usize
    }

    /// How far back the constraints of a new row reach.
    pub fn lookback(&self) -> usize {
        let (p, k) = (self.period as usize, self.offset as usize);
        (2 * p).max(p + 2 * k)
    }

    /// Shear between consecutive rows of one generation: 0 for orthogonal,
    /// 1 for diagonal.
    pub fn shear(&self) -> i32 {
        match self.translation {
            Translation::Orthogonal => 0,
            Translation::Diagonal => 1,
        }
    }

    /// Period of the full pattern cycle (twice `p` for glide-reflect).
    pub fn full_period(&self) -> u32 {
        if self.symmetry == Symmetry::GlideReflect {
            2 * self.period
        } else {
            self.period
        }
    }

    pub fn geometry(&self) -> Geometry {
        Geometry::new(0, self.width, self.symmetry, self.translation)
    }
}

/// Base-2 logarithm of the number of de Bruijn graph vertices, `2 * p * w`.
pub fn debruijn_size(params: &SearchParams) -> u64 {
    2 * params.period as u64 * params.width as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(p: u32, k: u32, w: u32) -> SearchParams {
        SearchParams::orthogonal(Rule::LIFE, p, k, w).unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(
            SearchParams::orthogonal(Rule::LIFE, 3, 3, 6),
            Err(ParamError::OffsetTooLarge { period: 3, offset: 3 })
        );
        assert_eq!(
            SearchParams::orthogonal(Rule::LIFE, 4, 2, 6),
            Err(ParamError::NotCoprime {
                period: 4,
                offset: 2,
                gcd: 2
            })
        );
        assert_eq!(
            SearchParams::orthogonal(Rule::LIFE, 3, 0, 6),
            Err(ParamError::ZeroOffset)
        );
        assert_eq!(
            SearchParams::orthogonal(Rule::LIFE, 3, 1, 33),
            Err(ParamError::Width(33))
        );
        assert_eq!(
            SearchParams::new(
                Rule::LIFE,
                4,
                1,
                4,
                Symmetry::EvenMirror,
                Translation::Diagonal
            ),
            Err(ParamError::DiagonalSymmetric)
        );
        assert_eq!(
            SearchParams::new(
                Rule::LIFE,
                2,
                1,
                4,
                Symmetry::GlideReflect,
                Translation::Diagonal
            ),
            Err(ParamError::GlideDiagonal)
        );
    }

    #[test]
    fn debruijn_exponents() {
        assert_eq!(debruijn_size(&params(7, 2, 9)), 126);
        assert_eq!(debruijn_size(&params(3, 1, 6)), 36);
        assert_eq!(debruijn_size(&params(2, 1, 1)), 4);
    }

    #[test]
    fn glide_flip_assignments_are_consistent() {
        for p in 2..12 {
            for k in 1..p {
                if gcd(p as u64, k as u64) != 1 {
                    continue;
                }
                assert!(GlideFlip::for_params(p, k).is_valid_for(p, k), "p={p} k={k}");
            }
        }
        // Reversing only the produced row needs an odd period.
        let out_only = GlideFlip {
            reverse_mid: false,
            reverse_out: true,
        };
        assert!(!out_only.is_valid_for(2, 1));
        assert!(out_only.is_valid_for(3, 1));
    }

    #[test]
    fn lookback_covers_all_constraints() {
        assert_eq!(params(2, 1, 4).lookback(), 4);
        assert_eq!(params(3, 2, 4).lookback(), 7);
        assert_eq!(params(7, 2, 4).lookback(), 14);
    }

    #[test]
    fn parses_mode_names() {
        assert_eq!("even".parse::<Symmetry>(), Ok(Symmetry::EvenMirror));
        assert_eq!("glide".parse::<Symmetry>(), Ok(Symmetry::GlideReflect));
        assert_eq!("diagonal".parse::<Translation>(), Ok(Translation::Diagonal));
        assert!("sideways".parse::<Translation>().is_err());
    }
}
