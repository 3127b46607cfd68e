//! Spaceship search for outer-totalistic cellular automata.

pub mod cli;
pub mod oracle;
pub mod pattern;
pub mod row;
pub mod rules;
pub mod search;
pub mod statespace;
pub mod successor;

pub use pattern::{classify, classify_ship, emit_rle, evolve_pattern, parse_rle, Pattern, ShipDescriptor};
pub use row::Row;
pub use rules::{parse_rule, Rule};
pub use search::{run_search, FoundShip, Outcome, SearchConfig, SearchResult, SearchStatus};
pub use statespace::{SearchParams, Symmetry, Translation};
pub use successor::Lookahead;
