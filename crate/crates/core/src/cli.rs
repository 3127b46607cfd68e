//! Command-line frontend.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::oracle::Oracle;
use crate::pattern::{classify, emit_rle, parse_rle, Classification};
use crate::row::Row;
use crate::rules::Rule;
use crate::search::{run_search, FoundShip, Outcome, SearchConfig, SearchObserver, SearchStatus};
use crate::statespace::{debruijn_size, SearchParams, Symmetry, Translation};
use crate::successor::{ConstraintTables, Lookahead, SuccessorGenerator};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_FOUND: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "shipsearch", version, about = "Search for spaceships in outer-totalistic cellular automata")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Search for a spaceship and print it as RLE.
    Search(SearchArgs),
    /// Check whether an RLE pattern is a spaceship.
    Verify(VerifyArgs),
    /// Print constraint table statistics for a rule.
    Stats(StatsArgs),
    /// Compare fast and brute-force successors of one state.
    #[command(hide = true)]
    Oracle(OracleArgs),
}

#[derive(Debug, Args)]
pub struct ModeArgs {
    #[arg(long, default_value = "B3/S23")]
    pub rule: Rule,
    #[arg(long)]
    pub period: u32,
    #[arg(long, default_value_t = 1)]
    pub offset: u32,
    /// Searched width; half the ship width under mirror symmetry.
    #[arg(long)]
    pub width: u32,
    /// asymmetric, even, odd or glide.
    #[arg(long, default_value = "asymmetric")]
    pub symmetry: Symmetry,
    /// orthogonal or diagonal.
    #[arg(long, default_value = "orthogonal")]
    pub translation: Translation,
    /// off, single or full.
    #[arg(long, default_value = "full")]
    pub lookahead: Lookahead,
}

impl ModeArgs {
    fn params(&self) -> Result<SearchParams, String> {
        SearchParams::new(
            self.rule,
            self.period,
            self.offset,
            self.width,
            self.symmetry,
            self.translation,
        )
        .map_err(|e| e.to_string())
    }
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[command(flatten)]
    pub mode: ModeArgs,
    #[arg(long, default_value_t = 1 << 22)]
    pub node_capacity: usize,
    /// Levels added to the depth limit per deepening round (default: period).
    #[arg(long)]
    pub delta: Option<u32>,
    /// Reduce the width once deepening goes this many levels past the frontier.
    #[arg(long)]
    pub max_deepening: Option<u32>,
    #[arg(long)]
    pub continue_after_find: bool,
    /// Stop after this many ships when continuing.
    #[arg(long)]
    pub max_ships: Option<usize>,
    /// Expansions between progress lines.
    #[arg(long, default_value_t = 1 << 20)]
    pub progress_interval: u64,
    /// Write ships here instead of standard output.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    /// No banner or progress lines.
    #[arg(long, short)]
    pub quiet: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub file: PathBuf,
    /// Overrides the rule in the file header.
    #[arg(long)]
    pub rule: Option<Rule>,
    #[arg(long, default_value_t = 64)]
    pub max_period: u32,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    #[arg(long, default_value = "B3/S23")]
    pub rule: Rule,
    #[arg(long, default_value_t = 2)]
    pub period: u32,
    #[arg(long, default_value_t = 1)]
    pub offset: u32,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub mode: ModeArgs,
    /// State rows, oldest first, as bit strings with cell 0 first.
    pub rows: Vec<String>,
}

/// Runs the tool with `args` (including the program name) and returns the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Search(a) => cmd_search(&a, out, err),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Stats(a) => cmd_stats(&a, out),
        Command::Oracle(a) => cmd_oracle(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

/// The startup line printed before a search.
pub fn banner(params: &SearchParams) -> String {
    format!(
        "shipsearch: rule {}, period {}, offset {}, width {}, symmetry {}, {}; de Bruijn graph size 2^{}",
        params.rule,
        params.period,
        params.offset,
        params.width,
        params.symmetry,
        params.translation,
        debruijn_size(params)
    )
}

/// RLE for a found ship, with a comment line describing its motion.
pub fn ship_rle(ship: &FoundShip, rule: &Rule) -> String {
    format!("#C {}\n{}", ship.descriptor, emit_rle(&ship.pattern, rule))
}

struct Progress<'a> {
    err: &'a mut dyn Write,
    quiet: bool,
}

impl SearchObserver for Progress<'_> {
    fn progress(&mut self, s: &SearchStatus, rate: f64) {
        if !self.quiet {
            let _ = writeln!(
                self.err,
                "level {} queue {} nodes {} limit {} expanded {} ({:.0}/s) width {}",
                s.frontier_level, s.queue_len, s.nodes_in_arena, s.deepening_limit, s.states_expanded, rate,
                s.current_width
            );
        }
    }

    fn deepening(&mut self, s: &SearchStatus, removed: usize) {
        if !self.quiet {
            let _ = writeln!(
                self.err,
                "deepened to {}: removed {removed}, queue {} nodes {}",
                s.deepening_limit, s.queue_len, s.nodes_in_arena
            );
        }
    }

    fn width_reduced(&mut self, width: u32) {
        if !self.quiet {
            let _ = writeln!(self.err, "width reduced to {width}");
        }
    }

    fn ship(&mut self, ship: &FoundShip) {
        if !self.quiet {
            let _ = writeln!(self.err, "found: {}", ship.descriptor);
        }
    }
}

fn cmd_search(a: &SearchArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, String> {
    let params = a.mode.params()?;
    let config = SearchConfig {
        node_capacity: a.node_capacity,
        delta: a.delta,
        max_deepening: a.max_deepening,
        continue_after_find: a.continue_after_find,
        max_ships: a.max_ships,
        progress_interval: a.progress_interval,
        lookahead: a.mode.lookahead,
    };
    config.validate(&params).map_err(|e| e.to_string())?;
    if !a.quiet {
        let _ = writeln!(err, "{}", banner(&params));
    }
    let mut observer = Progress { err, quiet: a.quiet };
    let result = run_search(&params, &config, &mut observer).map_err(|e| e.to_string())?;
    let err = observer.err;

    let text: Vec<String> = result.ships.iter().map(|s| ship_rle(s, &params.rule)).collect();
    let text = text.join("\n");
    match &a.output {
        Some(path) if !result.ships.is_empty() => {
            std::fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display()))?;
        }
        Some(_) => {}
        None => {
            let _ = out.write_all(text.as_bytes());
        }
    }
    if !a.quiet {
        let summary = match &result.status.outcome {
            Outcome::ShipFound(_) => "ship found".to_string(),
            Outcome::Exhausted => format!("search exhausted, {} ships", result.ships.len()),
            Outcome::WidthExhausted => format!("width exhausted, {} ships", result.ships.len()),
            Outcome::Running => "stopped".to_string(),
        };
        let _ = writeln!(err, "{summary} after {} expansions", result.status.states_expanded);
    }
    Ok(if result.ships.is_empty() { EXIT_NOT_FOUND } else { EXIT_OK })
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32, String> {
    let text = std::fs::read_to_string(&a.file).map_err(|e| format!("{}: {e}", a.file.display()))?;
    let (pattern, header_rule) = parse_rle(&text).map_err(|e| format!("{}: {e}", a.file.display()))?;
    let rule = a.rule.or(header_rule).unwrap_or(Rule::LIFE);
    let verdict = classify(&rule, &pattern, a.max_period).map_err(|e| e.to_string())?;
    let _ = writeln!(out, "{verdict}");
    Ok(if matches!(verdict, Classification::Ship(_)) { EXIT_OK } else { EXIT_NOT_FOUND })
}

fn cmd_stats(a: &StatsArgs, out: &mut dyn Write) -> Result<i32, String> {
    let params = SearchParams::orthogonal(a.rule, a.period, a.offset, 1).map_err(|e| e.to_string())?;
    let tables = ConstraintTables::new(&params);
    let _ = writeln!(out, "rule {}, period {}, offset {}", a.rule, a.period, a.offset);
    let _ = writeln!(out, "row equation and lookahead density: {:.1}%", 100.0 * tables.star_l_density());
    let _ = writeln!(out, "double lookahead density: {:.1}%", 100.0 * tables.ll_density());
    if let Some(p2) = tables.p2_table() {
        let _ = writeln!(out, "pruned: {:.1}%", 100.0 * p2.pruned_fraction());
    }
    Ok(EXIT_OK)
}

fn cmd_oracle(a: &OracleArgs, out: &mut dyn Write) -> Result<i32, String> {
    let params = a.mode.params()?;
    let rows = a
        .rows
        .iter()
        .map(|s| Row::parse_bits(s).ok_or_else(|| format!("bad row {s:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    let fast = SuccessorGenerator::new(&params, a.mode.lookahead).successors(&rows);
    let slow = Oracle::new(&params)
        .successors(&rows, a.mode.lookahead)
        .map_err(|e| e.to_string())?;
    let fmt = |v: &[Row]| v.iter().map(|r| r.to_bit_string(params.width)).collect::<Vec<_>>().join(" ");
    let _ = writeln!(out, "fast:   {}", fmt(&fast));
    let _ = writeln!(out, "oracle: {}", fmt(&slow));
    let same = fast == slow;
    let _ = writeln!(out, "{}", if same { "agree" } else { "DIFFER" });
    Ok(if same { EXIT_OK } else { EXIT_NOT_FOUND })
}
