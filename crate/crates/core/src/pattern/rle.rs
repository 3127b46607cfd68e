//! Run-length encoded pattern files.
//!
//! ```text
//! #C optional comment lines
//! x = 3, y = 3, rule = B3/S23
//! bo$2bo$3o!
//! ```

use thiserror::Error;

use super::Pattern;
use crate::rules::{parse_rule, Rule, RuleError};

const MAX_LINE: usize = 70;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RleError {
    #[error("missing `x = ..., y = ...` header line")]
    MissingHeader,
    #[error("malformed header: {0}")]
    BadHeader(String),
    #[error("bad rule in header: {0}")]
    Rule(#[from] RuleError),
    #[error("unexpected character {0:?} in pattern body")]
    BadToken(char),
    #[error("pattern body exceeds the declared {width}x{height} extents")]
    OutOfBounds { width: usize, height: usize },
    #[error("pattern body is not terminated by `!`")]
    MissingTerminator,
}

/// Parses RLE text into a pattern of the declared size and the optional rule
/// from its header.
pub fn parse_rle(text: &str) -> Result<(Pattern, Option<Rule>), RleError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or(RleError::MissingHeader)?;
    let (width, height, rule) = parse_header(header)?;
    let mut pattern = Pattern::new(width, height);

    let (mut x, mut y) = (0usize, 0usize);
    let mut count: Option<usize> = None;
    let mut terminated = false;
    'body: for line in lines {
        for c in line.chars() {
            match c {
                '0'..='9' => {
                    let d = c as usize - '0' as usize;
                    count = Some(count.unwrap_or(0).saturating_mul(10).saturating_add(d));
                }
                'b' | 'o' | '.' | 'A' => {
                    let n = count.take().unwrap_or(1);
                    let live = matches!(c, 'o' | 'A');
                    if live {
                        if x + n > width || y >= height {
                            return Err(RleError::OutOfBounds { width, height });
                        }
                        for i in x..x + n {
                            pattern.set(i, y, true);
                        }
                    } else if x + n > width {
                        return Err(RleError::OutOfBounds { width, height });
                    }
                    x += n;
                }
                '$' => {
                    y += count.take().unwrap_or(1);
                    x = 0;
                }
                '!' => {
                    terminated = true;
                    break 'body;
                }
                c if c.is_whitespace() => {}
                c => return Err(RleError::BadToken(c)),
            }
        }
    }
    if !terminated {
        return Err(RleError::MissingTerminator);
    }
    Ok((pattern, rule))
}

fn parse_header(line: &str) -> Result<(usize, usize, Option<Rule>), RleError> {
    if !line.starts_with('x') {
        return Err(RleError::MissingHeader);
    }
    let mut width = None;
    let mut height = None;
    let mut rule = None;
    for field in line.split(',') {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| RleError::BadHeader(line.to_string()))?;
        let value = value.trim();
        match key.trim() {
            "x" => width = Some(parse_dim(value, line)?),
            "y" => height = Some(parse_dim(value, line)?),
            "rule" => rule = Some(parse_rule(value)?),
            _ => return Err(RleError::BadHeader(line.to_string())),
        }
    }
    match (width, height) {
        (Some(w), Some(h)) => Ok((w, h, rule)),
        _ => Err(RleError::BadHeader(line.to_string())),
    }
}

fn parse_dim(value: &str, line: &str) -> Result<usize, RleError> {
    value
        .parse()
        .map_err(|_| RleError::BadHeader(line.to_string()))
}

/// Writes the trimmed pattern as RLE with a rule annotation. Body lines are
/// at most 70 characters.
pub fn emit_rle(pattern: &Pattern, rule: &Rule) -> String {
    let p = pattern.trimmed();
    let mut tokens = Vec::new();
    let mut pending_rows = 0usize;
    for y in 0..p.height() {
        let mut runs: Vec<(usize, bool)> = Vec::new();
        for x in 0..p.width() {
            let live = p.get(x, y);
            match runs.last_mut() {
                Some((n, state)) if *state == live => *n += 1,
                _ => runs.push((1, live)),
            }
        }
        if runs.last().is_some_and(|&(_, live)| !live) {
            runs.pop();
        }
        if runs.is_empty() {
            pending_rows += 1;
            continue;
        }
        if y > 0 {
            tokens.push(run_token(pending_rows + 1, '$'));
        }
        pending_rows = 0;
        for (n, live) in runs {
            tokens.push(run_token(n, if live { 'o' } else { 'b' }));
        }
    }
    tokens.push("!".to_string());

    let mut out = format!("x = {}, y = {}, rule = {}\n", p.width(), p.height(), rule);
    let mut line_len = 0;
    for t in tokens {
        if line_len + t.len() > MAX_LINE {
            out.push('\n');
            line_len = 0;
        }
        line_len += t.len();
        out.push_str(&t);
    }
    out.push('\n');
    out
}

fn run_token(n: usize, tag: char) -> String {
    if n == 1 {
        tag.to_string()
    } else {
        format!("{n}{tag}")
    }
}
