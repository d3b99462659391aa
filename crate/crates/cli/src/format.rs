//! Peg-set files: one peg permutation per line, `#` starts a comment.

use std::fmt;

use polyperm::peg::parse_token;
use polyperm::{Error, PegPermutation, PegSet, Permutation};

/// A parse failure, located by 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub token: String,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {} (at {:?})",
            self.line, self.column, self.message, self.token
        )
    }
}

impl std::error::Error for ParseError {}

pub fn parse_pegset(text: &str) -> Result<PegSet, ParseError> {
    let mut set = PegSet::new();
    for (index, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if let Some(peg) = parse_line(line, index + 1)? {
            set.insert(peg);
        }
    }
    Ok(set)
}

fn parse_line(line: &str, line_no: usize) -> Result<Option<PegPermutation>, ParseError> {
    let mut values = Vec::new();
    let mut decorations = Vec::new();
    let mut first_column = None;
    for (column, token) in tokens(line) {
        first_column.get_or_insert(column);
        let (value, decoration) = parse_token(token).map_err(|e| ParseError {
            line: line_no,
            column,
            token: token.to_string(),
            message: match e {
                Error::Parse { reason, .. } => reason.to_string(),
                other => other.to_string(),
            },
        })?;
        values.push(value);
        decorations.push(decoration);
    }
    let Some(column) = first_column else {
        return Ok(None);
    };
    let base = Permutation::new(values).map_err(|_| ParseError {
        line: line_no,
        column,
        token: line.trim().to_string(),
        message: "values do not form a permutation of 1..m".to_string(),
    })?;
    Ok(Some(
        PegPermutation::new(base, decorations).expect("one decoration per value"),
    ))
}

/// Whitespace-separated tokens with their 1-based character column.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    for (col, (byte, ch)) in line.char_indices().enumerate() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some((col + 1, byte)),
            (true, Some((c, b))) => {
                out.push((c, &line[b..byte]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some((c, b)) = start {
        out.push((c, &line[b..]));
    }
    out.into_iter()
}

/// The file form of a peg set, one peg per line in set order.
pub fn write_pegset(set: &PegSet) -> String {
    let mut out = String::new();
    for peg in set {
        out.push_str(&peg.to_string());
        out.push('\n');
    }
    out
}
