//! Command-line front end: peg-set files, reports and brute-force checks.

pub mod format;
pub mod oeis;
pub mod report;

use std::path::{Path, PathBuf};

use polyperm::oracle::{bfs_counts, HARD_LIMIT};
use polyperm::rearrange::peg_set_for;
use polyperm::{enumerate_pegset, Error, OperationKind, OracleLimits};

pub use report::{OutputFormat, Report, Source, VerifyReport};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: PathBuf,
        source: format::ParseError,
    },
    #[error("{0}")]
    Usage(String),
    #[error("n = {n} is above the brute-force limit {limit}")]
    Limit { n: usize, limit: usize },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Limit { .. } => 3,
            _ => 2,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::LimitExceeded { n, limit } => CliError::Limit { n, limit },
            other => CliError::Usage(other.to_string()),
        }
    }
}

pub fn load_pegset(path: &Path) -> Result<polyperm::PegSet, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    format::parse_pegset(&text).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

fn check_n_max(n_max: usize) -> Result<(), CliError> {
    if n_max == 0 {
        return Err(CliError::Usage("--n-max must be at least 1".into()));
    }
    Ok(())
}

/// Enumerate the class described by a peg-set file.
pub fn cmd_enumerate(path: &Path, n_max: usize) -> Result<Report, CliError> {
    check_n_max(n_max)?;
    let pegs = load_pegset(path)?;
    if pegs.is_empty() {
        return Err(CliError::Usage(format!("{}: no pegs", path.display())));
    }
    let e = enumerate_pegset(&pegs, n_max);
    Ok(Report::new(
        Source::PegSet(path.to_path_buf()),
        pegs.len(),
        e,
    ))
}

/// Enumerate permutations sortable by at most `k` moves of `op`.
pub fn cmd_op(op: OperationKind, k: usize, n_max: usize) -> Result<Report, CliError> {
    check_n_max(n_max)?;
    let pegs = peg_set_for(op, k);
    let e = enumerate_pegset(&pegs, n_max);
    Ok(Report::new(Source::Operation { op, k }, pegs.len(), e))
}

/// Compare the peg-set counts against breadth-first search up to `n_max`.
pub fn cmd_verify(
    op: OperationKind,
    k: usize,
    n_max: usize,
    limit: usize,
) -> Result<VerifyReport, CliError> {
    check_n_max(n_max)?;
    let limit = limit.min(HARD_LIMIT);
    if n_max > limit {
        return Err(CliError::Limit { n: n_max, limit });
    }
    let limits = OracleLimits {
        bfs: limit,
        ..OracleLimits::default()
    };
    let e = enumerate_pegset(&peg_set_for(op, k), n_max);
    let mut rows = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let expected = bfs_counts(op, k, n, &limits)?;
        rows.push((n, e.counts[n - 1].clone(), expected.into()));
    }
    Ok(VerifyReport { op, k, rows })
}
