use std::fmt::Write as _;
use std::path::PathBuf;

use num_bigint::BigInt;
use polyperm::{BinomialPolynomial, Enumeration, OperationKind};
use serde::{Deserialize, Serialize};

use crate::oeis;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Table,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Operation { op: OperationKind, k: usize },
    PegSet(PathBuf),
}

#[derive(Clone, Debug)]
pub struct Report {
    pub source: Source,
    pub peg_count: usize,
    pub counts: Vec<BigInt>,
    pub polynomial: BinomialPolynomial,
    pub cross_sections: usize,
}

/// The JSON form of a [`Report`]. Big numbers are strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonReport {
    pub source: JsonSource,
    pub counts: Vec<String>,
    pub binomial_coeffs: Vec<String>,
    pub valid_from: u64,
    pub cross_sections: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonSource {
    Operation { op: String, k: usize },
    PegSet { pegset: String },
}

impl Report {
    pub fn new(source: Source, peg_count: usize, e: Enumeration) -> Self {
        Report {
            source,
            peg_count,
            counts: e.counts,
            polynomial: e.polynomial,
            cross_sections: e.cross_sections,
        }
    }

    pub fn to_json(&self) -> JsonReport {
        let strings = |v: &[BigInt]| v.iter().map(ToString::to_string).collect();
        JsonReport {
            source: match &self.source {
                Source::Operation { op, k } => JsonSource::Operation {
                    op: op.name().to_string(),
                    k: *k,
                },
                Source::PegSet(path) => JsonSource::PegSet {
                    pegset: path.display().to_string(),
                },
            },
            counts: strings(&self.counts),
            binomial_coeffs: strings(&self.polynomial.coeffs),
            valid_from: self.polynomial.valid_from,
            cross_sections: self.cross_sections,
        }
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                let mut s =
                    serde_json::to_string_pretty(&self.to_json()).expect("report serializes");
                s.push('\n');
                s
            }
            OutputFormat::Table => self.table(),
        }
    }

    fn table(&self) -> String {
        let mut out = String::new();
        match &self.source {
            Source::Operation { op, k } => {
                write!(
                    out,
                    "{op}, at most {k} move{}",
                    if *k == 1 { "" } else { "s" }
                )
                .unwrap();
                if let Some(id) = oeis::reference(*op, *k) {
                    write!(out, " (OEIS {id})").unwrap();
                }
                out.push('\n');
            }
            Source::PegSet(path) => writeln!(out, "peg set {}", path.display()).unwrap(),
        }
        writeln!(
            out,
            "{} pegs, {} cross-sections",
            self.peg_count, self.cross_sections
        )
        .unwrap();
        let width = self.counts.last().map_or(1, |c| c.to_string().len()).max(5);
        let n_width = self.counts.len().to_string().len().max(2);
        writeln!(out, "{:>n_width$}  {:>width$}", "n", "count").unwrap();
        for (i, c) in self.counts.iter().enumerate() {
            writeln!(out, "{:>n_width$}  {:>width$}", i + 1, c.to_string()).unwrap();
        }
        writeln!(
            out,
            "polynomial for n >= {}: {}",
            self.polynomial.valid_from, self.polynomial
        )
        .unwrap();
        out
    }
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub op: OperationKind,
    pub k: usize,
    /// `(n, from the peg set, from breadth-first search)`
    pub rows: Vec<(usize, BigInt, BigInt)>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|(_, a, b)| a == b)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}, at most {} moves", self.op, self.k).unwrap();
        writeln!(out, "{:>3}  {:>10}  {:>10}", "n", "pegs", "search").unwrap();
        for (n, a, b) in &self.rows {
            let mark = if a == b { "" } else { "  MISMATCH" };
            writeln!(
                out,
                "{n:>3}  {:>10}  {:>10}{mark}",
                a.to_string(),
                b.to_string()
            )
            .unwrap();
        }
        out.push_str(if self.passed() { "ok\n" } else { "FAILED\n" });
        out
    }
}
