//! Table emitters. CSV is the pinned machine format (fixed 16-column
//! header), Markdown mirrors the reference tables for reading, JSON carries
//! the same field names as flat objects.

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{json, Value};
use wavesort::theory::PivotPmf;

use crate::report::BenchReport;

pub const CSV_HEADER: &str = "algo,n,pattern,trials,seed,comparisons_mean,comparisons_min,comparisons_max,swaps_mean,swaps_min,swaps_max,blockmoves_mean,blockmoves_min,blockmoves_max,maxdepth_mean,maxdepth_max";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Markdown,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownFormat(pub String);

impl fmt::Display for UnknownFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown format {:?} (expected csv, markdown, json)",
            self.0
        )
    }
}

impl std::error::Error for UnknownFormat {}

impl FromStr for Format {
    type Err = UnknownFormat;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "markdown" => Ok(Format::Markdown),
            "json" => Ok(Format::Json),
            _ => Err(UnknownFormat(s.to_string())),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Csv => "csv",
            Format::Markdown => "markdown",
            Format::Json => "json",
        })
    }
}

/// Render reports, one row each. An empty slice yields a header-only table.
pub fn emit_reports(reports: &[BenchReport], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = String::from(CSV_HEADER);
            out.push('\n');
            for r in reports {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
                    r.algo,
                    r.n,
                    r.pattern,
                    r.trials,
                    r.seed,
                    r.comparisons.mean,
                    r.comparisons.min,
                    r.comparisons.max,
                    r.swaps.mean,
                    r.swaps.min,
                    r.swaps.max,
                    r.block_moves.mean,
                    r.block_moves.min,
                    r.block_moves.max,
                    r.max_depth.mean,
                    r.max_depth.max,
                )
                .unwrap();
            }
            out
        }
        Format::Markdown => {
            let mut out = String::new();
            out.push_str("| algo | n | pattern | trials | seed | comparisons | swaps | block moves | max depth |\n");
            out.push_str("| --- | --- | --- | --- | --- | --- | --- | --- | --- |\n");
            for r in reports {
                writeln!(
                    out,
                    "| {} | {} | {} | {} | {} | {:.1} | {:.1} | {:.1} | {} |",
                    r.algo,
                    r.n,
                    r.pattern,
                    r.trials,
                    r.seed,
                    r.comparisons.mean,
                    r.swaps.mean,
                    r.block_moves.mean,
                    r.max_depth.max,
                )
                .unwrap();
            }
            out
        }
        Format::Json => {
            let rows: Vec<Value> = reports
                .iter()
                .map(|r| {
                    json!({
                        "algo": r.algo,
                        "n": r.n,
                        "pattern": r.pattern.to_string(),
                        "trials": r.trials,
                        "seed": r.seed,
                        "comparisons_mean": r.comparisons.mean,
                        "comparisons_min": r.comparisons.min,
                        "comparisons_max": r.comparisons.max,
                        "swaps_mean": r.swaps.mean,
                        "swaps_min": r.swaps.min,
                        "swaps_max": r.swaps.max,
                        "blockmoves_mean": r.block_moves.mean,
                        "blockmoves_min": r.block_moves.min,
                        "blockmoves_max": r.block_moves.max,
                        "maxdepth_mean": r.max_depth.mean,
                        "maxdepth_max": r.max_depth.max,
                    })
                })
                .collect();
            let mut out = serde_json::to_string_pretty(&rows).expect("serializable");
            out.push('\n');
            out
        }
    }
}

/// Render pivot-rank distributions side by side: one `i` column and one
/// probability column per series. All series must share `n`.
pub fn emit_pmfs(pmfs: &[PivotPmf], format: Format) -> String {
    assert!(!pmfs.is_empty(), "at least one distribution required");
    let n = pmfs[0].n;
    assert!(pmfs.iter().all(|p| p.n == n), "series must share n");
    match format {
        Format::Csv => {
            let mut out = String::from("i");
            for pmf in pmfs {
                write!(out, ",p_ls{}", pmf.ls).unwrap();
            }
            out.push('\n');
            for i in 0..n {
                write!(out, "{}", i + 1).unwrap();
                for pmf in pmfs {
                    write!(out, ",{}", pmf.probs[i]).unwrap();
                }
                out.push('\n');
            }
            out
        }
        Format::Markdown => {
            let mut out = String::from("| i |");
            for pmf in pmfs {
                write!(out, " p(ls={}) |", pmf.ls).unwrap();
            }
            out.push('\n');
            out.push_str("| --- |");
            out.push_str(&" --- |".repeat(pmfs.len()));
            out.push('\n');
            for i in 0..n {
                write!(out, "| {} |", i + 1).unwrap();
                for pmf in pmfs {
                    write!(out, " {} |", pmf.probs[i]).unwrap();
                }
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let rows: Vec<Value> = (0..n)
                .map(|i| {
                    let mut row = serde_json::Map::new();
                    row.insert("i".into(), json!(i + 1));
                    for pmf in pmfs {
                        row.insert(format!("p_ls{}", pmf.ls), json!(pmf.probs[i]));
                    }
                    Value::Object(row)
                })
                .collect();
            let mut out = serde_json::to_string_pretty(&rows).expect("serializable");
            out.push('\n');
            out
        }
    }
}
