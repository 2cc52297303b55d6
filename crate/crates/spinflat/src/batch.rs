//! Directory scans: every `*.grp` file becomes one row, ordered by name.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;

use crate::report::{ReportDoc, TSV_HEADER};
use crate::{analyze_file, RunOptions, EXIT_OK};

pub const EXTENSION: &str = "grp";

#[derive(Debug)]
pub struct BatchRow {
    /// File name without the extension.
    pub name: String,
    pub outcome: Result<ReportDoc, String>,
    /// Exit status the file would produce on its own.
    pub exit_code: i32,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub files: usize,
    pub orientable: usize,
    pub spin: usize,
    pub errors: usize,
}

pub fn group_files(dir: &Path) -> io::Result<Vec<(String, PathBuf)>> {
    let mut files = Vec::new();
    for entry in fs::read_dir(dir)? {
        let path = entry?.path();
        if path.is_file() && path.extension().is_some_and(|e| e == EXTENSION) {
            let name = path.file_stem().unwrap_or_default().to_string_lossy().into_owned();
            files.push((name, path));
        }
    }
    files.sort();
    Ok(files)
}

/// Analyzes the files in parallel; rows keep the sorted name order.
pub fn run(dir: &Path, options: &RunOptions) -> io::Result<Vec<BatchRow>> {
    let files = group_files(dir)?;
    Ok(files
        .into_par_iter()
        .map(|(name, path)| match analyze_file(&path, options) {
            Ok(doc) => BatchRow { name, outcome: Ok(doc), exit_code: EXIT_OK },
            Err(e) => BatchRow { name, exit_code: e.exit_code(), outcome: Err(e.to_string()) },
        })
        .collect())
}

pub fn totals(rows: &[BatchRow]) -> Totals {
    let mut t = Totals { files: rows.len(), ..Totals::default() };
    for row in rows {
        match &row.outcome {
            Ok(d) => {
                t.orientable += usize::from(d.orientable);
                t.spin += usize::from(d.spin_exists);
            }
            Err(_) => t.errors += 1,
        }
    }
    t
}

/// First non-zero per-file status in name order.
pub fn exit_code(rows: &[BatchRow]) -> i32 {
    rows.iter().map(|r| r.exit_code).find(|&c| c != EXIT_OK).unwrap_or(EXIT_OK)
}

fn one_line(s: &str) -> String {
    s.replace(['\t', '\n', '\r'], " ")
}

/// Header, one row per file, then a `#` totals line. Error rows carry the
/// message in the second column and `-` in the rest.
pub fn to_tsv(rows: &[BatchRow]) -> String {
    let mut out = String::from(TSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&one_line(&row.name));
        out.push('\t');
        match &row.outcome {
            Ok(d) => out.push_str(&d.tsv_fields()),
            Err(e) => {
                out.push_str("error: ");
                out.push_str(&one_line(e));
                out.push_str(&"\t-".repeat(6));
            }
        }
        out.push('\n');
    }
    let t = totals(rows);
    out.push_str(&format!(
        "# totals: files={} orientable={} spin={} errors={}\n",
        t.files, t.orientable, t.spin, t.errors
    ));
    out
}

#[derive(Serialize)]
struct JsonRow<'a> {
    name: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<&'a str>,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    report: Option<&'a ReportDoc>,
}

#[derive(Serialize)]
struct JsonTable<'a> {
    rows: Vec<JsonRow<'a>>,
    totals: Totals,
}

pub fn to_json(rows: &[BatchRow]) -> String {
    let table = JsonTable {
        rows: rows
            .iter()
            .map(|r| JsonRow {
                name: &r.name,
                error: r.outcome.as_ref().err().map(String::as_str),
                report: r.outcome.as_ref().ok(),
            })
            .collect(),
        totals: totals(rows),
    };
    serde_json::to_string_pretty(&table).expect("table serialization is infallible")
}
