//! File formats, report serialization and the command implementations behind
//! the `spinflat` binary.
//!
//! Commands return their output and an exit status instead of printing, so
//! they can be driven from tests and from the batch runner alike.

pub mod batch;
pub mod format;
pub mod report;

use std::fs;
use std::path::Path;

use spinflat_core::decide::AnalyzeError;
use spinflat_core::spinlift::{self, LiftError};
use spinflat_core::{analyze, AnalyzeOptions};
use thiserror::Error;

use crate::format::ParseError;
use crate::report::ReportDoc;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

/// Explicit sign assignments printed by `--lifts`.
pub const LIFTS_LIMIT: usize = 64;

#[derive(Debug, Error)]
pub enum Failure {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{path}: {source}")]
    Analyze { path: String, source: AnalyzeError },
    #[error("{path}: {source}")]
    Lift { path: String, source: LiftError },
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Io { .. } | Failure::Parse { .. } => EXIT_PARSE,
            Failure::Analyze { source, .. } if source.is_cap_exceeded() => EXIT_CAP,
            Failure::Analyze { .. } => EXIT_INTERNAL,
            Failure::Lift { source: LiftError::LiftMismatch | LiftError::ReassemblyMismatch, .. } => EXIT_INTERNAL,
            Failure::Lift { .. } => EXIT_PARSE,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOptions {
    pub cap: usize,
    pub oracle: bool,
    pub lifts: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self { cap: spinflat_core::group::DEFAULT_CAP, oracle: false, lifts: false }
    }
}

impl RunOptions {
    fn analyze_options(&self) -> AnalyzeOptions {
        AnalyzeOptions {
            cap: self.cap,
            oracle: self.oracle,
            solution_limit: if self.lifts { LIFTS_LIMIT } else { 0 },
            ..AnalyzeOptions::default()
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|source| Failure::Io { path: path.display().to_string(), source })
}

/// Parses and analyzes one group file.
pub fn analyze_file(path: &Path, options: &RunOptions) -> Result<ReportDoc, Failure> {
    let name = path.display().to_string();
    let input = format::parse_group(&read(path)?).map_err(|source| Failure::Parse { path: name.clone(), source })?;
    let report =
        analyze(&input, &options.analyze_options()).map_err(|source| Failure::Analyze { path: name, source })?;
    Ok(ReportDoc::from(&report))
}

/// `spinflat lift`: a preimage in `Spin(n)` of a signed permutation matrix,
/// verified against the covering map.
pub fn lift_file(path: &Path) -> Result<String, Failure> {
    let name = path.display().to_string();
    let m = format::parse_matrix(&read(path)?).map_err(|source| Failure::Parse { path: name.clone(), source })?;
    let x = spinlift::lift_checked(&m).map_err(|source| Failure::Lift { path: name.clone(), source })?;
    let minus = x.neg().map_err(|e| Failure::Lift { path: name, source: e.into() })?;
    Ok(format!("{x}\n# other preimage: {minus}\n"))
}
