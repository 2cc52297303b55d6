use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use spinflat::report::ReportDoc;
use spinflat::{analyze_file, batch, lift_file, RunOptions, EXIT_OK, EXIT_PARSE};

/// Decide whether a flat manifold R^n/Γ admits a spin structure and count them.
#[derive(Parser)]
#[command(name = "spinflat", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Cross-check the F2 solver against exhaustive sign enumeration.
    #[arg(long)]
    oracle: bool,
    /// Upper bound on the holonomy group order.
    #[arg(long, value_name = "N", default_value_t = spinflat_core::group::DEFAULT_CAP)]
    cap: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one group file.
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
        /// Also print the cover generators, their lifts and explicit sign assignments.
        #[arg(long)]
        lifts: bool,
    },
    /// Print a preimage in Spin(n) of a signed permutation matrix.
    Lift { file: PathBuf },
    /// Analyze every .grp file in a directory.
    Batch {
        dir: PathBuf,
        #[command(flatten)]
        common: Common,
        /// Exit 0 even if some files fail.
        #[arg(long)]
        keep_going: bool,
    },
}

/// Writes to stdout; a closed pipe is not an error worth reporting.
fn emit(text: &str) {
    let _ = io::stdout().lock().write_all(text.as_bytes());
}

fn print(doc: &ReportDoc, json: bool) {
    if json {
        emit(&(doc.to_json() + "\n"));
    } else {
        emit(&doc.to_text());
    }
}

fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Analyze { file, common, lifts } => {
            let options = RunOptions { cap: common.cap, oracle: common.oracle, lifts };
            match analyze_file(&file, &options) {
                Ok(doc) => {
                    print(&doc, common.json);
                    EXIT_OK
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    e.exit_code()
                }
            }
        }
        Command::Lift { file } => match lift_file(&file) {
            Ok(text) => {
                emit(&text);
                EXIT_OK
            }
            Err(e) => {
                eprintln!("error: {e}");
                e.exit_code()
            }
        },
        Command::Batch { dir, common, keep_going } => {
            let options = RunOptions { cap: common.cap, oracle: common.oracle, lifts: false };
            let rows = match batch::run(&dir, &options) {
                Ok(rows) => rows,
                Err(e) => {
                    eprintln!("error: {}: {e}", dir.display());
                    return EXIT_PARSE;
                }
            };
            if common.json {
                emit(&(batch::to_json(&rows) + "\n"));
            } else {
                emit(&batch::to_tsv(&rows));
            }
            for row in &rows {
                if let Err(e) = &row.outcome {
                    eprintln!("error: {e}");
                }
            }
            if keep_going {
                EXIT_OK
            } else {
                batch::exit_code(&rows)
            }
        }
    }
}

fn main() -> ExitCode {
    let code = run(Cli::parse());
    ExitCode::from(u8::try_from(code).unwrap_or(1))
}
