//! `sbk`: build, check and interrogate surface braid presentations.
//!
//! JSON payloads go to stdout, diagnostics to stderr. Exit codes: 0 ok,
//! 1 failed, 2 usage or parameter error, 3 overflow or unknown.

mod commands;
mod source;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use source::PresentationArgs;

#[derive(Parser)]
#[command(name = "sbk", version, about = "Surface braid group presentations and checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a presentation as JSON.
    Present(PresentationArgs),
    /// Check that every relator dies under a canonical map.
    Verify {
        #[command(flatten)]
        source: PresentationArgs,
        #[arg(long, value_enum, required_unless_present = "all")]
        target: Option<Target>,
        /// Run the symmetric and χ checks over every family with n ≤ 5, g ≤ 3, p ≤ 3.
        #[arg(long, conflicts_with_all = ["target", "family", "input"])]
        all: bool,
    },
    /// Abelian invariants of the presented group.
    Abelianize {
        #[command(flatten)]
        source: PresentationArgs,
        /// Add σ_i = 1 for every σ generator first.
        #[arg(long)]
        kill_sigma: bool,
    },
    /// Todd-Coxeter enumeration of a named subgroup's cosets.
    Enumerate {
        #[command(flatten)]
        source: PresentationArgs,
        #[arg(long, value_enum)]
        subgroup: SubgroupKind,
        /// Print the coset table as CSV instead of the JSON summary.
        #[arg(long)]
        csv: bool,
        /// Coset bound; defaults to $SBK_MAX_COSETS or 1000000.
        #[arg(long)]
        max_cosets: Option<usize>,
    },
    /// Reidemeister-Schreier presentation of a named finite-index subgroup.
    Subgroup {
        #[command(flatten)]
        source: PresentationArgs,
        #[arg(long, value_enum)]
        subgroup: SubgroupKind,
        /// Skip Tietze simplification.
        #[arg(long)]
        raw: bool,
        #[arg(long)]
        max_cosets: Option<usize>,
    },
    /// Search for a derivation certificate of lhs = rhs.
    Prove {
        #[command(flatten)]
        source: PresentationArgs,
        #[arg(long, requires = "rhs", conflicts_with_all = ["entry", "corpus"])]
        lhs: Option<String>,
        #[arg(long, requires = "lhs")]
        rhs: Option<String>,
        /// Prove the named corpus entry in its own presentation.
        #[arg(long, conflicts_with = "corpus")]
        entry: Option<String>,
        /// Run the whole identity corpus.
        #[arg(long)]
        corpus: bool,
        /// Distinct words the search may visit.
        #[arg(long, default_value_t = 200_000)]
        max_nodes: usize,
        /// Word-length cap; defaults to |start| + 2·longest relator.
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Replay a certificate; the presentation defaults to the one it names.
    Replay {
        #[command(flatten)]
        source: PresentationArgs,
        /// Certificate file; stdin when absent.
        #[arg(long)]
        certificate: Option<std::path::PathBuf>,
    },
    /// Braid words of pure generators.
    Expand {
        #[command(flatten)]
        source: PresentationArgs,
        /// A word in the pure generators to expand; all generators when absent.
        #[arg(long)]
        word: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Target {
    Symmetric,
    Chi,
    AbelianExpected,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SubgroupKind {
    B0,
    Pure,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Status {
    Ok,
    Failed,
    Unknown,
}

/// What a command prints and how the process exits.
struct Outcome {
    status: Status,
    payload: Payload,
    diagnostics: Vec<String>,
}

enum Payload {
    Json(Value),
    Text(String),
}

impl Outcome {
    fn ok(v: Value) -> Self {
        Outcome { status: Status::Ok, payload: Payload::Json(v), diagnostics: Vec::new() }
    }

    fn with_status(mut self, status: Status) -> Self {
        self.status = status;
        self
    }

    fn note(mut self, d: impl Into<String>) -> Self {
        self.diagnostics.push(d.into());
        self
    }
}

/// A failure before any payload: exit code and message.
struct CliError {
    code: u8,
    msg: String,
}

impl From<sbk_core::Error> for CliError {
    fn from(e: sbk_core::Error) -> Self {
        use sbk_core::Error::*;
        let code = match e {
            Overflow(_) | IncompleteTable => 3,
            UnknownRelator(_) | PositionOutOfRange { .. } => 1,
            _ => 2,
        };
        CliError { code, msg: e.to_string() }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError { code: 2, msg: msg.into() }
}

/// Write to stdout; a closed pipe is not an error.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|()| out.flush());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(out) => {
            for d in &out.diagnostics {
                eprintln!("{d}");
            }
            let text = match out.payload {
                Payload::Json(v) => serde_json::to_string_pretty(&v).expect("json") + "\n",
                Payload::Text(t) => t,
            };
            emit(&text);
            ExitCode::from(match out.status {
                Status::Ok => 0,
                Status::Failed => 1,
                Status::Unknown => 3,
            })
        }
        Err(e) => {
            eprintln!("sbk: {}", e.msg);
            let status = match e.code {
                3 => "unknown",
                _ => "failed",
            };
            emit(&format!("{}\n", json!({ "status": status, "error": e.msg })));
            ExitCode::from(e.code)
        }
    }
}
