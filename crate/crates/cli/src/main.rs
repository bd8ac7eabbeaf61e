//! `unavoid`: command-line front end for unavoid-core.
//!
//! Output is JSON on stdout unless `--format` says otherwise. Exit codes:
//! 0 success, 1 domain error or failed verification, 2 usage error. Errors
//! are printed as `{"error": {"code": ..., "message": ...}}`.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "unavoid", version, about = "Local vertex parameters and unavoidable induced subgraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Per-vertex deg, alphaL, cL, sdeg with p_k counts and H-indices.
    Analyze {
        #[command(flatten)]
        input: GraphInput,
        /// Threshold for the p_k counts.
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Build a family instance, or list a theorem's members.
    Pattern {
        #[arg(long, required_unless_present = "theorem")]
        family: Option<String>,
        #[arg(long, conflicts_with = "family")]
        theorem: Option<String>,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Induced-subgraph test against one pattern or a theorem's family.
    Detect {
        #[command(flatten)]
        input: GraphInput,
        /// `family:n` (e.g. `CK:3`) or a graph6 string.
        #[arg(long, required_unless_present = "theorem")]
        pattern: Option<String>,
        #[arg(long, conflicts_with = "pattern", requires = "n")]
        theorem: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        /// Node budget for the single-pattern search.
        #[arg(long)]
        budget: Option<u64>,
        #[command(flatten)]
        common: Common,
    },
    /// Extract an unavoidable induced subgraph, or report that none exists.
    Extract {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, required_unless_present = "prop")]
        theorem: Option<String>,
        /// With `--scope`, selects the B1 (connected) or B2 (general) family.
        #[arg(long, conflicts_with = "theorem")]
        prop: Option<String>,
        #[arg(long, default_value = "connected")]
        scope: String,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Threshold quantities for a theorem at n.
    Bounds {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        n: u64,
        /// Use the pure recursion instead of the known small Ramsey numbers.
        #[arg(long)]
        no_table: bool,
        /// Also re-evaluate every entry from its formula text.
        #[arg(long)]
        audit: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Run a verification suite and emit its report.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        max_order: usize,
        #[arg(long)]
        connected: bool,
        /// graph6 file to run over instead of built-in enumeration.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Defaults to every theorem for pattern-counts and B1_deg for scan.
        #[arg(long)]
        theorem: Option<String>,
        /// Family parameter (scan), or largest n (pattern-counts).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value = "0.3")]
        edge_prob: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Exhaustive isomorphism classes, or seeded random graphs.
    Enumerate {
        #[arg(long, required_unless_present = "max_order")]
        n: Option<usize>,
        #[arg(long, conflicts_with = "n")]
        max_order: Option<usize>,
        #[arg(long)]
        connected: bool,
        /// Emit this many G(n, p) graphs instead of enumerating.
        #[arg(long, requires = "n")]
        random: Option<u64>,
        #[arg(long, default_value = "0.5")]
        edge_prob: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug)]
struct GraphInput {
    /// Inline graph6.
    #[arg(long, required_unless_present = "file", conflicts_with = "file")]
    graph6: Option<String>,
    /// `@path` edge list, `-` for a graph6 stream on stdin, else a graph6 file.
    #[arg(long)]
    file: Option<String>,
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the payload here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads; 1 runs sequentially.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Graph6,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    PatternCounts,
    LocalChain,
    Cds,
    Hindex,
    Matching,
    Witnesses,
    Scan,
}

/// Failure modes of a run, mapped to exit codes.
enum Failure {
    Usage(String),
    Domain(unavoid_core::Error),
    /// A suite ran but reported violations; its report was already written.
    Verdict,
}

impl From<unavoid_core::Error> for Failure {
    fn from(e: unavoid_core::Error) -> Self {
        Failure::Domain(e)
    }
}

fn error_json(code: &str, message: &str) -> String {
    serde_json::to_string_pretty(&json!({ "error": { "code": code, "message": message } })).unwrap()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            println!("{}", error_json("usage", &e.kind().to_string()));
            return ExitCode::from(2);
        }
    };
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verdict) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            println!("{}", error_json("usage", &msg));
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            println!("{}", error_json(e.code(), &e.to_string()));
            ExitCode::from(1)
        }
    }
}
