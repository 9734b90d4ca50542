use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use frobtope_cli::{run_to_output, Command, Format, RunConfig};

/// Frobenius polytopes: kernels, facets, f-vectors and brute-force verification.
///
/// Group specs: dihedral:<n> | a4 | pq:<p>,<q>,<u> | cyclic:<n> | gens:<deg>;<perm>;...
/// where <perm> is comma-separated one-line notation, e.g. gens:3;2,3,1;2,1,3
#[derive(Parser)]
#[command(name = "frobtope", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,

    /// Maximum vertex count for the brute-force oracle (default 14).
    #[arg(long, global = true)]
    cap: Option<usize>,

    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Kernel, complement and polytope dimensions.
    Info { spec: String },
    /// Face counts by dimension.
    Fvector {
        spec: String,
        /// formula | free-sum | oracle
        #[arg(long, default_value = "formula")]
        method: String,
    },
    /// Facets as complements of transversals.
    Facets {
        spec: String,
        /// List every facet instead of the first 1000.
        #[arg(long)]
        all: bool,
    },
    /// Count (and list) the faces of one dimension.
    Faces {
        spec: String,
        #[arg(long, allow_negative_numbers = true)]
        dim: i64,
        #[arg(long)]
        all: bool,
    },
    /// Gram table census.
    Gram { spec: String },
    /// Cross-check the face structure against brute-force geometry.
    Verify { spec: String },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (spec, command, all) = match cli.command {
        Cmd::Info { spec } => (spec, Command::Info, false),
        Cmd::Fvector { spec, method } => (spec, Command::FVector { method }, false),
        Cmd::Facets { spec, all } => (spec, Command::Facets, all),
        Cmd::Faces { spec, dim, all } => (spec, Command::Faces { dim }, all),
        Cmd::Gram { spec } => (spec, Command::Gram, false),
        Cmd::Verify { spec } => (spec, Command::Verify, false),
    };
    let config = RunConfig {
        group_spec: spec,
        command,
        format: match cli.format {
            FormatArg::Json => Format::Json,
            FormatArg::Text => Format::Text,
        },
        cap: cli.cap,
        all,
        output_path: cli.output,
    };
    ExitCode::from(run_to_output(&config) as u8)
}
