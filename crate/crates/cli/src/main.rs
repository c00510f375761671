//! `hookpart`: decomposition and statistics queries, class enumeration, and
//! identity verification.
//!
//! Exit codes: 0 success or every record MATCHes, 1 some record MISMATCHes,
//! 2 usage or validation error.

mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "hookpart",
    version,
    about = "Hook-length identities for integer partitions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    All,
    Sc,
    Bc,
}

#[derive(Subcommand)]
enum Command {
    /// Littlewood decomposition of a partition.
    Decompose {
        /// Parts separated by commas, e.g. "4,4,3,2"; "" is the empty partition.
        #[arg(long, allow_hyphen_values = true)]
        partition: String,
        #[arg(long)]
        t: usize,
        /// Also print the boundary word and its subwords.
        #[arg(long)]
        show_word: bool,
    },
    /// Statistics of a partition.
    Stats {
        #[arg(long, allow_hyphen_values = true)]
        partition: String,
        /// Modulus for the hooks divisible by t and the BC test.
        #[arg(long)]
        t: Option<usize>,
    },
    /// Lists the partitions of n in a class.
    Enumerate {
        #[arg(long, value_enum)]
        class: ClassArg,
        #[arg(long)]
        n: usize,
        /// Modulus; required for `bc`.
        #[arg(long)]
        t: Option<usize>,
    },
    /// Verifies identities from the registry.
    Verify {
        /// Identity id, or "all".
        #[arg(long)]
        identity: String,
        /// Overrides each record's default t.
        #[arg(long)]
        t: Option<usize>,
        /// Truncation order N; defaults to 20 for even-t records and 15 for odd-t records.
        #[arg(long)]
        qmax: Option<usize>,
        /// Degree cap in z.
        #[arg(long, default_value_t = 6)]
        z_degree: u32,
        /// Seed for the random weight tables of the master theorems.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<i64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Decompose {
            partition,
            t,
            show_word,
        } => commands::decompose(&partition, t, show_word, cli.format).map(|s| (s, 0)),
        Command::Stats { partition, t } => {
            commands::stats(&partition, t, cli.format).map(|s| (s, 0))
        }
        Command::Enumerate { class, n, t } => {
            commands::enumerate(class, n, t, cli.format).map(|s| (s, 0))
        }
        Command::Verify {
            identity,
            t,
            qmax,
            z_degree,
            seed,
            r,
            k,
            beta,
        } => {
            let o = commands::Overrides {
                t,
                n: qmax,
                dz: z_degree,
                seed,
                r,
                k,
                beta,
            };
            commands::verify(&identity, &o, cli.format)
        }
    };
    match result {
        Ok((text, code)) => {
            if let Err(e) = emit(&text, cli.out.as_ref()) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}
