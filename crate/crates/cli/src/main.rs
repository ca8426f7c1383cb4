//! `innmonoid`: conjugacy, inner automorphisms and structure checks for
//! finite semigroups given by Cayley tables or catalog names.

mod commands;
mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::CliError;
use report::{Format, Report};

#[derive(Parser)]
#[command(
    name = "innmonoid",
    version,
    about = "Natural conjugacy and partial inner automorphisms of finite semigroups"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a table; print basic facts.
    Validate { input: String },
    /// Green's relations.
    Green { input: String },
    /// Natural conjugacy classes with witnesses, idempotents and centralizers.
    Conj { input: String },
    /// The inverse monoid generated by the partial inner automorphisms.
    Inn {
        input: String,
        /// Abort once the closure exceeds this many elements.
        #[arg(long)]
        limit: Option<usize>,
        /// Write the abstract Cayley table of the result to this file.
        #[arg(long)]
        export_cayley: Option<String>,
    },
    /// Full transformation monoids T(n).
    Tx {
        #[command(subcommand)]
        command: TxCommand,
    },
    /// Endomorphism monoids of abelian G-sets.
    Gset {
        #[command(subcommand)]
        command: GsetCommand,
    },
    /// Rees matrix semigroups.
    Rees {
        #[command(subcommand)]
        command: ReesCommand,
    },
    /// Run property suites.
    Verify {
        #[command(subcommand)]
        command: VerifyCommand,
    },
}

#[derive(Subcommand)]
enum TxCommand {
    /// Generators of Inn(T(n)) with their descriptors and normal forms.
    Classify {
        #[arg(short)]
        n: usize,
    },
    /// Check the description of Inn(T(n)).
    Verify {
        #[arg(short)]
        n: usize,
        /// Embed the whole closure even for n = 4.
        #[arg(long)]
        full: bool,
    },
}

#[derive(Subcommand)]
enum GsetCommand {
    /// Inn(End_G(X)) with generator normal forms.
    Inn {
        file: String,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Check the description of Inn(End_G(X)).
    Verify { file: String },
}

#[derive(Subcommand)]
enum ReesCommand {
    /// Check the Rees matrix description against brute force.
    Verify { file: String },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Every suite.
    All {
        #[arg(long, default_value_t = 4)]
        max_order: usize,
    },
}

fn run(cli: &Cli, echo: &str) -> Result<Report, CliError> {
    match &cli.command {
        Command::Validate { input } => commands::validate(echo, input),
        Command::Green { input } => commands::green_cmd(echo, input),
        Command::Conj { input } => commands::conj(echo, input),
        Command::Inn {
            input,
            limit,
            export_cayley,
        } => commands::inn(echo, input, *limit, export_cayley.as_deref()),
        Command::Tx { command } => match command {
            TxCommand::Classify { n } => commands::tx_classify(echo, *n),
            TxCommand::Verify { n, full } => commands::tx_verify(echo, *n, *full),
        },
        Command::Gset { command } => match command {
            GsetCommand::Inn { file, limit } => commands::gset_inn(echo, file, *limit),
            GsetCommand::Verify { file } => commands::gset_verify(echo, file),
        },
        Command::Rees {
            command: ReesCommand::Verify { file },
        } => commands::rees_verify(echo, file),
        Command::Verify {
            command: VerifyCommand::All { max_order },
        } => commands::verify_all_cmd(echo, *max_order),
    }
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let echo = args[1..].join(" ");
    match run(&cli, &echo) {
        Ok(report) => {
            print!("{}", report.emit(cli.format));
            if report.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(CliError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
