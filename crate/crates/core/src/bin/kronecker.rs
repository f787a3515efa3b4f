use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use kronecker::commands::{self, Output, EXIT_INPUT};

/// Exact radical towers, resolvents and unsolvability certificates.
#[derive(Parser)]
#[command(name = "kronecker", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply Kronecker's criterion to a polynomial of odd prime degree
    Certify {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        /// Emit the certificate as JSON
        #[arg(long)]
        json: bool,
    },
    /// Re-check a JSON certificate from scratch
    Verify { certificate: PathBuf },
    /// Factor a polynomial over Q with irreducibility witnesses
    Factorq {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Count and isolate real roots
    Realroots {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Print the nth cyclotomic polynomial
    Cyclotomic { n: String },
    /// Lagrange resolvents for p in {3, 5, 7, 11} and the tower reaching zeta(p)
    Resolvent { p: String },
    /// Split f over Q[y]/(g) into linear factors
    Decompose {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
    },
    /// Check or generate members of the family x^5 - a*x - b
    Dorrie {
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        #[arg(long)]
        p: Option<String>,
        /// Generate this many members
        #[arg(long = "gen")]
        generate: Option<String>,
        /// Number of leading members to skip when generating
        #[arg(long)]
        seed: Option<String>,
    },
    /// Classify or double a radical tower read from a file
    Tower {
        #[command(subcommand)]
        action: TowerAction,
    },
    /// Exact checks of the zeta(11) quintic example
    Example71,
}

#[derive(Subcommand)]
enum TowerAction {
    Validate { file: PathBuf },
    Double { file: PathBuf },
}

fn run(command: Command) -> Output {
    match command {
        Command::Certify { poly, json } => commands::certify(&poly, json),
        Command::Verify { certificate } => commands::verify(&certificate),
        Command::Factorq { poly } => commands::factorq(&poly),
        Command::Realroots { poly } => commands::realroots(&poly),
        Command::Cyclotomic { n } => commands::cyclotomic(&n),
        Command::Resolvent { p } => commands::resolvent(&p),
        Command::Decompose { f, g } => commands::decompose(&f, &g),
        Command::Dorrie { a, b, p, generate, seed } => {
            commands::dorrie(a.as_deref(), b.as_deref(), p.as_deref(), generate.as_deref(), seed.as_deref())
        }
        Command::Tower { action: TowerAction::Validate { file } } => commands::tower_validate_file(&file),
        Command::Tower { action: TowerAction::Double { file } } => commands::tower_double_file(&file),
        Command::Example71 => commands::example71(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            let help = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            return ExitCode::from(if help { 0 } else { EXIT_INPUT as u8 });
        }
    };
    let out = run(cli.command);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.code as u8)
}
