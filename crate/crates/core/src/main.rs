use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use centaut::catalog::{load_catalog, CatalogEntry, LoadOptions};
use centaut::report::{
    InvariantReport, OracleComparison, VerifyReport, EXIT_INPUT_ERROR, EXIT_PASS,
    EXIT_VERDICT_FAILED,
};
use centaut::theorems::TheoremSelection;
use centaut::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
}

/// Finite p-group laboratory: invariants, central automorphisms and
/// theorem checks over power-commutator presentations.
#[derive(Debug, Parser)]
#[command(name = "centaut", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Also load p = 5 catalog entries.
    #[arg(long, global = true)]
    include_p5: bool,

    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, value_name = "K", global = true, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: Option<u16>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full invariant report for one presentation file.
    Analyze { file: PathBuf },
    /// Check a theorem (or `all`) over every entry of a catalog directory.
    Verify {
        /// lemma2.1, lemma3.1, thm3.2, thm3.3, curran-mccaughan, observations or all
        theorem: String,
        dir: PathBuf,
    },
    /// Compare the homomorphism-count formula with exhaustive enumeration.
    OracleCompare { file: PathBuf },
}

fn load_single(path: &Path) -> Result<centaut::catalog::LoadedEntry> {
    CatalogEntry::read(path)?.load()
}

fn run(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Analyze { file } => {
            let entry = load_single(file)?;
            let report = InvariantReport::from_profile(&entry.profile);
            print!(
                "{}",
                match cli.format {
                    Format::Text => report.to_text(),
                    Format::Csv => report.to_csv(),
                }
            );
            Ok(if report.has_failure() {
                EXIT_VERDICT_FAILED
            } else {
                EXIT_PASS
            })
        }
        Command::Verify { theorem, dir } => {
            let selection: TheoremSelection = theorem.parse()?;
            let options = LoadOptions {
                include_p5: cli.include_p5,
            };
            let catalog = load_catalog(dir, options)?;
            let report = VerifyReport::run(&catalog, selection);
            for w in report.warnings() {
                eprintln!("{w}");
            }
            for e in &report.load_errors {
                eprintln!("error: {e}");
            }
            print!(
                "{}",
                match cli.format {
                    Format::Text => report.to_text(),
                    Format::Csv => report.to_csv(),
                }
            );
            Ok(report.exit_code())
        }
        Command::OracleCompare { file } => {
            let entry = load_single(file)?;
            let cmp = OracleComparison::run(&entry.profile)?;
            print!(
                "{}",
                match cli.format {
                    Format::Text => cmp.to_text(),
                    Format::Csv => cmp.to_csv(),
                }
            );
            Ok(if cmp.pass() {
                EXIT_PASS
            } else {
                EXIT_VERDICT_FAILED
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(k) = cli.jobs {
        pool = pool.num_threads(k as usize);
    }
    let pool = match pool.build() {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT_ERROR as u8);
        }
    };
    let code = pool.install(|| run(&cli)).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        EXIT_INPUT_ERROR
    });
    ExitCode::from(code as u8)
}
