//! Command-line interface: parse algebra files, run the pipeline, and emit
//! deterministic text or JSON reports.
//!
//! Exit codes: 0 on success, 2 when a fired criterion contradicts the
//! direct computation, 3 on input errors.

mod report;
mod sweep;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hh1::criteria;
use hh1::pipeline::Analysis;
use hh1::Error;

#[derive(Parser)]
#[command(
    name = "hh1",
    version,
    about = "First Hochschild cohomology of quiver algebras as a Lie algebra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OracleMode {
    On,
    Off,
}

#[derive(Args)]
struct Common {
    /// Algebra file in the line-oriented format (see README).
    file: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Analyze A/J(A)^n instead of A.
    #[arg(long)]
    truncate: Option<u32>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the irreducible-path basis of A by degree.
    Basis(Common),
    /// Dimension and coset representatives of HH^1.
    Hh1(Common),
    /// Structure constants of HH^1 as a Lie algebra.
    BracketTable(Common),
    /// The Sigma_i coordinate set.
    Sigma {
        #[command(flatten)]
        common: Common,
        /// Target length i.
        #[arg(long)]
        i: usize,
    },
    /// Evaluate every solvability criterion.
    Criteria(Common),
    /// Everything: basis, HH^1, Lie flags, Sigma, criteria, oracle check.
    Analyze {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "on")]
        oracle: OracleMode,
    },
    /// Run generated corpus presentations.
    Corpus {
        #[command(subcommand)]
        command: CorpusCommand,
    },
}

#[derive(Subcommand)]
enum CorpusCommand {
    /// Analyze one family instance or a sweep of instances.
    Run(sweep::RunArgs),
}

fn load(common: &Common) -> Result<Analysis, Error> {
    let text = std::fs::read_to_string(&common.file).map_err(|e| Error::Parse {
        line: 0,
        col: 0,
        msg: format!("{}: {e}", common.file.display()),
    })?;
    let mut pres = hh1::format::parse(&text)?;
    if let Some(n) = common.truncate {
        pres.truncate_level = Some(n);
    }
    Analysis::build(pres)
}

fn run() -> Result<(), Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Basis(common) => {
            let a = load(&common)?;
            match common.format {
                Format::Text => print!("{}", report::basis_text(&a)),
                Format::Json => println!("{}", report::basis_json(&a)),
            }
        }
        Command::Hh1(common) => {
            let a = load(&common)?;
            match common.format {
                Format::Text => print!("{}", report::hh1_text(&a)),
                Format::Json => println!("{}", report::hh1_json(&a)),
            }
        }
        Command::BracketTable(common) => {
            let a = load(&common)?;
            match common.format {
                Format::Text => print!("{}", report::bracket_text(&a)),
                Format::Json => println!("{}", report::bracket_json(&a)),
            }
        }
        Command::Sigma { common, i } => {
            let a = load(&common)?;
            match common.format {
                Format::Text => print!("{}", report::sigma_text(&a, i)),
                Format::Json => println!("{}", report::sigma_json(&a, i)),
            }
        }
        Command::Criteria(common) => {
            let a = load(&common)?;
            let verdicts = criteria::run_criteria(&a)?;
            criteria::check_soundness(&a, &verdicts)?;
            match common.format {
                Format::Text => print!("{}", report::criteria_text(&verdicts)),
                Format::Json => println!("{}", report::criteria_json(&verdicts)),
            }
        }
        Command::Analyze { common, oracle } => {
            let text = std::fs::read_to_string(&common.file).map_err(|e| Error::Parse {
                line: 0,
                col: 0,
                msg: format!("{}: {e}", common.file.display()),
            })?;
            let mut pres = hh1::format::parse(&text)?;
            if let Some(n) = common.truncate {
                pres.truncate_level = Some(n);
            }
            let fa = criteria::analyze(pres, oracle == OracleMode::On)?;
            match common.format {
                Format::Text => print!("{}", report::analyze_text(&fa)),
                Format::Json => println!("{}", report::analyze_json(&fa)),
            }
        }
        Command::Corpus { command } => match command {
            CorpusCommand::Run(args) => sweep::run(args)?,
        },
    }
    Ok(())
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e @ Error::CriterionContradiction(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
