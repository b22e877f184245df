//! `bhd`: verify braided Hopf algebra duality scenarios.
//!
//! Exit codes: 0 when every item passes or is not asserted, 1 when an item
//! fails, 2 when the scenario cannot be constructed.

use std::path::PathBuf;
use std::process::ExitCode;

use braided_duality::catalog::{build_example, list_examples, Expected};
use braided_duality::duality::{DualityScenario, Suite};
use braided_duality::report::Report;
use braided_duality::scenario::{read_scenario_file, run, CONSTRUCTION_ERROR};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "bhd", version, about = "Exact verification of braided Hopf algebra duality")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a scenario file.
    Verify {
        file: PathBuf,
        #[command(flatten)]
        opts: RunOpts,
    },
    /// Verify a built-in example.
    Example {
        name: String,
        #[command(flatten)]
        opts: RunOpts,
    },
    /// List the built-in examples.
    List,
}

#[derive(Args)]
struct RunOpts {
    /// Suite to run; a file's own `suites` list is used when omitted.
    #[arg(long, value_enum)]
    suite: Option<SuiteArg>,
    /// Highest total degree checked on graded instances.
    #[arg(long)]
    max_degree: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    report: Format,
    /// Leave the timestamp out so reports compare byte for byte.
    #[arg(long)]
    no_timestamp: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Axioms,
    Lemmas,
    Duality,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Axioms => Suite::Axioms,
            SuiteArg::Lemmas => Suite::Lemmas,
            SuiteArg::Duality => Suite::Duality,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::List => {
            list();
            0
        }
        Command::Verify { file, opts } => match load_file(&file, &opts) {
            Ok((sc, suites)) => verify(&sc, &suites, &opts),
            Err(e) => construction_error(&e),
        },
        Command::Example { name, opts } => match build_example(&name, opts.max_degree) {
            Ok(sc) => verify(&sc, &[opts.suite.map_or(Suite::All, Suite::from)], &opts),
            Err(e) => construction_error(&e),
        },
    };
    ExitCode::from(code as u8)
}

fn load_file(path: &std::path::Path, opts: &RunOpts) -> braided_duality::Result<(DualityScenario, Vec<Suite>)> {
    let file = read_scenario_file(path)?;
    let suites = match opts.suite {
        Some(s) => vec![s.into()],
        None => file.suites()?,
    };
    let mut sc = file.build()?;
    if let Some(n) = opts.max_degree {
        sc = sc.with_max_degree(n);
    }
    Ok((sc, suites))
}

fn verify(sc: &DualityScenario, suites: &[Suite], opts: &RunOpts) -> i32 {
    let (mut report, code) = run(sc, suites);
    if !opts.no_timestamp {
        report.timestamp = Some(humantime::format_rfc3339_seconds(std::time::SystemTime::now()).to_string());
    }
    print!("{}", render(&report, opts.report));
    code
}

fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", report.to_json()),
        Format::Text => report.to_text(),
    }
}

fn construction_error(e: &braided_duality::Error) -> i32 {
    eprintln!("error: {e}");
    CONSTRUCTION_ERROR
}

fn list() {
    for e in list_examples() {
        let expected = match e.expected {
            Expected::AllPass => "passes".to_string(),
            Expected::Fails(ids) => format!("fails {}", ids.join(", ")),
            Expected::Refused => "refused".to_string(),
        };
        println!("{:<24} [{expected}] {}", e.name, e.summary);
    }
}
