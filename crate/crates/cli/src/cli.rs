use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use frobsplit_core::SequentialExecutor;

use crate::commands::{cmd_enumerate, cmd_probe, cmd_verify, RunOptions, BUDGET_ENV};
use crate::document::{to_dot, LatticeDocument};
use crate::error::{CliError, EXIT_OK, EXIT_VERIFICATION};
use crate::oracle::cmd_oracle;
use crate::parallel::RayonExecutor;
use crate::session::{parse_session, CountConvention, SessionSpec};

#[derive(Debug, Parser)]
#[command(
    name = "frobsplit",
    version,
    about = "Enumerate the ideals compatible with a Frobenius splitting of affine space"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Enumerate and verify every compatible ideal; print the lattice as JSON.
    Enumerate(EnumerateArgs),
    /// Check that closures of random ideals land in the lattice.
    Probe(ProbeArgs),
    /// Re-verify a lattice document, for example after editing it.
    Verify(VerifyArgs),
    /// Compare the coordinate splitting's lattice with a brute-force filter.
    Oracle(OracleArgs),
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Lattice document; standard input when absent.
    #[arg(short, long)]
    input: Option<PathBuf>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Session file; standard input when absent.
    #[arg(short, long)]
    input: Option<PathBuf>,
    /// Run independent recursion branches on a thread pool.
    #[arg(long)]
    parallel: bool,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[command(flatten)]
    input: InputArgs,
    /// JSON destination; standard output when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Also write the Hasse diagram in Graphviz format.
    #[arg(long)]
    dot: Option<PathBuf>,
    /// Which members the reported count covers.
    #[arg(long, value_enum)]
    count: Option<CountConvention>,
}

#[derive(Debug, Args)]
struct ProbeArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    probes: Option<usize>,
    #[arg(long)]
    max_deg: Option<u32>,
}

#[derive(Debug, Args)]
struct OracleArgs {
    /// Number of variables, at most 3.
    #[arg(short, long)]
    n: usize,
    /// Characteristic.
    #[arg(short, long)]
    p: u64,
    #[arg(long)]
    parallel: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

fn read_text(input: Option<&Path>) -> Result<String, CliError> {
    Ok(match input {
        Some(path) => std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?,
        None => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).map_err(|e| CliError::io("<stdin>", e))?;
            buf
        }
    })
}

fn read_spec(input: &InputArgs) -> Result<SessionSpec, CliError> {
    Ok(parse_session(&read_text(input.input.as_deref())?)?)
}

fn report_document(doc: &LatticeDocument) -> i32 {
    eprintln!(
        "{} members ({} {}), {} primes, verification {}",
        doc.counts.members,
        doc.counts.reported,
        doc.counts.convention,
        doc.counts.primes,
        if doc.verification.passed { "passed" } else { "FAILED" }
    );
    if doc.verification.passed {
        return EXIT_OK;
    }
    for c in doc.verification.checks.iter().filter(|c| !c.passed) {
        eprintln!("VERIFICATION_FAILED {}: {}", c.name, c.failures.join("; "));
    }
    EXIT_VERIFICATION
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::io(path, e)),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| CliError::io("<stdout>", e)),
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("reports always serialize");
    text.push('\n');
    text
}

fn execute(cli: Cli, budget: Option<&str>) -> Result<i32, CliError> {
    match cli.command {
        Command::Enumerate(args) => {
            let spec = read_spec(&args.input)?;
            let convention = args.count.or(spec.options.count).unwrap_or_default();
            let options = RunOptions { parallel: args.input.parallel, budget };
            let doc = cmd_enumerate(&spec, options, convention)?;
            emit(args.output.as_deref(), &doc.to_json())?;
            if let Some(path) = &args.dot {
                std::fs::write(path, to_dot(&doc)).map_err(|e| CliError::io(path, e))?;
            }
            Ok(report_document(&doc))
        }
        Command::Verify(args) => {
            let doc = LatticeDocument::from_json(&read_text(args.input.as_deref())?)?;
            let checked = cmd_verify(&doc)?;
            emit(args.output.as_deref(), &checked.to_json())?;
            Ok(report_document(&checked))
        }
        Command::Probe(args) => {
            let spec = read_spec(&args.input)?;
            let mut config = spec.probe_config();
            config.seed = args.seed.unwrap_or(config.seed);
            config.probes = args.probes.unwrap_or(config.probes);
            config.max_deg = args.max_deg.unwrap_or(config.max_deg);
            let report = cmd_probe(&spec, RunOptions { parallel: args.input.parallel, budget }, config)?;
            emit(args.output.as_deref(), &json(&report))?;
            eprintln!("{} probes, {} misses (seed {})", report.probes, report.misses.len(), report.seed);
            Ok(if report.passed() { EXIT_OK } else { EXIT_VERIFICATION })
        }
        Command::Oracle(args) => {
            let report = if args.parallel {
                cmd_oracle(args.n, args.p, &RayonExecutor)?
            } else {
                cmd_oracle(args.n, args.p, &SequentialExecutor)?
            };
            emit(args.output.as_deref(), &json(&report))?;
            eprintln!(
                "oracle {} / enumerated {}: {}",
                report.oracle_count,
                report.enumerated_count,
                if report.agree { "agree" } else { "DISAGREE" }
            );
            Ok(if report.agree { EXIT_OK } else { EXIT_VERIFICATION })
        }
    }
}

/// Parses `args` and runs the command. Returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { crate::error::EXIT_INPUT } else { EXIT_OK };
        }
    };
    let budget = std::env::var(BUDGET_ENV).ok();
    match execute(cli, budget.as_deref()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("frobsplit: {e}");
            e.exit_code()
        }
    }
}
