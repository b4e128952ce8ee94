use std::io::Write;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};
use legendre_identities::identity_suite::{
    registry_list, verify_range, IdentityId, MChoice, MuChoice, ParamKind, ParamSamples, RangeOutcome,
    PARAMETERIZED_N_CAP,
};
use legendre_identities::selfcheck::{run_all, SelfcheckConfig, DEFAULT_SEED};
use legendre_identities::Rational;
use legendre_identities_cli::report::{RunInfo, SelfcheckReport, VerifyReport};
use serde::Serialize;

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "legendre-verify", version, about = "Exact verification of Legendre polynomial identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the identity catalog.
    List {
        /// Keep only identities whose id or statement contains this text.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Check identities over a range of n.
    Verify {
        /// Identity id; repeat or separate with commas.
        #[arg(long = "id", value_delimiter = ',')]
        ids: Vec<String>,
        /// Check every identity in the catalog.
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 150, value_parser = clap::value_parser!(i64).range(0..))]
        n_max: i64,
        /// Sample points for identities in x, as exact rationals.
        #[arg(long = "x", allow_hyphen_values = true)]
        xs: Vec<Rational>,
        /// Samples for mu: a positive rational, `n` or `n+1`.
        #[arg(long = "mu", allow_hyphen_values = true)]
        mus: Vec<MuChoice>,
        /// Values of m for the log-moment family; default is every m < n.
        #[arg(long = "m", allow_hyphen_values = true)]
        ms: Vec<i64>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        jobs: Option<u32>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Stop at the first identity with a mismatch.
        #[arg(long)]
        fail_fast: bool,
    },
    /// Run the internal invariant suites.
    Selfcheck {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Skip the floating-point quadrature checks.
        #[arg(long)]
        skip_float: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        jobs: Option<u32>,
    },
}

enum Failure {
    Usage(String),
    Internal(String),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    panic::set_hook(Box::new(|info| eprintln!("internal error: {info}")));
    match panic::catch_unwind(AssertUnwindSafe(|| run(cli.command))) {
        Ok(Ok(code)) => ExitCode::from(code),
        Ok(Err(Failure::Usage(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Ok(Err(Failure::Internal(msg))) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(EXIT_INTERNAL)
        }
        Err(_) => ExitCode::from(EXIT_INTERNAL),
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::List { filter, format } => {
            list(filter.as_deref(), format);
            Ok(0)
        }
        Command::Verify { ids, all, n_max, xs, mus, ms, format, jobs, seed, fail_fast } => {
            let ids = select_ids(&ids, all)?;
            let mut samples = ParamSamples::default();
            if !xs.is_empty() {
                samples.xs = xs;
            }
            if !mus.is_empty() {
                if let Some(bad) = mus.iter().find(|m| matches!(m, MuChoice::Fixed(v) if !v.is_positive())) {
                    return Err(Failure::Usage(format!("mu must be positive, got {bad}")));
                }
                samples.mus = mus;
            }
            if !ms.is_empty() {
                samples.ms = MChoice::List(ms);
            }
            let pool = thread_pool(jobs)?;
            let jobs = pool.current_num_threads();
            let start = Instant::now();
            let outcomes = pool.install(|| verify_all(&ids, n_max, &samples, fail_fast))?;
            let run = RunInfo {
                seed,
                n_max,
                timestamp: SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0),
                jobs,
                elapsed_micros: start.elapsed().as_micros() as u64,
            };
            let report = VerifyReport::new(run, &outcomes);
            emit(format, &report, VerifyReport::render_table);
            Ok(if report.summary.fail > 0 { EXIT_MISMATCH } else { 0 })
        }
        Command::Selfcheck { seed, skip_float, format, jobs } => {
            let pool = thread_pool(jobs)?;
            let outcomes = pool.install(|| run_all(&SelfcheckConfig { seed, skip_float }));
            let report = SelfcheckReport::new(seed, skip_float, &outcomes);
            emit(format, &report, SelfcheckReport::render_table);
            if report.checks.iter().any(|c| c.internal_error.is_some()) {
                Ok(EXIT_INTERNAL)
            } else if report.summary.fail > 0 {
                Ok(EXIT_MISMATCH)
            } else {
                Ok(0)
            }
        }
    }
}

fn list(filter: Option<&str>, format: Format) {
    let rows: Vec<_> = registry_list()
        .iter()
        .filter(|d| filter.map_or(true, |f| d.id.as_str().contains(f) || d.statement.contains(f)))
        .collect();
    match format {
        Format::Json => write_stdout(&serde_json::to_string_pretty(&rows).expect("serializable")),
        Format::Table => {
            let mut out = format!("{:<26} {:<6} {:<22} statement\n", "identity", "param", "guard");
            for d in rows {
                out += &format!(
                    "{:<26} {:<6} {:<22} {}\n",
                    d.id.as_str(),
                    d.param.name().unwrap_or("-"),
                    d.guard,
                    d.statement
                );
            }
            write_stdout(out.trim_end());
        }
    }
}

fn select_ids(ids: &[String], all: bool) -> Result<Vec<IdentityId>, Failure> {
    if all {
        return Ok(IdentityId::ALL.to_vec());
    }
    if ids.is_empty() {
        return Err(Failure::Usage("pass --id <ID> or --all".into()));
    }
    let mut out = Vec::new();
    for raw in ids {
        let id: IdentityId = raw.trim().parse().map_err(|e| Failure::Usage(format!("{e}")))?;
        if !out.contains(&id) {
            out.push(id);
        }
    }
    out.sort_by_key(|id| IdentityId::ALL.iter().position(|x| x == id));
    Ok(out)
}

fn thread_pool(jobs: Option<u32>) -> Result<rayon::ThreadPool, Failure> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = jobs {
        builder = builder.num_threads(n as usize);
    }
    builder.build().map_err(|e| Failure::Internal(e.to_string()))
}

fn verify_all(
    ids: &[IdentityId],
    n_max: i64,
    samples: &ParamSamples,
    fail_fast: bool,
) -> Result<Vec<(IdentityId, RangeOutcome)>, Failure> {
    let mut out = Vec::new();
    for &id in ids {
        let top = match id.param() {
            ParamKind::None | ParamKind::K => n_max,
            ParamKind::X | ParamKind::Mu | ParamKind::M => n_max.min(PARAMETERIZED_N_CAP),
        };
        let mut outcome = verify_range(id, 0..=top, samples).map_err(|e| Failure::Internal(e.to_string()))?;
        let first_failure = outcome.results.iter().position(|r| !r.equal);
        if fail_fast {
            if let Some(i) = first_failure {
                outcome.results.truncate(i + 1);
                let n = outcome.results[i].case.n;
                outcome.excluded.retain(|e| e.case.n <= n);
                out.push((id, outcome));
                break;
            }
        }
        out.push((id, outcome));
    }
    Ok(out)
}

fn emit<T: Serialize>(format: Format, report: &T, table: impl Fn(&T) -> String) {
    match format {
        Format::Json => write_stdout(&serde_json::to_string_pretty(report).expect("serializable")),
        Format::Table => write_stdout(table(report).trim_end()),
    }
}

/// A closed pipe on stdout is not an error worth reporting.
fn write_stdout(text: &str) {
    let mut stdout = std::io::stdout().lock();
    let _ = writeln!(stdout, "{text}").and_then(|_| stdout.flush());
}
