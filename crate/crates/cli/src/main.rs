mod data;
mod tables;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use canorm::alternatives::{Alternative, AlternativeSpec};
use canorm::montecarlo::{calibrate, population_value, power, run_test_with_tail, MIN_REPLICATIONS};
use canorm::stats::{StatisticId, Tail};
use canorm::store::{export_report, load_null_from, save_null_in, ReportFormat};
use canorm::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Canonical-correlation and Mardia tests of multivariate normality.
#[derive(Parser)]
#[command(name = "canorm", version)]
struct Cli {
    /// Seed for every simulation.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,

    /// Worker threads (defaults to available parallelism).
    #[arg(long, global = true)]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Directory of null table files.
    #[arg(long, env = "CANORM_NULL_DIR")]
    null_dir: Option<PathBuf>,

    /// Significance level.
    #[arg(long, default_value_t = 0.05)]
    alpha: f64,
}

#[derive(Subcommand)]
enum Command {
    /// Simulate null tables and write one file per statistic.
    Calibrate {
        #[arg(long, value_parser = sample_size)]
        n: usize,
        #[arg(long, value_parser = dimension)]
        p: usize,
        /// Comma-separated statistics (default: all twelve).
        #[arg(long, value_delimiter = ',')]
        stats: Vec<StatisticId>,
        #[arg(long, default_value_t = 10_000)]
        reps: usize,
        /// Output directory (defaults to the null table directory).
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, env = "CANORM_NULL_DIR")]
        null_dir: Option<PathBuf>,
    },
    /// Test a CSV data set against calibrated null tables.
    Test {
        data: PathBuf,
        #[arg(long, value_delimiter = ',')]
        stats: Vec<StatisticId>,
        /// Rejection region for every statistic instead of its default.
        #[arg(long)]
        tail: Option<Tail>,
        /// Also write the results as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Estimate power against one alternative.
    Power {
        #[arg(long = "alt")]
        alternative: Alternative,
        #[arg(long, value_parser = sample_size)]
        n: usize,
        #[arg(long, value_parser = dimension)]
        p: usize,
        #[arg(long, value_delimiter = ',')]
        stats: Vec<StatisticId>,
        #[arg(long, default_value_t = 10_000)]
        reps: usize,
        /// Replications for null tables simulated on the fly when no
        /// null table directory is given.
        #[arg(long, default_value_t = 10_000)]
        null_reps: usize,
        /// Report file; `.json` selects JSON, anything else CSV. Defaults to
        /// CSV on standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Large-sample limits of the statistics under an alternative.
    Popvalues {
        #[arg(long = "alt")]
        alternative: Alternative,
        #[arg(long, value_parser = dimension)]
        p: usize,
        #[arg(long, value_delimiter = ',')]
        stats: Vec<StatisticId>,
    },
    /// Reproduce the power tables (p = 2 or 3) or the population values.
    Tables {
        #[arg(long)]
        which: Which,
        #[arg(long, default_value_t = 10_000)]
        reps: usize,
        #[arg(long, default_value_t = 10_000)]
        null_reps: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    #[value(name = "2")]
    PowerP2,
    #[value(name = "4")]
    PowerP3,
    Altpop,
}

struct Failure {
    code: u8,
    message: String,
}

const USAGE: u8 = 2;
const DATA: u8 = 3;
const COMPUTATION: u8 = 4;
const IO: u8 = 5;

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::InvalidInput(_)
            | Error::Parse { .. }
            | Error::SampleTooSmall { .. }
            | Error::DegenerateSample
            | Error::NotSymmetric { .. }
            | Error::TableMismatch { .. }
            | Error::MissingTable(_) => DATA,
            Error::Io(_)
            | Error::Json(_)
            | Error::CorruptFile(_)
            | Error::UnsupportedVersion(_)
            | Error::ChecksumMismatch { .. }
            | Error::LengthMismatch { .. } => IO,
            _ => COMPUTATION,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Error::Io(e).into()
    }
}

fn sample_size(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if n >= 2 => Ok(n),
        _ => Err("expected an integer of at least 2".into()),
    }
}

fn dimension(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(p) if p >= 1 => Ok(p),
        _ => Err("expected a positive integer".into()),
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: USAGE, message: message.into() }
}

fn selected(stats: Vec<StatisticId>) -> Vec<StatisticId> {
    if stats.is_empty() {
        StatisticId::all()
    } else {
        stats
    }
}

fn check_alpha(alpha: f64) -> Result<(), Failure> {
    if alpha > 0.0 && alpha < 1.0 {
        Ok(())
    } else {
        Err(usage(format!("--alpha must lie in (0, 1), got {alpha}")))
    }
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run(cli: Cli) -> Result<(), Failure> {
    let seed = cli.seed;
    match cli.command {
        Command::Calibrate { n, p, stats, reps, out, null_dir } => {
            let dir = out
                .or(null_dir)
                .ok_or_else(|| usage("calibrate needs --out or a null table directory (--null-dir or CANORM_NULL_DIR)"))?;
            if reps < MIN_REPLICATIONS {
                return Err(usage(format!("--reps must be at least {MIN_REPLICATIONS}")));
            }
            let stats = selected(stats);
            eprintln!("calibrating {} statistics for n = {n}, p = {p} with {reps} replications", stats.len());
            for table in calibrate(&stats, n, p, reps, seed)? {
                let path = save_null_in(&table, &dir)?;
                eprintln!("wrote {}", path.display());
            }
        }
        Command::Test { data, stats, tail, json, common } => {
            check_alpha(common.alpha)?;
            let dir = common
                .null_dir
                .ok_or_else(|| usage("test needs a null table directory (--null-dir or CANORM_NULL_DIR)"))?;
            let x = data::read_sample(File::open(&data)?)?;
            let stats = selected(stats);
            let mut results = Vec::new();
            for &s in &stats {
                let table = load_null_from(&dir, s, x.n(), x.p())?;
                results.push(run_test_with_tail(&x, s, &table, common.alpha, tail.unwrap_or(s.tail()))?);
            }
            let mut out = io::stdout().lock();
            writeln!(out, "n = {}, p = {}, alpha = {}", x.n(), x.p(), common.alpha)?;
            writeln!(out, "{:<8} {:>14} {:>10} {:<9} reject", "statistic", "value", "p-value", "tail")?;
            for r in &results {
                writeln!(
                    out,
                    "{:<8} {:>14.6} {:>10.4} {:<9} {}",
                    r.statistic.to_string(),
                    r.value,
                    r.p_value,
                    r.tail.to_string(),
                    if r.reject { "yes" } else { "no" }
                )?;
            }
            if let Some(path) = json {
                let file = BufWriter::new(File::create(path)?);
                serde_json::to_writer_pretty(file, &results).map_err(Error::from)?;
            }
        }
        Command::Power { alternative, n, p, stats, reps, null_reps, out, common } => {
            check_alpha(common.alpha)?;
            let spec = AlternativeSpec::new(alternative, p);
            let stats = selected(stats);
            let tables = match &common.null_dir {
                Some(dir) => stats
                    .iter()
                    .map(|&s| load_null_from(dir, s, n, p))
                    .collect::<Result<Vec<_>, _>>()?,
                None => {
                    eprintln!("no null table directory; simulating {null_reps} null replications");
                    calibrate(&stats, n, p, null_reps, seed)?
                }
            };
            let report = power(&spec, &stats, n, common.alpha, reps, &tables, seed)?;
            match out {
                Some(path) => export_report(&report, ReportFormat::from_path(&path), &path)?,
                None => canorm::store::write_reports(&[report], ReportFormat::Csv, io::stdout().lock())?,
            }
        }
        Command::Popvalues { alternative, p, stats } => {
            let spec = AlternativeSpec::new(alternative, p);
            let mut out = io::stdout().lock();
            for s in selected(stats) {
                writeln!(out, "{:<8} {:.6}", s.to_string(), population_value(&spec, s)?)?;
            }
        }
        Command::Tables { which, reps, null_reps, out, common } => {
            check_alpha(common.alpha)?;
            let writer = output(out.as_deref())?;
            match which {
                Which::Altpop => tables::population_table(writer)?,
                Which::PowerP2 | Which::PowerP3 => {
                    let cfg = tables::PowerTableConfig {
                        p: if matches!(which, Which::PowerP2) { 2 } else { 3 },
                        alpha: common.alpha,
                        reps,
                        null_reps,
                        seed,
                        null_dir: common.null_dir.as_deref(),
                    };
                    tables::power_table(&cfg, writer)?
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { 0 });
        }
    };
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cli.workers.unwrap_or(0)).build_global();
    if let Err(e) = pool {
        eprintln!("error: {e}");
        return ExitCode::from(USAGE);
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
