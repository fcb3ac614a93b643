use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use longseg::bench::BenchConfig;
use longseg::bio::{GcOptions, PHRED33, PHRED64};
use longseg_cli::commands::{self, TrimOptions};
use longseg_cli::numbers::{parse_size, parse_unit_fraction};
use longseg_cli::{CliError, Status, ERROR_EXIT};

/// Longest segments above a threshold, GC-rich regions and read trimming.
///
/// Exit status: 0 when a segment (or a region for every record) is found,
/// 1 when none is, 2 on errors.
#[derive(Debug, Parser)]
#[command(name = "longseg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct ScoreInput {
    /// Whitespace-separated scores; standard input when absent or "-".
    input: Option<PathBuf>,
    /// Multiply every score by Q and keep exact integer arithmetic.
    #[arg(long, value_name = "Q")]
    exact_scale: Option<i64>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Longest segment whose sum is at least ALPHA.
    Run {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[command(flatten)]
        scores: ScoreInput,
    },
    /// Longest segment whose average is at least BETA (decimal or p/q).
    Avg {
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[command(flatten)]
        scores: ScoreInput,
    },
    /// Highest-scoring segment of length at least L.
    Minlen {
        #[arg(long, value_name = "L")]
        min_len: usize,
        #[command(flatten)]
        scores: ScoreInput,
    },
    /// Longest region of each FASTA record with GC fraction at least MIN_GC.
    Gc {
        #[arg(long)]
        min_gc: String,
        /// Reject residues other than A, C, G, T, N.
        #[arg(long)]
        strict: bool,
        /// Report no region for records containing N.
        #[arg(long)]
        exclude_n: bool,
        /// FASTA file; standard input when absent or "-".
        input: Option<PathBuf>,
    },
    /// Trim each FASTQ read to its longest region with mean error at most E.
    Trim {
        #[arg(long, value_name = "E")]
        max_error: String,
        #[arg(long, default_value_t = PHRED33, value_parser = phred_offset)]
        phred_offset: u8,
        /// Write one region row per read to PATH.
        #[arg(long, value_name = "PATH")]
        report: Option<PathBuf>,
        /// Drop reads with no region instead of writing them empty.
        #[arg(long)]
        skip_empty: bool,
        /// FASTQ file; standard input when absent or "-".
        input: Option<PathBuf>,
    },
    /// Time the search and trimmers on synthetic inputs.
    Bench {
        /// Comma-separated sizes, e.g. 1e5,1e6.
        #[arg(long, default_value = "1000,100000,1000000", value_parser = sizes)]
        sizes: SizeList,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Mean-error threshold for the trimming rows.
        #[arg(long, value_name = "E", default_value = "1/20")]
        max_error: String,
        /// Window length of the heuristic trimmer.
        #[arg(long, default_value_t = 10)]
        window: usize,
    },
}

#[derive(Debug, Clone)]
struct SizeList(Vec<usize>);

fn sizes(text: &str) -> Result<SizeList, String> {
    text.split(',')
        .map(|s| parse_size(s).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()
        .map(SizeList)
}

fn phred_offset(text: &str) -> Result<u8, String> {
    match text.parse::<u8>() {
        Ok(v @ (PHRED33 | PHRED64)) => Ok(v),
        _ => Err("expected 33 or 64".into()),
    }
}

fn open(path: Option<&PathBuf>) -> Result<Box<dyn BufRead>, CliError> {
    Ok(match path {
        Some(p) if p.as_os_str() != "-" => Box::new(BufReader::new(File::open(p)?)),
        _ => Box::new(BufReader::new(io::stdin().lock())),
    })
}

fn read_all(path: Option<&PathBuf>) -> Result<String, CliError> {
    let mut text = String::new();
    open(path)?.read_to_string(&mut text)?;
    Ok(text)
}

fn execute(command: Command) -> Result<Status, CliError> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let status = match command {
        Command::Run { alpha, scores } => {
            let text = read_all(scores.input.as_ref())?;
            commands::cmd_run(&text, &alpha, scores.exact_scale, &mut out)
        }
        Command::Avg { beta, scores } => {
            let text = read_all(scores.input.as_ref())?;
            commands::cmd_avg(&text, &beta, scores.exact_scale, &mut out)
        }
        Command::Minlen { min_len, scores } => {
            let text = read_all(scores.input.as_ref())?;
            commands::cmd_minlen(&text, min_len, scores.exact_scale, &mut out)
        }
        Command::Gc { min_gc, strict, exclude_n, input } => {
            let min_gc = parse_unit_fraction(&min_gc)?;
            let options = GcOptions { strict, exclude_n };
            commands::cmd_gc(open(input.as_ref())?, min_gc, options, &mut out)
        }
        Command::Trim { max_error, phred_offset, report, skip_empty, input } => {
            let options = TrimOptions {
                max_error: parse_unit_fraction(&max_error)?,
                offset: phred_offset,
                skip_empty,
            };
            let mut report = report
                .map(|p| File::create(p).map(BufWriter::new))
                .transpose()?;
            let input = open(input.as_ref())?;
            commands::cmd_trim(
                input,
                &options,
                &mut out,
                report.as_mut().map(|w| w as &mut dyn Write),
            )
        }
        Command::Bench { sizes, seed, max_error, window } => {
            let config = BenchConfig {
                max_error: parse_unit_fraction(&max_error)?,
                window,
                ..BenchConfig::default()
            };
            commands::cmd_bench(&sizes.0, seed, &config, &mut out)
        }
    };
    // Rows written before an error still reach the output.
    let flushed = out.flush();
    let status = status?;
    flushed?;
    Ok(status)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(status) => status.exit_code(),
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("longseg: {e}");
            ExitCode::from(ERROR_EXIT)
        }
    }
}
