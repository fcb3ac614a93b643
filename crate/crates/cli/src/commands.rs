use std::io::{BufRead, Write};

use longseg::bench::{run_bench, BenchConfig, BenchRow};
use longseg::bio::{
    gc_longest_region, trim_longest, write_trimmed_fastq, FastaReader, FastqReader, GcOptions,
    RegionReport, SequenceRecord,
};
use longseg::{
    batch, longest_segment_above, longest_segment_avg_above, longest_segment_avg_above_rational,
    max_score_with_min_length, Score, ScoreSequence, SearchOutcome,
};
use num_rational::Ratio;

use crate::numbers::{ceil, exact_to_f64, format_exact, parse_exact, to_i64, Exact};
use crate::{CliError, Status};

/// Records analysed per batch in `gc` and `trim`.
const CHUNK: usize = 1024;

/// Whitespace-separated scores in one of the two arithmetic modes.
#[derive(Debug, Clone, PartialEq)]
pub enum Scores {
    /// Integers, each equal to the input value times `scale`.
    Integer { values: Vec<i64>, scale: i64 },
    Float(Vec<f64>),
}

/// Parses score tokens. Plain integers stay exact; any other token switches
/// to floating point unless `exact_scale` is given, in which case every
/// value times the scale must be an integer.
pub fn parse_scores(text: &str, exact_scale: Option<i64>) -> Result<Scores, CliError> {
    let tokens: Vec<&str> = text.split_ascii_whitespace().collect();
    if let Some(scale) = exact_scale {
        if scale < 1 {
            return Err(CliError::Usage("--exact-scale must be at least 1".into()));
        }
        let values = tokens
            .iter()
            .map(|t| {
                let v = parse_exact(t)? * Exact::from_integer(scale as i128);
                if !v.is_integer() {
                    return Err(CliError::Usage(format!(
                        "{t} times {scale} is not an integer"
                    )));
                }
                to_i64(v.to_integer(), "scaled score")
            })
            .collect::<Result<_, _>>()?;
        return Ok(Scores::Integer { values, scale });
    }
    if let Ok(values) = tokens.iter().map(|t| t.parse::<i64>()).collect::<Result<Vec<_>, _>>() {
        return Ok(Scores::Integer { values, scale: 1 });
    }
    let values = tokens
        .iter()
        .map(|t| {
            t.parse::<f64>()
                .map_err(|_| CliError::Usage(format!("cannot parse {t:?} as a score")))
        })
        .collect::<Result<_, _>>()?;
    Ok(Scores::Float(values))
}

fn parse_float_threshold(text: &str) -> Result<f64, CliError> {
    match text.trim().parse::<f64>() {
        Ok(v) => Ok(v),
        Err(_) => Ok(exact_to_f64(&parse_exact(text)?)),
    }
}

fn scaled(threshold: &str, scale: i64) -> Result<Exact, CliError> {
    Ok(parse_exact(threshold)? * Exact::from_integer(scale as i128))
}

fn write_outcome<S: Score, W: Write + ?Sized>(
    outcome: &SearchOutcome<S>,
    render: impl Fn(S) -> String,
    out: &mut W,
) -> Result<Status, CliError> {
    match &outcome.result {
        Some(seg) => {
            writeln!(out, "{}\t{}\t{}\t{}", seg.start, seg.end, seg.len(), render(seg.score))?;
            Ok(Status::Found)
        }
        None => {
            writeln!(out, "nil")?;
            Ok(Status::NotFound)
        }
    }
}

fn render_scaled(scale: i64) -> impl Fn(i64) -> String {
    move |s| format_exact(&Ratio::new(s as i128, scale as i128))
}

/// Longest segment with sum at least `alpha`.
pub fn cmd_run<W: Write + ?Sized>(
    input: &str,
    alpha: &str,
    exact_scale: Option<i64>,
    out: &mut W,
) -> Result<Status, CliError> {
    match parse_scores(input, exact_scale)? {
        Scores::Integer { values, scale } => {
            // Integer sums reach alpha exactly when they reach its ceiling.
            let alpha = to_i64(ceil(&scaled(alpha, scale)?), "threshold")?;
            let outcome = longest_segment_above(&ScoreSequence::new(values)?, alpha)?;
            write_outcome(&outcome, render_scaled(scale), out)
        }
        Scores::Float(values) => {
            let alpha = parse_float_threshold(alpha)?;
            let outcome = longest_segment_above(&ScoreSequence::new(values)?, alpha)?;
            write_outcome(&outcome, |s: f64| s.to_string(), out)
        }
    }
}

/// Longest segment with average at least `beta`.
pub fn cmd_avg<W: Write + ?Sized>(
    input: &str,
    beta: &str,
    exact_scale: Option<i64>,
    out: &mut W,
) -> Result<Status, CliError> {
    match parse_scores(input, exact_scale)? {
        Scores::Integer { values, scale } => {
            let beta = scaled(beta, scale)?;
            let p = to_i64(*beta.numer(), "threshold numerator")?;
            let q = to_i64(*beta.denom(), "threshold denominator")?;
            let outcome = longest_segment_avg_above_rational(&ScoreSequence::new(values)?, p, q)?;
            write_outcome(&outcome, render_scaled(scale), out)
        }
        Scores::Float(values) => {
            let beta = parse_float_threshold(beta)?;
            let outcome = longest_segment_avg_above(&ScoreSequence::new(values)?, beta)?;
            write_outcome(&outcome, |s: f64| s.to_string(), out)
        }
    }
}

/// Maximum-score segment of length at least `min_len`.
pub fn cmd_minlen<W: Write + ?Sized>(
    input: &str,
    min_len: usize,
    exact_scale: Option<i64>,
    out: &mut W,
) -> Result<Status, CliError> {
    match parse_scores(input, exact_scale)? {
        Scores::Integer { values, scale } => {
            let outcome = max_score_with_min_length(&ScoreSequence::new(values)?, min_len)?;
            write_outcome(&outcome, render_scaled(scale), out)
        }
        Scores::Float(values) => {
            let outcome = max_score_with_min_length(&ScoreSequence::new(values)?, min_len)?;
            write_outcome(&outcome, |s: f64| s.to_string(), out)
        }
    }
}

/// Pulls records in chunks, analyses each chunk with `batch::map_ordered`
/// and hands the results to `emit` in input order. A parse error stops the
/// stream after everything before it has been emitted.
fn for_each_chunk<I, U, F, E>(records: I, analyse: F, mut emit: E) -> Result<Status, CliError>
where
    I: Iterator<Item = Result<SequenceRecord, longseg::bio::BioError>>,
    U: Send,
    F: Fn(&SequenceRecord) -> Result<U, CliError> + Sync + Send,
    E: FnMut(&SequenceRecord, U) -> Result<bool, CliError>,
{
    let mut status = Status::Found;
    let mut records = records.peekable();
    while records.peek().is_some() {
        let mut chunk = Vec::with_capacity(CHUNK);
        let mut pending_error = None;
        for item in records.by_ref() {
            match item {
                Ok(record) => chunk.push(record),
                Err(e) => {
                    pending_error = Some(e);
                    break;
                }
            }
            if chunk.len() == CHUNK {
                break;
            }
        }
        let results = batch::map_ordered(&chunk, &analyse);
        for (record, result) in chunk.iter().zip(results) {
            if !emit(record, result?)? {
                status = Status::NotFound;
            }
        }
        if let Some(e) = pending_error {
            return Err(e.into());
        }
    }
    Ok(status)
}

/// One region row per FASTA record.
pub fn cmd_gc<R: BufRead, W: Write + ?Sized>(
    input: R,
    min_gc: Ratio<u64>,
    options: GcOptions,
    out: &mut W,
) -> Result<Status, CliError> {
    for_each_chunk(
        FastaReader::new(input),
        |record| Ok(gc_longest_region(record, min_gc, &options)?),
        |_, report: RegionReport| {
            writeln!(out, "{report}")?;
            Ok(report.region.is_some())
        },
    )
}

pub struct TrimOptions {
    pub max_error: Ratio<u64>,
    pub offset: u8,
    pub skip_empty: bool,
}

/// Trimmed FASTQ to `out`, with an optional region row per record.
pub fn cmd_trim<R: BufRead, W: Write>(
    input: R,
    options: &TrimOptions,
    out: &mut W,
    mut report: Option<&mut dyn Write>,
) -> Result<Status, CliError> {
    let status = for_each_chunk(
        FastqReader::with_offset(input, options.offset),
        |record| Ok(trim_longest(record, options.max_error)?),
        |record, row: RegionReport| {
            write_trimmed_fastq(record, row.region, options.offset, options.skip_empty, out)?;
            if let Some(report) = report.as_mut() {
                writeln!(report, "{row}")?;
            }
            Ok(row.region.is_some())
        },
    )?;
    out.flush()?;
    if let Some(report) = report {
        report.flush()?;
    }
    Ok(status)
}

/// Runs the synthetic benchmark and prints one TSV row per workload and size.
pub fn cmd_bench<W: Write + ?Sized>(
    sizes: &[usize],
    seed: u64,
    config: &BenchConfig,
    out: &mut W,
) -> Result<Status, CliError> {
    writeln!(out, "{}", BenchRow::HEADER)?;
    for row in run_bench(sizes, seed, config)? {
        writeln!(out, "{row}")?;
    }
    Ok(Status::Found)
}
