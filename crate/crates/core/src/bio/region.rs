//! GC-rich region search and quality trimming on top of the segment search.

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;

use super::fastx::SequenceRecord;
use super::phred::ScaledErrors;
use super::BioError;
use crate::score::ScoreSequence;
use crate::search::{longest_segment_above, longest_segment_avg_above_rational};

/// Region found in one record, with its metric as an exact fraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionReport {
    pub id: String,
    pub region: Option<(usize, usize)>,
    /// `(numerator, denominator)`; GC fractions are left unreduced
    /// (GC count over length), mean errors are reduced.
    pub metric: Option<(u128, u128)>,
}

impl RegionReport {
    pub fn none(id: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            region: None,
            metric: None,
        }
    }

    pub fn len(&self) -> usize {
        self.region.map_or(0, |(s, e)| e - s + 1)
    }

    pub fn is_empty(&self) -> bool {
        self.region.is_none()
    }

    pub fn metric_ratio(&self) -> Option<Ratio<u128>> {
        self.metric.map(|(n, d)| Ratio::new(n, d))
    }
}

/// TSV row: id, start, end, length, metric_num, metric_den.
impl fmt::Display for RegionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.region, self.metric) {
            (Some((start, end)), Some((num, den))) => write!(
                f,
                "{}\t{}\t{}\t{}\t{}\t{}",
                self.id,
                start,
                end,
                end - start + 1,
                num,
                den
            ),
            _ => write!(f, "{}\t0\t0\t0\t\t", self.id),
        }
    }
}

fn unit_interval(threshold: Ratio<u64>) -> Result<(i64, i64), BioError> {
    let (p, q) = (*threshold.numer(), *threshold.denom());
    if p > q {
        return Err(BioError::InvalidThreshold(threshold.to_string()));
    }
    // p <= q, so only q needs checking.
    let q = i64::try_from(q).map_err(|_| BioError::InvalidThreshold(threshold.to_string()))?;
    Ok((p as i64, q))
}

#[derive(Debug, Clone, Copy, Default)]
pub struct GcOptions {
    /// Reject residues outside `ACGTN` (either case) instead of scoring them 0.
    pub strict: bool,
    /// Report no region for records containing `N`.
    pub exclude_n: bool,
}

fn gc_indicator(record: &SequenceRecord, strict: bool) -> Result<Vec<i64>, BioError> {
    record
        .residues
        .iter()
        .enumerate()
        .map(|(position, &b)| match b.to_ascii_uppercase() {
            b'G' | b'C' => Ok(1),
            b'A' | b'T' | b'N' => Ok(0),
            _ if strict => Err(BioError::BadResidue {
                id: record.id.clone(),
                position: position + 1,
                residue: b as char,
            }),
            _ => Ok(0),
        })
        .collect()
}

/// Longest region whose GC fraction is at least `min_gc`.
pub fn gc_longest_region(
    record: &SequenceRecord,
    min_gc: Ratio<u64>,
    options: &GcOptions,
) -> Result<RegionReport, BioError> {
    let (p, q) = unit_interval(min_gc)?;
    if options.exclude_n && record.residues.iter().any(|b| b.eq_ignore_ascii_case(&b'N')) {
        return Ok(RegionReport::none(&record.id));
    }
    let indicator = ScoreSequence::new(gc_indicator(record, options.strict)?)?;
    let outcome = longest_segment_avg_above_rational(&indicator, p, q)?;
    Ok(match outcome.result {
        Some(seg) => RegionReport {
            id: record.id.clone(),
            region: Some(seg.bounds()),
            metric: Some((seg.score as u128, seg.len() as u128)),
        },
        None => RegionReport::none(&record.id),
    })
}

/// Longest region whose mean error probability is at most `max_error`.
///
/// Errors are taken as exact dyadic integers (see [`ScaledErrors`]) and the
/// search runs on `p * 2^shift - q * e_k` with threshold zero, so the
/// decision involves no rounding beyond the per-quality `f64` probabilities.
pub fn trim_longest(record: &SequenceRecord, max_error: Ratio<u64>) -> Result<RegionReport, BioError> {
    let (p, q) = unit_interval(max_error)?;
    let qualities = record
        .qualities
        .as_deref()
        .ok_or_else(|| BioError::MissingQualities { id: record.id.clone() })?;
    let errors = ScaledErrors::from_qualities(qualities);
    let budget = (p as i128) << errors.shift;
    let scores = errors
        .values
        .iter()
        .map(|&e| {
            (e as i128)
                .checked_mul(q as i128)
                .and_then(|v| budget.checked_sub(v))
                .ok_or(crate::SegmentError::IntegerOverflow)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let outcome = longest_segment_above(&ScoreSequence::new(scores)?, 0i128)?;
    Ok(match outcome.result {
        Some(seg) => {
            let (start, end) = seg.bounds();
            RegionReport {
                id: record.id.clone(),
                region: Some((start, end)),
                metric: Some(mean_error(&errors, start, end)),
            }
        }
        None => RegionReport::none(&record.id),
    })
}

/// Reduced `(num, den)` of the mean scaled error over `[start, end]`.
pub(crate) fn mean_error(errors: &ScaledErrors, start: usize, end: usize) -> (u128, u128) {
    let sum = errors.sum(start, end);
    if sum == 0 {
        return (0, 1);
    }
    let len = (end - start + 1) as u128;
    let g = sum.gcd(&len);
    let (mut num, len) = (sum / g, len / g);
    // Cancel twos against 2^shift before forming the denominator.
    let mut shift = errors.shift;
    while shift > 0 && num % 2 == 0 {
        num /= 2;
        shift -= 1;
    }
    (num, len << shift)
}
