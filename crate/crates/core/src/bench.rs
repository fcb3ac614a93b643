//! Deterministic workloads, a sliding-window trimming foil, and the rows
//! emitted by the `bench` subcommand.

use std::fmt;
use std::time::Instant;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bio::{trim_longest, BioError, RegionReport, ScaledErrors, SequenceRecord};
use crate::oracle::{BruteForce, DEFAULT_CAP};
use crate::score::ScoreSequence;
use crate::search::{iteration_bound, longest_segment_above};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WorkloadKind {
    /// Integer scores drawn uniformly from `[low, high]`.
    Uniform,
    /// Runs of `-1` followed by a rise of `period - 2`; the prefix scores
    /// drift downward so both ladders grow with `n`.
    Sawtooth,
    /// Strictly increasing scores `k - n/2`.
    Monotone,
    /// Read whose quality has two high plateaus split by a low-quality spike;
    /// the left plateau is shorter but cleaner.
    TwoHumpError,
    /// Read whose error falls then rises (single valley).
    UnimodalError,
}

impl WorkloadKind {
    pub const SCORES: [WorkloadKind; 3] = [Self::Uniform, Self::Sawtooth, Self::Monotone];

    pub fn name(self) -> &'static str {
        match self {
            Self::Uniform => "uniform",
            Self::Sawtooth => "sawtooth",
            Self::Monotone => "monotone",
            Self::TwoHumpError => "two-hump-error",
            Self::UnimodalError => "unimodal-error",
        }
    }

    pub fn is_read(self) -> bool {
        matches!(self, Self::TwoHumpError | Self::UnimodalError)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WorkloadParams {
    pub low: i64,
    pub high: i64,
    pub period: usize,
}

impl Default for WorkloadParams {
    fn default() -> Self {
        Self {
            low: -10,
            high: 10,
            period: 16,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Workload {
    pub kind: WorkloadKind,
    pub n: usize,
    pub seed: u64,
    pub params: WorkloadParams,
}

impl Workload {
    pub fn new(kind: WorkloadKind, n: usize, seed: u64) -> Self {
        Self {
            kind,
            n,
            seed,
            params: WorkloadParams::default(),
        }
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Generated {
    Scores(ScoreSequence<i64>),
    Read(SequenceRecord),
}

pub fn generate(workload: &Workload) -> Generated {
    if workload.kind.is_read() {
        Generated::Read(generate_read(workload))
    } else {
        Generated::Scores(generate_scores(workload))
    }
}

/// Scores for the numeric kinds. Read kinds yield their quality values.
pub fn generate_scores(workload: &Workload) -> ScoreSequence<i64> {
    let n = workload.n;
    let p = &workload.params;
    let scores: Vec<i64> = match workload.kind {
        WorkloadKind::Uniform => {
            let mut rng = workload.rng();
            (0..n).map(|_| rng.gen_range(p.low..=p.high)).collect()
        }
        WorkloadKind::Sawtooth => {
            let period = p.period.max(3);
            (0..n)
                .map(|k| if k % period == period - 1 { period as i64 - 2 } else { -1 })
                .collect()
        }
        WorkloadKind::Monotone => (0..n).map(|k| k as i64 - (n / 2) as i64).collect(),
        WorkloadKind::TwoHumpError | WorkloadKind::UnimodalError => generate_read(workload)
            .qualities
            .unwrap_or_default()
            .into_iter()
            .map(i64::from)
            .collect(),
    };
    ScoreSequence::new(scores).expect("integer scores are always finite")
}

fn fill(rng: &mut ChaCha8Rng, out: &mut Vec<u8>, len: usize, q: std::ops::RangeInclusive<u8>) {
    out.extend((0..len).map(|_| rng.gen_range(q.clone())));
}

fn two_hump_qualities(n: usize, rng: &mut ChaCha8Rng) -> Vec<u8> {
    let flank = |rng: &mut ChaCha8Rng| (n / 20).max(1) + rng.gen_range(0..=n / 20);
    let left = flank(rng);
    let right = flank(rng);
    let spike = (n / 10).max(1) + rng.gen_range(0..=n / 20);
    let rest = n.saturating_sub(left + right + spike);
    let first = rest * rng.gen_range(25..=45) / 100;
    let second = rest - first;

    let mut q = Vec::with_capacity(n);
    fill(rng, &mut q, left.min(n), 0..=6);
    fill(rng, &mut q, first, 36..=40);
    let spike = spike.min(n - q.len());
    fill(rng, &mut q, spike, 0..=3);
    fill(rng, &mut q, second, 26..=32);
    let tail = n - q.len();
    fill(rng, &mut q, tail, 0..=6);
    q
}

fn unimodal_qualities(n: usize, rng: &mut ChaCha8Rng) -> Vec<u8> {
    let mut q: Vec<u8> = (0..n).map(|_| rng.gen_range(2..=40)).collect();
    let peak = if n == 0 { 0 } else { rng.gen_range(0..n) };
    let (rise, fall) = q.split_at_mut(peak);
    rise.sort_unstable();
    fall.sort_unstable_by(|a, b| b.cmp(a));
    q
}

pub fn generate_read(workload: &Workload) -> SequenceRecord {
    let mut rng = workload.rng();
    let n = workload.n;
    let qualities = match workload.kind {
        WorkloadKind::UnimodalError => unimodal_qualities(n, &mut rng),
        _ => two_hump_qualities(n, &mut rng),
    };
    let residues = (0..n).map(|_| b"ACGT"[rng.gen_range(0..4)]).collect::<Vec<u8>>();
    SequenceRecord::new(
        format!("{}-{}-{}", workload.kind.name(), n, workload.seed),
        residues,
        Some(qualities),
    )
    .expect("generated record is consistent")
}

/// Sliding-window trimming heuristic used as a baseline.
///
/// 1. Take the lowest-error window of width `min(window, n)` (first on ties).
///    If its mean exceeds `max_error`, fall back to the lowest-error single
///    base, or report nothing when even that exceeds `max_error`.
/// 2. Repeatedly extend by whichever neighbouring base has the lower error
///    (right on ties) while the mean stays at most `max_error`.
///
/// Every reported region satisfies the threshold, but the greedy growth stops
/// at the first costly base and never revisits the starting window, so it can
/// miss longer regions.
pub fn sliding_window_trim(
    record: &SequenceRecord,
    max_error: Ratio<u64>,
    window: usize,
) -> Result<RegionReport, BioError> {
    let (p, q) = (*max_error.numer(), *max_error.denom());
    if p > q {
        return Err(BioError::InvalidThreshold(max_error.to_string()));
    }
    let qualities = record
        .qualities
        .as_deref()
        .ok_or_else(|| BioError::MissingQualities { id: record.id.clone() })?;
    let errors = ScaledErrors::from_qualities(qualities);
    let n = errors.len();
    if n == 0 {
        return Ok(RegionReport::none(&record.id));
    }
    let e = &errors.values;
    let w = window.clamp(1, n);

    let mut sum: u128 = e[..w].iter().sum();
    let (mut best_sum, mut best_start) = (sum, 0);
    for s in 1..=n - w {
        sum = sum - e[s - 1] + e[s + w - 1];
        if sum < best_sum {
            best_sum = sum;
            best_start = s;
        }
    }
    let (mut lo, mut hi) = (best_start + 1, best_start + w);
    if !errors.mean_at_most(lo, hi, p, q) {
        let (pos, _) = e.iter().enumerate().min_by_key(|&(_, v)| *v).expect("n > 0");
        lo = pos + 1;
        hi = pos + 1;
        if !errors.mean_at_most(lo, hi, p, q) {
            return Ok(RegionReport::none(&record.id));
        }
    }

    let mut total = errors.sum(lo, hi);
    loop {
        let left = (lo > 1).then(|| e[lo - 2]);
        let right = (hi < n).then(|| e[hi]);
        let grow_right = match (left, right) {
            (None, None) => break,
            (Some(_), None) => false,
            (None, Some(_)) => true,
            (Some(l), Some(r)) => r <= l,
        };
        let next = if grow_right { right } else { left }.expect("checked above");
        if !errors.sum_within(total + next, hi - lo + 2, p, q) {
            break;
        }
        total += next;
        if grow_right {
            hi += 1;
        } else {
            lo -= 1;
        }
    }
    Ok(RegionReport {
        id: record.id.clone(),
        region: Some((lo, hi)),
        metric: Some(crate::bio::mean_error_of(&errors, lo, hi)),
    })
}

/// One line of `bench` output.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub workload: &'static str,
    pub n: usize,
    pub seed: u64,
    pub wall_ns: u128,
    pub iterations: Option<u64>,
    pub bound: u64,
    pub result: Option<(usize, usize)>,
    pub oracle_ns: Option<u128>,
    /// `(optimal, heuristic)` trimmed lengths for read workloads.
    pub trim: Option<(usize, usize)>,
}

impl BenchRow {
    pub const HEADER: &'static str =
        "workload\tn\tseed\twall_ns\titerations\tbound\tresult\toracle_ns\toptimal_len\theuristic_len\tdeficit";

    pub fn deficit(&self) -> Option<usize> {
        self.trim.map(|(opt, heur)| opt.saturating_sub(heur))
    }
}

fn dash<T: fmt::Display>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

impl fmt::Display for BenchRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let result = self
            .result
            .map_or_else(|| "nil".to_string(), |(s, e)| format!("{s}-{e}"));
        write!(
            f,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.workload,
            self.n,
            self.seed,
            self.wall_ns,
            dash(self.iterations),
            self.bound,
            result,
            dash(self.oracle_ns),
            dash(self.trim.map(|t| t.0)),
            dash(self.trim.map(|t| t.1)),
            dash(self.deficit()),
        )
    }
}

#[derive(Debug, Clone, Copy)]
pub struct BenchConfig {
    pub alpha: i64,
    pub max_error: Ratio<u64>,
    pub window: usize,
    /// Largest `n` for which the quadratic oracle is also timed.
    pub oracle_cap: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            alpha: 0,
            max_error: Ratio::new(1, 20),
            window: 10,
            oracle_cap: DEFAULT_CAP,
        }
    }
}

/// Times the linear search on every score workload and the optimal and
/// heuristic trimmers on a two-hump read, for each size.
pub fn run_bench(sizes: &[usize], seed: u64, config: &BenchConfig) -> Result<Vec<BenchRow>, BioError> {
    let mut rows = Vec::new();
    for &n in sizes {
        for kind in WorkloadKind::SCORES {
            let seq = generate_scores(&Workload::new(kind, n, seed));
            let t0 = Instant::now();
            let outcome = longest_segment_above(&seq, config.alpha)?;
            let wall_ns = t0.elapsed().as_nanos();
            let oracle_ns = (n <= config.oracle_cap).then(|| {
                let t0 = Instant::now();
                let _ = BruteForce::new(config.oracle_cap).longest_above(seq.as_slice(), config.alpha);
                t0.elapsed().as_nanos()
            });
            rows.push(BenchRow {
                workload: kind.name(),
                n,
                seed,
                wall_ns,
                iterations: Some(outcome.iterations),
                bound: iteration_bound(n),
                result: outcome.result.map(|s| s.bounds()),
                oracle_ns,
                trim: None,
            });
        }

        let read = generate_read(&Workload::new(WorkloadKind::TwoHumpError, n, seed));
        let t0 = Instant::now();
        let optimal = trim_longest(&read, config.max_error)?;
        let wall_ns = t0.elapsed().as_nanos();
        let heuristic = sliding_window_trim(&read, config.max_error, config.window)?;
        rows.push(BenchRow {
            workload: WorkloadKind::TwoHumpError.name(),
            n,
            seed,
            wall_ns,
            iterations: None,
            bound: iteration_bound(n),
            result: optimal.region,
            oracle_ns: None,
            trim: Some((optimal.len(), heuristic.len())),
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generation_is_deterministic() {
        let w = Workload::new(WorkloadKind::Uniform, 5, 1);
        assert_eq!(generate(&w), generate(&w));
        assert_ne!(generate_scores(&w), generate_scores(&Workload { seed: 2, ..w }));
        let r = Workload::new(WorkloadKind::TwoHumpError, 100, 9);
        assert_eq!(generate(&r), generate(&r));
    }

    #[test]
    fn monotone_is_strictly_increasing() {
        let s = generate_scores(&Workload::new(WorkloadKind::Monotone, 4, 0));
        assert_eq!(s.as_slice(), &[-2, -1, 0, 1]);
    }

    #[test]
    fn uniform_respects_range() {
        let s = generate_scores(&Workload::new(WorkloadKind::Uniform, 1000, 3));
        assert!(s.as_slice().iter().all(|v| (-10..=10).contains(v)));
    }

    #[test]
    fn sawtooth_grows_both_ladders() {
        let s = generate_scores(&Workload::new(WorkloadKind::Sawtooth, 1600, 0));
        let f = crate::prefix_scores(&s).unwrap();
        assert!(crate::left_minima(&f).count() > 100);
        assert!(crate::right_maxima(&f).count() > 100);
    }

    #[test]
    fn all_good_read_is_kept_whole() {
        let rec = SequenceRecord::new("g", "ACGTACGT", Some(vec![40; 8])).unwrap();
        let rep = sliding_window_trim(&rec, Ratio::new(1, 100), 3).unwrap();
        assert_eq!(rep.region, Some((1, 8)));
    }

    #[test]
    fn heuristic_falls_back_to_single_base() {
        let rec = SequenceRecord::new("g", "ACGT", Some(vec![0, 0, 40, 0])).unwrap();
        let rep = sliding_window_trim(&rec, Ratio::new(1, 100), 3).unwrap();
        assert_eq!(rep.region, Some((3, 3)));
        let rec = SequenceRecord::new("g", "AC", Some(vec![0, 0])).unwrap();
        assert!(sliding_window_trim(&rec, Ratio::new(1, 2), 3).unwrap().is_empty());
        let rec = SequenceRecord::new("g", "", Some(vec![])).unwrap();
        assert!(sliding_window_trim(&rec, Ratio::new(1, 2), 3).unwrap().is_empty());
    }

    #[test]
    fn bench_rows_handle_empty_input() {
        let rows = run_bench(&[0], 1, &BenchConfig::default()).unwrap();
        assert_eq!(rows.len(), 4);
        assert!(rows.iter().all(|r| r.result.is_none()));
        assert!(rows[0].to_string().contains("\tnil\t"));
        assert_eq!(rows[0].to_string().split('\t').count(), BenchRow::HEADER.split('\t').count());
    }
}
