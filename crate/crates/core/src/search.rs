//! Longest-segment search and its average and minimum-length variants.
//!
//! The core routine pairs the left ladder of prefix minima with the right
//! ladder of prefix maxima using two monotone pointers, so after the ladders
//! are built every candidate endpoint is visited at most once. Only ladder
//! entries and sparse checkpoints are stored; the full prefix array is never
//! materialized.

use crate::error::{Result, SegmentError};
use crate::prefix::prefix_scores;
use crate::score::{Score, ScoreSequence};

/// Closed 1-based interval `[start, end]` together with its score.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment<S> {
    pub start: usize,
    pub end: usize,
    pub score: S,
}

impl<S> Segment<S> {
    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bounds(&self) -> (usize, usize) {
        (self.start, self.end)
    }
}

/// Result of a search plus a count of loop steps executed.
///
/// `iterations` sums the steps of both ladder scans (`n` each) and every
/// pointer move of the paired scan (at most `k + m <= 2n + 2`), so it never
/// exceeds `4 * (n + 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchOutcome<S> {
    pub result: Option<Segment<S>>,
    pub iterations: u64,
}

impl<S> SearchOutcome<S> {
    pub fn segment(&self) -> Option<&Segment<S>> {
        self.result.as_ref()
    }

    pub fn is_nil(&self) -> bool {
        self.result.is_none()
    }
}

/// Bound on [`SearchOutcome::iterations`] for an input of length `n`.
pub fn iteration_bound(n: usize) -> u64 {
    4 * (n as u64 + 1)
}

fn check_threshold<S: Score>(value: S) -> Result<()> {
    if value.is_finite_score() {
        Ok(())
    } else {
        Err(SegmentError::NonFiniteThreshold)
    }
}

/// Prefix values are recomputed in blocks of this many positions during the
/// backward scan.
const BLOCK: usize = 4096;

/// Both ladders with their prefix values, in the order of their definition:
/// `left` is `l_1 = 0, l_2, ..., l_k`, `right` is `r_1 = n, r_2, ..., r_m`.
struct Ladders<S> {
    left: Vec<(usize, S)>,
    right: Vec<(usize, S)>,
    steps: u64,
}

/// Forward scan for the left ladder, backward scan for the right ladder.
///
/// The forward pass keeps every `BLOCK`-th prefix value as a checkpoint. The
/// backward pass then visits blocks from last to first, re-accumulating each
/// block from its checkpoint in the same order as the forward pass, so the
/// values are bit-identical to a stored prefix array in either arithmetic
/// mode while only `n / BLOCK + BLOCK` values are held at once.
fn build_ladders<S: Score>(seq: &ScoreSequence<S>) -> Result<Ladders<S>> {
    let scores = seq.as_slice();
    let n = scores.len();
    let mut checkpoints = Vec::with_capacity(n / BLOCK + 1);
    let mut acc = S::ZERO;
    let mut left = vec![(0, acc)];
    for (i, &a) in scores.iter().enumerate() {
        if i % BLOCK == 0 {
            checkpoints.push(acc);
        }
        acc = acc.checked_add(a).ok_or_else(S::overflow_error)?;
        if acc < left[left.len() - 1].1 {
            left.push((i + 1, acc));
        }
    }

    let mut right = vec![(n, acc)];
    let mut high = acc;
    let mut block = Vec::with_capacity(BLOCK.min(n) + 1);
    // Block b covers prefix indices b*BLOCK ..= min((b+1)*BLOCK, n); its last
    // index is either n or the first index of the next block, already seen.
    for (b, &base) in checkpoints.iter().enumerate().rev() {
        let from = b * BLOCK;
        let to = (from + BLOCK).min(n);
        block.clear();
        block.push(base);
        let mut v = base;
        for &a in &scores[from..to - 1] {
            v = v.checked_add(a).ok_or_else(S::overflow_error)?;
            block.push(v);
        }
        for (offset, &value) in block.iter().enumerate().rev() {
            if value > high {
                right.push((from + offset, value));
                high = value;
            }
        }
    }
    Ok(Ladders {
        left,
        right,
        steps: 2 * n as u64,
    })
}

/// Walks `(l_i, r_j)` pairs with `i` ascending over the left ladder and `j`
/// descending over the right ladder. Returns the first longest pair with
/// `f[r] >= f[l] + alpha` as `((l, f_l), (r, f_r))`.
fn paired_scan<S: Score>(
    left: &[(usize, S)],
    right: &[(usize, S)],
    alpha: S,
    iterations: &mut u64,
) -> Option<((usize, S), (usize, S))> {
    let k = left.len();
    let mut j = right.len();
    let mut i = 0;
    let mut longest = 0;
    let mut best = None;

    while i < k && j >= 1 {
        while i < k && !S::reaches(left[i].1, alpha, right[j - 1].1) {
            i += 1;
            *iterations += 1;
        }
        if i < k {
            while j >= 1 && S::reaches(left[i].1, alpha, right[j - 1].1) {
                let (l, r) = (left[i].0, right[j - 1].0);
                if r > l && r - l > longest {
                    longest = r - l;
                    best = Some((left[i], right[j - 1]));
                }
                j -= 1;
                *iterations += 1;
            }
        }
    }
    best
}

/// Longest segment whose sum is at least `alpha`, or `None` when no nonempty
/// segment qualifies. Among equally long optima the first one met by the
/// paired scan wins.
pub fn longest_segment_above<S: Score>(seq: &ScoreSequence<S>, alpha: S) -> Result<SearchOutcome<S>> {
    check_threshold(alpha)?;
    let Ladders { left, right, steps } = build_ladders(seq)?;
    let mut iterations = steps;
    let result = match paired_scan(&left, &right, alpha, &mut iterations) {
        Some(((l, low), (r, high))) => Some(Segment {
            start: l + 1,
            end: r,
            score: high.checked_sub(low).ok_or_else(S::overflow_error)?,
        }),
        None => None,
    };
    Ok(SearchOutcome { result, iterations })
}

fn original_sum<S: Score>(scores: &[S], segment: (usize, usize)) -> Result<S> {
    scores[segment.0 - 1..segment.1]
        .iter()
        .try_fold(S::ZERO, |acc, &a| acc.checked_add(a))
        .ok_or_else(S::overflow_error)
}

fn restore_scores<S: Score, T: Score>(
    seq: &ScoreSequence<S>,
    outcome: SearchOutcome<T>,
) -> Result<SearchOutcome<S>> {
    let result = match outcome.result {
        Some(seg) => Some(Segment {
            start: seg.start,
            end: seg.end,
            score: original_sum(seq.as_slice(), seg.bounds())?,
        }),
        None => None,
    };
    Ok(SearchOutcome {
        result,
        iterations: outcome.iterations,
    })
}

/// Longest segment whose average is at least `beta`: the sum search over
/// `a_k - beta` with threshold zero. The reported score is the sum of the
/// original scores.
pub fn longest_segment_avg_above<S: Score>(seq: &ScoreSequence<S>, beta: S) -> Result<SearchOutcome<S>> {
    check_threshold(beta)?;
    let shifted = seq.try_map(|a| a.checked_sub(beta))?;
    let outcome = longest_segment_above(&shifted, S::ZERO)?;
    restore_scores(seq, outcome)
}

/// Exact average search for `beta = p / q` over integer scores, run on the
/// transformed scores `q * a_k - p` in 128-bit arithmetic.
pub fn longest_segment_avg_above_rational(
    seq: &ScoreSequence<i64>,
    p: i64,
    q: i64,
) -> Result<SearchOutcome<i64>> {
    if q < 1 {
        return Err(SegmentError::InvalidArgument(format!(
            "average denominator must be positive, got {q}"
        )));
    }
    let (p, q) = (p as i128, q as i128);
    let shifted = seq.try_map(|a| (a as i128).checked_mul(q)?.checked_sub(p))?;
    let outcome = longest_segment_above(&shifted, 0i128)?;
    restore_scores(seq, outcome)
}

/// Maximum-score segment among those of length at least `min_len`.
///
/// Scans `j` from `min_len` to `n`, keeping the earliest minimum of
/// `f[0..=j - min_len]`. Ties on score go to the smaller start, then the
/// smaller end.
pub fn max_score_with_min_length<S: Score>(
    seq: &ScoreSequence<S>,
    min_len: usize,
) -> Result<SearchOutcome<S>> {
    if min_len == 0 {
        return Err(SegmentError::InvalidArgument(
            "minimum length must be at least 1".into(),
        ));
    }
    let n = seq.len();
    if n < min_len {
        return Ok(SearchOutcome {
            result: None,
            iterations: 0,
        });
    }
    let f = prefix_scores(seq)?;
    let mut iterations = 0;
    let mut low = 0;
    let mut best: Option<Segment<S>> = None;
    for j in min_len..=n {
        iterations += 1;
        let candidate = j - min_len;
        if f[candidate] < f[low] {
            low = candidate;
        }
        let score = f[j].checked_sub(f[low]).ok_or_else(S::overflow_error)?;
        if best.is_none_or(|b| score > b.score) {
            best = Some(Segment {
                start: low + 1,
                end: j,
                score,
            });
        }
    }
    Ok(SearchOutcome {
        result: best,
        iterations,
    })
}
