//! Brute-force reference answers.
//!
//! Every routine enumerates all `[i, j]` and sums each segment directly. None
//! of them touch prefix sums or ladders, so they can check the linear-time
//! search without sharing any of its arithmetic.

use std::ops::Add;

use num_rational::Ratio;
use num_traits::Zero;
use thiserror::Error;

use crate::search::Segment;

pub const DEFAULT_CAP: usize = 2000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("input length {len} exceeds the brute-force cap {cap}")]
    CapExceeded { len: usize, cap: usize },
    #[error("minimum length must be at least 1")]
    ZeroMinLength,
}

/// All optimal segments under one criterion.
///
/// For the longest-segment criteria `best_length` is the optimal length and
/// `witnesses` every qualifying segment of that length, with `best_score` the
/// highest score among them. For the
/// minimum-length criterion `witnesses` holds every segment attaining the
/// maximum score and `best_length` the longest of them. `best_length == 0`
/// means nothing qualifies.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleResult<T> {
    pub best_length: usize,
    pub best_score: Option<T>,
    pub witnesses: Vec<Segment<T>>,
}

impl<T> OracleResult<T> {
    fn none() -> Self {
        Self {
            best_length: 0,
            best_score: None,
            witnesses: Vec::new(),
        }
    }

    pub fn contains(&self, start: usize, end: usize) -> bool {
        self.witnesses.iter().any(|w| w.start == start && w.end == end)
    }
}

/// Quadratic enumerator with a length cap.
#[derive(Debug, Clone, Copy)]
pub struct BruteForce {
    pub cap: usize,
}

impl Default for BruteForce {
    fn default() -> Self {
        Self { cap: DEFAULT_CAP }
    }
}

impl BruteForce {
    pub fn new(cap: usize) -> Self {
        Self { cap }
    }

    fn check(&self, len: usize) -> Result<(), OracleError> {
        if len > self.cap {
            Err(OracleError::CapExceeded { len, cap: self.cap })
        } else {
            Ok(())
        }
    }

    /// Visits every segment `(start, end, sum)` with a running sum per start.
    fn each_segment<T, F>(scores: &[T], mut visit: F)
    where
        T: Copy + Zero + Add<Output = T>,
        F: FnMut(usize, usize, T),
    {
        for i in 0..scores.len() {
            let mut sum = T::zero();
            for (j, &a) in scores.iter().enumerate().skip(i) {
                sum = sum + a;
                visit(i + 1, j + 1, sum);
            }
        }
    }

    /// Longest segments meeting `accept(start, end, sum)`.
    fn longest_by<T, F>(&self, scores: &[T], mut accept: F) -> Result<OracleResult<T>, OracleError>
    where
        T: Copy + Zero + Add<Output = T> + PartialOrd,
        F: FnMut(usize, usize, T) -> bool,
    {
        self.check(scores.len())?;
        let mut out = OracleResult::none();
        Self::each_segment(scores, |start, end, score| {
            if !accept(start, end, score) {
                return;
            }
            let len = end - start + 1;
            if len > out.best_length {
                out.best_length = len;
                out.witnesses.clear();
            }
            if len == out.best_length {
                out.witnesses.push(Segment { start, end, score });
            }
        });
        out.best_score = out
            .witnesses
            .iter()
            .map(|w| w.score)
            .reduce(|a, b| if b > a { b } else { a });
        Ok(out)
    }

    pub fn longest_above<T>(&self, scores: &[T], alpha: T) -> Result<OracleResult<T>, OracleError>
    where
        T: Copy + Zero + Add<Output = T> + PartialOrd,
    {
        self.longest_by(scores, |_, _, sum| sum >= alpha)
    }

    /// Average criterion in exact rational arithmetic.
    pub fn longest_avg_above(
        &self,
        scores: &[i64],
        beta: Ratio<i64>,
    ) -> Result<OracleResult<i64>, OracleError> {
        let beta = Ratio::new(*beta.numer() as i128, *beta.denom() as i128);
        self.longest_by(scores, |start, end, sum| {
            Ratio::new(sum as i128, (end - start + 1) as i128) >= beta
        })
    }

    /// Average criterion with a plain floating-point division per segment.
    pub fn longest_avg_above_f64(&self, scores: &[f64], beta: f64) -> Result<OracleResult<f64>, OracleError> {
        self.longest_by(scores, |start, end, sum| sum / (end - start + 1) as f64 >= beta)
    }

    pub fn max_score_min_length<T>(&self, scores: &[T], min_len: usize) -> Result<OracleResult<T>, OracleError>
    where
        T: Copy + Zero + Add<Output = T> + PartialOrd,
    {
        if min_len == 0 {
            return Err(OracleError::ZeroMinLength);
        }
        self.check(scores.len())?;
        let mut out = OracleResult::none();
        Self::each_segment(scores, |start, end, score| {
            if end - start + 1 < min_len {
                return;
            }
            match out.best_score {
                Some(best) if score < best => return,
                Some(best) if score > best => out.witnesses.clear(),
                None => {}
                _ => {}
            }
            out.best_score = Some(score);
            out.witnesses.push(Segment { start, end, score });
        });
        out.best_length = out.witnesses.iter().map(Segment::len).max().unwrap_or(0);
        Ok(out)
    }
}

pub fn brute_longest_above<T>(scores: &[T], alpha: T) -> Result<OracleResult<T>, OracleError>
where
    T: Copy + Zero + Add<Output = T> + PartialOrd,
{
    BruteForce::default().longest_above(scores, alpha)
}

pub fn brute_longest_avg_above(scores: &[i64], beta: Ratio<i64>) -> Result<OracleResult<i64>, OracleError> {
    BruteForce::default().longest_avg_above(scores, beta)
}

pub fn brute_max_score_min_length<T>(scores: &[T], min_len: usize) -> Result<OracleResult<T>, OracleError>
where
    T: Copy + Zero + Add<Output = T> + PartialOrd,
{
    BruteForce::default().max_score_min_length(scores, min_len)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spans<T>(r: &OracleResult<T>) -> Vec<(usize, usize)> {
        r.witnesses.iter().map(Segment::bounds).collect()
    }

    #[test]
    fn sum_examples() {
        let r = brute_longest_above(&[5i64], 3).unwrap();
        assert_eq!((r.best_length, spans(&r)), (1, vec![(1, 1)]));

        let r = brute_longest_above(&[-1i64, 3, -2, 4, -5, 1], 3).unwrap();
        assert_eq!((r.best_length, spans(&r)), (4, vec![(1, 4)]));

        let r = brute_longest_above(&[-1i64, -2], 0).unwrap();
        assert_eq!(r.best_length, 0);
        assert!(r.witnesses.is_empty());
    }

    #[test]
    fn average_examples() {
        // [2,6] also averages exactly 3/5.
        let r = brute_longest_avg_above(&[0, 1, 1, 0, 1, 0], Ratio::new(3, 5)).unwrap();
        assert_eq!((r.best_length, spans(&r)), (5, vec![(1, 5), (2, 6)]));

        let r = brute_longest_avg_above(&[1, 1, 1], Ratio::from_integer(1)).unwrap();
        assert_eq!((r.best_length, spans(&r)), (3, vec![(1, 3)]));

        let gc = [0, 0, 1, 1, 1, 1, 1, 1, 0, 0];
        let r = brute_longest_avg_above(&gc, Ratio::new(7, 10)).unwrap();
        assert_eq!((r.best_length, spans(&r)), (8, vec![(1, 8), (2, 9), (3, 10)]));
    }

    #[test]
    fn min_length_examples() {
        let r = brute_max_score_min_length(&[5i64, -9, 6, -2, 3], 3).unwrap();
        assert_eq!((r.best_score, spans(&r)), (Some(7), vec![(3, 5)]));

        let r = brute_max_score_min_length(&[-1i64, 2, -1], 1).unwrap();
        assert_eq!(spans(&r), vec![(2, 2)]);

        let r = brute_max_score_min_length(&[1i64, 2], 3).unwrap();
        assert_eq!(r.best_length, 0);
        assert_eq!(r.best_score, None);
    }

    #[test]
    fn cap_is_enforced() {
        let scores = vec![1i64; 11];
        assert_eq!(
            BruteForce::new(10).longest_above(&scores, 0),
            Err(OracleError::CapExceeded { len: 11, cap: 10 })
        );
        assert!(brute_longest_above(&vec![0i64; DEFAULT_CAP + 1], 0).is_err());
    }
}
