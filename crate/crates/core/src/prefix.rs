//! Prefix scores and the two monotone ladders built over them.

use std::ops::Index;

use crate::error::Result;
use crate::score::{Score, ScoreSequence};

/// Prefix scores `f_0..f_n` with `f_0 = 0` and `f_j = a_1 + ... + a_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct PrefixScores<S> {
    values: Vec<S>,
}

impl<S: Score> PrefixScores<S> {
    /// Number of underlying scores `n`; there are `n + 1` prefix values.
    pub fn n(&self) -> usize {
        self.values.len() - 1
    }

    pub fn as_slice(&self) -> &[S] {
        &self.values
    }

    /// Score of the 1-based closed segment `[start, end]`.
    pub fn segment_score(&self, start: usize, end: usize) -> Result<S> {
        self.values[end]
            .checked_sub(self.values[start - 1])
            .ok_or_else(S::overflow_error)
    }
}

impl<S> Index<usize> for PrefixScores<S> {
    type Output = S;

    fn index(&self, index: usize) -> &S {
        &self.values[index]
    }
}

/// Computes `f_0..f_n`. Fails on overflow in either arithmetic mode.
pub fn prefix_scores<S: Score>(seq: &ScoreSequence<S>) -> Result<PrefixScores<S>> {
    let mut values = Vec::with_capacity(seq.len() + 1);
    let mut acc = S::ZERO;
    values.push(acc);
    for &a in seq.as_slice() {
        acc = acc.checked_add(a).ok_or_else(S::overflow_error)?;
        values.push(acc);
    }
    Ok(PrefixScores { values })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LadderKind {
    LeftMinima,
    RightMaxima,
}

/// Positions of strict running minima (scanning right) or strict running
/// maxima (scanning left) of a prefix-score array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotoneLadder {
    kind: LadderKind,
    positions: Vec<usize>,
}

impl MonotoneLadder {
    pub fn kind(&self) -> LadderKind {
        self.kind
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    /// `k` for a left ladder, `m` for a right ladder.
    pub fn count(&self) -> usize {
        self.positions.len()
    }
}

/// Left sequence of minima: `l_1 = 0`, then every index whose prefix value is
/// strictly below all earlier ones.
pub fn left_minima<S: Score>(f: &PrefixScores<S>) -> MonotoneLadder {
    let values = f.as_slice();
    let mut positions = vec![0];
    let mut low = values[0];
    for (i, &v) in values.iter().enumerate().skip(1) {
        if v < low {
            positions.push(i);
            low = v;
        }
    }
    MonotoneLadder {
        kind: LadderKind::LeftMinima,
        positions,
    }
}

/// Right sequence of maxima: `r_1 = n`, then scanning down to index 0 every
/// index whose prefix value strictly exceeds all later ones. Index 0 is
/// admitted like any other.
pub fn right_maxima<S: Score>(f: &PrefixScores<S>) -> MonotoneLadder {
    let values = f.as_slice();
    let n = values.len() - 1;
    let mut positions = vec![n];
    let mut high = values[n];
    for j in (0..n).rev() {
        if values[j] > high {
            positions.push(j);
            high = values[j];
        }
    }
    MonotoneLadder {
        kind: LadderKind::RightMaxima,
        positions,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prefix(scores: &[i64]) -> PrefixScores<i64> {
        prefix_scores(&ScoreSequence::new(scores.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn prefix_examples() {
        assert_eq!(prefix(&[]).as_slice(), &[0]);
        assert_eq!(prefix(&[5]).as_slice(), &[0, 5]);
        let f = prefix(&[-1, 3, -2, 4, -5, 1]);
        assert_eq!(f.as_slice(), &[0, -1, 2, 0, 4, -1, 0]);
        assert_eq!(f.n(), 6);
        assert_eq!(f.segment_score(2, 4).unwrap(), 5);
    }

    #[test]
    fn prefix_overflow_is_an_error() {
        let seq = ScoreSequence::new(vec![i64::MAX, 1]).unwrap();
        assert_eq!(
            prefix_scores(&seq),
            Err(crate::SegmentError::IntegerOverflow)
        );
        let seq = ScoreSequence::new(vec![f64::MAX, f64::MAX]).unwrap();
        assert_eq!(prefix_scores(&seq), Err(crate::SegmentError::FloatOverflow));
    }

    #[test]
    fn ladder_examples() {
        assert_eq!(left_minima(&prefix(&[])).positions(), &[0]);
        assert_eq!(right_maxima(&prefix(&[])).positions(), &[0]);

        let f = prefix(&[-1, 3, -2, 4, -5, 1]);
        assert_eq!(left_minima(&f).positions(), &[0, 1]);
        assert_eq!(right_maxima(&f).positions(), &[6, 4]);

        assert_eq!(left_minima(&prefix(&[-1, -1, -1])).positions(), &[0, 1, 2, 3]);
        assert_eq!(right_maxima(&prefix(&[1, 1, 1])).positions(), &[3]);
    }

    #[test]
    fn right_ladder_admits_index_zero() {
        let f = prefix(&[-2, 1]);
        assert_eq!(f.as_slice(), &[0, -2, -1]);
        assert_eq!(right_maxima(&f).positions(), &[2, 0]);
        assert_eq!(right_maxima(&f).kind(), LadderKind::RightMaxima);
    }
}
