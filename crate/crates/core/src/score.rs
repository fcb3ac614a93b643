//! Score domain shared by every search routine.
//!
//! A [`ScoreSequence`] is generic over a [`Score`] type; the type parameter is
//! the sequence-wide arithmetic mode. Integer scores (`i64`, `i128`) never
//! round and report overflow as an error. `f64` scores accumulate with raw
//! IEEE comparisons and no epsilon.

use std::fmt;

use crate::error::{Result, SegmentError};

/// Arithmetic mode of a score type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArithmeticMode {
    ExactInteger,
    Floating,
}

/// Numeric domain for segment scores.
pub trait Score:
    Copy + PartialOrd + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    const ZERO: Self;
    const MODE: ArithmeticMode;

    fn is_finite_score(self) -> bool;

    /// Addition that fails instead of wrapping (integers) or leaving the finite
    /// range (floats).
    fn checked_add(self, rhs: Self) -> Option<Self>;

    fn checked_sub(self, rhs: Self) -> Option<Self>;

    /// Evaluates `hi >= lo + alpha` without intermediate overflow.
    fn reaches(lo: Self, alpha: Self, hi: Self) -> bool;

    fn overflow_error() -> SegmentError {
        match Self::MODE {
            ArithmeticMode::ExactInteger => SegmentError::IntegerOverflow,
            ArithmeticMode::Floating => SegmentError::FloatOverflow,
        }
    }
}

impl Score for i64 {
    const ZERO: Self = 0;
    const MODE: ArithmeticMode = ArithmeticMode::ExactInteger;

    fn is_finite_score(self) -> bool {
        true
    }

    fn checked_add(self, rhs: Self) -> Option<Self> {
        i64::checked_add(self, rhs)
    }

    fn checked_sub(self, rhs: Self) -> Option<Self> {
        i64::checked_sub(self, rhs)
    }

    #[inline]
    fn reaches(lo: Self, alpha: Self, hi: Self) -> bool {
        hi as i128 >= lo as i128 + alpha as i128
    }
}

impl Score for i128 {
    const ZERO: Self = 0;
    const MODE: ArithmeticMode = ArithmeticMode::ExactInteger;

    fn is_finite_score(self) -> bool {
        true
    }

    fn checked_add(self, rhs: Self) -> Option<Self> {
        i128::checked_add(self, rhs)
    }

    fn checked_sub(self, rhs: Self) -> Option<Self> {
        i128::checked_sub(self, rhs)
    }

    #[inline]
    fn reaches(lo: Self, alpha: Self, hi: Self) -> bool {
        match lo.checked_add(alpha) {
            Some(bound) => hi >= bound,
            // lo + alpha lies outside the i128 range: above it when alpha is
            // positive, below it otherwise.
            None => alpha < 0,
        }
    }
}

impl Score for f64 {
    const ZERO: Self = 0.0;
    const MODE: ArithmeticMode = ArithmeticMode::Floating;

    fn is_finite_score(self) -> bool {
        self.is_finite()
    }

    fn checked_add(self, rhs: Self) -> Option<Self> {
        let sum = self + rhs;
        sum.is_finite().then_some(sum)
    }

    fn checked_sub(self, rhs: Self) -> Option<Self> {
        let diff = self - rhs;
        diff.is_finite().then_some(diff)
    }

    #[inline]
    fn reaches(lo: Self, alpha: Self, hi: Self) -> bool {
        hi >= lo + alpha
    }
}

/// An ordered list of scores `a_1..a_n` sharing one arithmetic mode.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ScoreSequence<S> {
    scores: Vec<S>,
}

impl<S: Score> ScoreSequence<S> {
    /// Wraps `scores`, rejecting non-finite values.
    pub fn new(scores: Vec<S>) -> Result<Self> {
        if let Some(position) = scores.iter().position(|s| !s.is_finite_score()) {
            return Err(SegmentError::NonFiniteScore { position });
        }
        Ok(Self { scores })
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }

    pub fn as_slice(&self) -> &[S] {
        &self.scores
    }

    pub fn into_inner(self) -> Vec<S> {
        self.scores
    }

    pub fn mode(&self) -> ArithmeticMode {
        S::MODE
    }

    /// Applies `f` to every score, failing if any image is invalid.
    pub fn try_map<T: Score>(&self, mut f: impl FnMut(S) -> Option<T>) -> Result<ScoreSequence<T>> {
        let scores = self
            .scores
            .iter()
            .map(|&s| f(s).ok_or_else(T::overflow_error))
            .collect::<Result<Vec<_>>>()?;
        ScoreSequence::new(scores)
    }
}

impl<S: Score> TryFrom<Vec<S>> for ScoreSequence<S> {
    type Error = SegmentError;

    fn try_from(scores: Vec<S>) -> Result<Self> {
        Self::new(scores)
    }
}

impl<S> AsRef<[S]> for ScoreSequence<S> {
    fn as_ref(&self) -> &[S] {
        &self.scores
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_finite() {
        assert_eq!(
            ScoreSequence::new(vec![1.0, f64::NAN]),
            Err(SegmentError::NonFiniteScore { position: 1 })
        );
        assert!(ScoreSequence::new(vec![f64::INFINITY]).is_err());
        assert_eq!(ScoreSequence::new(vec![1i64, -2]).unwrap().len(), 2);
    }

    #[test]
    fn reaches_without_overflow() {
        assert!(i64::reaches(i64::MIN, i64::MIN, i64::MIN));
        assert!(!i64::reaches(i64::MAX, i64::MAX, i64::MAX));
        assert!(i128::reaches(i128::MIN, -1, i128::MIN));
        assert!(!i128::reaches(i128::MAX, 1, i128::MAX));
        assert!(i128::reaches(i128::MIN + 5, -10, i128::MIN));
        assert!(f64::reaches(0.0, 3.0, 3.0));
        assert!(!f64::reaches(0.0, 3.0, 2.999));
    }

    #[test]
    fn float_accumulation_reports_overflow() {
        assert_eq!(Score::checked_add(f64::MAX, f64::MAX), None);
        assert_eq!(f64::overflow_error(), SegmentError::FloatOverflow);
        assert_eq!(i64::overflow_error(), SegmentError::IntegerOverflow);
    }
}
