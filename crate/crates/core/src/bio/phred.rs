use std::sync::OnceLock;

use super::BioError;

/// Qualities above this are clamped when converted to error probabilities.
pub const MAX_PHRED: u8 = 93;

/// Decodes a quality string: `Q = code - offset`.
pub fn phred_decode(text: &[u8], offset: u8) -> Result<Vec<u8>, BioError> {
    text.iter()
        .enumerate()
        .map(|(position, &code)| {
            code.checked_sub(offset).ok_or(BioError::BadQualityChar {
                position,
                code,
                offset,
            })
        })
        .collect()
}

pub fn phred_encode(qualities: &[u8], offset: u8) -> Vec<u8> {
    qualities.iter().map(|&q| q.saturating_add(offset)).collect()
}

struct PhredEntry {
    error: f64,
    /// Smallest `s` with `error * 2^s` integral.
    shift: u32,
}

fn table() -> &'static [PhredEntry] {
    static TABLE: OnceLock<Vec<PhredEntry>> = OnceLock::new();
    TABLE.get_or_init(|| {
        (0..=MAX_PHRED)
            .map(|q| {
                let error = 10f64.powf(-f64::from(q) / 10.0);
                let mut shift = 0;
                while (error * 2f64.powi(shift as i32)).fract() != 0.0 {
                    shift += 1;
                }
                PhredEntry { error, shift }
            })
            .collect()
    })
}

fn entry(q: u8) -> &'static PhredEntry {
    &table()[q.min(MAX_PHRED) as usize]
}

/// Per-position error probabilities `e_k = 10^(-Q_k / 10)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorProfile {
    pub e: Vec<f64>,
}

impl ErrorProfile {
    pub fn from_qualities(qualities: &[u8]) -> Self {
        Self {
            e: qualities.iter().map(|&q| entry(q).error).collect(),
        }
    }
}

/// Error probabilities as exact integers `e_k * 2^shift`.
///
/// Each `e_k` is a dyadic rational once rounded to `f64`, so a common power of
/// two turns the whole profile into integers with no further rounding. With
/// qualities clamped to 93 the shift is at most 84.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaledErrors {
    pub values: Vec<u128>,
    pub shift: u32,
}

impl ScaledErrors {
    pub fn from_qualities(qualities: &[u8]) -> Self {
        let shift = qualities.iter().map(|&q| entry(q).shift).max().unwrap_or(0);
        let scale = 2f64.powi(shift as i32);
        let values = qualities
            .iter()
            .map(|&q| {
                let scaled = entry(q).error * scale;
                debug_assert_eq!(scaled.fract(), 0.0);
                scaled as u128
            })
            .collect();
        Self { values, shift }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `2^shift`, the denominator of every value.
    pub fn unit(&self) -> u128 {
        1u128 << self.shift
    }

    /// Sum over the 1-based closed range `[start, end]`.
    pub fn sum(&self, start: usize, end: usize) -> u128 {
        self.values[start - 1..end].iter().sum()
    }

    /// Whether the mean over `[start, end]` is at most `p / q`, exactly.
    pub fn mean_at_most(&self, start: usize, end: usize, p: u64, q: u64) -> bool {
        self.sum_within(self.sum(start, end), end - start + 1, p, q)
    }

    /// Whether a scaled error total over `len` positions has mean at most
    /// `p / q`.
    pub fn sum_within(&self, sum: u128, len: usize, p: u64, q: u64) -> bool {
        // sum / (len * unit) <= p / q  <=>  sum * q <= p * len * unit
        let lhs = mul_wide(sum, q as u128);
        let rhs = mul_wide(p as u128 * len as u128, self.unit());
        lhs <= rhs
    }
}

/// Full 256-bit product as `(high, low)` words.
fn mul_wide(a: u128, b: u128) -> (u128, u128) {
    const MASK: u128 = u64::MAX as u128;
    let (a_hi, a_lo) = (a >> 64, a & MASK);
    let (b_hi, b_lo) = (b >> 64, b & MASK);
    let lo_lo = a_lo * b_lo;
    let hi_lo = a_hi * b_lo;
    let lo_hi = a_lo * b_hi;
    let hi_hi = a_hi * b_hi;
    let cross = (lo_lo >> 64) + (hi_lo & MASK) + (lo_hi & MASK);
    let low = (lo_lo & MASK) | (cross << 64);
    let high = hi_hi + (hi_lo >> 64) + (lo_hi >> 64) + (cross >> 64);
    (high, low)
}
