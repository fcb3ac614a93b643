//! Linear-time search for the longest segment of a score sequence whose sum
//! (or average) reaches a threshold.
//!
//! - [`search`]: the ladder-pairing search and its average and minimum-length
//!   variants.
//! - [`oracle`]: quadratic brute-force references used by tests and benches.
//! - [`bio`]: FASTA/FASTQ I/O, GC-rich regions and read trimming.
//! - [`bench`]: deterministic workload generators and a sliding-window foil.
//! - [`batch`]: order-preserving per-record mapping, parallel when the
//!   `parallel` feature is on.

pub mod batch;
pub mod bench;
pub mod bio;
pub mod error;
pub mod oracle;
pub mod prefix;
pub mod score;
pub mod search;

pub use error::{Result, SegmentError};
pub use prefix::{left_minima, prefix_scores, right_maxima, LadderKind, MonotoneLadder, PrefixScores};
pub use score::{ArithmeticMode, Score, ScoreSequence};
pub use search::{
    iteration_bound, longest_segment_above, longest_segment_avg_above,
    longest_segment_avg_above_rational, max_score_with_min_length, SearchOutcome, Segment,
};
