//! Genomics front-ends: FASTA/FASTQ records, Phred qualities, GC-rich
//! regions and read trimming.

mod fastx;
mod phred;
mod region;

use thiserror::Error;

use crate::error::SegmentError;

pub use fastx::{
    write_fasta, write_fastq, write_trimmed_fastq, FastaReader, FastqReader, SequenceRecord,
};
pub use phred::{phred_decode, phred_encode, ErrorProfile, ScaledErrors, MAX_PHRED};
pub use region::{gc_longest_region, trim_longest, GcOptions, RegionReport};

pub(crate) use region::mean_error as mean_error_of;

/// Quality offset of Sanger / Illumina 1.8+ FASTQ.
pub const PHRED33: u8 = 33;
/// Quality offset of Illumina 1.3-1.7 FASTQ.
pub const PHRED64: u8 = 64;

#[derive(Debug, Error)]
pub enum BioError {
    #[error("quality character {code} at position {position} is below offset {offset}")]
    BadQualityChar { position: usize, code: u8, offset: u8 },
    #[error("record {id}: unexpected residue {residue:?} at position {position}")]
    BadResidue {
        id: String,
        position: usize,
        residue: char,
    },
    #[error("record {id} has no quality values")]
    MissingQualities { id: String },
    #[error("threshold {0} is outside [0, 1]")]
    InvalidThreshold(String),
    #[error("invalid record: {0}")]
    InvalidRecord(String),
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Segment(#[from] SegmentError),
}
